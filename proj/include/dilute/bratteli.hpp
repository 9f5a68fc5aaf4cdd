#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dilute {

// Graded directed graph with a unique degree-0 basepoint.  Vertices carry
// integer-vector labels; edges connect consecutive levels and may repeat.
struct BratteliGraph {
  using Label = std::vector<int>;
  std::vector<std::vector<Label>> levels;                    // levels[k] = labels of degree k
  std::vector<std::vector<std::pair<int, int>>> edges;       // edges[k]: level k -> level k+1

  int level_count() const { return static_cast<int>(levels.size()); }
  int find_vertex(int level, const Label& label) const;      // -1 if absent
  std::string dot() const;
};

// Directed chain 0 -> 1 -> ... -> depth; the one-colour multinomial graph.
BratteliGraph chain_graph(int depth);
// Single vertex of degree 0.
BratteliGraph point_graph();

// Product of Definition: vertex set V1 x V2, edge set (V1 x E2) u (E1 x V2).
// Levels are truncated to the depth both factors support.
BratteliGraph graph_product(const BratteliGraph& g1, const BratteliGraph& g2);

// c-fold product of chains: vertices N^c, edges increase one coordinate.
BratteliGraph multinomial_graph(int colours, int depth);

// Number of directed paths of length n from the basepoint to the vertex.
mpz_class count_directed_paths(const BratteliGraph& g, const BratteliGraph::Label& target, int n);

// Number of length-n walks from the origin to target with +-unit steps
// staying inside N^c; the cell-module dimension of the dilute tower.
mpz_class count_undirected_paths(const std::vector<int>& target, int n);

mpz_class binomial(int n, int k);
mpz_class catalan(int n);
mpz_class multinomial(int n, const std::vector<int>& parts);

// dim T^(c)(n) = sum over n_1+..+n_c = n of multinomial(2n; 2n_i) prod C(n_i).
mpz_class dim_formula_T(int n, int colours);

// n! times the coefficient of x^n prod y_i^{k_i} in prod_i F(x, y_i), where
// F(x,y) = sum_{n,p} (n-2p+1)/(p!(n-p+1)!) x^n y^{n-2p}.  Equals the cell
// dimension counted by count_undirected_paths.
mpz_class generating_function_coeff(int n, const std::vector<int>& ks);

// dim of the product-tower module labelled by ((r,s), (d1,d2)):
// binom(n; r,s) d1 d2.
mpz_class dimension_product_formula(int n, int r, int s, const mpz_class& d1,
                                    const mpz_class& d2);

// One level of the folded two-colour diagram: label (r, s) with r >= s and
// r + s = n; off-axis labels carry one dimension, axis labels a split pair.
struct FoldedEntry {
  int r, s;
  std::vector<mpz_class> dims;
  bool operator==(const FoldedEntry&) const = default;
};

// Levels 0..n_max of the folded diagram, central label first in each row.
std::vector<std::vector<FoldedEntry>> folded_diagram_S2(int n_max);

// JSON table {"levels": [[[label...], [dim...]], ...]} for one graded family.
std::string folded_diagram_json(int n_max);

}  // namespace dilute
