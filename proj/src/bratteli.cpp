#include "dilute/bratteli.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace dilute {

int BratteliGraph::find_vertex(int level, const Label& label) const {
  if (level < 0 || level >= level_count()) return -1;
  const auto& vs = levels[level];
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == label) return static_cast<int>(i);
  return -1;
}

std::string BratteliGraph::dot() const {
  std::string out = "digraph bratteli {\n  rankdir=TB;\n";
  auto name = [](int level, int idx) {
    return "v" + std::to_string(level) + "_" + std::to_string(idx);
  };
  for (int k = 0; k < level_count(); ++k) {
    for (std::size_t i = 0; i < levels[k].size(); ++i) {
      std::string label;
      for (int x : levels[k][i]) label += (label.empty() ? "" : ",") + std::to_string(x);
      out += "  " + name(k, static_cast<int>(i)) + " [label=\"(" + label + ")\"];\n";
    }
  }
  for (std::size_t k = 0; k < edges.size(); ++k)
    for (auto [a, b] : edges[k])
      out += "  " + name(static_cast<int>(k), a) + " -> " + name(static_cast<int>(k) + 1, b) +
             ";\n";
  out += "}\n";
  return out;
}

BratteliGraph chain_graph(int depth) {
  BratteliGraph g;
  g.levels.resize(depth + 1);
  g.edges.resize(depth);
  for (int k = 0; k <= depth; ++k) g.levels[k] = {{k}};
  for (int k = 0; k < depth; ++k) g.edges[k] = {{0, 0}};
  return g;
}

BratteliGraph point_graph() {
  BratteliGraph g;
  g.levels = {{{}}};
  return g;
}

BratteliGraph graph_product(const BratteliGraph& g1, const BratteliGraph& g2) {
  BratteliGraph out;
  const int depth = std::min(g1.level_count(), g2.level_count()) - 1;
  out.levels.resize(depth + 1);
  out.edges.resize(depth > 0 ? depth : 0);

  // vertex (v1, v2) of degree a+b, keyed by (a, i, b, j)
  std::map<std::array<int, 4>, int> index;
  for (int a = 0; a < g1.level_count(); ++a) {
    for (int b = 0; b < g2.level_count(); ++b) {
      int level = a + b;
      if (level > depth) continue;
      for (int i = 0; i < static_cast<int>(g1.levels[a].size()); ++i) {
        for (int j = 0; j < static_cast<int>(g2.levels[b].size()); ++j) {
          BratteliGraph::Label label = g1.levels[a][i];
          label.insert(label.end(), g2.levels[b][j].begin(), g2.levels[b][j].end());
          index[{a, i, b, j}] = static_cast<int>(out.levels[level].size());
          out.levels[level].push_back(std::move(label));
        }
      }
    }
  }
  // edge set (V1 x E2) u (E1 x V2)
  for (int a = 0; a < g1.level_count(); ++a) {
    for (int i = 0; i < static_cast<int>(g1.levels[a].size()); ++i) {
      for (int b = 0; b + 1 < g2.level_count(); ++b) {
        if (a + b + 1 > depth) continue;
        for (auto [src, dst] : g2.edges[b])
          out.edges[a + b].emplace_back(index.at({a, i, b, src}), index.at({a, i, b + 1, dst}));
      }
    }
  }
  for (int b = 0; b < g2.level_count(); ++b) {
    for (int j = 0; j < static_cast<int>(g2.levels[b].size()); ++j) {
      for (int a = 0; a + 1 < g1.level_count(); ++a) {
        if (a + b + 1 > depth) continue;
        for (auto [src, dst] : g1.edges[a])
          out.edges[a + b].emplace_back(index.at({a, src, b, j}), index.at({a + 1, dst, b, j}));
      }
    }
  }
  for (auto& es : out.edges) std::sort(es.begin(), es.end());
  return out;
}

BratteliGraph multinomial_graph(int colours, int depth) {
  BratteliGraph g = chain_graph(depth);
  for (int c = 1; c < colours; ++c) g = graph_product(g, chain_graph(depth));
  return g;
}

mpz_class count_directed_paths(const BratteliGraph& g, const BratteliGraph::Label& target,
                               int n) {
  if (n < 0 || n >= g.level_count()) return 0;
  std::vector<mpz_class> counts = {1};
  for (int k = 0; k < n; ++k) {
    std::vector<mpz_class> next(g.levels[k + 1].size(), 0);
    for (auto [a, b] : g.edges[k]) next[b] += counts[a];
    counts = std::move(next);
  }
  int idx = g.find_vertex(n, target);
  return idx < 0 ? mpz_class(0) : counts[idx];
}

mpz_class count_undirected_paths(const std::vector<int>& target, int n) {
  const int c = static_cast<int>(target.size());
  int sum = 0;
  for (int k : target) {
    if (k < 0) return 0;
    sum += k;
  }
  if (sum > n || (n - sum) % 2 != 0) return 0;
  std::map<std::vector<int>, mpz_class> counts;
  counts[std::vector<int>(c, 0)] = 1;
  for (int step = 0; step < n; ++step) {
    std::map<std::vector<int>, mpz_class> next;
    for (const auto& [pos, cnt] : counts) {
      for (int i = 0; i < c; ++i) {
        std::vector<int> up = pos;
        ++up[i];
        next[std::move(up)] += cnt;
        if (pos[i] > 0) {
          std::vector<int> down = pos;
          --down[i];
          next[std::move(down)] += cnt;
        }
      }
    }
    counts = std::move(next);
  }
  auto it = counts.find(target);
  return it == counts.end() ? mpz_class(0) : it->second;
}

mpz_class binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

mpz_class catalan(int n) {
  return binomial(2 * n, n) / (n + 1);
}

mpz_class multinomial(int n, const std::vector<int>& parts) {
  mpz_class out = 1;
  int rest = n;
  for (int p : parts) {
    out *= binomial(rest, p);
    rest -= p;
  }
  if (rest != 0) return 0;
  return out;
}

mpz_class dim_formula_T(int n, int colours) {
  mpz_class total = 0;
  std::vector<int> parts(colours, 0);
  // iterate over compositions of n into `colours` non-negative parts
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == colours - 1) {
      parts[idx] = remaining;
      std::vector<int> doubled(colours);
      mpz_class prod = 1;
      for (int i = 0; i < colours; ++i) {
        doubled[i] = 2 * parts[i];
        prod *= catalan(parts[i]);
      }
      total += multinomial(2 * n, doubled) * prod;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      parts[idx] = k;
      self(self, idx + 1, remaining - k);
    }
  };
  rec(rec, 0, n);
  return total;
}

mpz_class generating_function_coeff(int n, const std::vector<int>& ks) {
  const int c = static_cast<int>(ks.size());
  // [x^m y^k] F = (k+1) / (p! (m-p+1)!) with p = (m-k)/2, when parities match
  auto f_coeff = [](int m, int k) -> mpq_class {
    if (k < 0 || k > m || (m - k) % 2 != 0) return 0;
    int p = (m - k) / 2;
    mpz_class den = 1;
    for (int i = 2; i <= p; ++i) den *= i;
    for (int i = 2; i <= m - p + 1; ++i) den *= i;
    mpq_class out(mpz_class(k + 1), den);
    out.canonicalize();
    return out;
  };
  mpq_class total = 0;
  std::vector<int> parts(c, 0);
  auto rec = [&](auto&& self, int idx, int remaining) -> void {
    if (idx == c - 1) {
      parts[idx] = remaining;
      mpq_class prod = 1;
      for (int i = 0; i < c; ++i) prod *= f_coeff(parts[i], ks[i]);
      total += prod;
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      parts[idx] = k;
      self(self, idx + 1, remaining - k);
    }
  };
  rec(rec, 0, n);
  mpz_class fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  mpq_class scaled = total * fact;
  scaled.canonicalize();
  if (scaled.get_den() != 1) throw std::logic_error("generating function coefficient not integral");
  return scaled.get_num();
}

mpz_class dimension_product_formula(int n, int r, int s, const mpz_class& d1,
                                    const mpz_class& d2) {
  if (r + s != n) throw std::invalid_argument("labels must satisfy r + s = n");
  return multinomial(n, {r, s}) * d1 * d2;
}

std::vector<std::vector<FoldedEntry>> folded_diagram_S2(int n_max) {
  std::vector<std::vector<FoldedEntry>> out;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<FoldedEntry> row;
    for (int s = n / 2; s >= 0; --s) {
      int r = n - s;
      FoldedEntry entry{r, s, {}};
      mpz_class dim = binomial(n, s);
      if (r == s && n > 0) {
        entry.dims = {dim / 2, dim / 2};  // axis label splits evenly
      } else {
        entry.dims = {dim};
      }
      row.push_back(std::move(entry));
    }
    out.push_back(std::move(row));
  }
  return out;
}

std::string folded_diagram_json(int n_max) {
  nlohmann::json levels = nlohmann::json::array();
  for (const auto& row : folded_diagram_S2(n_max)) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const auto& e : row) {
      nlohmann::json dims = nlohmann::json::array();
      for (const auto& d : e.dims) dims.push_back(d.get_str());
      jrow.push_back({{"label", {e.r, e.s}}, {"dims", dims}});
    }
    levels.push_back(jrow);
  }
  return nlohmann::json{{"levels", levels}}.dump();
}

}  // namespace dilute
