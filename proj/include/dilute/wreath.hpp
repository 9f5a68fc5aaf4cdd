#pragma once

#include <string>
#include <vector>

#include "dilute/matrix.hpp"

namespace dilute {

// Representation of the wreath-product Hopf algebra on generators q1, q2,
// sigma with relations sigma^2 = 1, sigma q1 = q2 sigma, sigma q2 = q1 sigma,
// group-like coproduct and antipode g -> g^-1.
struct WreathRep {
  ScalarMatrix q1, q2, sigma;
  int dim() const { return q1.rows(); }
  bool operator==(const WreathRep&) const = default;
};

// The two-dimensional representation with q1 -> diag(x^n, 1),
// q2 -> diag(1, x^n), sigma the swap.
WreathRep rep_dim2(int n);
// The one-dimensional summands of rep_dim2(0): q_i -> 1, sigma -> +-1.
WreathRep rep_sign(int sign);
// The twist character q_i -> x^k, sigma -> 1.
WreathRep rep_twist(int k);

// Defining relations, invertibility of the q_i and the antipode identities.
bool relations_hold(const WreathRep& r);

// Tensor product through the group-like coproduct (Kronecker products).
WreathRep tensor(const WreathRep& a, const WreathRep& b);

// Evaluates the representation on a word over {q1, q2, sigma} given by
// letters {1, 2, 0} and returns its trace.
RationalScalar character(const WreathRep& r, const std::vector<int>& word);

// Commutant of the image inside the matrix algebra is one-dimensional.
bool is_irreducible(const WreathRep& r);

// Decomposition of rep_dim2(1) (x) rep_dim2(n) for n >= 1: the subspaces
// (e1(x)e1, e2(x)e2) and ((1/x) e2(x)e1, (1/x) e1(x)e2) are invariant, the
// first carries rep_dim2(n+1) exactly, the second carries
// rep_twist(1) (x) rep_dim2(n-1); together they span.  Verified by matrix
// identities and again by characters on all words of length <= 3.
bool tensor_decomposition_holds(int n);

// rep_dim2(1) (x) rep_sign(+-1) is rep_dim2(1), via the basis (f1, -f2) in
// the minus case.
bool sign_tensor_lemma_holds();

// Iterating the decomposition of (x)^n rep_dim2(1) and collecting labels
// (twist k, type m or +-) reproduces the folded two-colour diagram: returns
// the multiplicity rows for levels 0..n_max, central label first.
std::vector<std::vector<long>> iterated_multiplicity_rows(int n_max);

}  // namespace dilute
