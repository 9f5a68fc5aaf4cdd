#pragma once

#include <array>
#include <functional>

#include "dilute/towers.hpp"

namespace dilute {

// The spectral-parameter element
//   R_i(u) = [1-x][3-x] e_i + [3-x] f_i + [x][3-x] s_i - [x][2-x] u_i + [x] t_i
// kept as coordinates over the five generators so basis involutions act
// directly.  Coefficient order: e, f, s, u, t.
struct RMatrix {
  int n = 0;
  int i = 1;
  RationalScalar spectral;
  std::array<RationalScalar, 5> coeff;
};

RMatrix build_rmatrix(int n, int i, const RationalScalar& spectral);
// Materializes the element over the specialized two-colour context.
AlgebraElement rmatrix_element(const RMatrix& r);

using RMatrixBuilder = std::function<RMatrix(int, int, const RationalScalar&)>;

// R_i(u) R_{i+1}(uv) R_i(v) = R_{i+1}(v) R_i(uv) R_{i+1}(u) on three strands,
// as an identity of rational-function coefficients in q, u, v.
bool ybe_holds(const RMatrixBuilder& build = build_rmatrix);

// R_i(1) = [3] times the identity.
bool r_unit_holds(const RMatrixBuilder& build = build_rmatrix);

// R_i(u) R_i(v) = R_i(v) R_i(u) on two strands.
bool commutation_holds(const RMatrixBuilder& build = build_rmatrix);

// The involution u -> q^3 u^-1 combined with e <-> u, f <-> t fixes R.
bool crossing_symmetry_holds(const RMatrixBuilder& build = build_rmatrix);
// The crossing involution on coefficient vectors.
RMatrix crossing_image(const RMatrix& r);
// The algebra generated by {e, u, s} is spanned by {e, f, s, u}; the basis
// swap maps f outside it.
bool braid_subalgebra_not_crossing_closed();

// Coefficients of u^{+-2}, after clearing (q - q^-1)^2, are q^{-+2} times the
// braid matrices at Q = q.
bool braid_limit_holds(const RMatrixBuilder& build = build_rmatrix);

// The factorized form over the orthogonal idempotents: the five quartic
// eigenvalue lines sum to -u^2 q^2 (q^2-1)^2 R_i(u); each idempotent is an
// eigenvector; at u = 1 all five eigenvalues agree.
bool idempotent_form_holds(const RMatrixBuilder& build = build_rmatrix);

// The five quartic prefactors of the factorized form, as Laurent polynomials
// in q, u, ordered to match idempotents(): e - u/delta, (f+s)/2, (f-s)/2,
// (u+t)/(2 delta), (u-t)/(2 delta).
std::array<RationalScalar, 5> idempotent_eigen_numerators();

// Pairwise distinctness of the five eigenvalue functions.
bool eigenvalues_pairwise_distinct();

// Products of R's stay inside the colour-swap fixed subalgebra.
bool r_products_stay_symmetric();

// Clearing (q - q^-1)^2 turns every coefficient of R into a Laurent polynomial.
bool r_denominators_clear();

}  // namespace dilute
