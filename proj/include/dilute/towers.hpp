#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dilute/diagrams.hpp"
#include "dilute/scalars.hpp"

namespace dilute {

// Ambient data of a diagram algebra: strand count, colour count, basis kind
// and the loop parameter of each colour.
struct AlgebraContext {
  int n = 0;
  int colours = 1;
  DiagramKind kind = DiagramKind::dilute_tl;
  std::vector<RationalScalar> delta;

  bool operator==(const AlgebraContext&) const = default;
};

// All colours share the symbolic loop parameter delta.
AlgebraContext generic_context(int n, int colours, DiagramKind kind = DiagramKind::dilute_tl);
// Two colours, both loop parameters specialized to -q^2 - q^-2.
AlgebraContext specialized_context(int n);

// Finite linear combination of basis diagrams with exact scalar coefficients.
class AlgebraElement {
 public:
  explicit AlgebraElement(AlgebraContext ctx) : ctx_(std::move(ctx)) {}

  static AlgebraElement zero(const AlgebraContext& ctx) { return AlgebraElement(ctx); }
  static AlgebraElement unit(const AlgebraContext& ctx);  // sum of identity diagrams
  static AlgebraElement from_diagram(const AlgebraContext& ctx, const DiluteDiagram& d,
                                     RationalScalar coeff = RationalScalar(1));

  const AlgebraContext& ctx() const { return ctx_; }
  const std::map<DiluteDiagram, RationalScalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  RationalScalar coefficient(const DiluteDiagram& d) const;

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const RationalScalar& s, AlgebraElement a);
  bool operator==(const AlgebraElement&) const = default;

  void add_term(const DiluteDiagram& d, const RationalScalar& c);

  std::string str() const;
  std::string json() const;

 private:
  AlgebraContext ctx_;
  std::map<DiluteDiagram, RationalScalar> coeffs_;
};

// The five distinguished elements of the two-colour fixed-point algebra at
// position i (1-based, acting on strands i and i+1):
//   e_i  identity pair with both strands alike coloured
//   f_i  identity pair with distinctly coloured strands
//   s_i  the two distinctly coloured transpositions
//   u_i  cup-cap with equal arc colours
//   t_i  cup-cap with distinct arc colours
AlgebraElement gen_e(const AlgebraContext& ctx, int i);
AlgebraElement gen_f(const AlgebraContext& ctx, int i);
AlgebraElement gen_s(const AlgebraContext& ctx, int i);
AlgebraElement gen_u(const AlgebraContext& ctx, int i);
AlgebraElement gen_t(const AlgebraContext& ctx, int i);

// The five orthogonal idempotents spanning the same five-dimensional algebra:
// e - u/delta, (f +- s)/2, (u +- t)/(2 delta).  Requires invertible delta.
std::array<AlgebraElement, 5> idempotents(const AlgebraContext& ctx, int i);

// Membership of the cell ideal I(p): every diagram has content <= p pointwise.
bool in_cell_ideal(const AlgebraElement& a, const PropagatingContent& p);

// Orbit sums d + swap(d) under the colour involution; a basis of the
// fixed-point algebra.  One representative per orbit, sorted.
std::vector<AlgebraElement> symmetric_basis(const AlgebraContext& ctx);

// Swaps the two colours in every diagram.
AlgebraElement colour_swap(const AlgebraElement& a);
bool is_symmetric(const AlgebraElement& a);

// Basis of the subalgebra of diagrams whose top and bottom colour contents
// agree.
std::vector<DiluteDiagram> hat_subalgebra_basis(int n);

// Image of the braid generator sigma_i^{sign}: q^{+-2} e_i + u_i - Q^{+-1} s_i.
AlgebraElement braid_sigma(const AlgebraContext& ctx, int i, int sign, const RationalScalar& Q);

// Image of the Temperley-Lieb generator U_i under T(n) -> T^{S(2)}(n).
AlgebraElement tl_embed(const AlgebraContext& ctx, int i);

// Tower embedding a |-> a x 1 adding one strand on the right.
AlgebraElement embed_add_strand(const AlgebraElement& a);

// Dimension of the span of the given elements (exact Gaussian elimination).
int span_rank(const std::vector<AlgebraElement>& elements);

}  // namespace dilute
