#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dilute {

// Fixed, ordered variable universe shared by all scalars.  Exponent vectors
// are dense over this set and ordered lexicographically; that order is the
// monomial order used for canonical forms throughout.
enum class Var : int { q = 0, u = 1, v = 2, x = 3, Q = 4, delta = 5 };
inline constexpr int kVarCount = 6;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

using Exponents = std::array<int, kVarCount>;

class RationalScalar;

// Multivariate Laurent polynomial over arbitrary-precision integers.
// Invariant: no stored term has a zero coefficient, so map equality is
// canonical-form equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long n);              // NOLINT: implicit integer embedding
  explicit LaurentPoly(mpz_class n);

  static LaurentPoly variable(Var v, int exp = 1);
  static LaurentPoly monomial(mpz_class coeff, const Exponents& exps);

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& rhs) const = default;
  auto operator<=>(const LaurentPoly& rhs) const { return terms_ <=> rhs.terms_; }

  LaurentPoly pow(unsigned k) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // Nonzero only on a single monomial with coefficient +-1 (a unit of the ring).
  bool is_unit() const;

  const std::map<Exponents, mpz_class>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool uses(Var v) const;
  int min_exponent(Var v) const;  // 0 on the zero polynomial
  int max_exponent(Var v) const;

  // Sum of the terms whose v-exponent equals e, with that exponent removed.
  LaurentPoly coefficient_of(Var v, int e) const;
  // Multiply by v^delta.
  LaurentPoly shifted(Var v, int delta) const;

  // gcd of all integer coefficients, with the sign of the lex-leading one.
  mpz_class content() const;
  std::pair<Exponents, mpz_class> leading_term() const;  // requires nonzero

  RationalScalar substituted(Var v, const RationalScalar& value) const;

  std::string str() const;

 private:
  void insert_term(const Exponents& e, const mpz_class& c);
  std::map<Exponents, mpz_class> terms_;
};

// gcd of Laurent polynomials, defined up to units; normalized so the result
// has min-exponent 0 in every variable and positive lex-leading coefficient.
// Includes the integer content gcd.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

// Exact quotient a / b when b divides a in the Laurent ring, nullopt otherwise.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b);

// Normalized fraction num/den of Laurent polynomials.  Canonical form:
//   - den is an honest polynomial, not divisible by any variable,
//     with positive lex-leading coefficient;
//   - poly parts of num and den are coprime (including integer content);
// so equality of fractions is structural equality of the pair.
class RationalScalar {
 public:
  RationalScalar() = default;                      // zero
  RationalScalar(long n) : num_(n) {}              // NOLINT
  RationalScalar(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT
  RationalScalar(LaurentPoly num, LaurentPoly den);

  static RationalScalar variable(Var v, int exp = 1);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_polynomial() const { return den_.is_one(); }

  RationalScalar& operator+=(const RationalScalar& rhs);
  RationalScalar& operator-=(const RationalScalar& rhs);
  RationalScalar& operator*=(const RationalScalar& rhs);
  RationalScalar& operator/=(const RationalScalar& rhs);
  friend RationalScalar operator+(RationalScalar a, const RationalScalar& b) { return a += b; }
  friend RationalScalar operator-(RationalScalar a, const RationalScalar& b) { return a -= b; }
  friend RationalScalar operator*(RationalScalar a, const RationalScalar& b) { return a *= b; }
  friend RationalScalar operator/(RationalScalar a, const RationalScalar& b) { return a /= b; }
  RationalScalar operator-() const;
  bool operator==(const RationalScalar& rhs) const = default;
  auto operator<=>(const RationalScalar& rhs) const = default;

  RationalScalar inverse() const;  // throws on zero
  RationalScalar pow(long k) const;
  RationalScalar substituted(Var v, const RationalScalar& value) const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  std::string str() const;

 private:
  void reduce();
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

// [ax+b] = (q^b u^a - q^-b u^-a) / (q - q^-1), the spectral bracket with the
// multiplicative parameter u standing in for q^x.
RationalScalar bracket(int a, int b);
// Same bracket with u replaced by an arbitrary invertible scalar.
RationalScalar bracket_at(int a, int b, const RationalScalar& spectral);

// Parses the textual scalar grammar produced by str(): integers, variable
// names, ^ with signed exponents, + - * /, parentheses, juxtaposition as
// multiplication.  Throws std::invalid_argument on malformed input.
RationalScalar parse_scalar(std::string_view text);

}  // namespace dilute
