#include "dilute/scalars.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace dilute {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {"q", "u", "v", "x", "Q", "delta"};

Exponents zero_exponents() {
  Exponents e{};
  e.fill(0);
  return e;
}

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
  for (int i = 0; i < kVarCount; ++i)
    if (kVarNames[i] == name) return static_cast<Var>(i);
  return std::nullopt;
}

LaurentPoly::LaurentPoly(long n) {
  if (n != 0) terms_[zero_exponents()] = n;
}

LaurentPoly::LaurentPoly(mpz_class n) {
  if (n != 0) terms_[zero_exponents()] = std::move(n);
}

LaurentPoly LaurentPoly::variable(Var v, int exp) {
  Exponents e = zero_exponents();
  e[static_cast<int>(v)] = exp;
  return monomial(1, e);
}

LaurentPoly LaurentPoly::monomial(mpz_class coeff, const Exponents& exps) {
  LaurentPoly p;
  if (coeff != 0) p.terms_[exps] = std::move(coeff);
  return p;
}

void LaurentPoly::insert_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) insert_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) insert_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e;
      for (int i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
      out.insert_term(e, ca * cb);
    }
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out(1);
  LaurentPoly base = *this;
  while (k > 0) {
    if (k & 1u) out *= base;
    base *= base;
    k >>= 1u;
  }
  return out;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == zero_exponents() &&
         terms_.begin()->second == 1;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == zero_exponents());
}

bool LaurentPoly::is_unit() const {
  if (terms_.size() != 1) return false;
  const mpz_class& c = terms_.begin()->second;
  return c == 1 || c == -1;
}

bool LaurentPoly::uses(Var v) const {
  for (const auto& [e, c] : terms_)
    if (e[static_cast<int>(v)] != 0) return true;
  return false;
}

int LaurentPoly::min_exponent(Var v) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int x = e[static_cast<int>(v)];
    if (first || x < m) m = x;
    first = false;
  }
  return m;
}

int LaurentPoly::max_exponent(Var v) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int x = e[static_cast<int>(v)];
    if (first || x > m) m = x;
    first = false;
  }
  return m;
}

LaurentPoly LaurentPoly::coefficient_of(Var v, int e) const {
  LaurentPoly out;
  for (const auto& [exp, c] : terms_) {
    if (exp[static_cast<int>(v)] != e) continue;
    Exponents stripped = exp;
    stripped[static_cast<int>(v)] = 0;
    out.insert_term(stripped, c);
  }
  return out;
}

LaurentPoly LaurentPoly::shifted(Var v, int delta) const {
  if (delta == 0) return *this;
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents s = e;
    s[static_cast<int>(v)] += delta;
    out.terms_[s] = c;
  }
  return out;
}

mpz_class LaurentPoly::content() const {
  mpz_class g = 0;
  for (const auto& [e, c] : terms_) {
    mpz_class a = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  if (g == 0) return 0;
  if (terms_.rbegin()->second < 0) g = -g;
  return g;
}

std::pair<Exponents, mpz_class> LaurentPoly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading_term of zero polynomial");
  auto it = terms_.rbegin();
  return {it->first, it->second};
}

// ---------------------------------------------------------------------------
// gcd machinery.  Operates on honest polynomials (all exponents >= 0); the
// recursion treats the highest occurring variable as the main one, with a
// primitive pseudo-remainder sequence below it.

namespace {

// Last variable index that occurs in a or b, or -1 if both are constant.
int main_variable(const LaurentPoly& a, const LaurentPoly& b) {
  for (int i = kVarCount - 1; i >= 0; --i) {
    if (a.uses(static_cast<Var>(i)) || b.uses(static_cast<Var>(i))) return i;
  }
  return -1;
}

using UniPoly = std::map<int, LaurentPoly>;  // exponent of main var -> coefficient

UniPoly collect(const LaurentPoly& p, Var v) {
  UniPoly out;
  for (int e = p.min_exponent(v); e <= p.max_exponent(v); ++e) {
    LaurentPoly c = p.coefficient_of(v, e);
    if (!c.is_zero()) out[e] = std::move(c);
  }
  return out;
}

LaurentPoly expand(const UniPoly& p, Var v) {
  LaurentPoly out;
  for (const auto& [e, c] : p) out += c.shifted(v, e);
  return out;
}

int degree(const UniPoly& p) { return p.empty() ? -1 : p.rbegin()->first; }

const LaurentPoly& lead_coeff(const UniPoly& p) { return p.rbegin()->second; }

UniPoly uni_scale(const UniPoly& p, const LaurentPoly& c, int shift) {
  UniPoly out;
  for (const auto& [e, pc] : p) {
    LaurentPoly prod = pc * c;
    if (!prod.is_zero()) out[e + shift] = std::move(prod);
  }
  return out;
}

UniPoly uni_sub(UniPoly a, const UniPoly& b) {
  for (const auto& [e, c] : b) {
    auto it = a.find(e);
    if (it == a.end()) {
      a[e] = -c;
    } else {
      it->second -= c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
  return a;
}

LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b);

// gcd of all coefficients of p (a polynomial in variables below the main one).
LaurentPoly uni_content(const UniPoly& p) {
  LaurentPoly g;
  for (const auto& [e, c] : p) g = gcd_rec(g, c);
  return g;
}

UniPoly uni_divide_coeffs(const UniPoly& p, const LaurentPoly& d) {
  UniPoly out;
  for (const auto& [e, c] : p) {
    auto qc = divide_exact(c, d);
    if (!qc) throw std::logic_error("content division failed");
    out[e] = std::move(*qc);
  }
  return out;
}

// Pseudo-remainder of a by b in the main variable.
UniPoly uni_prem(UniPoly a, const UniPoly& b) {
  const int db = degree(b);
  while (degree(a) >= db) {
    const LaurentPoly& la = lead_coeff(a);
    const LaurentPoly& lb = lead_coeff(b);
    int shift = degree(a) - db;
    UniPoly scaled_a = uni_scale(a, lb, 0);
    UniPoly scaled_b = uni_scale(b, la, shift);
    a = uni_sub(scaled_a, scaled_b);
  }
  return a;
}

LaurentPoly normalize_sign(LaurentPoly p) {
  if (!p.is_zero() && p.leading_term().second < 0) return -p;
  return p;
}

// Core recursion; inputs are honest polynomials.
LaurentPoly gcd_rec(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return normalize_sign(b);
  if (b.is_zero()) return normalize_sign(a);
  int mv = main_variable(a, b);
  if (mv < 0) {
    mpz_class ga = abs(a.content());
    mpz_class gb = abs(b.content());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    return LaurentPoly(g);
  }
  Var v = static_cast<Var>(mv);
  UniPoly ua = collect(a, v);
  UniPoly ub = collect(b, v);
  LaurentPoly ca = uni_content(ua);
  LaurentPoly cb = uni_content(ub);
  UniPoly pa = uni_divide_coeffs(ua, ca);
  UniPoly pb = uni_divide_coeffs(ub, cb);
  if (degree(pa) < degree(pb)) std::swap(pa, pb);
  while (!pb.empty()) {
    UniPoly r = uni_prem(pa, pb);
    pa = std::move(pb);
    if (r.empty()) {
      pb.clear();
    } else {
      LaurentPoly cr = uni_content(r);
      pb = uni_divide_coeffs(r, cr);
    }
  }
  LaurentPoly g = expand(pa, v);
  LaurentPoly gc = uni_content(pa);
  auto gp = divide_exact(g, gc);
  if (!gp) throw std::logic_error("primitive part division failed");
  return normalize_sign(gcd_rec(ca, cb) * *gp);
}

// Splits p = (variable monomial) * (polynomial with min exponent 0 per var);
// returns the shift applied (the monomial's exponents).
Exponents strip_units(const LaurentPoly& p, LaurentPoly* poly_part) {
  Exponents shift{};
  shift.fill(0);
  LaurentPoly out = p;
  for (int i = 0; i < kVarCount; ++i) {
    Var v = static_cast<Var>(i);
    int m = out.min_exponent(v);
    if (m != 0) {
      out = out.shifted(v, -m);
      shift[i] = m;
    }
  }
  *poly_part = std::move(out);
  return shift;
}

}  // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly pa, pb;
  strip_units(a, &pa);
  strip_units(b, &pb);
  return gcd_rec(pa, pb);
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPoly();
  LaurentPoly pa, pb;
  Exponents sa = strip_units(a, &pa);
  Exponents sb = strip_units(b, &pb);
  // Long division of honest polynomials under the lex order.
  LaurentPoly rem = pa;
  LaurentPoly quot;
  auto [eb, cb] = pb.leading_term();
  while (!rem.is_zero()) {
    auto [ea, ca] = rem.leading_term();
    Exponents eq;
    for (int i = 0; i < kVarCount; ++i) {
      eq[i] = ea[i] - eb[i];
      if (eq[i] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(ca.get_mpz_t(), cb.get_mpz_t())) return std::nullopt;
    LaurentPoly t = LaurentPoly::monomial(ca / cb, eq);
    quot += t;
    rem -= t * pb;
  }
  // Reapply the Laurent monomial shift.
  for (int i = 0; i < kVarCount; ++i) {
    if (int d = sa[i] - sb[i]; d != 0) quot = quot.shifted(static_cast<Var>(i), d);
  }
  return quot;
}

// ---------------------------------------------------------------------------
// RationalScalar

RationalScalar::RationalScalar(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero scalar");
  reduce();
}

RationalScalar RationalScalar::variable(Var v, int exp) {
  return RationalScalar(LaurentPoly::variable(v, exp));
}

void RationalScalar::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (den_.is_one()) return;
  LaurentPoly np, dp;
  Exponents ns = strip_units(num_, &np);
  Exponents ds = strip_units(den_, &dp);
  LaurentPoly g = gcd_rec(np, dp);
  if (!g.is_one()) {
    np = *divide_exact(np, g);
    dp = *divide_exact(dp, g);
  }
  if (dp.leading_term().second < 0) {
    np = -np;
    dp = -dp;
  }
  for (int i = 0; i < kVarCount; ++i) {
    if (int d = ns[i] - ds[i]; d != 0) np = np.shifted(static_cast<Var>(i), d);
  }
  num_ = std::move(np);
  den_ = std::move(dp);
}

RationalScalar& RationalScalar::operator+=(const RationalScalar& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
    if (num_.is_zero()) den_ = LaurentPoly(1);
    // numerator changed; common factors with den may have appeared
    if (!den_.is_one()) reduce();
    return *this;
  }
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

RationalScalar& RationalScalar::operator-=(const RationalScalar& rhs) {
  return *this += -rhs;
}

RationalScalar& RationalScalar::operator*=(const RationalScalar& rhs) {
  if (num_.is_zero() || rhs.num_.is_zero()) {
    num_ = LaurentPoly();
    den_ = LaurentPoly(1);
    return *this;
  }
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ *= rhs.num_;
    return *this;
  }
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

RationalScalar& RationalScalar::operator/=(const RationalScalar& rhs) {
  return *this *= rhs.inverse();
}

RationalScalar RationalScalar::operator-() const {
  RationalScalar out = *this;
  out.num_ = -out.num_;
  return out;
}

RationalScalar RationalScalar::inverse() const {
  if (num_.is_zero()) throw std::domain_error("division by zero scalar");
  return RationalScalar(den_, num_);
}

RationalScalar RationalScalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  RationalScalar out = LaurentPoly(1);
  RationalScalar base = *this;
  unsigned long e = static_cast<unsigned long>(k);
  while (e > 0) {
    if (e & 1ul) out *= base;
    base *= base;
    e >>= 1ul;
  }
  return out;
}

RationalScalar LaurentPoly::substituted(Var v, const RationalScalar& value) const {
  if (!uses(v)) return RationalScalar(*this);
  RationalScalar out;
  for (int e = min_exponent(v); e <= max_exponent(v); ++e) {
    LaurentPoly c = coefficient_of(v, e);
    if (c.is_zero()) continue;
    if (e < 0 && value.is_zero())
      throw std::domain_error("substituting zero for a negatively-exponentiated variable");
    out += RationalScalar(c) * value.pow(e);
  }
  return out;
}

RationalScalar RationalScalar::substituted(Var v, const RationalScalar& value) const {
  RationalScalar n = num_.substituted(v, value);
  RationalScalar d = den_.substituted(v, value);
  if (d.is_zero()) throw std::domain_error("substitution makes denominator vanish");
  return n / d;
}

// ---------------------------------------------------------------------------
// brackets

RationalScalar bracket(int a, int b) {
  return bracket_at(a, b, RationalScalar::variable(Var::u));
}

RationalScalar bracket_at(int a, int b, const RationalScalar& spectral) {
  RationalScalar qs = RationalScalar::variable(Var::q);
  RationalScalar num = qs.pow(b) * spectral.pow(a) - qs.pow(-b) * spectral.pow(-a);
  RationalScalar den = qs - qs.pow(-1);
  return num / den;
}

// ---------------------------------------------------------------------------
// printing

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpz_class mag = abs(c);
    bool neg = c < 0;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    bool has_var = e != zero_exponents();
    if (mag != 1 || !has_var) out += mag.get_str();
    for (int i = 0; i < kVarCount; ++i) {
      if (e[i] == 0) continue;
      out += kVarNames[i];
      if (e[i] != 1) {
        out += "^";
        out += std::to_string(e[i]);
      }
    }
  }
  return out;
}

std::string RationalScalar::str() const {
  if (den_.is_one()) return num_.str();
  std::string out = "(";
  out += num_.str();
  out += ") / (";
  out += den_.str();
  out += ")";
  return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("scalar parse error at position " + std::to_string(pos) + ": " +
                                why);
  }

  long parse_int() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
    }
    return neg ? -v : v;
  }

  RationalScalar parse_expr() {
    RationalScalar acc = parse_term();
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos;
        acc += parse_term();
      } else if (c == '-') {
        ++pos;
        acc -= parse_term();
      } else {
        return acc;
      }
    }
  }

  RationalScalar parse_term() {
    RationalScalar acc = parse_unary();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos;
        acc *= parse_unary();
      } else if (c == '/') {
        ++pos;
        RationalScalar d = parse_unary();
        if (d.is_zero()) fail("division by zero");
        acc /= d;
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
        acc *= parse_unary();  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  RationalScalar parse_unary() {
    if (accept('-')) return -parse_unary();
    return parse_power();
  }

  RationalScalar parse_power() {
    RationalScalar base = parse_atom();
    if (accept('^')) {
      long e = parse_int();
      if (e < 0 && base.is_zero()) fail("zero to a negative power");
      return base.pow(e);
    }
    return base;
  }

  RationalScalar parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos;
      RationalScalar inner = parse_expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RationalScalar(LaurentPoly(parse_int()));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      // longest variable name first
      constexpr std::array<std::string_view, 6> names = {"delta", "q", "u", "v", "x", "Q"};
      for (std::string_view name : names) {
        if (text.substr(pos, name.size()) == name) {
          pos += name.size();
          return RationalScalar::variable(*var_from_name(name));
        }
      }
      fail("unknown variable");
    }
    fail("unexpected character");
  }
};

}  // namespace

RationalScalar parse_scalar(std::string_view text) {
  Parser p{text};
  if (p.eof()) throw std::invalid_argument("empty scalar");
  RationalScalar out = p.parse_expr();
  if (!p.eof()) p.fail("trailing input");
  return out;
}

}  // namespace dilute
