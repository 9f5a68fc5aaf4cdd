#include <doctest.h>

#include <random>

#include "dilute/scalars.hpp"

using namespace dilute;

namespace {

RationalScalar qv() { return RationalScalar::variable(Var::q); }
RationalScalar uv() { return RationalScalar::variable(Var::u); }

// Small random Laurent polynomials in q, u for property tests.
LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(0, 4);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> expo(-3, 3);
  LaurentPoly p;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Exponents e{};
    e.fill(0);
    e[static_cast<int>(Var::q)] = expo(rng);
    e[static_cast<int>(Var::u)] = expo(rng);
    p += LaurentPoly::monomial(coeff(rng), e);
  }
  return p;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  RationalScalar q = qv();
  // (q + q^-1)(q - q^-1) = q^2 - q^-2
  RationalScalar prod = (q + q.pow(-1)) * (q - q.pow(-1));
  CHECK(prod == q.pow(2) - q.pow(-2));
  // additive identity
  RationalScalar p = parse_scalar("3q^2 - u + 7");
  CHECK(p + RationalScalar() == p);
  // exact polynomial division: (q^2 - q^-2) / (q - q^-1) = q + q^-1
  auto quot = divide_exact((q.pow(2) - q.pow(-2)).num(), (q - q.pow(-1)).num());
  REQUIRE(quot.has_value());
  CHECK(*quot == (q + q.pow(-1)).num());
  // and through the fraction field the result is polynomial
  RationalScalar r = (q.pow(2) - q.pow(-2)) / (q - q.pow(-1));
  CHECK(r == q + q.pow(-1));
  CHECK(r.is_polynomial());
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(qv() / RationalScalar(), std::domain_error);
  CHECK_THROWS_AS(RationalScalar().inverse(), std::domain_error);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("rational equality agrees with cross multiplication") {
  std::mt19937 rng(11);
  int done = 0;
  while (done < 1000) {
    LaurentPoly n1 = random_poly(rng), d1 = random_poly(rng);
    LaurentPoly n2 = random_poly(rng), d2 = random_poly(rng);
    if (d1.is_zero() || d2.is_zero()) continue;
    RationalScalar r1(n1, d1), r2(n2, d2);
    CHECK((r1 == r2) == (n1 * d2 == n2 * d1));
    ++done;
  }
}

TEST_CASE("fractions reduce to canonical form") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), m = random_poly(rng);
    if (b.is_zero() || m.is_zero()) continue;
    // (a*m)/(b*m) must equal a/b structurally
    CHECK(RationalScalar(a * m, b * m) == RationalScalar(a, b));
  }
}

TEST_CASE("substitution") {
  RationalScalar q = qv();
  RationalScalar delta = RationalScalar::variable(Var::delta);
  RationalScalar specialization = -q.pow(2) - q.pow(-2);
  CHECK(delta.substituted(Var::delta, specialization) == specialization);
  // variable absent: unchanged
  CHECK(q.pow(3).substituted(Var::u, RationalScalar(1)) == q.pow(3));
  // ((u - u^-1)/(q - q^-1)) at u = 1 is 0
  RationalScalar bx = bracket(1, 0);
  CHECK(bx.substituted(Var::u, RationalScalar(1)).is_zero());
  // zero for a negatively-exponentiated variable is rejected
  CHECK_THROWS_AS(uv().pow(-1).substituted(Var::u, RationalScalar()), std::domain_error);
}

TEST_CASE("substitution is a ring homomorphism") {
  std::mt19937 rng(17);
  RationalScalar value = parse_scalar("q^2 - 3");
  for (int trial = 0; trial < 100; ++trial) {
    RationalScalar a{random_poly(rng)}, b{random_poly(rng)};
    CHECK((a * b).substituted(Var::u, value) ==
          a.substituted(Var::u, value) * b.substituted(Var::u, value));
    CHECK((a + b).substituted(Var::u, value) ==
          a.substituted(Var::u, value) + b.substituted(Var::u, value));
  }
}

TEST_CASE("spectral brackets") {
  RationalScalar q = qv(), u = uv();
  // [3] = q^2 + 1 + q^-2
  CHECK(bracket(0, 3) == q.pow(2) + RationalScalar(1) + q.pow(-2));
  // [0] = 0
  CHECK(bracket(0, 0).is_zero());
  // [x] = (u - u^-1)/(q - q^-1)
  CHECK(bracket(1, 0) == (u - u.pow(-1)) / (q - q.pow(-1)));
}

TEST_CASE("brackets clear against q - q^-1") {
  RationalScalar clear = qv() - qv().pow(-1);
  for (int a = -2; a <= 2; ++a)
    for (int b = -3; b <= 3; ++b) CHECK((bracket(a, b) * clear).is_polynomial());
}

TEST_CASE("parsing inverts printing on random fractions") {
  std::mt19937 rng(29);
  int done = 0;
  while (done < 200) {
    LaurentPoly n1 = random_poly(rng), d1 = random_poly(rng);
    if (d1.is_zero()) continue;
    RationalScalar r(n1, d1);
    CHECK(parse_scalar(r.str()) == r);
    ++done;
  }
}

TEST_CASE("printing and parsing round trip") {
  RationalScalar q = qv();
  RationalScalar two_delta = RationalScalar(-2) * (q.pow(2) + q.pow(-2));
  CHECK(two_delta.str() == "-2q^2 - 2q^-2");
  for (const char* text : {"-2q^2 - 2q^-2", "(u - u^-1)/(q - q^-1)", "3qu^-2 + delta", "0",
                           "-Q^3", "(q+1)(q-1)", "2^3 - x"}) {
    RationalScalar s = parse_scalar(text);
    CHECK(parse_scalar(s.str()) == s);
  }
  CHECK(parse_scalar("2^3 - x") == RationalScalar(8) - RationalScalar::variable(Var::x));
  CHECK_THROWS_AS(parse_scalar("q +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar("foo"), std::invalid_argument);
}
