#include <doctest.h>

#include <random>
#include <set>

#include "dilute/towers.hpp"

using namespace dilute;

namespace {

RationalScalar qv() { return RationalScalar::variable(Var::q); }
RationalScalar deltav() { return RationalScalar::variable(Var::delta); }

}  // namespace

TEST_CASE("unit element") {
  auto ctx = generic_context(1, 2);
  auto one = AlgebraElement::unit(ctx);
  CHECK(one.coeffs().size() == 2);
  CHECK(one * one == one);

  auto ctx0 = generic_context(0, 2);
  auto one0 = AlgebraElement::unit(ctx0);
  CHECK(one0.coeffs().size() == 1);

  auto ctx2 = generic_context(2, 2);
  auto unit2 = AlgebraElement::unit(ctx2);
  for (const auto& d : enumerate_basis(2, 2, DiagramKind::dilute_tl)) {
    auto a = AlgebraElement::from_diagram(ctx2, d);
    CHECK(unit2 * a == a);
    CHECK(a * unit2 == a);
  }
}

TEST_CASE("multiplication is associative") {
  auto ctx = generic_context(2, 2);
  auto basis = enumerate_basis(2, 2, DiagramKind::dilute_tl);
  std::vector<AlgebraElement> elems;
  for (const auto& d : basis) elems.push_back(AlgebraElement::from_diagram(ctx, d));
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) CHECK((a * b) * c == a * (b * c));

  auto ctx3 = generic_context(3, 2);
  auto basis3 = enumerate_basis(3, 2, DiagramKind::dilute_tl);
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, basis3.size() - 1);
  for (int t = 0; t < 100; ++t) {
    auto a = AlgebraElement::from_diagram(ctx3, basis3[pick(rng)]);
    auto b = AlgebraElement::from_diagram(ctx3, basis3[pick(rng)]);
    auto c = AlgebraElement::from_diagram(ctx3, basis3[pick(rng)]);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("permutation algebra is a sum of matrix algebras") {
  for (int colours = 1; colours <= 3; ++colours) {
    for (int n = 0; n <= 3; ++n) {
      auto basis = enumerate_basis(n, colours, DiagramKind::permutation);
      for (const auto& d1 : basis) {
        for (const auto& d2 : basis) {
          auto r = compose(d1, d2);
          if (d1.bottom() != d2.top()) {
            CHECK(!r.has_value());
            continue;
          }
          REQUIRE(r.has_value());
          for (int l : r->loops) CHECK(l == 0);
          // x_{XY} x_{YZ} = x_{XZ}
          CHECK(r->diagram.top() == d1.top());
          CHECK(r->diagram.bottom() == d2.bottom());
          CHECK(propagating_content(r->diagram, colours).total() == n);
        }
      }
    }
  }
}

TEST_CASE("five generators and their products") {
  auto ctx = generic_context(2, 2);
  auto e = gen_e(ctx, 1), f = gen_f(ctx, 1), s = gen_s(ctx, 1), u = gen_u(ctx, 1),
       t = gen_t(ctx, 1);
  auto one = AlgebraElement::unit(ctx);
  RationalScalar delta = deltav();

  CHECK(e + f == one);
  CHECK(s * s == f);
  CHECK(t * t == delta * u);
  CHECK(u * u == delta * u);
  CHECK(e * s == AlgebraElement::zero(ctx));
  CHECK(s * e == AlgebraElement::zero(ctx));
  CHECK(e * u == u);
  CHECK(u * e == u);
  CHECK(f * s == s);
  CHECK(u * t == delta * t);
  CHECK(f * u == AlgebraElement::zero(ctx));

  // all five are colour-swap invariant
  for (const auto& g : {e, f, s, u, t}) CHECK(is_symmetric(g));

  CHECK_THROWS_AS(gen_e(ctx, 2), std::out_of_range);
  CHECK_THROWS_AS(gen_e(ctx, 0), std::out_of_range);

  // products across different contexts are rejected
  auto other = AlgebraElement::unit(generic_context(3, 2));
  CHECK_THROWS_AS(one * other, std::invalid_argument);
}

TEST_CASE("orthogonal idempotents") {
  for (int n = 2; n <= 3; ++n) {
    auto ctx = generic_context(n, 2);
    for (int i = 1; i <= n - 1; ++i) {
      auto p = idempotents(ctx, i);
      for (std::size_t a = 0; a < p.size(); ++a) {
        for (std::size_t b = 0; b < p.size(); ++b) {
          if (a == b)
            CHECK(p[a] * p[a] == p[a]);
          else
            CHECK(p[a] * p[b] == AlgebraElement::zero(ctx));
        }
      }
      // the five resolve e_i + f_i, the local identity
      AlgebraElement sum = AlgebraElement::zero(ctx);
      for (const auto& x : p) sum += x;
      CHECK(sum == gen_e(ctx, i) + gen_f(ctx, i));
      CHECK(sum == AlgebraElement::unit(ctx));
    }
  }
}

TEST_CASE("cell ideals") {
  auto ctx = generic_context(2, 2);
  auto u = gen_u(ctx, 1);
  PropagatingContent zero2{{0, 0}};
  CHECK(in_cell_ideal(u, zero2));

  auto one = AlgebraElement::unit(ctx);
  PropagatingContent p11{{1, 1}};
  CHECK(!in_cell_ideal(one, p11));
  CHECK(!in_cell_ideal(one, zero2));

  // I(p) is an ideal: x * a stays inside, exhaustively at n = 2
  auto basis = enumerate_basis(2, 2, DiagramKind::dilute_tl);
  PropagatingContent caps[] = {zero2, p11, {{2, 0}}, {{0, 2}}};
  for (const auto& p : caps) {
    for (const auto& da : basis) {
      auto a = AlgebraElement::from_diagram(ctx, da);
      if (!in_cell_ideal(a, p)) continue;
      for (const auto& dx : basis) {
        auto x = AlgebraElement::from_diagram(ctx, dx);
        CHECK(in_cell_ideal(x * a, p));
        CHECK(in_cell_ideal(a * x, p));
      }
    }
  }
}

TEST_CASE("symmetric fixed-point basis") {
  CHECK(symmetric_basis(generic_context(1, 2)).size() == 1);
  CHECK(symmetric_basis(generic_context(2, 2)).size() == 5);
  CHECK(symmetric_basis(generic_context(3, 2)).size() == 35);
  for (const auto& b : symmetric_basis(generic_context(2, 2))) CHECK(is_symmetric(b));
  // the fixed-point algebra is closed under multiplication
  auto basis = symmetric_basis(generic_context(2, 2));
  for (const auto& a : basis)
    for (const auto& b : basis) CHECK(is_symmetric(a * b));
}

TEST_CASE("hat subalgebra") {
  CHECK(hat_subalgebra_basis(0).size() == 1);
  CHECK(hat_subalgebra_basis(1).size() == 2);
  CHECK(hat_subalgebra_basis(2).size() == 8);   // strictly below dim 10
  CHECK(hat_subalgebra_basis(3).size() == 46);  // sum of binom(3;r,s)^2 C(r) C(s)

  // closed under multiplication, exhaustively for n <= 3
  for (int n = 0; n <= 3; ++n) {
    auto hat = hat_subalgebra_basis(n);
    std::set<DiluteDiagram> hat_set(hat.begin(), hat.end());
    for (const auto& d1 : hat)
      for (const auto& d2 : hat) {
        auto r = compose(d1, d2);
        if (!r) continue;
        CHECK(hat_set.count(r->diagram) == 1);
      }
  }
}

TEST_CASE("hat subalgebra corner") {
  // corner at the content-(1,1) word diagram: e Ahat(2) e has dimension 1
  auto ctx = generic_context(2, 2);
  auto corner = AlgebraElement::from_diagram(ctx, DiluteDiagram::identity({0, 1}));
  CHECK(corner * corner == corner);
  std::vector<AlgebraElement> products;
  for (const auto& d : hat_subalgebra_basis(2)) {
    auto p = corner * AlgebraElement::from_diagram(ctx, d) * corner;
    if (!p.is_zero()) products.push_back(p);
  }
  CHECK(!products.empty());
  CHECK(span_rank(products) == 1);
}

TEST_CASE("braid generators") {
  RationalScalar Q = RationalScalar::variable(Var::Q);
  RationalScalar q = qv();
  for (int n = 2; n <= 3; ++n) {
    auto ctx = specialized_context(n);
    auto one = AlgebraElement::unit(ctx);
    for (int i = 1; i <= n - 1; ++i) {
      CHECK(braid_sigma(ctx, i, +1, Q) * braid_sigma(ctx, i, -1, Q) == one);
      CHECK(braid_sigma(ctx, i, -1, Q) * braid_sigma(ctx, i, +1, Q) == one);
    }
  }
  // braid relation in the three-strand algebra
  auto ctx3 = specialized_context(3);
  auto s1 = braid_sigma(ctx3, 1, +1, Q);
  auto s2 = braid_sigma(ctx3, 2, +1, Q);
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);

  // coefficient of the all-alike identity diagram in sigma_1 is q^2
  auto ctx2 = specialized_context(2);
  auto sigma = braid_sigma(ctx2, 1, +1, Q);
  CHECK(sigma.coefficient(DiluteDiagram::identity({0, 0})) == q.pow(2));
  CHECK(sigma.coefficient(DiluteDiagram::identity({1, 1})) == q.pow(2));
}

TEST_CASE("Temperley-Lieb embedding") {
  auto ctx = generic_context(3, 2);
  RationalScalar two_delta = RationalScalar(2) * deltav();
  auto U1 = tl_embed(ctx, 1), U2 = tl_embed(ctx, 2);
  CHECK(U1 * U1 == two_delta * U1);
  CHECK(U1 * U2 * U1 == U1);
  CHECK(U2 * U1 * U2 == U2);
  CHECK_THROWS_AS(tl_embed(ctx, 3), std::out_of_range);
}

TEST_CASE("bimodule spanning of the next tower level") {
  for (int n = 1; n <= 2; ++n) {
    auto ctx_big = generic_context(n + 1, 2);
    std::vector<AlgebraElement> embedded;
    for (const auto& b : symmetric_basis(generic_context(n, 2)))
      embedded.push_back(embed_add_strand(b));
    std::vector<AlgebraElement> gens = {gen_e(ctx_big, n), gen_s(ctx_big, n),
                                        gen_u(ctx_big, n), gen_t(ctx_big, n)};
    std::vector<AlgebraElement> vectors = embedded;
    for (const auto& a : embedded)
      for (const auto& g : gens)
        for (const auto& b : embedded) vectors.push_back(a * g * b);
    int target = static_cast<int>(symmetric_basis(ctx_big).size());
    CHECK(span_rank(vectors) == target);
  }
}
