#include <doctest.h>

#include "dilute/invariant.hpp"

using namespace dilute;

namespace {

RationalScalar qv() { return RationalScalar::variable(Var::q); }
RationalScalar deltav() { return RationalScalar::variable(Var::delta); }
RationalScalar Qv() { return RationalScalar::variable(Var::Q); }

LaurentPoly loop_value() {
  return -(LaurentPoly::variable(Var::q, 2)) - LaurentPoly::variable(Var::q, -2);
}

}  // namespace

TEST_CASE("partial closure basics") {
  auto ctx2 = generic_context(2, 2);
  RationalScalar two_delta = RationalScalar(2) * deltav();
  CHECK(partial_closure(AlgebraElement::unit(ctx2)) ==
        two_delta * AlgebraElement::unit(generic_context(1, 2)));

  // The diagrammatic closure sums the closing arc over both colours, so an
  // embedded element scales by 2 delta, not by delta: closing one identity
  // strand makes one loop per colour choice.  This pins the normalization
  // convention used by the whole trace tower.
  for (const auto& b : symmetric_basis(ctx2)) {
    CHECK(partial_closure(embed_add_strand(b)) == two_delta * b);
    CHECK(partial_closure(embed_add_strand(b)) != deltav() * b);
  }
}

TEST_CASE("partial closure expectation rules") {
  // epsilon(a g b) for g in {e, s, u, t} at the last position
  for (int n = 1; n <= 2; ++n) {
    auto ctx = generic_context(n, 2);
    auto ctx_big = generic_context(n + 1, 2);
    RationalScalar delta = deltav();
    auto basis = symmetric_basis(ctx);
    auto e = gen_e(ctx_big, n), s = gen_s(ctx_big, n), u = gen_u(ctx_big, n),
         t = gen_t(ctx_big, n);
    for (const auto& a : basis) {
      for (const auto& b : basis) {
        auto ea = embed_add_strand(a);
        auto eb = embed_add_strand(b);
        auto ab = a * b;
        CHECK(partial_closure(ea * s * eb) == AlgebraElement::zero(ctx));
        CHECK(partial_closure(ea * t * eb) == AlgebraElement::zero(ctx));
        CHECK(partial_closure(ea * u * eb) == ab);
        CHECK(partial_closure(ea * e * eb) == delta * ab);
      }
    }
  }
}

TEST_CASE("Markov property") {
  RationalScalar q = qv();
  RationalScalar Q = Qv();
  for (int n = 1; n <= 2; ++n) {
    auto ctx = specialized_context(n);
    auto ctx_big = specialized_context(n + 1);
    auto basis = symmetric_basis(ctx);
    for (int sign : {+1, -1}) {
      auto sigma = braid_sigma(ctx_big, n, sign, Q);
      RationalScalar factor = -q.pow(4 * sign);
      // the Q-dependent s-term is annihilated, so the factor is Q-free
      for (const auto& a : basis) {
        for (const auto& b : basis) {
          auto lhs = partial_closure(embed_add_strand(a) * sigma * embed_add_strand(b));
          CHECK(lhs == factor * (a * b));
        }
      }
    }
  }
}

TEST_CASE("closure trace") {
  RationalScalar delta = deltav();
  for (int n = 0; n <= 3; ++n) {
    auto ctx = generic_context(n, 2);
    CHECK(closure_trace(AlgebraElement::unit(ctx)) == (RationalScalar(2) * delta).pow(n));
  }
  auto ctx2 = generic_context(2, 2);
  CHECK(closure_trace(gen_u(ctx2, 1)) == RationalScalar(2) * delta);
  CHECK(closure_trace(gen_s(ctx2, 1)).is_zero());
  CHECK(closure_trace(gen_e(ctx2, 1)) == RationalScalar(2) * delta.pow(2));
  CHECK(closure_trace(gen_f(ctx2, 1)) == RationalScalar(2) * delta.pow(2));

  // trace property: tr(ab) = tr(ba), exhaustively at n = 2
  auto basis = enumerate_basis(2, 2, DiagramKind::dilute_tl);
  for (const auto& da : basis)
    for (const auto& db : basis) {
      auto a = AlgebraElement::from_diagram(ctx2, da);
      auto b = AlgebraElement::from_diagram(ctx2, db);
      CHECK(closure_trace(a * b) == closure_trace(b * a));
    }
}

TEST_CASE("trace tower compatibility") {
  RationalScalar two_delta = RationalScalar(2) * deltav();
  for (int n = 1; n <= 2; ++n) {
    auto ctx = generic_context(n, 2);
    for (const auto& b : symmetric_basis(ctx)) {
      CHECK(closure_trace(embed_add_strand(b)) == two_delta * closure_trace(b));
    }
  }
  // tau_{n+1} = tau_n o epsilon_n on the full diagram basis
  for (int n = 0; n <= 2; ++n) {
    auto ctx_big = generic_context(n + 1, 2);
    for (const auto& d : enumerate_basis(n + 1, 2, DiagramKind::dilute_tl)) {
      auto a = AlgebraElement::from_diagram(ctx_big, d);
      CHECK(closure_trace(a) == closure_trace(partial_closure(a)));
    }
  }
}

TEST_CASE("link invariants from braid words") {
  RationalScalar q = qv();
  RationalScalar Q = Qv();
  RationalScalar two_delta = RationalScalar(-2) * (q.pow(2) + q.pow(-2));

  // unknot as the empty one-strand braid
  BraidWord unknot = parse_braid_word(1, "");
  CHECK(link_invariant_trace(unknot, Q).raw == two_delta);

  // two-strand unlink via sigma sigma^-1
  BraidWord unlink = parse_braid_word(2, "1 -1");
  CHECK(link_invariant_trace(unlink, Q).raw == two_delta.pow(2));
  CHECK(link_invariant_trace(unlink, Q).normalized == two_delta.pow(2));

  // conjugation invariance
  BraidWord beta = parse_braid_word(3, "1 2 -1");
  BraidWord conj = parse_braid_word(3, "2 1 2 -1 -2");
  CHECK(link_invariant_trace(beta, Q).normalized ==
        link_invariant_trace(conj, Q).normalized);

  // stabilization invariance
  BraidWord stab_pos = parse_braid_word(4, "1 2 -1 3");
  BraidWord stab_neg = parse_braid_word(4, "1 2 -1 -3");
  CHECK(link_invariant_trace(beta, Q).normalized ==
        link_invariant_trace(stab_pos, Q).normalized);
  CHECK(link_invariant_trace(beta, Q).normalized ==
        link_invariant_trace(stab_neg, Q).normalized);

  CHECK_THROWS_AS(parse_braid_word(2, "2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid_word(2, "1 x"), std::invalid_argument);
}

TEST_CASE("braid closure planar diagrams") {
  // one-crossing closure of sigma_1 in B2: a curl with two arcs
  auto pd = braid_closure_pd(parse_braid_word(2, "1"));
  CHECK(pd.crossings.size() == 1);
  CHECK(pd.components.size() == 1);

  auto hopf = braid_closure_pd(parse_braid_word(2, "1 1"));
  CHECK(hopf.crossings.size() == 2);
  CHECK(hopf.components.size() == 2);

  auto trefoil = braid_closure_pd(parse_braid_word(2, "1 1 1"));
  CHECK(trefoil.components.size() == 1);

  // untouched strands close into bare circles
  auto split = braid_closure_pd(parse_braid_word(3, "1"));
  CHECK(split.components.size() == 2);

  // round trip through json
  CHECK(pd_from_json(pd_to_json(trefoil)) == trefoil);
}

TEST_CASE("Kauffman bracket oracle") {
  LaurentPoly delta = loop_value();

  auto unknot = braid_closure_pd(parse_braid_word(1, ""));
  CHECK(kauffman_bracket(unknot) == delta);

  // positive curl: -q^3 times the unknot
  auto curl = braid_closure_pd(parse_braid_word(2, "1"));
  CHECK(kauffman_bracket(curl) == -(LaurentPoly::variable(Var::q, 3)) * delta);
  auto negcurl = braid_closure_pd(parse_braid_word(2, "-1"));
  CHECK(kauffman_bracket(negcurl) == -(LaurentPoly::variable(Var::q, -3)) * delta);

  // Hopf link: delta (-q^4 - q^-4)
  auto hopf = braid_closure_pd(parse_braid_word(2, "1 1"));
  CHECK(kauffman_bracket(hopf) ==
        delta * (-(LaurentPoly::variable(Var::q, 4)) - LaurentPoly::variable(Var::q, -4)));

  // trefoil: q^7 + q^3 + q^-1 - q^-9
  auto trefoil = braid_closure_pd(parse_braid_word(2, "1 1 1"));
  LaurentPoly expected = LaurentPoly::variable(Var::q, 7) + LaurentPoly::variable(Var::q, 3) +
                         LaurentPoly::variable(Var::q, -1) - LaurentPoly::variable(Var::q, -9);
  CHECK(kauffman_bracket(trefoil) == expected);

  // bracket is invariant under the second Reidemeister move
  auto r2 = braid_closure_pd(parse_braid_word(2, "1 -1"));
  CHECK(kauffman_bracket(r2) == delta * delta);
}

TEST_CASE("dilute state sum") {
  LaurentPoly delta = loop_value();
  auto unknot = braid_closure_pd(parse_braid_word(1, ""));
  CHECK(dilute_state_sum(unknot) == LaurentPoly(2) * delta);

  auto unlink = braid_closure_pd(parse_braid_word(2, ""));
  CHECK(dilute_state_sum(unlink) == LaurentPoly(4) * delta.pow(2));

  // one-crossing curl: 2 colourings of one component
  auto curl = braid_closure_pd(parse_braid_word(2, "1"));
  CHECK(dilute_state_sum(curl) == LaurentPoly(-2) * LaurentPoly::variable(Var::q, 3) * delta);

  // Hopf: monochrome brackets plus two mixed colourings worth delta^2
  auto hopf = braid_closure_pd(parse_braid_word(2, "1 1"));
  CHECK(dilute_state_sum(hopf) ==
        LaurentPoly(2) * kauffman_bracket(hopf) + LaurentPoly(2) * delta.pow(2));

  // multiplicative under disjoint union
  auto trefoil = braid_closure_pd(parse_braid_word(2, "1 1 1"));
  CHECK(dilute_state_sum(pd_disjoint_union(trefoil, unknot)) ==
        dilute_state_sum(trefoil) * dilute_state_sum(unknot));
  CHECK(dilute_state_sum(pd_disjoint_union(hopf, hopf)) ==
        dilute_state_sum(hopf) * dilute_state_sum(hopf));
}

TEST_CASE("calibration against the oracle") {
  std::vector<BraidWord> braids = {
      parse_braid_word(1, ""),        // unknot
      parse_braid_word(2, ""),        // unlink
      parse_braid_word(2, "1"),       // curl
      parse_braid_word(2, "-1"),      // negative curl
      parse_braid_word(2, "1 1"),     // Hopf
      parse_braid_word(2, "1 -1"),    // R2 pair
      parse_braid_word(2, "1 1 1"),   // trefoil
      parse_braid_word(2, "-1 -1 -1"),
      parse_braid_word(3, "1 2"),
      parse_braid_word(3, "1 -2 1"),
  };
  auto report = calibrate_and_crosscheck(braids);
  CHECK(report.consistent);
  CHECK(report.lambda == qv());
  CHECK(report.Q_star == -qv());
  CHECK(report.trace_even_in_Q);
  CHECK(!report.sign_determined);  // closures cannot see the sign of Q
  for (const auto& [name, ok] : report.matches) CHECK(ok);
}
