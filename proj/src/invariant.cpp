#include "dilute/invariant.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dilute {

namespace {

RationalScalar qv() { return RationalScalar::variable(Var::q); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int BraidWord::exponent_sum() const {
  int e = 0;
  for (int l : letters) e += l > 0 ? 1 : -1;
  return e;
}

int BraidWord::positive_count() const {
  int e = 0;
  for (int l : letters) e += l > 0 ? 1 : 0;
  return e;
}

int BraidWord::negative_count() const { return static_cast<int>(letters.size()) - positive_count(); }

BraidWord parse_braid_word(int strands, const std::string& text) {
  if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
  BraidWord w;
  w.strands = strands;
  std::istringstream in(text);
  int letter;
  while (in >> letter) {
    if (letter == 0 || std::abs(letter) > strands - 1)
      throw std::invalid_argument("braid letter out of range: " + std::to_string(letter));
    w.letters.push_back(letter);
  }
  if (!in.eof()) throw std::invalid_argument("malformed braid word");
  return w;
}

AlgebraElement braid_image(const AlgebraContext& ctx, const BraidWord& word,
                           const RationalScalar& Q) {
  if (ctx.n != word.strands) throw std::invalid_argument("strand count mismatch");
  AlgebraElement out = AlgebraElement::unit(ctx);
  for (int l : word.letters) out = out * braid_sigma(ctx, std::abs(l), l > 0 ? +1 : -1, Q);
  return out;
}

AlgebraElement partial_closure(const AlgebraElement& a) {
  const AlgebraContext& ctx = a.ctx();
  if (ctx.n < 1) throw std::invalid_argument("partial closure needs at least one strand");
  AlgebraContext small = ctx;
  small.n -= 1;
  const int n = small.n;  // strands after closure
  AlgebraElement out(small);

  for (const auto& [d, c] : a.coeffs()) {
    const int top_last = n;                // closed top point
    const int bot_last = d.top_size() + n; // closed bottom point
    if (d.colour_at(top_last) != d.colour_at(bot_last)) continue;
    const int colour = d.colour_at(top_last);

    RationalScalar coeff = c;
    std::vector<std::pair<int, int>> pairs;
    auto remap = [&](int p) { return p < top_last ? p : p - 1; };  // drop the two closed points

    if (d.mate(top_last) == bot_last) {
      coeff *= ctx.delta.at(colour);  // the closure arc makes a loop
      for (auto [i, j] : d.pairs())
        if (i != top_last) pairs.emplace_back(remap(i), remap(j));
    } else {
      int p = d.mate(top_last);
      int r = d.mate(bot_last);
      for (auto [i, j] : d.pairs()) {
        if (i == top_last || j == top_last || i == bot_last || j == bot_last) continue;
        pairs.emplace_back(remap(i), remap(j));
      }
      pairs.emplace_back(std::min(remap(p), remap(r)), std::max(remap(p), remap(r)));
    }

    ColourWord top(d.top().begin(), d.top().end() - 1);
    ColourWord bottom(d.bottom().begin(), d.bottom().end() - 1);
    out.add_term(DiluteDiagram(std::move(top), std::move(bottom), pairs), coeff);
  }
  return out;
}

RationalScalar closure_trace(const AlgebraElement& a) {
  const AlgebraContext& ctx = a.ctx();
  RationalScalar total;
  for (const auto& [d, c] : a.coeffs()) {
    const int n = d.top_size();
    if (d.bottom_size() != n) throw std::invalid_argument("closure trace needs equal boundaries");
    // closure arc i joins top point i to bottom point i
    bool consistent = true;
    for (int i = 0; i < n && consistent; ++i)
      consistent = d.colour_at(i) == d.colour_at(n + i);
    if (!consistent) continue;
    // cycles alternate diagram pairs and closure arcs
    std::vector<char> used(2 * n, 0);
    RationalScalar weight(1);
    for (int start = 0; start < 2 * n; ++start) {
      if (used[start]) continue;
      int colour = d.colour_at(start);
      int p = start;
      bool via_diagram = true;
      do {
        used[p] = 1;
        if (via_diagram) {
          p = d.mate(p);
        } else {
          p = p < n ? p + n : p - n;
        }
        used[p] = 1;
        via_diagram = !via_diagram;
      } while (p != start);
      weight *= ctx.delta.at(colour);
    }
    total += c * weight;
  }
  return total;
}

TraceInvariant link_invariant_trace(const BraidWord& word, const RationalScalar& Q) {
  auto ctx = specialized_context(word.strands);
  RationalScalar raw = closure_trace(braid_image(ctx, word, Q));
  RationalScalar pos = -qv().pow(4);
  RationalScalar neg = -qv().pow(-4);
  RationalScalar norm =
      pos.pow(-word.positive_count()) * neg.pow(-word.negative_count()) * raw;
  return {raw, norm};
}

// ---------------------------------------------------------------------------
// PD codes

PDCode braid_closure_pd(const BraidWord& word) {
  const int n = word.strands;
  int next_arc = 0;
  std::vector<int> init(n), cur(n);
  for (int i = 0; i < n; ++i) init[i] = cur[i] = next_arc++;
  std::vector<char> touched(n, 0);

  struct RawCrossing {
    std::array<int, 4> arcs;
    int sign;
  };
  std::vector<RawCrossing> raw;
  for (int l : word.letters) {
    int i0 = std::abs(l) - 1;
    touched[i0] = touched[i0 + 1] = 1;
    int nw = cur[i0], ne = cur[i0 + 1];
    int sw = next_arc++, se = next_arc++;
    if (l > 0) {
      raw.push_back({{ne, nw, sw, se}, +1});  // over strand NE -> SW
    } else {
      raw.push_back({{nw, sw, se, ne}, -1});  // over strand NW -> SE
    }
    cur[i0] = sw;
    cur[i0 + 1] = se;
  }

  // closing the braid identifies the final arcs with the initial ones
  UnionFind uf(next_arc);
  for (int i = 0; i < n; ++i) uf.unite(cur[i], init[i]);

  // canonical arc ids in order of first appearance
  std::map<int, int> relabel;
  auto id_of = [&](int a) {
    int root = uf.find(a);
    auto [it, inserted] = relabel.emplace(root, static_cast<int>(relabel.size()));
    return it->second;
  };
  PDCode pd;
  for (const auto& rc : raw) {
    PDCrossing c;
    for (int k = 0; k < 4; ++k) c.arcs[k] = id_of(rc.arcs[k]);
    c.sign = rc.sign;
    pd.crossings.push_back(c);
  }
  int arc_count = static_cast<int>(relabel.size());

  // components: strands glued across crossings, plus untouched circles
  UnionFind comp(arc_count + n);
  for (const auto& c : pd.crossings) {
    comp.unite(c.arcs[0], c.arcs[2]);
    comp.unite(c.arcs[1], c.arcs[3]);
  }
  std::vector<int> bare;
  for (int i = 0; i < n; ++i)
    if (!touched[i]) bare.push_back(arc_count++);
  std::map<int, std::vector<int>> groups;
  for (int a = 0; a < arc_count; ++a) {
    bool is_bare = std::find(bare.begin(), bare.end(), a) != bare.end();
    groups[is_bare ? a : comp.find(a)].push_back(a);
  }
  for (auto& [root, arcs] : groups) pd.components.push_back(std::move(arcs));
  return pd;
}

PDCode pd_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  PDCode pd;
  int max_arc = -1;
  for (const auto& jc : j.at("crossings")) {
    PDCrossing c;
    auto arr = jc.at("arcs");
    if (arr.size() != 4) throw std::invalid_argument("crossing needs four arcs");
    for (int k = 0; k < 4; ++k) {
      c.arcs[k] = arr.at(k).get<int>();
      max_arc = std::max(max_arc, c.arcs[k]);
    }
    c.sign = jc.value("sign", +1);
    pd.crossings.push_back(c);
  }
  // each arc label must occur exactly twice among the crossing slots
  std::map<int, int> occurrences;
  for (const auto& c : pd.crossings)
    for (int a : c.arcs) ++occurrences[a];
  for (const auto& [a, k] : occurrences)
    if (k != 2) throw std::invalid_argument("arc " + std::to_string(a) + " occurs " +
                                            std::to_string(k) + " times");
  if (j.contains("components")) {
    pd.components = j.at("components").get<std::vector<std::vector<int>>>();
  } else {
    UnionFind comp(max_arc + 1);
    for (const auto& c : pd.crossings) {
      comp.unite(c.arcs[0], c.arcs[2]);
      comp.unite(c.arcs[1], c.arcs[3]);
    }
    std::map<int, std::vector<int>> groups;
    for (const auto& [a, k] : occurrences) groups[comp.find(a)].push_back(a);
    for (auto& [root, arcs] : groups) pd.components.push_back(std::move(arcs));
    int circles = j.value("circles", 0);
    for (int k = 0; k < circles; ++k) pd.components.push_back({++max_arc});
  }
  return pd;
}

std::string pd_to_json(const PDCode& pd) {
  nlohmann::json out;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : pd.crossings)
    cs.push_back({{"arcs", c.arcs}, {"sign", c.sign}});
  out["crossings"] = cs;
  out["components"] = pd.components;
  return out.dump();
}

PDCode pd_disjoint_union(const PDCode& a, const PDCode& b) {
  int shift = 0;
  for (const auto& comp : a.components)
    for (int arc : comp) shift = std::max(shift, arc + 1);
  PDCode out = a;
  for (const auto& c : b.crossings) {
    PDCrossing s = c;
    for (auto& arc : s.arcs) arc += shift;
    out.crossings.push_back(s);
  }
  for (const auto& comp : b.components) {
    std::vector<int> shifted;
    for (int arc : comp) shifted.push_back(arc + shift);
    out.components.push_back(std::move(shifted));
  }
  return out;
}

LaurentPoly kauffman_bracket(const PDCode& pd, const std::vector<bool>& keep) {
  if (keep.size() != pd.components.size())
    throw std::invalid_argument("keep mask size mismatch");
  // arc -> component
  std::map<int, int> comp_of;
  int max_arc = -1;
  for (std::size_t k = 0; k < pd.components.size(); ++k)
    for (int a : pd.components[k]) {
      comp_of[a] = static_cast<int>(k);
      max_arc = std::max(max_arc, a);
    }

  std::vector<std::pair<int, int>> fixed_joins;
  std::vector<const PDCrossing*> live;  // both strands kept
  std::set<int> arcs_in_crossings;
  for (const auto& c : pd.crossings) {
    for (int a : c.arcs) arcs_in_crossings.insert(a);
    bool over_kept = keep[comp_of.at(c.arcs[0])];
    bool under_kept = keep[comp_of.at(c.arcs[1])];
    if (over_kept && under_kept) {
      live.push_back(&c);
    } else if (over_kept) {
      fixed_joins.emplace_back(c.arcs[0], c.arcs[2]);
    } else if (under_kept) {
      fixed_joins.emplace_back(c.arcs[1], c.arcs[3]);
    }
  }

  // kept components whose arcs meet no crossing are bare circles
  int bare = 0;
  for (std::size_t k = 0; k < pd.components.size(); ++k) {
    if (!keep[k]) continue;
    bool isolated = true;
    for (int a : pd.components[k])
      if (arcs_in_crossings.count(a)) isolated = false;
    if (isolated) ++bare;
  }

  LaurentPoly q = LaurentPoly::variable(Var::q);
  LaurentPoly loop = -(q.pow(2)) - LaurentPoly::variable(Var::q, -2);
  LaurentPoly total;
  const std::size_t m = live.size();
  for (std::size_t state = 0; state < (std::size_t(1) << m); ++state) {
    std::vector<std::pair<int, int>> joins = fixed_joins;
    int a_count = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const auto& arcs = live[k]->arcs;
      if (state & (std::size_t(1) << k)) {
        joins.emplace_back(arcs[0], arcs[3]);  // A-smoothing
        joins.emplace_back(arcs[1], arcs[2]);
        ++a_count;
      } else {
        joins.emplace_back(arcs[0], arcs[1]);  // B-smoothing
        joins.emplace_back(arcs[2], arcs[3]);
      }
    }
    UnionFind uf(max_arc + 1);
    std::set<int> involved;
    for (auto [x, y] : joins) {
      uf.unite(x, y);
      involved.insert(x);
      involved.insert(y);
    }
    std::set<int> roots;
    for (int a : involved) roots.insert(uf.find(a));
    int circles = static_cast<int>(roots.size()) + bare;
    int b_count = static_cast<int>(m) - a_count;
    LaurentPoly weight = LaurentPoly::variable(Var::q, a_count - b_count);
    total += weight * loop.pow(static_cast<unsigned>(circles));
  }
  return total;
}

LaurentPoly kauffman_bracket(const PDCode& pd) {
  return kauffman_bracket(pd, std::vector<bool>(pd.components.size(), true));
}

LaurentPoly dilute_state_sum(const PDCode& pd) {
  const std::size_t n = pd.components.size();
  LaurentPoly total;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<bool> keep(n), other(n);
    for (std::size_t k = 0; k < n; ++k) {
      keep[k] = mask & (std::size_t(1) << k);
      other[k] = !keep[k];
    }
    total += kauffman_bracket(pd, keep) * kauffman_bracket(pd, other);
  }
  return total;
}

// ---------------------------------------------------------------------------
// calibration

namespace {

std::string word_str(const BraidWord& w) {
  std::string out = "B" + std::to_string(w.strands) + ":";
  for (int l : w.letters) out += " " + std::to_string(l);
  return out;
}

}  // namespace

CalibrationReport calibrate_and_crosscheck(const std::vector<BraidWord>& braids) {
  CalibrationReport report;
  RationalScalar Qsym = RationalScalar::variable(Var::Q);

  struct Entry {
    const BraidWord* word;
    RationalScalar trace;  // symbolic in Q
    LaurentPoly state_sum;
    int exponent;
    int crossings;
  };
  std::vector<Entry> entries;
  for (const auto& w : braids) {
    auto ctx = specialized_context(w.strands);
    RationalScalar tr = closure_trace(braid_image(ctx, w, Qsym));
    LaurentPoly ss = dilute_state_sum(braid_closure_pd(w));
    entries.push_back(
        {&w, tr, ss, w.exponent_sum(), static_cast<int>(w.letters.size())});
  }

  report.trace_even_in_Q = true;
  for (const auto& e : entries) {
    RationalScalar flipped =
        e.trace.substituted(Var::Q, -RationalScalar::variable(Var::Q));
    if (flipped != e.trace) report.trace_even_in_Q = false;
  }

  // lambda from a one-crossing closure: lambda^(-1) trace = state sum
  const Entry* one = nullptr;
  for (const auto& e : entries)
    if (e.crossings == 1 && !e.state_sum.is_zero()) one = &e;
  if (!one) {
    report.note = "calibration needs a one-crossing braid";
    return report;
  }
  if (one->trace.num().uses(Var::Q) || one->trace.den().uses(Var::Q)) {
    report.note = "one-crossing trace unexpectedly depends on Q";
    return report;
  }
  RationalScalar lambda = one->trace / RationalScalar(one->state_sum);
  if (one->exponent == -1) lambda = lambda.inverse();
  report.lambda = lambda;

  // Q*^2 from a two-crossing closure whose trace has a Q^2 part
  RationalScalar q_star_sq;
  bool solved = false;
  for (const auto& e : entries) {
    if (e.crossings != 2 || !e.trace.is_polynomial()) continue;
    LaurentPoly c2 = e.trace.num().coefficient_of(Var::Q, 2);
    if (c2.is_zero()) continue;
    LaurentPoly c0 = e.trace.num().coefficient_of(Var::Q, 0);
    if (e.trace.num() != c0 + c2 * LaurentPoly::variable(Var::Q, 2)) continue;
    q_star_sq =
        (lambda.pow(e.exponent) * RationalScalar(e.state_sum) - RationalScalar(c0)) /
        RationalScalar(c2);
    solved = true;
    break;
  }
  if (!solved) {
    report.note = "no two-crossing braid pins Q^2";
    return report;
  }

  // square root: Q*^2 must be a single monomial with even exponents
  if (!q_star_sq.is_polynomial() || q_star_sq.num().term_count() != 1) {
    report.note = "Q^2 is not a monomial: " + q_star_sq.str();
    return report;
  }
  auto [exps, coeff] = q_star_sq.num().leading_term();
  Exponents half = exps;
  for (auto& e : half) {
    if (e % 2 != 0) {
      report.note = "Q^2 is not a perfect square: " + q_star_sq.str();
      return report;
    }
    e /= 2;
  }
  if (coeff != 1) {
    report.note = "Q^2 has a nontrivial coefficient: " + q_star_sq.str();
    return report;
  }
  RationalScalar root = LaurentPoly::monomial(1, half);

  auto matches_all = [&](const RationalScalar& candidate) {
    std::vector<std::pair<std::string, bool>> results;
    bool all = true;
    for (const auto& e : entries) {
      RationalScalar lhs =
          lambda.pow(-e.exponent) * e.trace.substituted(Var::Q, candidate);
      bool ok = lhs == RationalScalar(e.state_sum);
      results.emplace_back(word_str(*e.word), ok);
      all = all && ok;
    }
    return std::make_pair(all, results);
  };

  auto [minus_ok, minus_results] = matches_all(-root);
  auto [plus_ok, plus_results] = matches_all(root);
  if (!minus_ok && !plus_ok) {
    report.note = "no square root of Q^2 matches the oracle on all braids";
    report.matches = minus_results;
    return report;
  }
  report.consistent = true;
  report.sign_determined = !(minus_ok && plus_ok);
  if (minus_ok) {
    report.Q_star = -root;
    report.matches = minus_results;
  } else {
    report.Q_star = root;
    report.matches = plus_results;
  }
  if (!report.sign_determined)
    report.note =
        "closure traces are even in Q, so both square roots fit; reporting the negative root";
  return report;
}

}  // namespace dilute
