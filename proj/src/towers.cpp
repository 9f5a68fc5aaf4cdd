#include "dilute/towers.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <json.hpp>

#include "dilute/matrix.hpp"

namespace dilute {

AlgebraContext generic_context(int n, int colours, DiagramKind kind) {
  AlgebraContext ctx;
  ctx.n = n;
  ctx.colours = colours;
  ctx.kind = kind;
  ctx.delta.assign(colours, RationalScalar::variable(Var::delta));
  return ctx;
}

AlgebraContext specialized_context(int n) {
  AlgebraContext ctx;
  ctx.n = n;
  ctx.colours = 2;
  ctx.kind = DiagramKind::dilute_tl;
  RationalScalar q = RationalScalar::variable(Var::q);
  ctx.delta.assign(2, -q.pow(2) - q.pow(-2));
  return ctx;
}

AlgebraElement AlgebraElement::unit(const AlgebraContext& ctx) {
  AlgebraElement out(ctx);
  ColourWord w(ctx.n, 0);
  while (true) {
    out.add_term(DiluteDiagram::identity(w), RationalScalar(1));
    int i = ctx.n - 1;
    for (; i >= 0; --i) {
      if (++w[i] < ctx.colours) break;
      w[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

AlgebraElement AlgebraElement::from_diagram(const AlgebraContext& ctx, const DiluteDiagram& d,
                                            RationalScalar coeff) {
  AlgebraElement out(ctx);
  out.add_term(d, coeff);
  return out;
}

RationalScalar AlgebraElement::coefficient(const DiluteDiagram& d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? RationalScalar() : it->second;
}

void AlgebraElement::add_term(const DiluteDiagram& d, const RationalScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  if (ctx_ != rhs.ctx_) throw std::invalid_argument("algebra context mismatch");
  for (const auto& [d, c] : rhs.coeffs_) add_term(d, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  if (ctx_ != rhs.ctx_) throw std::invalid_argument("algebra context mismatch");
  for (const auto& [d, c] : rhs.coeffs_) add_term(d, -c);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.ctx_ != b.ctx_) throw std::invalid_argument("algebra context mismatch");
  AlgebraElement out(a.ctx_);
  for (const auto& [d1, c1] : a.coeffs_) {
    for (const auto& [d2, c2] : b.coeffs_) {
      auto r = compose(d1, d2);
      if (!r) continue;
      RationalScalar c = c1 * c2;
      for (std::size_t col = 0; col < r->loops.size(); ++col) {
        if (r->loops[col] == 0) continue;
        c *= a.ctx_.delta.at(col).pow(r->loops[col]);
      }
      out.add_term(r->diagram, c);
    }
  }
  return out;
}

AlgebraElement operator*(const RationalScalar& s, AlgebraElement a) {
  if (s.is_zero()) return AlgebraElement::zero(a.ctx());
  for (auto& [d, c] : a.coeffs_) c *= s;
  return a;
}

std::string AlgebraElement::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ") " + d.json();
  }
  return out;
}

std::string AlgebraElement::json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [d, c] : coeffs_)
    arr.push_back({nlohmann::json::parse(d.json()), c.str()});
  return arr.dump();
}

// ---------------------------------------------------------------------------
// generators of the two-colour fixed-point algebra

namespace {

void check_position(const AlgebraContext& ctx, int i) {
  if (ctx.colours != 2) throw std::invalid_argument("generators need two colours");
  if (i < 1 || i > ctx.n - 1) throw std::out_of_range("generator position out of range");
}

// Sums local diagrams at strands i, i+1 (1-based) over all ambient
// colourings; `local` receives the local top and bottom colour pair and the
// ambient word and must return the diagram.
AlgebraElement sum_over_ambient(
    const AlgebraContext& ctx,
    const std::vector<std::array<int, 2>>& local_colours,
    const std::function<DiluteDiagram(int, int, const ColourWord&)>& build) {
  AlgebraElement out(ctx);
  const int rest = ctx.n - 2;
  ColourWord ambient(rest, 0);
  while (true) {
    for (auto [c, d] : local_colours) out.add_term(build(c, d, ambient), RationalScalar(1));
    int k = rest - 1;
    for (; k >= 0; --k) {
      if (++ambient[k] < ctx.colours) break;
      ambient[k] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

// Identity-shaped diagram with strands i-1, i (0-based) coloured (c, d).
DiluteDiagram local_identity(int n, int i0, int c, int d, const ColourWord& ambient) {
  ColourWord w;
  int a = 0;
  for (int s = 0; s < n; ++s) {
    if (s == i0)
      w.push_back(static_cast<uint8_t>(c));
    else if (s == i0 + 1)
      w.push_back(static_cast<uint8_t>(d));
    else
      w.push_back(ambient[a++]);
  }
  return DiluteDiagram::identity(w);
}

// Transposition at strands i0, i0+1: top i0 -> bottom i0+1 coloured c,
// top i0+1 -> bottom i0 coloured d.
DiluteDiagram local_transposition(int n, int i0, int c, int d, const ColourWord& ambient) {
  ColourWord top, bottom;
  int a = 0;
  for (int s = 0; s < n; ++s) {
    if (s == i0) {
      top.push_back(static_cast<uint8_t>(c));
      bottom.push_back(static_cast<uint8_t>(d));
    } else if (s == i0 + 1) {
      top.push_back(static_cast<uint8_t>(d));
      bottom.push_back(static_cast<uint8_t>(c));
    } else {
      top.push_back(ambient[a]);
      bottom.push_back(ambient[a]);
      ++a;
    }
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.emplace_back(i0, n + i0 + 1);
  pairs.emplace_back(i0 + 1, n + i0);
  for (int s = 0; s < n; ++s)
    if (s != i0 && s != i0 + 1) pairs.emplace_back(s, n + s);
  return DiluteDiagram(std::move(top), std::move(bottom), pairs);
}

// Cup-cap at strands i0, i0+1: top arc coloured c, bottom arc coloured d.
DiluteDiagram local_cupcap(int n, int i0, int c, int d, const ColourWord& ambient) {
  ColourWord top, bottom;
  int a = 0;
  for (int s = 0; s < n; ++s) {
    if (s == i0) {
      top.push_back(static_cast<uint8_t>(c));
      top.push_back(static_cast<uint8_t>(c));
      bottom.push_back(static_cast<uint8_t>(d));
      bottom.push_back(static_cast<uint8_t>(d));
    } else if (s == i0 + 1) {
      continue;
    } else {
      top.push_back(ambient[a]);
      bottom.push_back(ambient[a]);
      ++a;
    }
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.emplace_back(i0, i0 + 1);
  pairs.emplace_back(n + i0, n + i0 + 1);
  for (int s = 0; s < n; ++s)
    if (s != i0 && s != i0 + 1) pairs.emplace_back(s, n + s);
  return DiluteDiagram(std::move(top), std::move(bottom), pairs);
}

}  // namespace

AlgebraElement gen_e(const AlgebraContext& ctx, int i) {
  check_position(ctx, i);
  return sum_over_ambient(ctx, {{0, 0}, {1, 1}}, [&](int c, int d, const ColourWord& amb) {
    return local_identity(ctx.n, i - 1, c, d, amb);
  });
}

AlgebraElement gen_f(const AlgebraContext& ctx, int i) {
  check_position(ctx, i);
  return sum_over_ambient(ctx, {{0, 1}, {1, 0}}, [&](int c, int d, const ColourWord& amb) {
    return local_identity(ctx.n, i - 1, c, d, amb);
  });
}

AlgebraElement gen_s(const AlgebraContext& ctx, int i) {
  check_position(ctx, i);
  return sum_over_ambient(ctx, {{0, 1}, {1, 0}}, [&](int c, int d, const ColourWord& amb) {
    return local_transposition(ctx.n, i - 1, c, d, amb);
  });
}

AlgebraElement gen_u(const AlgebraContext& ctx, int i) {
  check_position(ctx, i);
  return sum_over_ambient(ctx, {{0, 0}, {1, 1}}, [&](int c, int d, const ColourWord& amb) {
    return local_cupcap(ctx.n, i - 1, c, d, amb);
  });
}

AlgebraElement gen_t(const AlgebraContext& ctx, int i) {
  check_position(ctx, i);
  return sum_over_ambient(ctx, {{0, 1}, {1, 0}}, [&](int c, int d, const ColourWord& amb) {
    return local_cupcap(ctx.n, i - 1, c, d, amb);
  });
}

std::array<AlgebraElement, 5> idempotents(const AlgebraContext& ctx, int i) {
  const RationalScalar& delta = ctx.delta.at(0);
  if (delta.is_zero()) throw std::domain_error("idempotents need invertible delta");
  if (ctx.delta.at(1) != delta)
    throw std::invalid_argument("idempotents need equal loop parameters");
  RationalScalar half(LaurentPoly(1), LaurentPoly(2));
  RationalScalar inv_delta = delta.inverse();
  AlgebraElement e = gen_e(ctx, i), f = gen_f(ctx, i), s = gen_s(ctx, i), u = gen_u(ctx, i),
                 t = gen_t(ctx, i);
  return {
      e - inv_delta * u,
      half * (f + s),
      half * (f - s),
      (half * inv_delta) * (u + t),
      (half * inv_delta) * (u - t),
  };
}

bool in_cell_ideal(const AlgebraElement& a, const PropagatingContent& p) {
  for (const auto& [d, c] : a.coeffs()) {
    if (!propagating_content(d, a.ctx().colours).leq(p)) return false;
  }
  return true;
}

AlgebraElement colour_swap(const AlgebraElement& a) {
  if (a.ctx().colours != 2) throw std::invalid_argument("colour_swap needs two colours");
  AlgebraElement out(a.ctx());
  for (const auto& [d, c] : a.coeffs()) out.add_term(colour_permuted(d, {1, 0}), c);
  return out;
}

bool is_symmetric(const AlgebraElement& a) { return colour_swap(a) == a; }

std::vector<AlgebraElement> symmetric_basis(const AlgebraContext& ctx) {
  if (ctx.colours != 2) throw std::invalid_argument("symmetric_basis needs two colours");
  std::vector<AlgebraElement> out;
  for (const auto& d : enumerate_basis(ctx.n, 2, ctx.kind)) {
    DiluteDiagram swapped = colour_permuted(d, {1, 0});
    if (swapped < d) continue;  // one representative per orbit
    AlgebraElement orbit = AlgebraElement::from_diagram(ctx, d);
    if (swapped == d) {
      out.push_back(std::move(orbit));  // only the empty diagram at n = 0
    } else {
      orbit.add_term(swapped, RationalScalar(1));
      out.push_back(std::move(orbit));
    }
  }
  return out;
}

std::vector<DiluteDiagram> hat_subalgebra_basis(int n) {
  std::vector<DiluteDiagram> out;
  for (const auto& d : enumerate_basis(n, 2, DiagramKind::dilute_tl)) {
    std::array<int, 2> top{0, 0}, bottom{0, 0};
    for (auto c : d.top()) ++top[c];
    for (auto c : d.bottom()) ++bottom[c];
    if (top == bottom) out.push_back(d);
  }
  return out;
}

AlgebraElement braid_sigma(const AlgebraContext& ctx, int i, int sign,
                           const RationalScalar& Q) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("braid sign must be +-1");
  RationalScalar q = RationalScalar::variable(Var::q);
  return q.pow(2 * sign) * gen_e(ctx, i) + gen_u(ctx, i) - Q.pow(sign) * gen_s(ctx, i);
}

AlgebraElement tl_embed(const AlgebraContext& ctx, int i) {
  return gen_u(ctx, i) + gen_t(ctx, i);
}

AlgebraElement embed_add_strand(const AlgebraElement& a) {
  AlgebraContext ctx = a.ctx();
  ctx.n += 1;
  AlgebraElement out(ctx);
  for (const auto& [d, c] : a.coeffs()) {
    for (int col = 0; col < ctx.colours; ++col) {
      DiluteDiagram strand = DiluteDiagram::identity({static_cast<uint8_t>(col)});
      out.add_term(juxtapose(d, strand), c);
    }
  }
  return out;
}

int span_rank(const std::vector<AlgebraElement>& elements) {
  if (elements.empty()) return 0;
  std::map<DiluteDiagram, int> columns;
  for (const auto& e : elements)
    for (const auto& [d, c] : e.coeffs()) columns.emplace(d, 0);
  int idx = 0;
  for (auto& [d, col] : columns) col = idx++;
  ScalarMatrix m(static_cast<int>(elements.size()), idx);
  for (std::size_t r = 0; r < elements.size(); ++r)
    for (const auto& [d, c] : elements[r].coeffs()) m.at(static_cast<int>(r), columns[d]) = c;
  return rank(std::move(m));
}

}  // namespace dilute
