#include "dilute/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include <json.hpp>

namespace dilute {

namespace {

// Cyclic boundary position of a point: top points keep their index, bottom
// points are visited right to left after the top row.
std::vector<int> cyclic_positions(int nt, int nb) {
  std::vector<int> pos(nt + nb);
  for (int i = 0; i < nt; ++i) pos[i] = i;
  for (int j = 0; j < nb; ++j) pos[nt + j] = nt + (nb - 1 - j);
  return pos;
}

}  // namespace

int PropagatingContent::total() const {
  int t = 0;
  for (int k : per_colour) t += k;
  return t;
}

bool PropagatingContent::leq(const PropagatingContent& rhs) const {
  if (per_colour.size() != rhs.per_colour.size()) return false;
  for (std::size_t i = 0; i < per_colour.size(); ++i)
    if (per_colour[i] > rhs.per_colour[i]) return false;
  return true;
}

bool is_planar_per_colour(const ColourWord& top, const ColourWord& bottom,
                          const std::vector<std::pair<int, int>>& pairs) {
  const int nt = static_cast<int>(top.size());
  auto colour = [&](int p) { return p < nt ? top[p] : bottom[p - nt]; };
  std::vector<int> pos = cyclic_positions(nt, static_cast<int>(bottom.size()));
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a + 1; b < pairs.size(); ++b) {
      if (colour(pairs[a].first) != colour(pairs[b].first)) continue;
      int a1 = pos[pairs[a].first], a2 = pos[pairs[a].second];
      if (a1 > a2) std::swap(a1, a2);
      int b1 = pos[pairs[b].first], b2 = pos[pairs[b].second];
      if (b1 > b2) std::swap(b1, b2);
      // chords interleave iff exactly one endpoint lies inside the other's span
      bool b1_in = a1 < b1 && b1 < a2;
      bool b2_in = a1 < b2 && b2 < a2;
      if (b1_in != b2_in) return false;
    }
  }
  return true;
}

bool is_valid_diagram(const ColourWord& top, const ColourWord& bottom,
                      const std::vector<std::pair<int, int>>& pairs) {
  const int nt = static_cast<int>(top.size());
  const int nb = static_cast<int>(bottom.size());
  const int total = nt + nb;
  if (total % 2 != 0) return false;
  if (static_cast<int>(pairs.size()) * 2 != total) return false;
  std::vector<int> seen(total, 0);
  auto colour = [&](int p) { return p < nt ? top[p] : bottom[p - nt]; };
  for (auto [i, j] : pairs) {
    if (i < 0 || j < 0 || i >= total || j >= total || i == j) return false;
    if (seen[i]++ || seen[j]++) return false;
    if (colour(i) != colour(j)) return false;
  }
  return is_planar_per_colour(top, bottom, pairs);
}

DiluteDiagram::DiluteDiagram(ColourWord top, ColourWord bottom,
                             const std::vector<std::pair<int, int>>& pairs) {
  if (!is_valid_diagram(top, bottom, pairs)) throw std::invalid_argument("invalid diagram data");
  top_ = std::move(top);
  bottom_ = std::move(bottom);
  mate_.assign(top_.size() + bottom_.size(), -1);
  for (auto [i, j] : pairs) {
    mate_[i] = j;
    mate_[j] = i;
  }
}

std::optional<DiluteDiagram> try_make_diagram(ColourWord top, ColourWord bottom,
                                              const std::vector<std::pair<int, int>>& pairs) {
  if (!is_valid_diagram(top, bottom, pairs)) return std::nullopt;
  return DiluteDiagram(std::move(top), std::move(bottom), pairs);
}

DiluteDiagram DiluteDiagram::identity(const ColourWord& word) {
  const int n = static_cast<int>(word.size());
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n);
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + i);
  return DiluteDiagram(word, word, pairs);
}

int DiluteDiagram::colour_at(int point) const {
  return point < top_size() ? top_[point] : bottom_[point - top_size()];
}

std::vector<std::pair<int, int>> DiluteDiagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < point_count(); ++i)
    if (mate_[i] > i) out.emplace_back(i, mate_[i]);
  return out;
}

std::string DiluteDiagram::json() const {
  nlohmann::json j;
  j["top"] = top_;
  j["bottom"] = bottom_;
  nlohmann::json arr = nlohmann::json::array();
  for (auto [a, b] : pairs()) arr.push_back({a + 1, b + 1});
  j["pairs"] = arr;
  return j.dump();
}

DiluteDiagram diagram_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ColourWord top = j.at("top").get<ColourWord>();
  ColourWord bottom = j.at("bottom").get<ColourWord>();
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("pairs"))
    pairs.emplace_back(p.at(0).get<int>() - 1, p.at(1).get<int>() - 1);
  return DiluteDiagram(std::move(top), std::move(bottom), pairs);
}

std::optional<ComposeResult> compose(const DiluteDiagram& d1, const DiluteDiagram& d2) {
  if (d1.bottom() != d2.top()) return std::nullopt;
  const int nt = d1.top_size();    // top boundary of the composite
  const int m = d1.bottom_size();  // glued middle points
  const int nb = d2.bottom_size();

  // d1-local ids: 0..nt-1 top, nt..nt+m-1 bottom.
  // d2-local ids: 0..m-1 top, m..m+nb-1 bottom.
  // Composite ids: 0..nt-1 top, nt..nt+nb-1 bottom.
  std::vector<char> mid_used(m, 0);

  auto trace = [&](int start) -> int {
    bool in_d1 = start < nt;
    int p = in_d1 ? start : (start - nt) + m;
    while (true) {
      if (in_d1) {
        int q = d1.mate(p);
        if (q < nt) return q;
        int k = q - nt;
        mid_used[k] = 1;
        in_d1 = false;
        p = k;
      } else {
        int q = d2.mate(p);
        if (q >= m) return nt + (q - m);
        mid_used[q] = 1;
        in_d1 = true;
        p = nt + q;
      }
    }
  };

  std::vector<std::pair<int, int>> new_pairs;
  std::vector<char> done(nt + nb, 0);
  for (int p = 0; p < nt + nb; ++p) {
    if (done[p]) continue;
    int q = trace(p);
    done[p] = done[q] = 1;
    new_pairs.emplace_back(p, q);
  }

  // Remaining middle points form closed loops, alternating d1 and d2 arcs.
  std::vector<int> loops;
  for (int k = 0; k < m; ++k) {
    if (mid_used[k]) continue;
    int colour = d1.bottom()[k];
    if (static_cast<int>(loops.size()) <= colour) loops.resize(colour + 1, 0);
    ++loops[colour];
    int cur = k;
    bool via_d1 = true;
    do {
      mid_used[cur] = 1;
      cur = via_d1 ? d1.mate(nt + cur) - nt : d2.mate(cur);
      via_d1 = !via_d1;
    } while (!(cur == k && via_d1));
  }

  return ComposeResult{DiluteDiagram(d1.top(), d2.bottom(), new_pairs), std::move(loops)};
}

DiluteDiagram juxtapose(const DiluteDiagram& d1, const DiluteDiagram& d2) {
  ColourWord top = d1.top();
  top.insert(top.end(), d2.top().begin(), d2.top().end());
  ColourWord bottom = d1.bottom();
  bottom.insert(bottom.end(), d2.bottom().begin(), d2.bottom().end());
  const int t1 = d1.top_size(), t2 = d2.top_size(), b1 = d1.bottom_size();
  auto remap1 = [&](int p) { return p < t1 ? p : p + t2; };
  auto remap2 = [&](int p) { return p < t2 ? p + t1 : p + t1 + b1; };
  std::vector<std::pair<int, int>> pairs;
  for (auto [i, j] : d1.pairs()) pairs.emplace_back(remap1(i), remap1(j));
  for (auto [i, j] : d2.pairs()) pairs.emplace_back(remap2(i), remap2(j));
  return DiluteDiagram(std::move(top), std::move(bottom), pairs);
}

PropagatingContent propagating_content(const DiluteDiagram& d, int colours) {
  PropagatingContent p;
  p.per_colour.assign(colours, 0);
  for (auto [i, j] : d.pairs())
    if (i < d.top_size() && j >= d.top_size()) ++p.per_colour[d.colour_at(i)];
  return p;
}

DiluteDiagram colour_permuted(const DiluteDiagram& d, const std::vector<int>& perm) {
  ColourWord top = d.top(), bottom = d.bottom();
  for (auto& c : top) c = static_cast<uint8_t>(perm.at(c));
  for (auto& c : bottom) c = static_cast<uint8_t>(perm.at(c));
  return DiluteDiagram(std::move(top), std::move(bottom), d.pairs());
}

namespace {

// Non-crossing perfect matchings of the listed points; non-crossing in a
// cyclic order equals non-crossing in any linearization of it.
void noncrossing_matchings(const std::vector<int>& points,
                           std::vector<std::pair<int, int>>& acc,
                           const std::function<void()>& emit) {
  if (points.empty()) {
    emit();
    return;
  }
  for (std::size_t j = 1; j < points.size(); j += 2) {
    std::vector<int> inside(points.begin() + 1, points.begin() + j);
    std::vector<int> outside(points.begin() + j + 1, points.end());
    acc.emplace_back(points[0], points[j]);
    noncrossing_matchings(inside, acc,
                          [&]() { noncrossing_matchings(outside, acc, emit); });
    acc.pop_back();
  }
}

bool next_word(ColourWord& w, int colours) {
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    if (++w[i] < colours) return true;
    w[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<DiluteDiagram> enumerate_basis(int n, int colours, DiagramKind kind) {
  if (n < 0 || colours < 1) throw std::invalid_argument("enumerate_basis: bad arguments");
  std::vector<DiluteDiagram> out;

  if (kind == DiagramKind::permutation) {
    // Pairs of words with equal content; the matching joins the k-th point of
    // each colour on top to the k-th on the bottom (same-colour strands may
    // not cross, so the joining is forced).
    auto content = [&](const ColourWord& w) {
      std::vector<int> c(colours, 0);
      for (auto l : w) ++c[l];
      return c;
    };
    ColourWord t(n, 0);
    do {
      ColourWord b(n, 0);
      do {
        if (content(t) != content(b)) continue;
        std::vector<std::pair<int, int>> pairs;
        for (int c = 0; c < colours; ++c) {
          std::vector<int> tp, bp;
          for (int i = 0; i < n; ++i) {
            if (t[i] == c) tp.push_back(i);
            if (b[i] == c) bp.push_back(n + i);
          }
          for (std::size_t k = 0; k < tp.size(); ++k) pairs.emplace_back(tp[k], bp[k]);
        }
        out.emplace_back(t, b, pairs);
      } while (next_word(b, colours));
    } while (next_word(t, colours));
    std::sort(out.begin(), out.end());
    return out;
  }

  // Dilute Temperley-Lieb: colour the 2n boundary points arbitrarily, then
  // match each colour class by an independent non-crossing matching in the
  // cyclic boundary order.
  const int total = 2 * n;
  std::vector<uint8_t> colouring(total, 0);
  std::vector<int> cyc = cyclic_positions(n, n);
  auto emit_for_colouring = [&]() {
    std::vector<std::vector<int>> by_colour(colours);
    for (int p = 0; p < total; ++p) by_colour[colouring[p]].push_back(p);
    for (auto& pts : by_colour) {
      if (pts.size() % 2 != 0) return;
      std::sort(pts.begin(), pts.end(), [&](int a, int b) { return cyc[a] < cyc[b]; });
    }
    ColourWord top(colouring.begin(), colouring.begin() + n);
    ColourWord bottom(colouring.begin() + n, colouring.end());
    std::vector<std::pair<int, int>> acc;
    std::function<void(int)> rec = [&](int c) {
      if (c == colours) {
        out.emplace_back(top, bottom, acc);
        return;
      }
      noncrossing_matchings(by_colour[c], acc, [&]() { rec(c + 1); });
    };
    rec(0);
  };

  while (true) {
    emit_for_colouring();
    int i = total - 1;
    for (; i >= 0; --i) {
      if (++colouring[i] < colours) break;
      colouring[i] = 0;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dilute
