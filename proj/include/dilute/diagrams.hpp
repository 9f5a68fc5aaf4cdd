#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dilute {

// Colour word on one side of a diagram: letters in {0, ..., c-1}.
using ColourWord = std::vector<uint8_t>;

enum class DiagramKind { dilute_tl, permutation };

// Counts of through-strands per colour.
struct PropagatingContent {
  std::vector<int> per_colour;
  int total() const;
  bool operator==(const PropagatingContent&) const = default;
  // pointwise order
  bool leq(const PropagatingContent& rhs) const;
};

// A coloured diagram on a rectangle.
//
// Boundary convention (fixed once for the whole project): points are indexed
// 0..nt-1 along the top, left to right, then nt..nt+nb-1 along the bottom,
// left to right.  Planarity per colour is tested in the cyclic boundary
// order top 0..nt-1 followed by bottom nb-1..0, i.e. counterclockwise around
// the rectangle.  Matched points always carry equal colours; points of equal
// colour form a non-crossing matching in that cyclic order, while strands of
// different colours may cross.
class DiluteDiagram {
 public:
  DiluteDiagram(ColourWord top, ColourWord bottom,
                const std::vector<std::pair<int, int>>& pairs);

  static DiluteDiagram identity(const ColourWord& word);

  int top_size() const { return static_cast<int>(top_.size()); }
  int bottom_size() const { return static_cast<int>(bottom_.size()); }
  int point_count() const { return top_size() + bottom_size(); }
  const ColourWord& top() const { return top_; }
  const ColourWord& bottom() const { return bottom_; }
  int colour_at(int point) const;
  int mate(int point) const { return mate_[point]; }
  // Sorted (i, j) pairs with i < j.
  std::vector<std::pair<int, int>> pairs() const;

  bool operator==(const DiluteDiagram&) const = default;
  auto operator<=>(const DiluteDiagram& rhs) const {
    if (auto c = top_ <=> rhs.top_; c != 0) return c;
    if (auto c = bottom_ <=> rhs.bottom_; c != 0) return c;
    return mate_ <=> rhs.mate_;
  }

  std::string json() const;  // {"top":[..],"bottom":[..],"pairs":[[i,j],..]}, 1-based points

 private:
  ColourWord top_, bottom_;
  std::vector<int32_t> mate_;
};

// Validity check for candidate data: perfect matching, equal colours on
// matched points, each colour class non-crossing in the cyclic order.
bool is_valid_diagram(const ColourWord& top, const ColourWord& bottom,
                      const std::vector<std::pair<int, int>>& pairs);
// True iff every colour class of the (otherwise valid) matching is
// non-crossing; crossings between distinct colours are permitted.
bool is_planar_per_colour(const ColourWord& top, const ColourWord& bottom,
                          const std::vector<std::pair<int, int>>& pairs);

std::optional<DiluteDiagram> try_make_diagram(ColourWord top, ColourWord bottom,
                                              const std::vector<std::pair<int, int>>& pairs);

DiluteDiagram diagram_from_json(const std::string& text);

struct ComposeResult {
  DiluteDiagram diagram;
  std::vector<int> loops;  // closed middle loops per colour
};

// Stacks d1 above d2 (d1's bottom glued to d2's top).  Returns nullopt when
// the middle colour words differ; in the algebra that is a zero product, not
// an error.
std::optional<ComposeResult> compose(const DiluteDiagram& d1, const DiluteDiagram& d2);

// Side-by-side placement; the tower product on basis diagrams.
DiluteDiagram juxtapose(const DiluteDiagram& d1, const DiluteDiagram& d2);

PropagatingContent propagating_content(const DiluteDiagram& d, int colours);

// Relabels colours by perm (perm[c] = new colour of c).
DiluteDiagram colour_permuted(const DiluteDiagram& d, const std::vector<int>& perm);

// Complete sorted basis of End-type diagrams on n strands with c colours.
// For DiagramKind::permutation only through-strand diagrams are produced.
std::vector<DiluteDiagram> enumerate_basis(int n, int colours, DiagramKind kind);

}  // namespace dilute
