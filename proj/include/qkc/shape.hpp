#pragma once

#include <bit>
#include <compare>
#include <string>
#include <vector>

#include "qkc/poset.hpp"

namespace qkc {

/// Lower order ideal of P_X, stored as a bitset over the poset's box order.
struct Shape {
  BoxSet bits = 0;

  Shape() = default;
  explicit Shape(BoxSet b) : bits(b) {}

  std::size_t length() const { return static_cast<std::size_t>(std::popcount(bits)); }
  bool empty() const { return bits == 0; }
  bool has(std::size_t box) const { return (bits >> box) & 1U; }
  /// Bruhat order: containment of shapes.
  bool leq(const Shape& o) const { return (bits & ~o.bits) == 0; }

  bool operator==(const Shape&) const = default;
  /// Graded order: by length, then by bitset.
  std::strong_ordering operator<=>(const Shape& o) const {
    if (auto c = length() <=> o.length(); c != 0) return c;
    return bits <=> o.bits;
  }
};

bool is_ideal(const Poset& p, BoxSet bits);

/// All lower order ideals, sorted by (length, bitset).
std::vector<Shape> enumerate_shapes(const Poset& p);

/// Boxes that can be added (resp. removed) keeping the ideal property.
BoxSet addable_boxes(const Poset& p, const Shape& s);
BoxSet removable_boxes(const Poset& p, const Shape& s);

Shape add_box(const Poset& p, const Shape& s, std::size_t box);
Shape remove_box(const Poset& p, const Shape& s, std::size_t box);

enum class SkewKind { NotContained, SkewShape, ShortSkewShape, RookStrip, ShortRookStrip, Empty };

struct SkewClass {
  SkewKind kind = SkewKind::NotContained;
  BoxSet boxes = 0;

  bool contained() const { return kind != SkewKind::NotContained; }
  bool is_rook_strip() const {
    return kind == SkewKind::RookStrip || kind == SkewKind::ShortRookStrip || kind == SkewKind::Empty;
  }
  bool is_short() const {
    return kind == SkewKind::ShortSkewShape || kind == SkewKind::ShortRookStrip || kind == SkewKind::Empty;
  }
  std::size_t length() const { return static_cast<std::size_t>(std::popcount(boxes)); }
};

/// Finest classification of w/u.
SkewClass classify_skew(const Poset& p, const Shape& w, const Shape& u);

WeylElement to_weyl(const Poset& p, const Shape& s);
/// Throws DomainError if w is not a minimal coset representative.
Shape from_weyl(const Poset& p, const WeylElement& w);

/// u^vee = w_0 u w_P.
Shape dual(const Poset& p, const Shape& s);

/// Row lengths of the grid rows, trailing zeros dropped. For Gr this is the
/// partition, for LG/OG the strict partition.
std::vector<int> shape_rows(const Poset& p, const Shape& s);
Shape shape_from_rows(const Poset& p, const std::vector<int>& rows);

/// Grid cells (row, col) of the boxes of s.
std::vector<std::pair<int, int>> shape_cells(const Poset& p, const Shape& s);
Shape shape_from_cells(const Poset& p, const std::vector<std::pair<int, int>>& cells);

/// "[3,2,1]" for partitions, "[]" for the empty shape.
std::string format_shape(const Poset& p, const Shape& s);
/// Accepts "[3,2,1]", "[]", "3,2,1", or {"boxes":[[r,c],...]}.
Shape parse_shape(const Poset& p, const std::string& text);

/// Single-box shape {gamma}.
inline Shape gamma_shape() { return Shape(1); }

}  // namespace qkc
