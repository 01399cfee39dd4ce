#include "qkc/shape.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

#include "qkc/error.hpp"

namespace qkc {

bool is_ideal(const Poset& p, BoxSet bits) {
  if ((bits & ~p.all_boxes()) != 0) return false;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (((bits >> i) & 1U) && (p.strictly_below(i) & ~bits) != 0) return false;
  return true;
}

std::vector<Shape> enumerate_shapes(const Poset& p) {
  std::vector<Shape> out;
  // Boxes are in a linear extension, so box i only needs its lower boxes decided.
  auto rec = [&](auto&& self, std::size_t i, BoxSet bits) -> void {
    if (i == p.size()) {
      out.emplace_back(bits);
      return;
    }
    self(self, i + 1, bits);
    if ((p.strictly_below(i) & ~bits) == 0) self(self, i + 1, bits | (BoxSet{1} << i));
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

BoxSet addable_boxes(const Poset& p, const Shape& s) {
  BoxSet out = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!s.has(i) && (p.strictly_below(i) & ~s.bits) == 0) out |= BoxSet{1} << i;
  return out;
}

BoxSet removable_boxes(const Poset& p, const Shape& s) {
  BoxSet out = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (s.has(i) && (p.strictly_above(i) & s.bits) == 0) out |= BoxSet{1} << i;
  return out;
}

Shape add_box(const Poset& p, const Shape& s, std::size_t box) {
  if (box >= p.size() || !((addable_boxes(p, s) >> box) & 1U))
    throw DomainError("box " + std::to_string(box) + " cannot be added to " + format_shape(p, s));
  return Shape(s.bits | (BoxSet{1} << box));
}

Shape remove_box(const Poset& p, const Shape& s, std::size_t box) {
  if (box >= p.size() || !((removable_boxes(p, s) >> box) & 1U))
    throw DomainError("box " + std::to_string(box) + " cannot be removed from " + format_shape(p, s));
  return Shape(s.bits & ~(BoxSet{1} << box));
}

SkewClass classify_skew(const Poset& p, const Shape& w, const Shape& u) {
  SkewClass c;
  if (!u.leq(w)) return c;
  c.boxes = w.bits & ~u.bits;
  if (c.boxes == 0) {
    c.kind = SkewKind::Empty;
    return c;
  }
  const bool all_short = (c.boxes & ~p.short_boxes()) == 0;
  bool rook = true;
  for (std::size_t i = 0; i < p.size() && rook; ++i)
    if ((c.boxes >> i) & 1U) rook = (p.strictly_below(i) & c.boxes) == 0;
  if (rook) c.kind = all_short ? SkewKind::ShortRookStrip : SkewKind::RookStrip;
  else c.kind = all_short ? SkewKind::ShortSkewShape : SkewKind::SkewShape;
  return c;
}

WeylElement to_weyl(const Poset& p, const Shape& s) { return p.weyl_of(s.bits); }

Shape from_weyl(const Poset& p, const WeylElement& w) {
  BoxSet bits = 0;
  for (std::size_t r : p.roots().inversions(w)) {
    auto b = p.box_of_root(r);
    if (!b) throw DomainError("Weyl element is not a minimal coset representative for " + p.name());
    bits |= BoxSet{1} << *b;
  }
  if (!is_ideal(p, bits)) throw InvariantError("inversion set is not an order ideal");
  return Shape(bits);
}

Shape dual(const Poset& p, const Shape& s) { return from_weyl(p, p.w0() * to_weyl(p, s) * p.wP()); }

std::vector<int> shape_rows(const Poset& p, const Shape& s) {
  std::vector<int> rows(p.num_rows(), 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (s.has(i)) ++rows[p.box(i).row - 1];
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  return rows;
}

Shape shape_from_rows(const Poset& p, const std::vector<int>& rows) {
  if (static_cast<int>(rows.size()) > p.num_rows())
    throw DomainError(p.name() + " has only " + std::to_string(p.num_rows()) + " rows");
  BoxSet bits = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::vector<std::size_t> row = p.row_boxes(static_cast<int>(r) + 1);
    if (rows[r] < 0 || rows[r] > static_cast<int>(row.size()))
      throw DomainError("row " + std::to_string(r + 1) + " of " + p.name() + " has " +
                        std::to_string(row.size()) + " boxes, asked for " + std::to_string(rows[r]));
    for (int j = 0; j < rows[r]; ++j) bits |= BoxSet{1} << row[j];
  }
  if (!is_ideal(p, bits)) throw DomainError("row lengths do not describe an order ideal of " + p.name());
  return Shape(bits);
}

std::vector<std::pair<int, int>> shape_cells(const Poset& p, const Shape& s) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (s.has(i)) out.emplace_back(p.box(i).row, p.box(i).col);
  return out;
}

Shape shape_from_cells(const Poset& p, const std::vector<std::pair<int, int>>& cells) {
  BoxSet bits = 0;
  for (auto [r, c] : cells) {
    auto b = p.at(r, c);
    if (!b) throw DomainError("no box at (" + std::to_string(r) + "," + std::to_string(c) + ") in " + p.name());
    bits |= BoxSet{1} << *b;
  }
  if (!is_ideal(p, bits)) throw DomainError("boxes do not form an order ideal of " + p.name());
  return Shape(bits);
}

std::string format_shape(const Poset& p, const Shape& s) {
  std::string out = "[";
  auto rows = shape_rows(p, s);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rows[i]);
  }
  return out + "]";
}

Shape parse_shape(const Poset& p, const std::string& text) {
  std::string t = text;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char ch) { return std::isspace(ch); }), t.end());
  if (t.empty() || t == "()" || t == "[]" || t == "0") return Shape();
  if (t.front() == '(' && t.back() == ')') t = "[" + t.substr(1, t.size() - 2) + "]";
  if (t.front() != '[' && t.front() != '{') t = "[" + t + "]";
  if (t.rfind("{boxes:", 0) == 0) t = "{\"boxes\":" + t.substr(7);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(t);
  } catch (const nlohmann::json::exception&) {
    throw ConfigError("cannot parse shape '" + text + "'");
  }
  try {
    if (j.is_array()) return shape_from_rows(p, j.get<std::vector<int>>());
    if (j.is_object() && j.contains("boxes")) {
      std::vector<std::pair<int, int>> cells;
      for (const auto& c : j.at("boxes")) cells.emplace_back(c.at(0).get<int>(), c.at(1).get<int>());
      return shape_from_cells(p, cells);
    }
  } catch (const nlohmann::json::exception&) {
  }
  throw ConfigError("cannot parse shape '" + text + "'");
}

}  // namespace qkc
