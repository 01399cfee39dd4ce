#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "qkc/error.hpp"
#include "qkc/shape.hpp"

using namespace qkc;
using qkc::testing::desk_spaces;

namespace {

Shape rows(const Poset& p, std::vector<int> r) { return shape_from_rows(p, r); }

std::vector<int> strict_complement(int top, const std::vector<int>& parts) {
  std::vector<int> out;
  for (int v = top; v >= 1; --v)
    if (std::find(parts.begin(), parts.end(), v) == parts.end()) out.push_back(v);
  return out;
}

}  // namespace

TEST(Shapes, CountsMatchIndependentIdealCount) {
  for (const Space& s : desk_spaces()) {
    const Poset p(s);
    EXPECT_EQ(enumerate_shapes(p).size(), qkc::testing::count_ideals(p)) << s.name();
  }
}

TEST(Shapes, KnownCounts) {
  auto n_shapes = [](const Space& s) { return enumerate_shapes(Poset(s)).size(); };
  EXPECT_EQ(n_shapes(Space::grassmannian(2, 4)), 6u);
  EXPECT_EQ(n_shapes(Space::grassmannian(3, 6)), 20u);
  EXPECT_EQ(n_shapes(Space::grassmannian(3, 7)), 35u);
  EXPECT_EQ(n_shapes(Space::lagrangian(3)), 8u);
  EXPECT_EQ(n_shapes(Space::lagrangian(4)), 16u);
  EXPECT_EQ(n_shapes(Space::max_orthogonal(6)), 32u);
  EXPECT_EQ(n_shapes(Space::quadric(7)), 8u);
  EXPECT_EQ(n_shapes(Space::quadric(8)), 10u);
  EXPECT_EQ(n_shapes(Space::cayley_plane()), 27u);
  EXPECT_EQ(n_shapes(Space::freudenthal()), 56u);
}

TEST(Shapes, EnumerationIsSortedIdealsWithoutRepeats) {
  for (const Space& s : desk_spaces()) {
    const Poset p(s);
    const auto all = enumerate_shapes(p);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(std::set<Shape>(all.begin(), all.end()).size(), all.size());
    for (const Shape& sh : all) EXPECT_TRUE(is_ideal(p, sh.bits));
    EXPECT_TRUE(all.front().empty());
    EXPECT_EQ(all.back().bits, p.all_boxes());
  }
}

TEST(Shapes, RoundTrips) {
  for (const Space& s : desk_spaces()) {
    const Poset p(s);
    for (const Shape& sh : enumerate_shapes(p)) {
      EXPECT_EQ(shape_from_rows(p, shape_rows(p, sh)), sh);
      EXPECT_EQ(shape_from_cells(p, shape_cells(p, sh)), sh);
      EXPECT_EQ(parse_shape(p, format_shape(p, sh)), sh);
      EXPECT_EQ(from_weyl(p, to_weyl(p, sh)), sh);
      EXPECT_EQ(p.roots().length(to_weyl(p, sh)), sh.length());
    }
  }
}

TEST(Shapes, ParseForms) {
  const Poset p(Space::grassmannian(3, 6));
  const Shape s = rows(p, {2, 1});
  EXPECT_EQ(parse_shape(p, "[2,1]"), s);
  EXPECT_EQ(parse_shape(p, "(2, 1)"), s);
  EXPECT_EQ(parse_shape(p, "2,1"), s);
  EXPECT_EQ(parse_shape(p, "{\"boxes\":[[1,1],[1,2],[2,1]]}"), s);
  EXPECT_EQ(parse_shape(p, "{boxes:[[1,1],[1,2],[2,1]]}"), s);
  EXPECT_EQ(parse_shape(p, "()"), Shape());
  EXPECT_EQ(parse_shape(p, "[]"), Shape());
  EXPECT_THROW(parse_shape(p, "[1,2]"), DomainError);
  EXPECT_THROW(parse_shape(p, "[4]"), DomainError);
  EXPECT_THROW(parse_shape(p, "[1,1,1,1]"), DomainError);
  EXPECT_THROW(parse_shape(p, "[a"), ConfigError);
  EXPECT_THROW(parse_shape(p, "{boxes:[[9,9]]}"), DomainError);
  EXPECT_EQ(format_shape(p, Shape()), "[]");
  EXPECT_EQ(format_shape(p, s), "[2,1]");
}

TEST(Shapes, AddRemove) {
  const Poset p(Space::grassmannian(2, 4));
  const Shape s = rows(p, {1});
  EXPECT_EQ(std::popcount(addable_boxes(p, s)), 2);
  EXPECT_EQ(std::popcount(removable_boxes(p, s)), 1);
  EXPECT_EQ(add_box(p, s, *p.at(1, 2)), rows(p, {2}));
  EXPECT_THROW(add_box(p, s, *p.at(2, 2)), DomainError);
  EXPECT_THROW(add_box(p, s, *p.at(1, 1)), DomainError);
  EXPECT_THROW(remove_box(p, Shape(), 0), DomainError);
  EXPECT_THROW(remove_box(p, rows(p, {2, 1}), *p.at(1, 1)), DomainError);
  EXPECT_EQ(remove_box(p, rows(p, {2, 1}), *p.at(2, 1)), rows(p, {2}));
  for (const Shape& sh : enumerate_shapes(p)) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if ((addable_boxes(p, sh) >> b) & 1U) EXPECT_TRUE(is_ideal(p, add_box(p, sh, b).bits));
      if ((removable_boxes(p, sh) >> b) & 1U) EXPECT_TRUE(is_ideal(p, remove_box(p, sh, b).bits));
    }
  }
}

TEST(Shapes, ClassifySkew) {
  const Poset gr(Space::grassmannian(2, 4));
  EXPECT_EQ(classify_skew(gr, rows(gr, {2, 2}), rows(gr, {1})).kind, SkewKind::SkewShape);
  EXPECT_EQ(classify_skew(gr, rows(gr, {2, 1}), rows(gr, {1})).kind, SkewKind::RookStrip);
  EXPECT_EQ(classify_skew(gr, rows(gr, {2, 1}), rows(gr, {1})).length(), 2u);
  EXPECT_EQ(classify_skew(gr, rows(gr, {1}), rows(gr, {2})).kind, SkewKind::NotContained);
  EXPECT_EQ(classify_skew(gr, rows(gr, {1}), rows(gr, {1})).kind, SkewKind::Empty);
  EXPECT_FALSE(classify_skew(gr, rows(gr, {1, 1}), rows(gr, {2})).contained());

  const Poset lg(Space::lagrangian(3));
  EXPECT_EQ(classify_skew(lg, rows(lg, {3}), rows(lg, {1})).kind, SkewKind::ShortSkewShape);
  EXPECT_EQ(classify_skew(lg, rows(lg, {2}), rows(lg, {1})).kind, SkewKind::ShortRookStrip);
  EXPECT_EQ(classify_skew(lg, rows(lg, {1}), Shape()).kind, SkewKind::RookStrip);
  EXPECT_EQ(classify_skew(lg, rows(lg, {3, 1}), rows(lg, {2})).kind, SkewKind::RookStrip);
  EXPECT_EQ(classify_skew(lg, rows(lg, {3, 2}), rows(lg, {2})).kind, SkewKind::SkewShape);
  const SkewClass e = classify_skew(lg, rows(lg, {2}), rows(lg, {2}));
  EXPECT_TRUE(e.is_short() && e.is_rook_strip());
}

TEST(Shapes, GrassmannianPermutation) {
  const Poset p(Space::grassmannian(3, 7));
  EXPECT_EQ(qkc::testing::one_line(p.roots(), to_weyl(p, rows(p, {3, 2}))), (std::vector<int>{1, 4, 6, 2, 3, 5, 7}));
  EXPECT_EQ(qkc::testing::one_line(p.roots(), to_weyl(p, Shape())), (std::vector<int>{1, 2, 3, 4, 5, 6, 7}));
}

TEST(Shapes, GrassmannianDualIsRotatedComplement) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 6}, {3, 7}}) {
    const Poset p(Space::grassmannian(k, n));
    for (const Shape& sh : enumerate_shapes(p)) {
      std::vector<int> lam = shape_rows(p, sh);
      lam.resize(k, 0);
      std::vector<int> comp(k);
      for (int i = 0; i < k; ++i) comp[i] = (n - k) - lam[k - 1 - i];
      while (!comp.empty() && comp.back() == 0) comp.pop_back();
      EXPECT_EQ(shape_rows(p, dual(p, sh)), comp);
    }
  }
}

TEST(Shapes, StrictDualIsComplementOfParts) {
  for (int n : {3, 4}) {
    const Poset p(Space::lagrangian(n));
    for (const Shape& sh : enumerate_shapes(p))
      EXPECT_EQ(shape_rows(p, dual(p, sh)), strict_complement(n, shape_rows(p, sh)));
  }
  for (int n : {5, 6}) {
    const Poset p(Space::max_orthogonal(n));
    for (const Shape& sh : enumerate_shapes(p))
      EXPECT_EQ(shape_rows(p, dual(p, sh)), strict_complement(n - 1, shape_rows(p, sh)));
  }
}

TEST(Shapes, DualIsAnOrderReversingInvolution) {
  for (const Space& s : desk_spaces()) {
    const Poset p(s);
    const auto all = enumerate_shapes(p);
    for (const Shape& a : all) {
      const Shape d = dual(p, a);
      EXPECT_EQ(dual(p, d), a);
      EXPECT_EQ(a.length() + d.length(), p.size());
      for (const Shape& b : all)
        if (a.leq(b)) EXPECT_TRUE(dual(p, b).leq(d));
    }
  }
}

TEST(Shapes, FromWeylRejectsNonRepresentatives) {
  const Poset p(Space::grassmannian(2, 4));
  EXPECT_THROW(from_weyl(p, p.roots().simple_reflection(0)), DomainError);
  EXPECT_THROW(from_weyl(p, p.w0()), DomainError);
}
