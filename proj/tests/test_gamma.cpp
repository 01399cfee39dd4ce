#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "oracles.hpp"
#include "qkc/error.hpp"
#include "qkc/gamma.hpp"
#include "qkc/qk.hpp"

using namespace qkc;
using qkc::testing::desk_spaces;

namespace {

WeightPoly random_poly(std::mt19937_64& rng, std::size_t rank) {
  std::uniform_int_distribution<int> coord(-2, 2), coeff(-3, 3), terms(0, 3);
  WeightPoly p;
  for (int t = terms(rng); t > 0; --t) {
    std::vector<int> w(rank);
    for (int& x : w) x = coord(rng);
    p += WeightPoly(Weight(w), coeff(rng));
  }
  return p;
}

// u.omega_gamma - omega_gamma by applying the simple reflections of the box
// labels one at a time, first box first.
Weight j_by_reflections(const Poset& p, const Shape& u) {
  const RootSystem& rs = p.roots();
  const Weight omega = Weight::fundamental(rs.rank(), p.space().gamma());
  Weight v = omega;
  const auto word = qkc::testing::simple_word(p, u);
  for (std::size_t d : word) v = rs.reflect(rs.simple_root_index(d), v);
  return v - omega;
}

}  // namespace

TEST(Gamma, RingAxioms) {
  std::mt19937_64 rng(7);
  const WeightPoly one = WeightPoly::constant(3, 1);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightPoly a = random_poly(rng, 3), b = random_poly(rng, 3), c = random_poly(rng, 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * one, a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(-(-a), a);
    EXPECT_EQ(restrict_nonequivariant(a * b), restrict_nonequivariant(a) * restrict_nonequivariant(b));
  }
}

TEST(Gamma, MonomialDivision) {
  const WeightPoly m(Weight({1, -1}));
  const WeightPoly a = WeightPoly(Weight({0, 2}), 3) + WeightPoly(Weight({1, 1}), -1);
  EXPECT_EQ((a * m).divided_by(m), a);
  EXPECT_THROW(a.divided_by(a), DomainError);
  EXPECT_THROW(a.divided_by(WeightPoly(Weight({0, 0}), 2)), DomainError);
  const WeightMonomial x{Weight({2, 1})}, y{Weight({-1, 3})};
  EXPECT_EQ((x * y) / y, x);
  EXPECT_EQ((x * x.inverse()).weight, Weight::zero(2));
}

TEST(Gamma, Constants) {
  EXPECT_TRUE(WeightPoly::constant(2, 5).is_constant());
  EXPECT_EQ(WeightPoly::constant(2, 5).constant_value(), 5);
  EXPECT_EQ(WeightPoly().constant_value(), 0);
  EXPECT_THROW(WeightPoly(Weight({1, 0})).constant_value(), DomainError);
  EXPECT_TRUE(WeightPoly::constant(2, 0).is_zero());
}

TEST(Gamma, JMatchesReflectionWord) {
  for (const Space& s : desk_spaces()) {
    const Poset p(s);
    for (const Shape& u : enumerate_shapes(p)) EXPECT_EQ(J(p, u).weight, j_by_reflections(p, u)) << s.name();
    EXPECT_TRUE(J(p, Shape()).weight.is_zero());
    EXPECT_EQ(J(p, gamma_shape()).weight, -p.roots().root_weight(p.roots().simple_root_index(s.gamma())));
  }
}

TEST(Gamma, SqrtJBasics) {
  for (const Space& s : desk_spaces()) {
    const Poset p(s);
    const auto all = enumerate_shapes(p);
    for (const Shape& v : all) {
      EXPECT_EQ(sqrtJ(p, v, v), J(p, v));
      const BoxSet add = addable_boxes(p, v);
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (!((add >> b) & 1U)) continue;
        const Shape w = add_box(p, v, b);
        const WeightMonomial r = sqrtJ(p, v, w);
        if (!p.box(b).is_short) EXPECT_EQ(r, J(p, w)) << s.name();
        else EXPECT_EQ(r * r, J(p, v) * J(p, w)) << s.name();
      }
    }
  }
  const Poset p(Space::grassmannian(2, 4));
  EXPECT_THROW(sqrtJ(p, shape_from_rows(p, {2}), shape_from_rows(p, {1, 1})), DomainError);
}

TEST(Gamma, ChainIdentity) {
  for (const Space& s : desk_spaces()) {
    const Poset p(s);
    const VerifyReport r = verify_lemma_weight(p, s.kind() == SpaceKind::Freudenthal ? 4000 : 0, 11);
    EXPECT_TRUE(r.ok()) << s.name();
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(Gamma, Formatting) {
  EXPECT_EQ(format_weight_poly(WeightPoly()), "0");
  EXPECT_EQ(format_weight_poly(WeightPoly::constant(2, 3)), "3");
  EXPECT_EQ(format_weight_poly(WeightPoly(Weight({0, 1, -1}), -1)), "-C[0,1,-1]");
  EXPECT_EQ(format_weight_poly(WeightPoly(Weight({0, 1}), -1) + WeightPoly(Weight({1, 0}), 2)), "-C[0,1] + 2*C[1,0]");
  EXPECT_EQ(format_gl_poly(WeightPoly(Weight({1, 0, 1, 0}))), "T1*T3");
  EXPECT_EQ(format_gl_poly(WeightPoly(Weight({2, 0, 0}), 3)), "3*T1^2");
}

TEST(Gamma, JsonRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightPoly a = random_poly(rng, 4);
    EXPECT_EQ(weight_poly_from_json(nlohmann::json::parse(to_json(a).dump())), a);
  }
  EXPECT_THROW(weight_poly_from_json(nlohmann::json(3)), ConfigError);
}
