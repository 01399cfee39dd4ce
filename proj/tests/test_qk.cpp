#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qkc/curves.hpp"
#include "qkc/error.hpp"
#include "qkc/io.hpp"
#include "qkc/qk.hpp"

using namespace qkc;
using qkc::testing::desk_spaces;

namespace {

Shape rows(const Poset& p, std::vector<int> r) { return shape_from_rows(p, r); }

std::string ne(const Poset& p, const SchubertExpr& e) { return format_expr(p, e.nonequivariant()); }

QRational q_over_one_minus_q(std::size_t rank, unsigned d) {
  return QRational{QPoly(WeightPoly::constant(rank, 1), d), 1};
}

std::vector<Space> small_spaces() {
  return {Space::grassmannian(2, 4), Space::grassmannian(2, 5), Space::grassmannian(3, 6), Space::lagrangian(3),
          Space::lagrangian(4),      Space::max_orthogonal(5),  Space::quadric(7),         Space::quadric(8)};
}

}  // namespace

TEST(Qk, QuantizedIdealOnTwoFour) {
  const Poset p(Space::grassmannian(2, 4));
  const Shape mu = rows(p, {2, 1});
  EXPECT_EQ(format_expr(p, ideal_sheaf(p, mu)), "O^[2,1] - O^[2,2]");
  EXPECT_EQ(format_expr(p, psi_expr(p, ideal_sheaf(p, mu))), "O^[] - O^[1]");
  EXPECT_EQ(format_expr(p, quantized_ideal_sheaf(p, mu)), "O^[2,1] - O^[2,2] - q*(O^[] - O^[1])");
  EXPECT_EQ(psi_expr(p, ideal_sheaf(p, mu)), ideal_sheaf(p, Shape()));
}

TEST(Qk, IdealSheafThreeSix) {
  const Poset p(Space::grassmannian(3, 6));
  EXPECT_EQ(format_expr(p, ideal_sheaf(p, rows(p, {3, 1}))), "O^[3,1] - O^[3,2] - O^[3,1,1] + O^[3,2,1]");
  EXPECT_EQ(ne(p, chevalley_classical(p, rows(p, {3, 1})).opposite), "O^[3,1] - O^[3,2] - O^[3,1,1] + O^[3,2,1]");
  const SchubertExpr a = alpha(p, rows(p, {3, 1}));
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a.terms().begin()->first, rows(p, {3, 1}));
}

TEST(Qk, QuantizedIdealThreeSix) {
  const Poset p(Space::grassmannian(3, 6));
  EXPECT_EQ(format_expr(p, quantized_ideal_sheaf(p, rows(p, {2, 2, 2}), true)), "O^[2,2,2] - O^[3,2,2]");
  EXPECT_TRUE(psi_expr(p, ideal_sheaf(p, rows(p, {2, 2, 2}))).is_zero());
  EXPECT_EQ(format_expr(p, quantized_ideal_sheaf(p, rows(p, {3, 2, 1}))),
            "O^[3,2,1] - O^[3,3,1] - O^[3,2,2] + O^[3,3,2] - q*(O^[1] - O^[2] - O^[1,1] + O^[2,1])");
  EXPECT_EQ(psi_expr(p, ideal_sheaf(p, rows(p, {3, 2, 1}))), ideal_sheaf(p, rows(p, {1})));
}

TEST(Qk, LagrangianExamples) {
  const Poset p(Space::lagrangian(4));
  const Shape mu = rows(p, {3, 2});
  EXPECT_EQ(format_expr(p, ideal_sheaf(p, mu)), "O^[3,2] - O^[4,2] - O^[3,2,1] + O^[4,2,1]");
  EXPECT_TRUE(psi_expr(p, ideal_sheaf(p, mu)).is_zero());
  EXPECT_EQ(quantized_ideal_sheaf(p, mu, true), ideal_sheaf(p, mu));

  const SchubertExpr a = alpha(p, mu);
  std::vector<Shape> support;
  for (const auto& [s, c] : a.terms()) support.push_back(s);
  EXPECT_EQ(support, (std::vector<Shape>{rows(p, {3, 2}), rows(p, {4, 2}), rows(p, {4, 3})}));

  EXPECT_EQ(ne(p, chevalley_classical(p, rows(p, {3, 2})).opposite),
            "O^[3,2] - 2*O^[4,2] - O^[3,2,1] + O^[4,3] + 2*O^[4,2,1] - O^[4,3,1]");
  EXPECT_EQ(ne(p, chevalley_classical(p, rows(p, {4, 2})).opposite), "O^[4,2] - 2*O^[4,3] - O^[4,2,1] + 2*O^[4,3,1]");
  EXPECT_EQ(ne(p, chevalley_classical(p, rows(p, {4, 3})).opposite), "O^[4,3] - O^[4,3,1]");
  EXPECT_EQ(ne(p, chevalley_classical(p, mu).ideal), "I^[3,2] - I^[4,2]");
  EXPECT_TRUE(alpha_identity_check(p, mu));

  EXPECT_EQ(format_expr(p, quantized_ideal_sheaf(p, rows(p, {4, 2}))),
            "O^[4,2] - O^[4,3] - O^[4,2,1] + O^[4,3,1] - q*(O^[2] - O^[3] - O^[2,1] + O^[3,1])");
  EXPECT_EQ(psi_expr(p, ideal_sheaf(p, rows(p, {4, 2}))), ideal_sheaf(p, rows(p, {2})));
}

TEST(Qk, IdealSheafCoefficientsAreSigns) {
  for (const Space& s : desk_spaces()) {
    const Poset p(s);
    for (const Shape& mu : enumerate_shapes(p)) {
      const SchubertExpr e = ideal_sheaf(p, mu);
      EXPECT_EQ(e.coeff(mu), QPoly(WeightPoly::constant(p.roots().rank(), 1)));
      for (const auto& [nu, c] : e.terms()) {
        const SkewClass k = classify_skew(p, nu, mu);
        ASSERT_TRUE(k.is_rook_strip());
        const WeightPoly::Coeff sign = k.length() % 2 ? -1 : 1;
        EXPECT_EQ(c, QPoly(WeightPoly::constant(p.roots().rank(), sign)));
      }
    }
  }
}

TEST(Qk, ClassicalDuality) {
  for (const Space& s : small_spaces()) {
    const Poset p(s);
    const auto all = enumerate_shapes(p);
    for (const Shape& mu : all) {
      const SchubertExpr e = ideal_sheaf(p, mu);
      for (const Shape& lam : all)
        EXPECT_EQ(classical_pairing(p, e, lam), WeightPoly::constant(p.roots().rank(), mu == lam ? 1 : 0));
    }
    EXPECT_TRUE(verify_classical(p, 2).ok()) << s.name();
  }
}

TEST(Qk, PairingOfOppositeClasses) {
  for (const Space& s : small_spaces()) {
    const Poset p(s);
    const CurveTable t(p);
    for (const Shape& u : t.shapes()) {
      SchubertExpr e(Basis::Opposite, p.name());
      e.add(u, QPoly(WeightPoly::constant(p.roots().rank(), 1)));
      for (const Shape& v : t.shapes()) {
        EXPECT_EQ(qk_pairing(p, e, v), q_over_one_minus_q(p.roots().rank(), t.distance(u, v)));
        EXPECT_EQ(qk_pairing(t, e, v), qk_pairing(p, e, v));
      }
    }
  }
}

TEST(Qk, QuantumDualityOnSmallSpaces) {
  for (const Space& s : small_spaces()) {
    const Poset p(s);
    const VerifyReport r = verify_duality(p, 3);
    EXPECT_TRUE(r.ok()) << s.name();
    const std::size_t n = enumerate_shapes(p).size();
    EXPECT_EQ(r.checked, n * n);
  }
}

TEST(Qk, PairingOfQuantizedIdeal) {
  const Poset p(Space::grassmannian(2, 4));
  const Shape top = rows(p, {2, 2});
  const QRational one{QPoly(WeightPoly::constant(3, 1)), 0};
  EXPECT_EQ(qk_pairing(p, quantized_ideal_sheaf(p, top), top), one);
  // The unquantized class pairs to 1/(1-q) times a q-free numerator.
  EXPECT_NE(qk_pairing(p, ideal_sheaf(p, top), top), one);
}

TEST(Qk, AlphaIdentityEverywhere) {
  for (const Space& s : small_spaces()) EXPECT_TRUE(verify_alpha(Poset(s), 2).ok()) << s.name();
}

TEST(Qk, MinusculeChevalleyIsIdealNonequivariantly) {
  for (const Space& s : small_spaces()) {
    if (!s.is_minuscule()) continue;
    const Poset p(s);
    for (const Shape& mu : enumerate_shapes(p))
      EXPECT_EQ(chevalley_classical(p, mu).opposite.nonequivariant(), ideal_sheaf(p, mu).nonequivariant());
  }
}

TEST(Qk, QuantumChevalleyFormsAgree) {
  for (const Space& s : small_spaces()) {
    const Poset p(s);
    for (const Shape& mu : enumerate_shapes(p)) {
      const ChevalleyQuantum c = chevalley_quantum(p, mu);
      EXPECT_EQ(c.opposite, expand_ideal(p, c.qideal));
    }
  }
}

TEST(Qk, VanishingHalfOfBranchLaw) {
  for (const Space& s : desk_spaces()) {
    const Poset p(s);
    for (const Shape& mu : enumerate_shapes(p)) {
      const bool contains_z1 = (p.z1() & ~mu.bits) == 0;
      EXPECT_EQ(psi_expr(p, ideal_sheaf(p, mu)).is_zero(), !contains_z1) << s.name() << " " << format_shape(p, mu);
      if (!contains_z1) EXPECT_EQ(quantized_ideal_sheaf(p, mu, true), ideal_sheaf(p, mu));
    }
  }
}

TEST(Qk, ShiftedIdealDiffersForFullTwoFour) {
  // With z1 <= mu the image psi(I^mu) need not be I^{mu(-1)}.
  const Poset p(Space::grassmannian(2, 4));
  const Shape mu = rows(p, {2, 2});
  EXPECT_EQ(format_expr(p, psi_expr(p, ideal_sheaf(p, mu))), "O^[1]");
  EXPECT_EQ(format_expr(p, ideal_sheaf(p, psi_shape(p, mu))), "O^[1] - O^[2] - O^[1,1] + O^[2,1]");
  const VerifyReport r = verify_branch_law(p);
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].mu, mu);
}

TEST(Qk, BasisArithmeticIsChecked) {
  const Poset p(Space::grassmannian(2, 4));
  SchubertExpr o(Basis::Opposite, p.name()), i(Basis::Ideal, p.name()), other(Basis::Opposite, "Gr(2,5)");
  EXPECT_THROW(o + i, DomainError);
  EXPECT_THROW(o - other, DomainError);
  EXPECT_THROW(psi_expr(p, i), DomainError);
  EXPECT_EQ(parse_basis("Iq"), Basis::QIdeal);
  EXPECT_EQ(basis_name(Basis::Ideal), "I");
  EXPECT_THROW(parse_basis("X"), ConfigError);
}

TEST(Qk, ClassicalPairingRejectsQuantumTerms) {
  const Poset p(Space::grassmannian(2, 4));
  EXPECT_THROW(classical_pairing(p, quantized_ideal_sheaf(p, rows(p, {2, 1})), Shape()), DomainError);
}

TEST(Qk, QRationalReduction) {
  const WeightPoly one = WeightPoly::constant(1, 1);
  const QRational r{QPoly(one).times_one_minus_q(), 1};
  const QRational red = r.reduced();
  EXPECT_EQ(red.denom_pow, 0u);
  EXPECT_EQ(red.numerator, QPoly(one));
  EXPECT_EQ(r, red);
  EXPECT_EQ(format_qrational(QRational{QPoly(one, 2), 1}), "(q^2)/(1-q)");
}
