#pragma once

#include <map>
#include <string>
#include <vector>

#include "qkc/curves.hpp"
#include "qkc/qpoly.hpp"

namespace qkc {

/// O^lambda, I^lambda, or I_q^lambda.
enum class Basis { Opposite, Ideal, QIdeal };

std::string basis_name(Basis b);
Basis parse_basis(const std::string& s);

/// Finite combination of basis classes of one space with coefficients in Gamma[q].
/// Arithmetic between different bases or spaces throws DomainError.
class SchubertExpr {
 public:
  SchubertExpr() = default;
  SchubertExpr(Basis basis, std::string space) : basis_(basis), space_(std::move(space)) {}

  Basis basis() const { return basis_; }
  const std::string& space() const { return space_; }
  const std::map<Shape, QPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  QPoly coeff(const Shape& s) const;

  void add(const Shape& s, const QPoly& c);
  SchubertExpr& operator+=(const SchubertExpr& o);
  SchubertExpr& operator-=(const SchubertExpr& o);
  friend SchubertExpr operator+(SchubertExpr a, const SchubertExpr& b) { return a += b; }
  friend SchubertExpr operator-(SchubertExpr a, const SchubertExpr& b) { return a -= b; }
  SchubertExpr scaled(const QPoly& c) const;
  SchubertExpr times_q(unsigned d) const;

  /// Every coefficient restricted to the nonequivariant ring (constant characters).
  SchubertExpr nonequivariant() const;

  bool operator==(const SchubertExpr&) const = default;

 private:
  void check_compatible(const SchubertExpr& o) const;
  Basis basis_ = Basis::Opposite;
  std::string space_;
  std::map<Shape, QPoly> terms_;
};

/// I^mu = sum over rook strips nu/mu of (-1)^{l(nu/mu)} O^nu.
SchubertExpr ideal_sheaf(const Poset& p, const Shape& mu);

/// alpha^mu = sum over short skew shapes eps/mu (and eps = mu) of
/// sqrt(J_mu J_eps)/(J_mu J_eps) O^eps.
SchubertExpr alpha(const Poset& p, const Shape& mu);

struct ChevalleyClassical {
  SchubertExpr ideal;     // sum over short rook strips of (-1)^l sqrt(J_mu J_nu) I^nu
  SchubertExpr opposite;  // same, expanded in the O basis
};

/// O^mu * (1 - O^{s_gamma}).
ChevalleyClassical chevalley_classical(const Poset& p, const Shape& mu);

/// Expand an I-basis (or I_q-basis) expression in the O basis.
SchubertExpr expand_ideal(const Poset& p, const SchubertExpr& e);

/// alpha^mu * (1 - O^{s_gamma}) == I^mu, checked exactly.
bool alpha_identity_check(const Poset& p, const Shape& mu);

/// O^nu -> O^{nu(-1)}, extended linearly. O-basis input only.
SchubertExpr psi_expr(const Poset& p, const SchubertExpr& e);

/// I_q^mu = I^mu - q psi(I^mu), in the O basis. Skips psi when z1 is not below mu;
/// with check set, that shortcut is confirmed against the direct expansion.
SchubertExpr quantized_ideal_sheaf(const Poset& p, const Shape& mu, bool check = false);

struct ChevalleyQuantum {
  SchubertExpr opposite;  // classical - q psi(classical)
  SchubertExpr qideal;    // sum over short rook strips of (-1)^l sqrt(J_mu J_nu) I_q^nu
};

/// O^mu * (1 - O^{s_gamma}) in QK_T. Throws InvariantError if the two forms disagree.
ChevalleyQuantum chevalley_quantum(const Poset& p, const Shape& mu);

/// ((a, O_lambda)) = sum_nu a_nu q^{d(nu, lambda)} / (1-q).
QRational qk_pairing(const Poset& p, const SchubertExpr& a, const Shape& lambda);
QRational qk_pairing(const CurveTable& t, const SchubertExpr& a, const Shape& lambda);

/// chi(a * O_lambda) for q-free a.
WeightPoly classical_pairing(const Poset& p, const SchubertExpr& a, const Shape& lambda);

struct VerifyFailure {
  Shape lambda;
  Shape mu;
  std::string detail;
};

struct VerifyReport {
  std::string check;
  std::size_t checked = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// ((O_lambda, I_q^mu)) = delta for all pairs.
VerifyReport verify_duality(const Poset& p, unsigned jobs = 1);
/// (I^mu, O_lambda) = delta for all pairs.
VerifyReport verify_classical(const Poset& p, unsigned jobs = 1);
/// alpha_identity_check for every mu.
VerifyReport verify_alpha(const Poset& p, unsigned jobs = 1);
/// psi(I^mu) = 0 iff z1 not <= mu, and psi(I^mu) = I^{mu(-1)} otherwise.
/// The second clause does not hold for every mu; failures name the witness.
VerifyReport verify_branch_law(const Poset& p);
/// sqrtJ(u,v) sqrtJ(v,w) / J_v = sqrtJ(u,w) over chains u <= v <= w. Exhaustive
/// when samples == 0, otherwise that many random chains from the given seed.
VerifyReport verify_lemma_weight(const Poset& p, std::size_t samples = 0, unsigned seed = 1);

}  // namespace qkc
