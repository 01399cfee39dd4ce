#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"
#include "qkc/shape.hpp"

namespace qkc {

/// Element of K^T(point): integer combination of characters [C_w].
class WeightPoly {
 public:
  using Coeff = std::int64_t;

  WeightPoly() = default;
  /// The monomial c*[C_w].
  WeightPoly(const Weight& w, Coeff c = 1);
  /// The constant c*[C_0] in the given rank.
  static WeightPoly constant(std::size_t rank, Coeff c);

  const std::map<Weight, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1 && terms_.begin()->second == 1; }
  /// Constant term value if this is c*[C_0] (or zero).
  bool is_constant() const;
  Coeff constant_value() const;

  WeightPoly& operator+=(const WeightPoly& o);
  WeightPoly& operator-=(const WeightPoly& o);
  WeightPoly& operator*=(Coeff c);
  friend WeightPoly operator+(WeightPoly a, const WeightPoly& b) { return a += b; }
  friend WeightPoly operator-(WeightPoly a, const WeightPoly& b) { return a -= b; }
  friend WeightPoly operator*(const WeightPoly& a, const WeightPoly& b);
  friend WeightPoly operator*(Coeff c, WeightPoly a) { return a *= c; }
  WeightPoly operator-() const { return Coeff{-1} * *this; }

  /// Multiply by the character [C_w].
  WeightPoly shifted(const Weight& w) const;
  /// Division by a monomial; throws DomainError for anything else.
  WeightPoly divided_by(const WeightPoly& m) const;

  bool operator==(const WeightPoly&) const = default;

 private:
  void add_term(const Weight& w, Coeff c);
  std::map<Weight, Coeff> terms_;
};

/// A single character [C_w] (sign +1).
struct WeightMonomial {
  Weight weight;

  WeightMonomial inverse() const { return {-weight}; }
  WeightMonomial operator*(const WeightMonomial& o) const { return {weight + o.weight}; }
  WeightMonomial operator/(const WeightMonomial& o) const { return {weight - o.weight}; }
  bool operator==(const WeightMonomial&) const = default;
  WeightPoly poly() const { return WeightPoly(weight); }
};

/// Every character maps to 1.
WeightPoly::Coeff restrict_nonequivariant(const WeightPoly& p);

/// J_u = [C_{u.omega_gamma - omega_gamma}].
WeightMonomial J(const Poset& p, const Shape& u);
/// sqrt(J_v J_w) = [C_{v.omega_gamma - omega_gamma - delta(w/v)}]. Requires v <= w.
WeightMonomial sqrtJ(const Poset& p, const Shape& v, const Shape& w);

/// "3", "-C[0,1,-1]", "2*C[1,0] - C[0,1]". Characters are written in
/// fundamental-weight coordinates; the zero character prints as a plain integer.
std::string format_weight_poly(const WeightPoly& p);
/// GL(n) characters: exponent vector over T_1..T_n, printed "T1*T3".
std::string format_gl_poly(const WeightPoly& p);

/// [{"w":[...], "c":int}, ...]
nlohmann::json to_json(const WeightPoly& p);
WeightPoly weight_poly_from_json(const nlohmann::json& j);

}  // namespace qkc
