#pragma once

#include <map>
#include <optional>
#include <string>

#include "qkc/gamma.hpp"

namespace qkc {

/// Polynomial in q with coefficients in K^T(point).
class QPoly {
 public:
  QPoly() = default;
  QPoly(WeightPoly c, unsigned degree = 0);

  const std::map<unsigned, WeightPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  WeightPoly coeff(unsigned d) const;
  unsigned max_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const WeightPoly& c, const QPoly& a);
  QPoly operator-() const;

  /// Multiply by q^d.
  QPoly times_q(unsigned d) const;
  QPoly times_one_minus_q() const;
  /// Exact division by (1-q), if it divides.
  std::optional<QPoly> divided_by_one_minus_q() const;

  /// Apply restrict_nonequivariant to every coefficient.
  std::map<unsigned, WeightPoly::Coeff> nonequivariant() const;

  bool operator==(const QPoly&) const = default;

 private:
  void add(unsigned d, const WeightPoly& c);
  std::map<unsigned, WeightPoly> coeffs_;
};

/// numerator / (1-q)^denom_pow with denom_pow in {0, 1}.
struct QRational {
  QPoly numerator;
  unsigned denom_pow = 0;

  /// Cancel a factor (1-q) when possible.
  QRational reduced() const;
  bool operator==(const QRational& o) const;
};

std::string format_qpoly(const QPoly& p, bool gl = false);
std::string format_qrational(const QRational& r);

}  // namespace qkc
