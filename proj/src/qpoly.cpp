#include "qkc/qpoly.hpp"

namespace qkc {

QPoly::QPoly(WeightPoly c, unsigned degree) { add(degree, c); }

void QPoly::add(unsigned d, const WeightPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = coeffs_.try_emplace(d, c);
  if (!fresh && (it->second += c).is_zero()) coeffs_.erase(it);
}

WeightPoly QPoly::coeff(unsigned d) const {
  auto it = coeffs_.find(d);
  return it == coeffs_.end() ? WeightPoly() : it->second;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [d, c] : o.coeffs_) add(d, c);
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [d, c] : o.coeffs_) add(d, -c);
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  QPoly out;
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) out.add(da + db, ca * cb);
  return out;
}

QPoly operator*(const WeightPoly& c, const QPoly& a) {
  QPoly out;
  for (const auto& [d, v] : a.coeffs_) out.add(d, c * v);
  return out;
}

QPoly QPoly::operator-() const {
  QPoly out;
  for (const auto& [d, c] : coeffs_) out.coeffs_.emplace(d, -c);
  return out;
}

QPoly QPoly::times_q(unsigned d) const {
  QPoly out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + d, c);
  return out;
}

QPoly QPoly::times_one_minus_q() const { return *this - times_q(1); }

std::optional<QPoly> QPoly::divided_by_one_minus_q() const {
  if (is_zero()) return QPoly();
  // r_i = n_i + r_{i-1}; the remainder must vanish at the top degree.
  QPoly r;
  WeightPoly run;
  const unsigned top = max_degree();
  for (unsigned i = 0; i < top; ++i) {
    run += coeff(i);
    r.add(i, run);
  }
  if (!(coeff(top) + run).is_zero()) return std::nullopt;
  return r;
}

std::map<unsigned, WeightPoly::Coeff> QPoly::nonequivariant() const {
  std::map<unsigned, WeightPoly::Coeff> out;
  for (const auto& [d, c] : coeffs_)
    if (auto v = restrict_nonequivariant(c); v != 0) out[d] = v;
  return out;
}

QRational QRational::reduced() const {
  if (denom_pow == 1)
    if (auto r = numerator.divided_by_one_minus_q()) return {*r, 0};
  return *this;
}

bool QRational::operator==(const QRational& o) const {
  QPoly a = numerator;
  QPoly b = o.numerator;
  for (unsigned i = denom_pow; i < o.denom_pow; ++i) a = a.times_one_minus_q();
  for (unsigned i = o.denom_pow; i < denom_pow; ++i) b = b.times_one_minus_q();
  return a == b;
}

std::string format_qpoly(const QPoly& p, bool gl) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : p.coeffs()) {
    std::string body = gl ? format_gl_poly(c) : format_weight_poly(c);
    const bool multi = c.terms().size() > 1;
    std::string qs = d == 0 ? "" : d == 1 ? "q" : "q^" + std::to_string(d);
    std::string term;
    bool neg = false;
    if (!multi && body.front() == '-') {
      neg = true;
      body = body.substr(1);
    }
    if (qs.empty()) term = multi ? "(" + body + ")" : body;
    else if (!multi && body == "1") term = qs;
    else term = (multi ? "(" + body + ")" : body) + "*" + qs;
    if (!first) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    out += term;
    first = false;
  }
  return out;
}

std::string format_qrational(const QRational& r) {
  if (r.denom_pow == 0) return format_qpoly(r.numerator);
  return "(" + format_qpoly(r.numerator) + ")/(1-q)";
}

}  // namespace qkc
