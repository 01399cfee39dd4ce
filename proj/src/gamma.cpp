#include "qkc/gamma.hpp"

#include <algorithm>

#include "qkc/error.hpp"

namespace qkc {

WeightPoly::WeightPoly(const Weight& w, Coeff c) { add_term(w, c); }

WeightPoly WeightPoly::constant(std::size_t rank, Coeff c) { return WeightPoly(Weight::zero(rank), c); }

void WeightPoly::add_term(const Weight& w, Coeff c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

bool WeightPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

WeightPoly::Coeff WeightPoly::constant_value() const {
  if (!is_constant()) throw DomainError("weight polynomial is not constant");
  return terms_.empty() ? 0 : terms_.begin()->second;
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

WeightPoly& WeightPoly::operator*=(Coeff c) {
  if (c == 0) terms_.clear();
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

WeightPoly operator*(const WeightPoly& a, const WeightPoly& b) {
  WeightPoly out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(wa + wb, ca * cb);
  return out;
}

WeightPoly WeightPoly::shifted(const Weight& w) const {
  WeightPoly out;
  for (const auto& [v, c] : terms_) out.terms_.emplace(v + w, c);
  return out;
}

WeightPoly WeightPoly::divided_by(const WeightPoly& m) const {
  if (!m.is_monomial()) throw DomainError("division by a non-monomial");
  return shifted(-m.terms_.begin()->first);
}

WeightPoly::Coeff restrict_nonequivariant(const WeightPoly& p) {
  WeightPoly::Coeff s = 0;
  for (const auto& [w, c] : p.terms()) s += c;
  return s;
}

WeightMonomial J(const Poset& p, const Shape& u) {
  const RootSystem& rs = p.roots();
  const Weight omega = Weight::fundamental(rs.rank(), p.space().gamma());
  return {to_weyl(p, u).apply(omega) - omega};
}

WeightMonomial sqrtJ(const Poset& p, const Shape& v, const Shape& w) {
  if (!v.leq(w)) throw DomainError("sqrtJ requires v <= w");
  const RootSystem& rs = p.roots();
  Weight out = J(p, v).weight;
  const BoxSet skew = w.bits & ~v.bits;
  for (std::size_t i = 0; i < p.size(); ++i)
    if ((skew >> i) & 1U) out -= rs.root_weight(rs.simple_root_index(p.box(i).delta));
  return {out};
}

namespace {

std::string int_list(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + "]";
}

template <class F>
std::string format_terms(const WeightPoly& p, F&& name) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    WeightPoly::Coeff a = c;
    if (!first) out += a < 0 ? " - " : " + ";
    else if (a < 0) out += "-";
    if (a < 0) a = -a;
    first = false;
    if (w.is_zero()) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a) + "*";
    out += name(w);
  }
  return out;
}

}  // namespace

std::string format_weight_poly(const WeightPoly& p) {
  return format_terms(p, [](const Weight& w) { return "C" + int_list(w.coords); });
}

std::string format_gl_poly(const WeightPoly& p) {
  return format_terms(p, [](const Weight& w) {
    std::string s;
    for (std::size_t i = 0; i < w.coords.size(); ++i) {
      const int e = w.coords[i];
      if (e == 0) continue;
      if (!s.empty()) s += '*';
      s += "T" + std::to_string(i + 1);
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  });
}

nlohmann::json to_json(const WeightPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [w, c] : p.terms()) arr.push_back({{"w", w.coords}, {"c", c}});
  return arr;
}

WeightPoly weight_poly_from_json(const nlohmann::json& j) {
  WeightPoly out;
  if (j.is_number_integer()) throw ConfigError("weight polynomial needs explicit weights");
  for (const auto& t : j) out += WeightPoly(Weight(t.at("w").get<std::vector<int>>()), t.at("c").get<WeightPoly::Coeff>());
  return out;
}

}  // namespace qkc
