#include "qkc/io.hpp"

#include <cstdlib>
#include <cctype>
#include <regex>

#include "qkc/error.hpp"

namespace qkc {

int max_dimension() {
  if (const char* env = std::getenv("QKC_MAX_DIM")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ConfigError("QKC_MAX_DIM must be an integer");
    }
  }
  return kDefaultMaxDim;
}

int space_dimension(const Space& s) {
  switch (s.kind()) {
    case SpaceKind::Grassmannian: return s.k() * (s.n() - s.k());
    case SpaceKind::Lagrangian: return s.k() * (s.k() + 1) / 2;
    case SpaceKind::MaxOrthogonal: return s.k() * (s.k() - 1) / 2;
    case SpaceKind::QuadricOdd:
    case SpaceKind::QuadricEven: return s.k();
    case SpaceKind::CayleyPlane: return 16;
    case SpaceKind::Freudenthal: return 27;
  }
  return 0;
}

namespace {

Space make_space(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  std::smatch m;
  if (std::regex_match(t, m, std::regex(R"((?:GR|G)\((\d+),(\d+)\))")))
    return Space::grassmannian(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(t, m, std::regex(R"((LG|OG)\((\d+)(?:,(\d+))?\))"))) {
    const int n = std::stoi(m[2]);
    if (m[3].matched && std::stoi(m[3]) != 2 * n) throw ConfigError("expected " + std::string(m[1]) + "(n,2n)");
    return m[1] == "LG" ? Space::lagrangian(n) : Space::max_orthogonal(n);
  }
  if (std::regex_match(t, m, std::regex(R"(Q(?:\^|\()?(\d+)\)?)"))) return Space::quadric(std::stoi(m[1]));
  if (t == "E6" || t == "E6/P6") return Space::cayley_plane();
  if (t == "E7" || t == "E7/P7") return Space::freudenthal();
  throw ConfigError("unknown space '" + text + "' (expected Gr(k,n), LG(n), OG(n), Q(n), E6 or E7)");
}

std::string basis_symbol(Basis b) { return basis_name(b) + "^"; }

// One term of a q-group: returns (negative, text without sign).
std::pair<bool, std::string> format_term(const WeightPoly& c, const std::string& cls, bool gl) {
  if (c.is_constant()) {
    const auto v = c.constant_value();
    const auto a = v < 0 ? -v : v;
    return {v < 0, a == 1 ? cls : std::to_string(a) + "*" + cls};
  }
  if (c.terms().size() == 1) {
    const auto v = c.terms().begin()->second;
    WeightPoly pos = v < 0 ? -c : c;
    return {v < 0, (gl ? format_gl_poly(pos) : format_weight_poly(pos)) + "*" + cls};
  }
  return {false, "(" + (gl ? format_gl_poly(c) : format_weight_poly(c)) + ")*" + cls};
}

std::string join_terms(const std::vector<std::pair<bool, std::string>>& terms, bool flip) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const bool neg = terms[i].first != flip;
    if (i) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    out += terms[i].second;
  }
  return out;
}

}  // namespace

Space parse_space(const std::string& text) {
  Space s = make_space(text);
  if (space_dimension(s) > max_dimension())
    throw ConfigError(s.name() + " has dimension " + std::to_string(space_dimension(s)) + ", above the bound " +
                      std::to_string(max_dimension()) + " (set QKC_MAX_DIM to raise it)");
  return s;
}

std::string format_expr(const Poset& p, const SchubertExpr& e, bool gl) {
  if (e.is_zero()) return "0";
  std::map<unsigned, std::vector<std::pair<bool, std::string>>> groups;
  for (const auto& [s, c] : e.terms())
    for (const auto& [d, w] : c.coeffs()) groups[d].push_back(format_term(w, basis_symbol(e.basis()) + format_shape(p, s), gl));
  std::string out;
  for (const auto& [d, terms] : groups) {
    const std::string q = d == 1 ? "q" : "q^" + std::to_string(d);
    std::string piece;
    bool neg = false;
    if (d == 0) {
      piece = join_terms(terms, false);
      if (!out.empty() && piece.front() == '-') {
        neg = true;
        piece = piece.substr(1);
      }
    } else {
      neg = terms.front().first;
      if (terms.size() > 1) {
        piece = q + "*(" + join_terms(terms, neg) + ")";
      } else {
        // Integer multiples read "3*q^2*O^[1]".
        const std::string& t = terms.front().second;
        const auto star = t.find('*');
        const bool integer = star != std::string::npos && std::isdigit(static_cast<unsigned char>(t.front()));
        piece = integer ? t.substr(0, star) + "*" + q + t.substr(star) : q + "*" + t;
      }
    }
    if (out.empty()) out = neg ? "-" + piece : piece;
    else out += (neg ? " - " : " + ") + piece;
  }
  return out;
}

nlohmann::json qpoly_to_json(const QPoly& q) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [d, c] : q.coeffs()) arr.push_back({{"q", d}, {"coeff", to_json(c)}});
  return arr;
}

nlohmann::json expr_to_json(const Poset& p, const SchubertExpr& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [s, c] : e.terms())
    for (const auto& [d, w] : c.coeffs()) terms.push_back({{"shape", shape_rows(p, s)}, {"q", d}, {"coeff", to_json(w)}});
  return {{"basis", basis_name(e.basis())}, {"space", p.name()}, {"terms", terms}};
}

SchubertExpr expr_from_json(const Poset& p, const nlohmann::json& j) {
  try {
    const std::string space = j.value("space", p.name());
    if (space != p.name()) throw ConfigError("expression is over " + space + ", expected " + p.name());
    SchubertExpr e(parse_basis(j.value("basis", std::string("O"))), p.name());
    for (const auto& t : j.at("terms")) {
      const Shape s = t.at("shape").is_object() ? parse_shape(p, t.at("shape").dump())
                                                 : shape_from_rows(p, t.at("shape").get<std::vector<int>>());
      const auto& c = t.at("coeff");
      WeightPoly w = c.is_number_integer() ? WeightPoly::constant(p.roots().rank(), c.get<WeightPoly::Coeff>())
                                           : weight_poly_from_json(c);
      e.add(s, QPoly(w, t.value("q", 0U)));
    }
    return e;
  } catch (const nlohmann::json::exception& ex) {
    throw ConfigError(std::string("malformed expression JSON: ") + ex.what());
  }
}

std::string render_poset(const Poset& p) {
  std::string out;
  const bool mark_long = !p.space().is_minuscule();
  for (int r = 1; r <= p.num_rows(); ++r) {
    std::string line;
    for (int c = 1; c <= p.num_cols(); ++c) {
      auto b = p.at(r, c);
      char ch = ' ';
      if (b) {
        const bool gray = (p.z1() >> *b) & 1U;
        const bool dot = mark_long && !p.box(*b).is_short;
        ch = gray ? (dot ? '*' : '#') : (dot ? '.' : 'o');
      }
      line += ch;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string render_shape(const Poset& p, const Shape& s) {
  std::string out;
  for (int r = 1; r <= p.num_rows(); ++r) {
    std::string line;
    for (int c = 1; c <= p.num_cols(); ++c) {
      auto b = p.at(r, c);
      line += b ? (s.has(*b) ? 'x' : 'o') : ' ';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

}  // namespace qkc
