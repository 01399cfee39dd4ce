#pragma once

#include <string>

#include "json.hpp"
#include "qkc/qk.hpp"

namespace qkc {

/// Default bound on dim X for spaces parsed from text; QKC_MAX_DIM overrides it.
inline constexpr int kDefaultMaxDim = 30;
int max_dimension();

/// Gr(k,n) | LG(n) | OG(n) | Q(n) | E6 | E7, plus the forms LG(n,2n), OG(n,2n),
/// Q^n, Qn, E6/P6, E7/P7. Throws ConfigError.
Space parse_space(const std::string& text);
int space_dimension(const Space& s);

/// "O^[2,1] - O^[2,2] - q*(O^[] - O^[1])". Coefficients are printed as GL(n)
/// monomials when gl is set.
std::string format_expr(const Poset& p, const SchubertExpr& e, bool gl = false);

/// {"basis", "space", "terms": [{"shape", "q", "coeff"}]}, one entry per (shape, q-degree).
nlohmann::json expr_to_json(const Poset& p, const SchubertExpr& e);
SchubertExpr expr_from_json(const Poset& p, const nlohmann::json& j);

nlohmann::json qpoly_to_json(const QPoly& q);

/// 'o' box, '.' long box of a non-minuscule space, '#' box of I(z1), '*' long box of I(z1).
std::string render_poset(const Poset& p);
/// Boxes of s drawn as 'x', others as 'o'.
std::string render_shape(const Poset& p, const Shape& s);

}  // namespace qkc
