#include "qkc/curves.hpp"

#include <algorithm>

#include "qkc/error.hpp"

namespace qkc {

Shape psi_shape(const Poset& p, const Shape& u) {
  const BoxSet rest = u.bits & ~p.z1();
  const auto [dr, dc] = p.nw_shift();
  BoxSet out = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!((rest >> i) & 1U)) continue;
    auto b = p.at(p.box(i).row - dr, p.box(i).col - dc);
    if (!b) throw InvariantError(p.name() + ": translated box leaves the diagram");
    out |= BoxSet{1} << *b;
  }
  if (!is_ideal(p, out)) throw InvariantError(p.name() + ": first curve neighborhood is not an order ideal");
  return Shape(out);
}

Shape curve_nbhd(const Poset& p, const Shape& u, unsigned d) {
  Shape s = u;
  for (unsigned i = 0; i < d && !s.empty(); ++i) s = psi_shape(p, s);
  return s;
}

unsigned distance(const Poset& p, const Shape& u, const Shape& v) {
  Shape s = u;
  unsigned d = 0;
  while (!s.leq(v)) {
    s = psi_shape(p, s);
    ++d;
  }
  return d;
}

CurveTable::CurveTable(const Poset& p) : shapes_(enumerate_shapes(p)) {
  const std::size_t n = shapes_.size();
  psi_.resize(n);
  for (std::size_t i = 0; i < n; ++i) psi_[i] = index(psi_shape(p, shapes_[i]));
  dist_.assign(n * n, 0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t s = u;
      unsigned d = 0;
      while (!shapes_[s].leq(shapes_[v])) {
        s = psi_[s];
        ++d;
      }
      dist_[u * n + v] = d;
    }
}

std::size_t CurveTable::index(const Shape& s) const {
  auto it = std::lower_bound(shapes_.begin(), shapes_.end(), s);
  if (it == shapes_.end() || *it != s) throw DomainError("shape is not an order ideal of this poset");
  return static_cast<std::size_t>(it - shapes_.begin());
}

}  // namespace qkc
