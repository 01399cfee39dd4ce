#pragma once

#include <vector>

#include "qkc/shape.hpp"

namespace qkc {

/// u(-1): delete the boxes of I(z_1), translate the rest by the north-west shift.
/// Throws InvariantError if the translated set is not an order ideal.
Shape psi_shape(const Poset& p, const Shape& u);

/// u(-d), the d-fold iterate of psi_shape.
Shape curve_nbhd(const Poset& p, const Shape& u, unsigned d);

/// d(u, v) = min { d : u(-d) <= v }.
unsigned distance(const Poset& p, const Shape& u, const Shape& v);

/// psi_shape and distance tabulated over all shapes of one poset.
/// Built once, then read-only.
class CurveTable {
 public:
  explicit CurveTable(const Poset& p);

  const std::vector<Shape>& shapes() const { return shapes_; }
  std::size_t index(const Shape& s) const;
  const Shape& psi(const Shape& s) const { return shapes_[psi_[index(s)]]; }
  unsigned distance(const Shape& u, const Shape& v) const { return dist_[index(u) * shapes_.size() + index(v)]; }
  unsigned distance(std::size_t iu, std::size_t iv) const { return dist_[iu * shapes_.size() + iv]; }

 private:
  std::vector<Shape> shapes_;
  std::vector<std::size_t> psi_;
  std::vector<unsigned> dist_;
};

}  // namespace qkc
