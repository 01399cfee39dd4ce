#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qkc/root_system.hpp"

namespace qkc {

/// The seven cominuscule families.
enum class SpaceKind { Grassmannian, Lagrangian, MaxOrthogonal, QuadricOdd, QuadricEven, CayleyPlane, Freudenthal };

/// A cominuscule flag variety G/P: the root system and its cominuscule simple root.
class Space {
 public:
  static Space grassmannian(int k, int n);  // Gr(k,n), type A_{n-1}
  static Space lagrangian(int n);           // LG(n,2n), type C_n
  static Space max_orthogonal(int n);       // OG(n,2n), type D_n
  static Space quadric(int n);              // Q^n, type B or D
  static Space cayley_plane();              // E6/P6
  static Space freudenthal();               // E7/P7

  SpaceKind kind() const { return kind_; }
  /// Gr: (k, n). LG/OG: (n, 2n). Q: (n, n+2). E-types: (0, 0).
  int k() const { return k_; }
  int n() const { return n_; }
  std::string name() const;

  const RootSystem& roots() const { return *roots_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return roots_; }
  std::size_t gamma() const { return gamma_; }
  bool is_minuscule() const;

 private:
  Space(SpaceKind kind, int k, int n, Family family, std::size_t rank, std::size_t gamma);
  SpaceKind kind_;
  int k_;
  int n_;
  std::shared_ptr<const RootSystem> roots_;
  std::size_t gamma_;
};

using BoxSet = std::uint64_t;
inline constexpr std::size_t kMaxBoxes = 64;

/// A root of the cominuscule poset with its diagram placement.
struct Box {
  std::size_t root_index = 0;  // into RootSystem::positive_roots()
  RootCoords root;
  int row = 0;  // 1-based grid coordinates, rows grow downward, columns to the right
  int col = 0;
  bool is_short = false;
  std::size_t delta = 0;  // simple-root label delta(alpha)
};

/// P_X: positive roots with gamma-coefficient one, ordered by the root order and
/// laid out on the grid of the standard diagrams. Boxes are stored in (row, col)
/// order, which is a linear extension of the partial order.
class Poset {
 public:
  explicit Poset(Space space);

  const Space& space() const { return space_; }
  const RootSystem& roots() const { return space_.roots(); }
  std::string name() const { return space_.name(); }

  std::size_t size() const { return boxes_.size(); }
  const Box& box(std::size_t i) const { return boxes_.at(i); }
  const std::vector<Box>& boxes() const { return boxes_; }

  bool leq(std::size_t a, std::size_t b) const { return (below_eq_[b] >> a) & 1U; }
  /// Boxes strictly below i.
  BoxSet strictly_below(std::size_t i) const { return below_eq_[i] & ~(BoxSet{1} << i); }
  BoxSet strictly_above(std::size_t i) const { return above_eq_[i] & ~(BoxSet{1} << i); }
  BoxSet all_boxes() const { return size() == 64 ? ~BoxSet{0} : (BoxSet{1} << size()) - 1; }

  std::optional<std::size_t> at(int row, int col) const;
  /// Box holding the positive root with this index, if it lies in P_X.
  std::optional<std::size_t> box_of_root(std::size_t root_index) const;
  int num_rows() const { return rows_; }
  int num_cols() const { return cols_; }
  /// Boxes of one grid row, left to right.
  std::vector<std::size_t> row_boxes(int row) const;

  BoxSet z1() const { return z1_; }
  std::pair<int, int> nw_shift() const { return nw_shift_; }
  /// Mask of short boxes.
  BoxSet short_boxes() const { return short_mask_; }

  /// Product of the reflections of the given boxes, taken in linear-extension order.
  WeylElement weyl_of(BoxSet boxes) const;
  const WeylElement& w0() const { return w0_; }
  const WeylElement& wP() const { return wP_; }

 private:
  void place_boxes();
  void compute_order();
  void compute_delta();

  Space space_;
  std::vector<Box> boxes_;
  std::vector<BoxSet> below_eq_;
  std::vector<BoxSet> above_eq_;
  std::map<std::pair<int, int>, std::size_t> cell_;
  std::map<std::size_t, std::size_t> by_root_;
  int rows_ = 0;
  int cols_ = 0;
  BoxSet z1_ = 0;
  BoxSet short_mask_ = 0;
  std::pair<int, int> nw_shift_{0, 0};
  WeylElement w0_;
  WeylElement wP_;
};

using PosetPtr = std::shared_ptr<const Poset>;
PosetPtr build_poset(const Space& space);

/// delta(alpha) for box i, as a simple-root number.
std::size_t delta_label(const Poset& poset, std::size_t box);

}  // namespace qkc
