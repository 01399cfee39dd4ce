#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qkc {

enum class Family { A, B, C, D, E6, E7 };

std::string family_name(Family f);

/// Integer vector in simple-root coordinates.
using RootCoords = std::vector<int>;

/// A weight in fundamental-weight coordinates. Roots embed through the Cartan matrix.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }
  static Weight fundamental(std::size_t rank, std::size_t i);

  std::size_t rank() const { return coords.size(); }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  Weight operator-() const;
  friend Weight operator*(int s, Weight w);

  auto operator<=>(const Weight&) const = default;
  bool operator==(const Weight&) const = default;
};

class RootSystem;

/// Element of the Weyl group. Carries the word it was built from (indices of
/// positive roots whose reflections are multiplied left to right) together with
/// its action on the weight lattice and on the root lattice.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(std::size_t rank);

  const std::vector<std::size_t>& word() const { return word_; }
  std::size_t rank() const { return rank_; }

  Weight apply(const Weight& v) const;
  RootCoords apply_root(const RootCoords& r) const;

  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;

  /// Equality of the group elements (compares actions, not words).
  bool operator==(const WeylElement& o) const { return weight_mat_ == o.weight_mat_; }
  bool is_identity() const;

  const std::vector<int>& weight_matrix() const { return weight_mat_; }

 private:
  friend class RootSystem;
  std::size_t rank_ = 0;
  std::vector<std::size_t> word_;
  std::vector<int> weight_mat_;  // row-major rank x rank, acts on column vectors
  std::vector<int> root_mat_;
  std::vector<int> weight_inv_;
  std::vector<int> root_inv_;
};

/// Root datum of a finite simple root system of type A-E7 (Bourbaki numbering, 0-based).
class RootSystem {
 public:
  /// Supported: A (rank >= 1), B/C (rank >= 2), D (rank >= 3), E6, E7.
  /// Throws ConfigError otherwise.
  static RootSystem build(Family family, std::size_t rank);

  Family family() const { return family_; }
  std::size_t rank() const { return rank_; }
  std::string name() const;

  /// cartan(i, j) = <alpha_i^vee, alpha_j>.
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i * rank_ + j]; }

  std::size_t num_positive_roots() const { return roots_.size(); }
  const std::vector<RootCoords>& positive_roots() const { return roots_; }
  const RootCoords& root(std::size_t idx) const { return roots_.at(idx); }
  /// Squared length: 2 for long (and all simply-laced) roots, 1 for short roots.
  int root_norm(std::size_t idx) const { return norms_.at(idx); }
  bool is_short(std::size_t idx) const { return norms_.at(idx) == 1; }
  int norm_of(const RootCoords& r) const;

  std::optional<std::size_t> root_index(const RootCoords& r) const;
  std::size_t simple_root_index(std::size_t i) const { return simple_idx_.at(i); }
  /// If idx is a simple root, its position in the Dynkin numbering.
  std::optional<std::size_t> as_simple(std::size_t idx) const;
  std::size_t highest_root_index() const { return roots_.size() - 1; }

  Weight root_weight(const RootCoords& r) const;
  Weight root_weight(std::size_t idx) const { return root_weight(roots_.at(idx)); }

  /// <v, alpha^vee> for the positive root with the given index.
  int pairing(const Weight& v, std::size_t idx) const;
  /// <beta, alpha^vee> for root-lattice beta and positive root alpha.
  int root_pairing(const RootCoords& beta, std::size_t idx) const;

  /// s_alpha(v) = v - <v, alpha^vee> alpha.
  Weight reflect(std::size_t idx, const Weight& v) const;
  RootCoords reflect_root(std::size_t idx, const RootCoords& beta) const;

  WeylElement reflection(std::size_t idx) const;
  WeylElement simple_reflection(std::size_t i) const { return reflection(simple_idx_.at(i)); }
  /// Product of reflections s_{w[0]} s_{w[1]} ... (indices into positive_roots()).
  WeylElement element(std::span<const std::size_t> root_word) const;

  /// Positive roots sent to negative roots by w.
  std::vector<std::size_t> inversions(const WeylElement& w) const;
  std::size_t length(const WeylElement& w) const { return inversions(w).size(); }

  /// Longest element of the parabolic subgroup generated by the given simple roots.
  WeylElement longest_element(std::span<const std::size_t> simple_subset) const;
  WeylElement longest_element() const;

 private:
  Family family_ = Family::A;
  std::size_t rank_ = 0;
  std::vector<int> gram_;  // 2(alpha_i, alpha_j)
  std::vector<int> cartan_;
  std::vector<int> simple_norms_;
  std::vector<RootCoords> roots_;
  std::vector<int> norms_;
  std::vector<std::size_t> simple_idx_;
  std::map<RootCoords, std::size_t> index_;
};

/// Root order on the root lattice: a <= b iff b - a has nonnegative simple-root coordinates.
bool root_leq(const RootCoords& a, const RootCoords& b);
bool is_positive(const RootCoords& r);
bool is_negative(const RootCoords& r);

}  // namespace qkc
