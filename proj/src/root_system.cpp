#include "qkc/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "qkc/error.hpp"

namespace qkc {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
  }
  return "?";
}

Weight Weight::fundamental(std::size_t rank, std::size_t i) {
  Weight w = zero(rank);
  w.coords.at(i) = 1;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw DomainError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.coords.size() != coords.size()) throw DomainError("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

Weight Weight::operator-() const {
  Weight r = *this;
  for (int& c : r.coords) c = -c;
  return r;
}

Weight operator*(int s, Weight w) {
  for (int& c : w.coords) c *= s;
  return w;
}

bool is_positive(const RootCoords& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }) &&
         std::any_of(r.begin(), r.end(), [](int c) { return c > 0; });
}

bool is_negative(const RootCoords& r) {
  return std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; }) &&
         std::any_of(r.begin(), r.end(), [](int c) { return c < 0; });
}

bool root_leq(const RootCoords& a, const RootCoords& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (b[i] - a[i] < 0) return false;
  return true;
}

namespace {

using Matrix = std::vector<int>;

Matrix identity_matrix(std::size_t n) {
  Matrix m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::size_t n) {
  Matrix c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      int aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

std::vector<int> apply_matrix(const Matrix& m, const std::vector<int>& v) {
  const std::size_t n = v.size();
  std::vector<int> r(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r[i] += m[i * n + j] * v[j];
  return r;
}

// Doubled Gram matrix 2(alpha_i, alpha_j), normalized so long roots have (a,a) = 2.
std::vector<int> doubled_gram(Family family, std::size_t rank) {
  const std::size_t n = rank;
  std::vector<int> g(n * n, 0);
  auto edge = [&](std::size_t i, std::size_t j, int v) {
    g[i * n + j] = v;
    g[j * n + i] = v;
  };
  for (std::size_t i = 0; i < n; ++i) g[i * n + i] = 4;
  switch (family) {
    case Family::A:
      for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1, -2);
      break;
    case Family::B:
      for (std::size_t i = 0; i + 1 < n; ++i) edge(i, i + 1, -2);
      g[(n - 1) * n + (n - 1)] = 2;
      break;
    case Family::C:
      for (std::size_t i = 0; i + 1 < n; ++i) {
        g[i * n + i] = 2;
        edge(i, i + 1, -1);
      }
      edge(n - 2, n - 1, -2);
      break;
    case Family::D:
      for (std::size_t i = 0; i + 2 < n; ++i) edge(i, i + 1, -2);
      edge(n - 3, n - 1, -2);
      break;
    case Family::E6:
    case Family::E7:
      edge(0, 2, -2);
      edge(1, 3, -2);
      for (std::size_t i = 2; i + 1 < n; ++i) edge(i, i + 1, -2);
      break;
  }
  return g;
}

}  // namespace

WeylElement WeylElement::identity(std::size_t rank) {
  WeylElement w;
  w.rank_ = rank;
  w.weight_mat_ = identity_matrix(rank);
  w.root_mat_ = identity_matrix(rank);
  w.weight_inv_ = w.weight_mat_;
  w.root_inv_ = w.root_mat_;
  return w;
}

Weight WeylElement::apply(const Weight& v) const {
  return Weight(apply_matrix(weight_mat_, v.coords));
}

RootCoords WeylElement::apply_root(const RootCoords& r) const {
  return apply_matrix(root_mat_, r);
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (rank_ != o.rank_) throw DomainError("Weyl elements of different rank");
  WeylElement r;
  r.rank_ = rank_;
  r.word_ = word_;
  r.word_.insert(r.word_.end(), o.word_.begin(), o.word_.end());
  r.weight_mat_ = multiply(weight_mat_, o.weight_mat_, rank_);
  r.root_mat_ = multiply(root_mat_, o.root_mat_, rank_);
  r.weight_inv_ = multiply(o.weight_inv_, weight_inv_, rank_);
  r.root_inv_ = multiply(o.root_inv_, root_inv_, rank_);
  return r;
}

WeylElement WeylElement::inverse() const {
  WeylElement r;
  r.rank_ = rank_;
  r.word_.assign(word_.rbegin(), word_.rend());
  r.weight_mat_ = weight_inv_;
  r.root_mat_ = root_inv_;
  r.weight_inv_ = weight_mat_;
  r.root_inv_ = root_mat_;
  return r;
}

bool WeylElement::is_identity() const { return weight_mat_ == identity_matrix(rank_); }

RootSystem RootSystem::build(Family family, std::size_t rank) {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B:
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E6: ok = rank == 6; break;
    case Family::E7: ok = rank == 7; break;
  }
  if (!ok)
    throw ConfigError("unsupported root system " + family_name(family) + std::to_string(rank));

  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.gram_ = doubled_gram(family, rank);
  rs.cartan_.assign(rank * rank, 0);
  rs.simple_norms_.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    const int gii = rs.gram_[i * rank + i];
    rs.simple_norms_[i] = gii / 2;
    for (std::size_t j = 0; j < rank; ++j) rs.cartan_[i * rank + j] = 2 * rs.gram_[i * rank + j] / gii;
  }

  // Breadth-first closure of the simple roots under simple reflections.
  std::set<RootCoords> seen;
  std::deque<RootCoords> queue;
  for (std::size_t i = 0; i < rank; ++i) {
    RootCoords e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootCoords beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rank; ++i) {
      int p = 0;
      for (std::size_t j = 0; j < rank; ++j) p += beta[j] * rs.cartan(i, j);
      if (p == 0) continue;
      RootCoords next = beta;
      next[i] -= p;
      if (!is_positive(next) || seen.count(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  rs.roots_.assign(seen.begin(), seen.end());
  std::sort(rs.roots_.begin(), rs.roots_.end(), [](const RootCoords& a, const RootCoords& b) {
    const int ha = std::accumulate(a.begin(), a.end(), 0);
    const int hb = std::accumulate(b.begin(), b.end(), 0);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (std::size_t idx = 0; idx < rs.roots_.size(); ++idx) {
    rs.index_[rs.roots_[idx]] = idx;
    rs.norms_.push_back(rs.norm_of(rs.roots_[idx]));
  }
  rs.simple_idx_.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    RootCoords e(rank, 0);
    e[i] = 1;
    rs.simple_idx_[i] = rs.index_.at(e);
  }
  return rs;
}

std::string RootSystem::name() const {
  if (family_ == Family::E6 || family_ == Family::E7) return family_name(family_);
  return family_name(family_) + std::to_string(rank_);
}

int RootSystem::norm_of(const RootCoords& r) const {
  int twice = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) twice += r[i] * r[j] * gram_[i * rank_ + j];
  return twice / 2;
}

std::optional<std::size_t> RootSystem::root_index(const RootCoords& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> RootSystem::as_simple(std::size_t idx) const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (simple_idx_[i] == idx) return i;
  return std::nullopt;
}

Weight RootSystem::root_weight(const RootCoords& r) const {
  Weight w = Weight::zero(rank_);
  for (std::size_t j = 0; j < rank_; ++j)
    for (std::size_t i = 0; i < rank_; ++i) w.coords[j] += r[i] * cartan(j, i);
  return w;
}

int RootSystem::pairing(const Weight& v, std::size_t idx) const {
  const RootCoords& a = roots_.at(idx);
  int num = 0;
  for (std::size_t i = 0; i < rank_; ++i) num += v.coords.at(i) * a[i] * simple_norms_[i];
  const int norm = norms_[idx];
  if (num % norm != 0) throw InvariantError("non-integral coroot pairing");
  return num / norm;
}

int RootSystem::root_pairing(const RootCoords& beta, std::size_t idx) const {
  const RootCoords& a = roots_.at(idx);
  int num = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) num += beta[i] * a[j] * gram_[i * rank_ + j];
  const int denom = norms_[idx];
  if (num % denom != 0) throw InvariantError("non-integral root pairing");
  return num / denom;
}

Weight RootSystem::reflect(std::size_t idx, const Weight& v) const {
  return v - pairing(v, idx) * root_weight(idx);
}

RootCoords RootSystem::reflect_root(std::size_t idx, const RootCoords& beta) const {
  const int p = root_pairing(beta, idx);
  RootCoords r = beta;
  const RootCoords& a = roots_.at(idx);
  for (std::size_t i = 0; i < rank_; ++i) r[i] -= p * a[i];
  return r;
}

WeylElement RootSystem::reflection(std::size_t idx) const {
  const std::size_t n = rank_;
  WeylElement w;
  w.rank_ = n;
  w.word_ = {idx};
  w.weight_mat_ = identity_matrix(n);
  w.root_mat_ = identity_matrix(n);
  for (std::size_t c = 0; c < n; ++c) {
    const Weight col = reflect(idx, Weight::fundamental(n, c));
    RootCoords e(n, 0);
    e[c] = 1;
    const RootCoords rcol = reflect_root(idx, e);
    for (std::size_t r = 0; r < n; ++r) {
      w.weight_mat_[r * n + c] = col.coords[r];
      w.root_mat_[r * n + c] = rcol[r];
    }
  }
  w.weight_inv_ = w.weight_mat_;
  w.root_inv_ = w.root_mat_;
  return w;
}

WeylElement RootSystem::element(std::span<const std::size_t> root_word) const {
  WeylElement w = WeylElement::identity(rank_);
  for (std::size_t idx : root_word) w = w * reflection(idx);
  return w;
}

std::vector<std::size_t> RootSystem::inversions(const WeylElement& w) const {
  std::vector<std::size_t> out;
  for (std::size_t idx = 0; idx < roots_.size(); ++idx)
    if (is_negative(w.apply_root(roots_[idx]))) out.push_back(idx);
  return out;
}

WeylElement RootSystem::longest_element(std::span<const std::size_t> simple_subset) const {
  WeylElement w = WeylElement::identity(rank_);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i : simple_subset) {
      if (is_positive(w.apply_root(roots_[simple_idx_.at(i)]))) {
        w = w * simple_reflection(i);
        grew = true;
      }
    }
  }
  return w;
}

WeylElement RootSystem::longest_element() const {
  std::vector<std::size_t> all(rank_);
  std::iota(all.begin(), all.end(), 0);
  return longest_element(all);
}

}  // namespace qkc
