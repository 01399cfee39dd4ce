#include "qkc/poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "qkc/error.hpp"

namespace qkc {

Space::Space(SpaceKind kind, int k, int n, Family family, std::size_t rank, std::size_t gamma)
    : kind_(kind),
      k_(k),
      n_(n),
      roots_(std::make_shared<const RootSystem>(RootSystem::build(family, rank))),
      gamma_(gamma) {}

Space Space::grassmannian(int k, int n) {
  if (n < 2 || k < 1 || k >= n)
    throw ConfigError("Gr(k,n) requires 1 <= k < n, got Gr(" + std::to_string(k) + "," +
                      std::to_string(n) + ")");
  return Space(SpaceKind::Grassmannian, k, n, Family::A, n - 1, k - 1);
}

Space Space::lagrangian(int n) {
  if (n < 2) throw ConfigError("LG(n) requires n >= 2");
  return Space(SpaceKind::Lagrangian, n, 2 * n, Family::C, n, n - 1);
}

Space Space::max_orthogonal(int n) {
  if (n < 4) throw ConfigError("OG(n) requires n >= 4");
  return Space(SpaceKind::MaxOrthogonal, n, 2 * n, Family::D, n, n - 1);
}

Space Space::quadric(int n) {
  if (n < 3) throw ConfigError("Q(n) requires n >= 3");
  if (n % 2 == 1) return Space(SpaceKind::QuadricOdd, n, n + 2, Family::B, (n + 1) / 2, 0);
  return Space(SpaceKind::QuadricEven, n, n + 2, Family::D, (n + 2) / 2, 0);
}

Space Space::cayley_plane() { return Space(SpaceKind::CayleyPlane, 0, 0, Family::E6, 6, 5); }

Space Space::freudenthal() { return Space(SpaceKind::Freudenthal, 0, 0, Family::E7, 7, 6); }

std::string Space::name() const {
  auto s = [](int v) { return std::to_string(v); };
  switch (kind_) {
    case SpaceKind::Grassmannian: return "Gr(" + s(k_) + "," + s(n_) + ")";
    case SpaceKind::Lagrangian: return "LG(" + s(k_) + "," + s(n_) + ")";
    case SpaceKind::MaxOrthogonal: return "OG(" + s(k_) + "," + s(n_) + ")";
    case SpaceKind::QuadricOdd:
    case SpaceKind::QuadricEven: return "Q(" + s(k_) + ")";
    case SpaceKind::CayleyPlane: return "E6/P6";
    case SpaceKind::Freudenthal: return "E7/P7";
  }
  return "?";
}

bool Space::is_minuscule() const {
  return kind_ != SpaceKind::Lagrangian && kind_ != SpaceKind::QuadricOdd;
}

namespace {

// Simple-root coordinates of a root given in the standard orthonormal e-basis
// (1-based entries e[1..m]); e[0] unused.
RootCoords from_e_basis(Family family, std::size_t rank, const std::vector<int>& e) {
  RootCoords c(rank, 0);
  std::vector<int> prefix(e.size(), 0);
  for (std::size_t i = 1; i < e.size(); ++i) prefix[i] = prefix[i - 1] + e[i];
  switch (family) {
    case Family::A:
    case Family::B:
      for (std::size_t t = 0; t < rank; ++t) c[t] = prefix[t + 1];
      break;
    case Family::C:
      for (std::size_t t = 0; t + 1 < rank; ++t) c[t] = prefix[t + 1];
      c[rank - 1] = prefix[rank] / 2;
      break;
    case Family::D:
      for (std::size_t t = 0; t + 2 < rank; ++t) c[t] = prefix[t + 1];
      c[rank - 1] = prefix[rank] / 2;
      c[rank - 2] = prefix[rank - 1] - c[rank - 1];
      break;
    default:
      throw InvariantError("e-basis conversion only for classical types");
  }
  return c;
}

struct Cell {
  int row;
  int col;
  std::vector<int> e;  // e-basis root, empty for exceptional types
};

std::vector<int> e_vec(int m, std::initializer_list<std::pair<int, int>> entries) {
  std::vector<int> v(m + 1, 0);
  for (auto [i, c] : entries) v[i] += c;
  return v;
}

// Diagram cells in (row, col) order, with their roots for the classical types.
std::vector<Cell> layout(const Space& space) {
  std::vector<Cell> cells;
  const int k = space.k();
  const int n = space.n();
  switch (space.kind()) {
    case SpaceKind::Grassmannian:
      for (int r = 1; r <= k; ++r)
        for (int c = 1; c <= n - k; ++c) cells.push_back({r, c, e_vec(n, {{k + 1 - r, 1}, {k + c, -1}})});
      break;
    case SpaceKind::Lagrangian:
      for (int r = 1; r <= k; ++r)
        for (int c = r; c <= k; ++c) cells.push_back({r, c, e_vec(k, {{k + 1 - c, 1}, {k + 1 - r, 1}})});
      break;
    case SpaceKind::MaxOrthogonal:
      for (int r = 1; r <= k - 1; ++r)
        for (int c = r; c <= k - 1; ++c) cells.push_back({r, c, e_vec(k, {{k - c, 1}, {k + 1 - r, 1}})});
      break;
    case SpaceKind::QuadricOdd: {
      const int m = (k + 1) / 2;
      for (int c = 1; c <= k; ++c) {
        if (c < m) cells.push_back({1, c, e_vec(m, {{1, 1}, {c + 1, -1}})});
        else if (c == m) cells.push_back({1, c, e_vec(m, {{1, 1}})});
        else cells.push_back({1, c, e_vec(m, {{1, 1}, {2 * m + 1 - c, 1}})});
      }
      break;
    }
    case SpaceKind::QuadricEven: {
      const int m = (k + 2) / 2;
      for (int c = 1; c <= m - 1; ++c) cells.push_back({1, c, e_vec(m, {{1, 1}, {c + 1, -1}})});
      for (int c = m - 2; c <= 2 * m - 4; ++c) cells.push_back({2, c, e_vec(m, {{1, 1}, {2 * m - 2 - c, 1}})});
      break;
    }
    case SpaceKind::CayleyPlane: {
      const int spans[][2] = {{1, 5}, {3, 5}, {4, 6}, {4, 8}};
      for (int r = 0; r < 4; ++r)
        for (int c = spans[r][0]; c <= spans[r][1]; ++c) cells.push_back({r + 1, c, {}});
      break;
    }
    case SpaceKind::Freudenthal: {
      const int spans[][2] = {{1, 6}, {4, 6}, {5, 7}, {5, 9}, {5, 9}, {8, 9}, {9, 9}, {9, 9}, {9, 9}};
      for (int r = 0; r < 9; ++r)
        for (int c = spans[r][0]; c <= spans[r][1]; ++c) cells.push_back({r + 1, c, {}});
      break;
    }
  }
  std::sort(cells.begin(), cells.end(),
            [](const Cell& a, const Cell& b) { return std::pair(a.row, a.col) < std::pair(b.row, b.col); });
  return cells;
}

bool grid_leq(const Cell& a, const Cell& b) { return a.row <= b.row && a.col <= b.col; }

// Order-isomorphism between the grid cells and the roots of P_X, by backtracking.
std::vector<std::size_t> match_cells(const std::vector<Cell>& cells, const RootSystem& rs,
                                     const std::vector<std::size_t>& px) {
  std::vector<std::size_t> assign(cells.size());
  std::vector<bool> used(px.size(), false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == cells.size()) return true;
    for (std::size_t cand = 0; cand < px.size(); ++cand) {
      if (used[cand]) continue;
      const RootCoords& r = rs.root(px[cand]);
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const RootCoords& rj = rs.root(px[assign[j]]);
        ok = grid_leq(cells[j], cells[i]) == root_leq(rj, r) && !root_leq(r, rj);
      }
      if (!ok) continue;
      used[cand] = true;
      assign[i] = cand;
      if (place(i + 1)) return true;
      used[cand] = false;
    }
    return false;
  };
  if (!place(0)) throw InvariantError("grid layout is not order-isomorphic to the root poset");
  return assign;
}

}  // namespace

Poset::Poset(Space space) : space_(std::move(space)) {
  place_boxes();
  compute_order();
  const RootSystem& rs = roots();
  w0_ = rs.longest_element();
  std::vector<std::size_t> levi;
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (i != space_.gamma()) levi.push_back(i);
  wP_ = rs.longest_element(levi);
  compute_delta();
}

void Poset::place_boxes() {
  const RootSystem& rs = roots();
  const std::size_t g = space_.gamma();
  std::vector<std::size_t> px;
  for (std::size_t idx = 0; idx < rs.num_positive_roots(); ++idx)
    if (rs.root(idx)[g] == 1) px.push_back(idx);
  if (px.size() > kMaxBoxes) throw ConfigError(space_.name() + " has more than 64 boxes");

  std::vector<Cell> cells = layout(space_);
  if (cells.size() != px.size())
    throw InvariantError(space_.name() + ": diagram has " + std::to_string(cells.size()) +
                         " cells but P_X has " + std::to_string(px.size()) + " roots");

  std::vector<std::size_t> root_of_cell(cells.size());
  if (cells.front().e.empty()) {
    std::vector<std::size_t> assign = match_cells(cells, rs, px);
    for (std::size_t i = 0; i < cells.size(); ++i) root_of_cell[i] = px[assign[i]];
  } else {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      RootCoords c = from_e_basis(rs.family(), rs.rank(), cells[i].e);
      auto idx = rs.root_index(c);
      if (!idx || rs.root(*idx)[g] != 1)
        throw InvariantError(space_.name() + ": cell root is not in P_X");
      root_of_cell[i] = *idx;
    }
  }

  for (std::size_t i = 0; i < cells.size(); ++i) {
    Box b;
    b.root_index = root_of_cell[i];
    b.root = rs.root(b.root_index);
    b.row = cells[i].row;
    b.col = cells[i].col;
    b.is_short = rs.is_short(b.root_index);
    by_root_[b.root_index] = i;
    if (!cell_.emplace(std::pair(b.row, b.col), i).second)
      throw InvariantError(space_.name() + ": duplicate cell");
    rows_ = std::max(rows_, b.row);
    cols_ = std::max(cols_, b.col);
    if (b.is_short) short_mask_ |= BoxSet{1} << i;
    boxes_.push_back(std::move(b));
  }

  // I(z_1) and the north-west translation of the first curve neighborhood.
  const BoxSet top = BoxSet{1} << (boxes_.size() - 1);
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    const Box& b = boxes_[i];
    bool gray = false;
    switch (space_.kind()) {
      case SpaceKind::Grassmannian: gray = b.row == 1 || b.col == 1; break;
      case SpaceKind::Lagrangian: gray = b.row == 1; break;
      case SpaceKind::MaxOrthogonal: gray = b.row <= 2; break;
      case SpaceKind::QuadricOdd:
      case SpaceKind::QuadricEven: gray = (BoxSet{1} << i) != top; break;
      case SpaceKind::CayleyPlane: gray = b.row <= 3; break;
      case SpaceKind::Freudenthal: gray = b.row <= 4; break;
    }
    if (gray) z1_ |= BoxSet{1} << i;
  }
  switch (space_.kind()) {
    case SpaceKind::Grassmannian:
    case SpaceKind::Lagrangian: nw_shift_ = {1, 1}; break;
    case SpaceKind::MaxOrthogonal: nw_shift_ = {2, 2}; break;
    case SpaceKind::QuadricOdd: nw_shift_ = {0, space_.k() - 1}; break;
    case SpaceKind::QuadricEven: nw_shift_ = {1, space_.k() - 3}; break;
    case SpaceKind::CayleyPlane: nw_shift_ = {3, 3}; break;
    case SpaceKind::Freudenthal: nw_shift_ = {4, 4}; break;
  }
}

void Poset::compute_order() {
  const std::size_t n = boxes_.size();
  below_eq_.assign(n, 0);
  above_eq_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const bool by_root = root_leq(boxes_[a].root, boxes_[b].root);
      const bool by_grid = boxes_[a].row <= boxes_[b].row && boxes_[a].col <= boxes_[b].col;
      if (by_root != by_grid)
        throw InvariantError(space_.name() + ": grid order disagrees with root order");
      if (by_root) {
        below_eq_[b] |= BoxSet{1} << a;
        above_eq_[a] |= BoxSet{1} << b;
      }
    }
}

void Poset::compute_delta() {
  const RootSystem& rs = roots();
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    const RootCoords image = weyl_of(strictly_below(i)).apply_root(boxes_[i].root);
    auto idx = rs.root_index(image);
    auto simple = idx ? rs.as_simple(*idx) : std::nullopt;
    if (!simple) throw InvariantError(space_.name() + ": delta label is not a simple root");
    boxes_[i].delta = *simple;
  }
}

std::optional<std::size_t> Poset::at(int row, int col) const {
  auto it = cell_.find({row, col});
  if (it == cell_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Poset::box_of_root(std::size_t root_index) const {
  auto it = by_root_.find(root_index);
  if (it == by_root_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Poset::row_boxes(int row) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < boxes_.size(); ++i)
    if (boxes_[i].row == row) out.push_back(i);
  return out;
}

WeylElement Poset::weyl_of(BoxSet boxes) const {
  std::vector<std::size_t> word;
  for (std::size_t i = 0; i < boxes_.size(); ++i)
    if ((boxes >> i) & 1U) word.push_back(boxes_[i].root_index);
  return roots().element(word);
}

PosetPtr build_poset(const Space& space) { return std::make_shared<const Poset>(space); }

std::size_t delta_label(const Poset& poset, std::size_t box) { return poset.box(box).delta; }

}  // namespace qkc
