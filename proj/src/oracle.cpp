#include "qkc/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace qkc::oracle {

namespace {

Partition trimmed(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Every way to add a horizontal strip of m boxes to alpha within max_rows rows.
void horizontal_strips(const Partition& alpha, int m, int max_rows, const std::function<void(const Partition&)>& f) {
  Partition a = alpha;
  a.resize(max_rows, 0);
  Partition b = a;
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == max_rows) {
      if (left == 0) f(b);
      return;
    }
    const int room = row == 0 ? left : std::min(left, a[row - 1] - a[row]);
    for (int add = 0; add <= room; ++add) {
      b[row] = a[row] + add;
      rec(row + 1, left - add);
    }
    b[row] = a[row];
  };
  rec(0, m);
}

}  // namespace

std::map<Partition, long long> lr_product(const Partition& lambda, const Partition& mu, int max_rows) {
  std::map<Partition, long long> out;
  if (static_cast<int>(trimmed(lambda).size()) > max_rows) return out;
  const Partition m = trimmed(mu);
  // counts[r][v]: how many entries v+1 sit in row r of the skew tableau.
  std::vector<std::vector<int>> counts(max_rows, std::vector<int>(m.size(), 0));
  std::function<void(std::size_t, const Partition&)> rec = [&](std::size_t level, const Partition& shape) {
    if (level == m.size()) {
      // Lattice word check: rows top to bottom, each read right to left.
      std::vector<int> seen(m.size() + 1, 0);
      for (int r = 0; r < max_rows; ++r)
        for (std::size_t v = m.size(); v-- > 0;)
          for (int c = 0; c < counts[r][v]; ++c) {
            ++seen[v];
            if (v > 0 && seen[v] > seen[v - 1]) return;
          }
      ++out[trimmed(shape)];
      return;
    }
    horizontal_strips(shape, m[level], max_rows, [&](const Partition& next) {
      Partition padded = shape;
      padded.resize(max_rows, 0);
      for (int r = 0; r < max_rows; ++r) counts[r][level] = next[r] - padded[r];
      rec(level + 1, next);
      for (int r = 0; r < max_rows; ++r) counts[r][level] = 0;
    });
  };
  rec(0, trimmed(lambda));
  return out;
}

std::optional<RimHookResult> rim_hook_reduce(const Partition& nu, int k, int n) {
  Partition p = trimmed(nu);
  if (static_cast<int>(p.size()) > k) return std::nullopt;
  p.resize(k, 0);
  std::set<int> beta;
  for (int i = 0; i < k; ++i) beta.insert(p[i] + k - 1 - i);
  RimHookResult r;
  while (*beta.rbegin() >= n) {
    const int b = *beta.rbegin();
    const int to = b - n;
    if (to < 0 || beta.count(to)) return std::nullopt;
    const auto jumped = std::distance(beta.upper_bound(to), beta.lower_bound(b));
    if ((k - 1 - jumped) % 2) r.sign = -r.sign;
    ++r.q_degree;
    beta.erase(b);
    beta.insert(to);
  }
  Partition out;
  int i = 0;
  for (auto it = beta.rbegin(); it != beta.rend(); ++it, ++i) out.push_back(*it - (k - 1 - i));
  r.shape = trimmed(out);
  return r;
}

std::map<std::pair<Partition, int>, long long> qh_product(int k, int n, const Partition& lambda, const Partition& mu) {
  std::map<std::pair<Partition, int>, long long> out;
  for (const auto& [nu, c] : lr_product(lambda, mu, k)) {
    auto r = rim_hook_reduce(nu, k, n);
    if (!r) continue;
    auto key = std::pair(r->shape, r->q_degree);
    if ((out[key] += r->sign * c) == 0) out.erase(key);
  }
  return out;
}

Partition complement(int k, int n, const Partition& lambda) {
  Partition p = lambda;
  p.resize(k, 0);
  Partition out(k);
  for (int i = 0; i < k; ++i) out[i] = (n - k) - p[k - 1 - i];
  return trimmed(out);
}

std::optional<int> distance_oracle(int k, int n, const Partition& mu, const Partition& lambda) {
  std::optional<int> best;
  for (const auto& [key, c] : qh_product(k, n, mu, complement(k, n, lambda)))
    if (c != 0 && (!best || key.second < *best)) best = key.second;
  return best;
}

std::vector<Partition> box_partitions(int k, int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int)> rec = [&](int cap) {
    out.push_back(trimmed(cur));
    if (static_cast<int>(cur.size()) == k) return;
    for (int part = 1; part <= cap; ++part) {
      cur.push_back(part);
      rec(part);
      cur.pop_back();
    }
  };
  rec(n - k);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    const int sa = std::accumulate(a.begin(), a.end(), 0);
    const int sb = std::accumulate(b.begin(), b.end(), 0);
    return sa != sb ? sa < sb : a < b;
  });
  return out;
}

}  // namespace qkc::oracle
