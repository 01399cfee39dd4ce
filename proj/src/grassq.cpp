#include "qkc/grassq.hpp"

#include <algorithm>

#include "qkc/error.hpp"

namespace qkc {

namespace {

void check_fits(int k, int n, const Partition& lambda) {
  if (k < 1 || k >= n) throw ConfigError("Gr(k,n) requires 1 <= k < n");
  if (static_cast<int>(lambda.size()) > k) throw DomainError("partition has more than k rows");
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0 || lambda[i] > n - k) throw DomainError("partition does not fit in the k x (n-k) box");
    if (i && lambda[i] > lambda[i - 1]) throw DomainError("partition parts must be weakly decreasing");
  }
}

}  // namespace

std::vector<int> grass_perm(int k, int n, const Partition& lambda) {
  check_fits(k, n, lambda);
  std::vector<int> w;
  std::vector<bool> used(n + 1, false);
  for (int i = 1; i <= k; ++i) {
    const std::size_t part = static_cast<std::size_t>(k - i);
    const int v = i + (part < lambda.size() ? lambda[part] : 0);
    w.push_back(v);
    used[v] = true;
  }
  for (int v = 1; v <= n; ++v)
    if (!used[v]) w.push_back(v);
  return w;
}

Weight lambda_character(int k, int n, const Partition& lambda) {
  const std::vector<int> w = grass_perm(k, n, lambda);
  Weight out = Weight::zero(n);
  for (int i = k; i < n; ++i) out.coords[w[i] - 1] = 1;
  return out;
}

Weight lambda_weight(int k, int n, const Partition& lambda) {
  const std::vector<int> w = grass_perm(k, n, lambda);
  Weight out = Weight::zero(n);
  for (int i = 0; i < k; ++i) out.coords[w[i] - 1] = 1;
  return out;
}

SchubertExpr detq_product(int k, int n, const Partition& mu) {
  check_fits(k, n, mu);
  const Poset p(Space::grassmannian(k, n));
  const Shape m = shape_from_rows(p, mu);
  SchubertExpr out(Basis::Opposite, p.name());
  for (const Shape& lambda : enumerate_shapes(p)) {
    const Weight ch = lambda_character(k, n, shape_rows(p, lambda));
    out.add(lambda, QPoly(WeightPoly(ch), distance(p, m, lambda)));
  }
  return out;
}

}  // namespace qkc
