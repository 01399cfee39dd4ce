#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace qkc::oracle {

/// Partitions here are weakly decreasing with no trailing zeros.
using Partition = std::vector<int>;

/// Littlewood-Richardson expansion of s_lambda * s_mu, keeping only partitions
/// with at most max_rows rows. Columns are unbounded.
std::map<Partition, long long> lr_product(const Partition& lambda, const Partition& mu, int max_rows);

struct RimHookResult {
  int sign = 1;
  int q_degree = 0;
  Partition shape;
};

/// Reduce a partition with at most k rows modulo n-rim hooks into the k x (n-k) box.
/// Empty when the class vanishes in QH(Gr(k,n)).
std::optional<RimHookResult> rim_hook_reduce(const Partition& nu, int k, int n);

/// Quantum product X^lambda * X^mu in QH(Gr(k,n)): (partition, q-degree) -> coefficient.
std::map<std::pair<Partition, int>, long long> qh_product(int k, int n, const Partition& lambda, const Partition& mu);

/// Complement of lambda in the k x (n-k) box, rotated.
Partition complement(int k, int n, const Partition& lambda);

/// Minimal q-degree in X^mu * X^{lambda^vee}. Empty if that product vanishes.
std::optional<int> distance_oracle(int k, int n, const Partition& mu, const Partition& lambda);

/// All partitions in the k x (n-k) box.
std::vector<Partition> box_partitions(int k, int n);

}  // namespace qkc::oracle
