#pragma once

#include <vector>

#include "qkc/qk.hpp"

namespace qkc {

using Partition = std::vector<int>;

/// One-line notation of the Grassmannian permutation w_lambda (values 1..n).
/// Single descent at position k, w(i) = i + lambda_{k-i+1} for i <= k.
std::vector<int> grass_perm(int k, int n, const Partition& lambda);

/// [C_{-lambda.omega_gamma}] det(C^n) as an exponent vector over T_1..T_n:
/// the product of T_j over the last n-k entries of w_lambda.
Weight lambda_character(int k, int n, const Partition& lambda);

/// [C_{lambda.omega_gamma}] in the GL(n) lattice: the product of T_i over the first k entries.
Weight lambda_weight(int k, int n, const Partition& lambda);

/// det Q * O^mu = sum_lambda lambda_character(lambda) q^{d(mu,lambda)} O^lambda.
/// Coefficients live in the GL(n) character lattice Z^n.
SchubertExpr detq_product(int k, int n, const Partition& mu);

}  // namespace qkc
