#pragma once

#include <vector>

#include "veblen/exact.hpp"

namespace veblen {

// Partition of an integer into parts >= 2, non-increasing.
struct IntegerPartition {
  std::vector<int> parts;
};

// All partitions of n into parts >= 2, reverse-lexicographic order.
std::vector<IntegerPartition> partitions_min2(int n);

// Number of derangements of [n] (n = sum of parts) with cycle type p:
//   n! / (prod p_i * prod_l count_l(p)!).
BigInt derangement_class_size(const IntegerPartition& p);

// Derangement count via the standard recurrence D_n = (n-1)(D_{n-1} + D_{n-2}).
BigInt derangement_count(int n);

// Simplex constant C_k = (k-1)^k * C(K_{k+1}^{(k)}), evaluated exactly:
//   C_k = [ sum over partitions p of k+1 into parts >= 2 of
//           derangement_class_size(p) * prod_i (k^{p_i} + (-1)^{p_i+1}) ]
//         / ((k-1)(k+1)^2).
// Literal partition stream for small k; the identical sum is reorganized as
//   (k+1)! [x^{k+1}] (1+x) e^{-(k+1)x} / (1-kx)
// once the partition count gets large (needed to keep C_100 fast). Division
// must be exact; a remainder throws.
BigInt simplex_Ck(int k);

// Route-forcing variants of simplex_Ck; simplex_Ck dispatches between them
// by k. Exposed so the two evaluation routes can be property-tested for
// equality on overlapping k.
BigInt simplex_Ck_partitions(int k);
BigInt simplex_Ck_series(int k);

// Independent route for 2 <= k <= 7: enumerate the derangements of [k+1]
// explicitly, build each rooted digraph D_sigma, and count arborescences by
// matrix-tree. Returns (k-1)^k * sum_sigma tau_sigma / (k-1)^{k+1}.
BigInt simplex_Ck_direct(int k);
inline constexpr int kSimplexDirectCap = 7;

// Exact ratio C_k / ((k+1)! * k^{k+1}), for asymptotics reporting only.
Rational asymptotic_ratio(int k);

}  // namespace veblen
