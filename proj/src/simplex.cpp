#include "veblen/simplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "veblen/digraph.hpp"

namespace veblen {

std::vector<IntegerPartition> partitions_min2(int n) {
  std::vector<IntegerPartition> out;
  if (n < 0) throw std::invalid_argument("partitions_min2: negative n");
  std::vector<int> parts;
  auto rec = [&](auto&& self, int left, int maxPart) -> void {
    if (left == 0) {
      out.push_back({parts});
      return;
    }
    for (int p = std::min(left, maxPart); p >= 2; --p) {
      if (left - p == 1) continue;  // a remainder of 1 can never be finished
      parts.push_back(p);
      self(self, left - p, p);
      parts.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

BigInt derangement_class_size(const IntegerPartition& p) {
  int n = std::accumulate(p.parts.begin(), p.parts.end(), 0);
  BigInt denom = 1;
  std::map<int, int> countOf;
  for (int part : p.parts) {
    if (part < 2) throw std::invalid_argument("derangement_class_size: part < 2");
    denom *= part;
    ++countOf[part];
  }
  for (auto& [part, c] : countOf) denom *= factorial(c);
  return exact_div(factorial(n), denom);
}

BigInt derangement_count(int n) {
  if (n < 0) throw std::invalid_argument("derangement_count: negative n");
  BigInt prev2 = 1, prev1 = 0;  // D_0, D_1
  if (n == 0) return prev2;
  if (n == 1) return prev1;
  BigInt cur = 0;
  for (int i = 2; i <= n; ++i) {
    cur = (i - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = cur;
  }
  return cur;
}

namespace {

BigInt cycle_weight(int k, int len) {
  BigInt w = int_pow(BigInt(k), len);
  if (len % 2 == 0) return BigInt(w - 1);
  return BigInt(w + 1);
}

BigInt simplex_sum_partitions(int k) {
  BigInt sum = 0;
  for (const IntegerPartition& p : partitions_min2(k + 1)) {
    BigInt term = derangement_class_size(p);
    for (int part : p.parts) term *= cycle_weight(k, part);
    sum += term;
  }
  return sum;
}

// Same sum through the cycle-type generating function:
//   sum_sigma prod w(len) = (k+1)! [x^{k+1}] exp(sum_{l>=2} w(l) x^l / l)
// and with w(l) = k^l + (-1)^{l+1} the exponential collapses to
//   (1+x) e^{-(k+1)x} / (1-kx),
// giving the finite integer sum below with a_i = k^i + k^{i-1}.
BigInt simplex_sum_series(int k) {
  int m = k + 1;
  BigInt sum = 0;
  for (int j = 0; j <= m; ++j) {
    int i = m - j;
    BigInt a = (i == 0) ? BigInt(1)
                        : int_pow(BigInt(k), i) + int_pow(BigInt(k), i - 1);
    BigInt term = exact_div(factorial(m), factorial(j)) *
                  int_pow(BigInt(-(m)), j) * a;
    sum += term;
  }
  return sum;
}

}  // namespace

BigInt simplex_Ck_partitions(int k) {
  if (k < 2) throw std::invalid_argument("simplex_Ck_partitions: k must be >= 2");
  return exact_div(simplex_sum_partitions(k), BigInt(k - 1) * (k + 1) * (k + 1));
}

BigInt simplex_Ck_series(int k) {
  if (k < 2) throw std::invalid_argument("simplex_Ck_series: k must be >= 2");
  return exact_div(simplex_sum_series(k), BigInt(k - 1) * (k + 1) * (k + 1));
}

BigInt simplex_Ck(int k) {
  if (k < 2) throw std::invalid_argument("simplex_Ck: k must be >= 2");
  // The partition stream is exponential in sqrt(k); switch to the series form
  // well before it matters.
  return (k <= 40) ? simplex_Ck_partitions(k) : simplex_Ck_series(k);
}

BigInt simplex_Ck_direct(int k) {
  if (k < 2 || k > kSimplexDirectCap)
    throw CapExceeded("simplex_Ck_direct: supported range is 2 <= k <= " +
                      std::to_string(kSimplexDirectCap));
  int n = k + 1;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  BigInt tauSum = 0;
  do {
    bool derangement = true;
    for (int i = 0; i < n; ++i)
      if (perm[i] == i + 1) { derangement = false; break; }
    if (!derangement) continue;
    // Vertex i roots the edge [n] minus {sigma(i)}: arcs i -> everything
    // except itself and sigma(i).
    MultiDigraph d;
    d.n = n;
    for (int i = 1; i <= n; ++i)
      for (int v = 1; v <= n; ++v)
        if (v != i && v != perm[i - 1]) d.add_arc(i, v);
    tauSum += arborescence_count(d, 1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  // C_k = (k-1)^k * C_H with C_H = tauSum / (k-1)^{k+1}.
  return exact_div(tauSum, BigInt(k - 1));
}

Rational asymptotic_ratio(int k) {
  return Rational(simplex_Ck(k), factorial(k + 1) * int_pow(BigInt(k), k + 1));
}

}  // namespace veblen
