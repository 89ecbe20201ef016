#include "veblen/assoc.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "veblen/canonical.hpp"

namespace veblen {

namespace {

std::mutex g_assocMutex;
std::map<CanonicalKey, Rational> g_assocCache;

Rational assoc_connected(const MultiHypergraph& h) {
  CanonicalKey key = canonical_key(h);
  {
    std::lock_guard<std::mutex> lock(g_assocMutex);
    if (auto it = g_assocCache.find(key); it != g_assocCache.end()) return it->second;
  }

  Rational sum = 0;
  for (const Rooting& r : enumerate_euler_rootings(h)) {
    MultiDigraph d = rooted_digraph(h, r);
    BigInt tau = arborescence_count(d, 1);
    if (tau == 0) continue;
    BigInt indegProduct = 1;
    for (auto deg : in_degrees(d))
      if (deg > 0) indegProduct *= deg;
    sum += Rational(rooting_multiplicity(h, r) * tau, indegProduct);
  }

  std::lock_guard<std::mutex> lock(g_assocMutex);
  g_assocCache.emplace(std::move(key), sum);
  return sum;
}

}  // namespace

Rational associated_coefficient(const MultiHypergraph& h) {
  if (!is_veblen(h))
    throw std::invalid_argument("associated_coefficient: not a Veblen hypergraph");
  Rational c = 1;
  for (const MultiHypergraph& comp : connected_components(h)) c *= assoc_connected(comp);
  return c;
}

Rational associated_coefficient_2graph(const MultiHypergraph& g) {
  if (g.k != 2)
    throw std::invalid_argument("associated_coefficient_2graph: k must be 2");
  if (!is_veblen(g) || !is_connected(g))
    throw std::invalid_argument("associated_coefficient_2graph: needs a connected Veblen 2-graph");
  BigInt denom = 1;
  for (auto m : g.mult) denom *= factorial((int)m);
  return Rational(euler_circuit_count_undirected(g), denom);
}

namespace {

// Every distinct connected Veblen sub-multiplicity-vector of g, with its C.
struct PartType {
  std::vector<std::int64_t> take;
  Rational value;
};

std::vector<PartType> connected_veblen_parts(const MultiHypergraph& g) {
  size_t m = g.edges.size();
  std::vector<PartType> types;
  std::vector<std::int64_t> part(m, 0);
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == m) {
      std::vector<std::pair<Edge, std::int64_t>> raw;
      for (size_t t = 0; t < m; ++t)
        if (part[t] > 0) raw.emplace_back(g.edges[t], part[t]);
      if (raw.empty()) return;
      MultiHypergraph sub = make_hypergraph(g.k, g.n, std::move(raw));
      if (is_veblen(sub) && connected_components(sub).size() == 1)
        types.push_back({part, associated_coefficient(sub)});
      return;
    }
    for (std::int64_t c = 0; c <= g.mult[i]; ++c) {
      part[i] = c;
      self(self, i + 1);
    }
    part[i] = 0;
  };
  rec(rec, 0);
  return types;
}

}  // namespace

Rational partition_sum(const MultiHypergraph& g) {
  if (total_edge_count(g) > kPartitionSumEdgeCap)
    throw CapExceeded("partition_sum: more than " +
                      std::to_string(kPartitionSumEdgeCap) + " edges");
  std::vector<PartType> types = connected_veblen_parts(g);
  std::vector<std::int64_t> remaining = g.mult;
  // Multisets of part types with r copies of a type weighted by (-C)^r / r!;
  // repeated identical parts carry the symmetry factor, without which the
  // indecomposable-circuit cancellation fails (e.g. the 4-fold edge).
  Rational total = 0;
  auto rec = [&](auto&& self, size_t t, const Rational& weight) -> void {
    bool empty = true;
    for (std::int64_t r : remaining)
      if (r != 0) { empty = false; break; }
    if (empty) {
      total += weight;
      return;
    }
    if (t == types.size()) return;
    const PartType& ty = types[t];
    self(self, t + 1, weight);  // zero copies of this type
    Rational w = weight;
    std::int64_t r = 0;
    while (true) {
      bool fits = true;
      for (size_t i = 0; i < remaining.size(); ++i)
        if (remaining[i] < ty.take[i]) { fits = false; break; }
      if (!fits) break;
      for (size_t i = 0; i < remaining.size(); ++i) remaining[i] -= ty.take[i];
      ++r;
      w *= -ty.value;
      w /= r;
      self(self, t + 1, w);
    }
    for (size_t i = 0; i < remaining.size(); ++i) remaining[i] += r * ty.take[i];
  };
  rec(rec, 0, Rational(1));
  return total;
}

}  // namespace veblen
