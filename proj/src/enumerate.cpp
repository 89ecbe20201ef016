#include "veblen/enumerate.hpp"

#include <algorithm>
#include <stdexcept>

namespace veblen {

int veblen_enumeration_cap(int k) {
  if (k <= 3) return 8;
  return k + 3;
}

namespace {

// Grows non-decreasing edge sequences over labels 1..d. Labels above the
// current maximum must enter contiguously, which kills most relabelings
// before the canonical dedup sees them.
struct FreeGenerator {
  int k, d;
  std::vector<Edge> seq;
  std::vector<int> deg;  // 1-based
  int used = 0;
  std::map<CanonicalKey, MultiHypergraph> found;
  bool connectedOnly;

  FreeGenerator(int k_, int d_, bool connectedOnly_)
      : k(k_), d(d_), deg(d_ + 1, 0), connectedOnly(connectedOnly_) {}

  void record() {
    std::vector<std::pair<Edge, std::int64_t>> raw;
    for (const Edge& e : seq) raw.emplace_back(e, 1);
    MultiHypergraph h = make_hypergraph(k, used, std::move(raw));
    if (connectedOnly && !is_connected(h)) return;
    CanonicalKey key = canonical_key(h);
    found.emplace(std::move(key), std::move(h));
  }

  // Candidate next edges: sorted k-tuples >= floor, labels <= min(used+k, d),
  // new labels contiguous from used+1.
  void extend(const Edge& floorEdge) {
    int remaining = d - (int)seq.size();
    if (remaining == 0) {
      for (int v = 1; v <= used; ++v)
        if (deg[v] % k != 0) return;
      record();
      return;
    }
    // Deficit pruning: each future edge copy fixes at most one unit of any
    // vertex deficit, and vertices below the floor's first label are done.
    std::int64_t totalDeficit = 0;
    for (int v = 1; v <= used; ++v) {
      int def = (k - deg[v] % k) % k;
      if (def == 0) continue;
      if (v < floorEdge[0]) return;
      if (def > remaining) return;
      totalDeficit += def;
    }
    if (totalDeficit > (std::int64_t)k * remaining) return;

    Edge e(k);
    buildEdge(e, 0, floorEdge, true);
  }

  void buildEdge(Edge& e, int pos, const Edge& floorEdge, bool tight) {
    if (pos == k) {
      int newCount = 0;
      for (int v : e)
        if (v > used) ++newCount;
      for (int v : e) ++deg[v];
      used += newCount;
      seq.push_back(e);
      extend(e);
      seq.pop_back();
      used -= newCount;
      for (int v : e) --deg[v];
      return;
    }
    int lo = (pos == 0) ? (tight ? floorEdge[0] : 1) : e[pos - 1] + 1;
    if (tight && pos > 0) lo = std::max(lo, floorEdge[pos]);
    int newSoFar = 0;
    for (int i = 0; i < pos; ++i)
      if (e[i] > used) ++newSoFar;
    // A label above `used` must be exactly the next unused one.
    int hi = std::min(used + newSoFar + 1, d);
    for (int v = lo; v <= hi; ++v) {
      bool stillTight = tight && (v == floorEdge[pos]);
      if (tight && v < floorEdge[pos]) continue;
      e[pos] = v;
      buildEdge(e, pos + 1, floorEdge, stillTight);
    }
  }

  void run() {
    if (d == 0) return;
    Edge first(k);
    for (int i = 0; i < k; ++i) first[i] = i + 1;  // forced by contiguity
    for (int v : first) ++deg[v];
    used = k;
    seq.push_back(first);
    extend(first);
    seq.pop_back();
    used = 0;
    std::fill(deg.begin(), deg.end(), 0);
  }
};

std::map<CanonicalKey, MultiHypergraph> enumerate_veblen(int k, int d, bool connectedOnly) {
  if (k < 2) throw std::invalid_argument("veblen enumeration: k must be >= 2");
  if (d < 0) throw std::invalid_argument("veblen enumeration: d must be >= 0");
  if (d > veblen_enumeration_cap(k))
    throw CapExceeded("veblen enumeration: d > " + std::to_string(veblen_enumeration_cap(k)) +
                      " for k = " + std::to_string(k));
  FreeGenerator gen(k, d, connectedOnly);
  gen.run();
  return std::move(gen.found);
}

}  // namespace

std::vector<VeblenClass> connected_veblen_classes(int k, int d) {
  std::vector<VeblenClass> out;
  for (auto& [key, h] : enumerate_veblen(k, d, true)) {
    VeblenClass c;
    c.key = key;
    c.edge_count = total_edge_count(h);
    c.component_count = 1;
    c.representative = std::move(h);
    out.push_back(std::move(c));
  }
  return out;
}

BigInt all_veblen_class_counts(int k, int d) {
  if (d < 0) throw std::invalid_argument("all_veblen_class_counts: d must be >= 0");
  if (d == 0) return 1;
  std::vector<std::int64_t> connected(d + 1, 0);
  for (int s = 1; s <= d; ++s)
    connected[s] = (std::int64_t)connected_veblen_classes(k, s).size();
  // Euler transform: multisets of connected classes with total edge count d.
  std::vector<BigInt> dp(d + 1, 0);
  dp[0] = 1;
  for (int s = 1; s <= d; ++s) {
    if (connected[s] == 0) continue;
    std::vector<BigInt> next(d + 1, 0);
    for (int t = 0; t <= d; ++t) {
      for (int j = 0; j * s <= t; ++j)
        next[t] += binomial(BigInt(connected[s] + j - 1), j) * dp[t - j * s];
    }
    dp = std::move(next);
  }
  return dp[d];
}

BigInt all_veblen_class_counts_direct(int k, int d) {
  if (d == 0) return 1;
  return BigInt(enumerate_veblen(k, d, false).size());
}

namespace {

// Streams every multiplicity vector on the host's edges with total in
// [1, d_max] and all degrees divisible by k.
template <typename Fn>
void foreach_infragraph_vector(const MultiHypergraph& host, int d_max, Fn&& fn) {
  size_t m = host.edges.size();
  std::vector<int> lastEdge(host.n + 1, -1);
  for (size_t i = 0; i < m; ++i)
    for (int v : host.edges[i]) lastEdge[v] = (int)i;

  std::vector<std::int64_t> mu(m, 0), deg(host.n + 1, 0);
  auto rec = [&](auto&& self, size_t i, std::int64_t sum) -> void {
    if (i == m) {
      if (sum >= 1) fn(mu, sum);
      return;
    }
    for (std::int64_t c = 0; sum + c <= d_max; ++c) {
      mu[i] = c;
      for (int v : host.edges[i]) deg[v] += c;
      bool ok = true;
      for (int v : host.edges[i])
        if (lastEdge[v] == (int)i && deg[v] % host.k != 0) { ok = false; break; }
      if (ok) self(self, i + 1, sum + c);
      for (int v : host.edges[i]) deg[v] -= c;
    }
    mu[i] = 0;
  };
  rec(rec, 0, 0);
}

MultiHypergraph vector_to_hypergraph(const MultiHypergraph& host,
                                     const std::vector<std::int64_t>& mu) {
  std::vector<std::pair<Edge, std::int64_t>> raw;
  for (size_t i = 0; i < mu.size(); ++i)
    if (mu[i] > 0) raw.emplace_back(host.edges[i], mu[i]);
  return drop_isolated(make_hypergraph(host.k, host.n, std::move(raw)));
}

}  // namespace

std::vector<InfragraphDecomposition> veblen_infragraphs(const MultiHypergraph& host, int d) {
  if (d < 1) throw std::invalid_argument("veblen_infragraphs: d must be >= 1");
  std::vector<InfragraphDecomposition> out;
  foreach_infragraph_vector(host, d, [&](const std::vector<std::int64_t>& mu, std::int64_t sum) {
    if (sum != d) return;
    MultiHypergraph sub = vector_to_hypergraph(host, mu);
    InfragraphDecomposition dec;
    dec.host_multiplicities = mu;
    dec.total_edges = sum;
    std::map<CanonicalKey, std::pair<MultiHypergraph, int>> parts;
    for (MultiHypergraph& comp : connected_components(sub)) {
      CanonicalKey key = canonical_key(comp);
      auto [it, fresh] = parts.try_emplace(key, std::move(comp), 0);
      ++it->second.second;
    }
    for (auto& [key, pc] : parts) {
      VeblenClass c;
      c.key = key;
      c.edge_count = total_edge_count(pc.first);
      c.representative = std::move(pc.first);
      dec.parts.emplace_back(std::move(c), pc.second);
    }
    out.push_back(std::move(dec));
  });
  return out;
}

std::vector<std::map<CanonicalKey, ConnectedClassTally>> connected_infragraph_tally(
    const MultiHypergraph& host, int d_max) {
  std::vector<std::map<CanonicalKey, ConnectedClassTally>> tally(d_max + 1);
  foreach_infragraph_vector(host, d_max, [&](const std::vector<std::int64_t>& mu, std::int64_t sum) {
    MultiHypergraph sub = vector_to_hypergraph(host, mu);
    if (!is_connected(sub)) return;
    CanonicalKey key = canonical_key(sub);
    auto& slot = tally[sum][key];
    if (slot.placements == 0) slot.representative = std::move(sub);
    slot.placements += 1;
  });
  return tally;
}

}  // namespace veblen
