#include "veblen/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace veblen {

namespace {

// Length-prefixed flat encoding so nested variable-length invariants compare
// unambiguously.
void append_block(std::vector<std::int64_t>& out, const std::vector<std::int64_t>& block) {
  out.push_back((std::int64_t)block.size());
  out.insert(out.end(), block.begin(), block.end());
}

std::vector<std::int64_t> labeled_encoding(const MultiHypergraph& h) {
  std::vector<std::int64_t> enc;
  enc.push_back(h.k);
  enc.push_back(h.n);
  enc.push_back((std::int64_t)h.edges.size());
  for (size_t i = 0; i < h.edges.size(); ++i) {
    for (int v : h.edges[i]) enc.push_back(v);
    enc.push_back(h.mult[i]);
  }
  return enc;
}

struct SearchContext {
  const MultiHypergraph* h = nullptr;
  std::vector<int> active;              // old labels with degree > 0, ascending
  std::vector<std::vector<int>> groups; // invariant classes of active labels, canonical order
  int activeCount = 0;
};

// Invariant refinement: degree + incident multiplicity profile, then one
// neighborhood round on top of that. Enough to shatter everything in scope
// except genuinely symmetric graphs, where the permutation search is small
// anyway.
SearchContext build_context(const MultiHypergraph& h) {
  SearchContext ctx;
  ctx.h = &h;
  auto deg = degrees(h);
  for (int v = 1; v <= h.n; ++v)
    if (deg[v - 1] > 0) ctx.active.push_back(v);
  ctx.activeCount = (int)ctx.active.size();
  if (ctx.activeCount > kCanonicalVertexCap)
    throw CapExceeded("canonical search: hypergraph too large (more than " +
                      std::to_string(kCanonicalVertexCap) + " active vertices)");

  std::vector<std::vector<size_t>> incident(h.n + 1);
  for (size_t i = 0; i < h.edges.size(); ++i)
    for (int v : h.edges[i]) incident[v].push_back(i);

  std::map<int, std::vector<std::int64_t>> inv0;
  for (int v : ctx.active) {
    std::vector<std::int64_t> iv{deg[v - 1]};
    std::vector<std::int64_t> ms;
    for (size_t i : incident[v]) ms.push_back(h.mult[i]);
    std::sort(ms.begin(), ms.end());
    append_block(iv, ms);
    inv0[v] = iv;
  }
  std::map<std::vector<std::int64_t>, int> inv0_rank;
  for (auto& [v, iv] : inv0) inv0_rank[iv];
  {
    int r = 0;
    for (auto& [iv, rank] : inv0_rank) rank = r++;
  }

  std::map<std::vector<std::int64_t>, std::vector<int>> byInv1;
  for (int v : ctx.active) {
    std::vector<std::vector<std::int64_t>> nbr;
    for (size_t i : incident[v]) {
      std::vector<std::int64_t> b{h.mult[i]};
      std::vector<std::int64_t> ranks;
      for (int u : h.edges[i])
        if (u != v) ranks.push_back(inv0_rank[inv0[u]]);
      std::sort(ranks.begin(), ranks.end());
      append_block(b, ranks);
      nbr.push_back(b);
    }
    std::sort(nbr.begin(), nbr.end());
    std::vector<std::int64_t> inv1 = inv0[v];
    for (auto& b : nbr) append_block(inv1, b);
    byInv1[inv1].push_back(v);
  }
  for (auto& [inv, vs] : byInv1) ctx.groups.push_back(vs);
  return ctx;
}

// Encodes the relabeled edge list under newLabel (old -> new, 1-based).
std::vector<std::int64_t> relabeled_encoding(const MultiHypergraph& h,
                                             const std::vector<int>& newLabel) {
  std::vector<std::pair<Edge, std::int64_t>> mapped;
  mapped.reserve(h.edges.size());
  for (size_t i = 0; i < h.edges.size(); ++i) {
    Edge e;
    e.reserve(h.edges[i].size());
    for (int v : h.edges[i]) e.push_back(newLabel[v]);
    std::sort(e.begin(), e.end());
    mapped.emplace_back(std::move(e), h.mult[i]);
  }
  std::sort(mapped.begin(), mapped.end());
  std::vector<std::int64_t> enc;
  enc.reserve(mapped.size() * (h.k + 1));
  for (auto& [e, m] : mapped) {
    for (int v : e) enc.push_back(v);
    enc.push_back(m);
  }
  return enc;
}

// Runs fn for every group-respecting assignment of new labels to active
// vertices; newLabel is reused across calls.
template <typename Fn>
void foreach_assignment(const SearchContext& ctx, std::vector<int>& newLabel, Fn&& fn) {
  std::vector<std::vector<int>> perm = ctx.groups;
  int next = 1;
  std::vector<int> base(ctx.groups.size());
  for (size_t g = 0; g < ctx.groups.size(); ++g) {
    base[g] = next;
    next += (int)ctx.groups[g].size();
  }
  // Odometer over per-group permutations.
  auto assign = [&](size_t g) {
    for (size_t j = 0; j < perm[g].size(); ++j) newLabel[perm[g][j]] = base[g] + (int)j;
  };
  for (size_t g = 0; g < perm.size(); ++g) {
    std::sort(perm[g].begin(), perm[g].end());
    assign(g);
  }
  while (true) {
    fn();
    size_t g = 0;
    while (g < perm.size() && !std::next_permutation(perm[g].begin(), perm[g].end())) {
      assign(g);  // wrapped back to sorted order
      ++g;
    }
    if (g == perm.size()) break;
    assign(g);
  }
}

std::mutex g_cacheMutex;
std::map<std::vector<std::int64_t>, CanonicalKey> g_keyCache;
std::map<std::vector<std::int64_t>, BigInt> g_autCache;

}  // namespace

CanonicalKey canonical_key(const MultiHypergraph& h) {
  auto labeled = labeled_encoding(h);
  {
    std::lock_guard<std::mutex> lock(g_cacheMutex);
    if (auto it = g_keyCache.find(labeled); it != g_keyCache.end()) return it->second;
  }

  SearchContext ctx = build_context(h);
  std::vector<std::int64_t> best;
  bool haveBest = false;
  std::vector<int> newLabel(h.n + 1, 0);
  foreach_assignment(ctx, newLabel, [&] {
    auto enc = relabeled_encoding(h, newLabel);
    if (!haveBest || enc < best) {
      best = std::move(enc);
      haveBest = true;
    }
  });

  CanonicalKey key;
  key.cert.push_back(h.k);
  key.cert.push_back(h.n);
  key.cert.push_back(ctx.activeCount);
  key.cert.push_back((std::int64_t)h.edges.size());
  if (haveBest) key.cert.insert(key.cert.end(), best.begin(), best.end());

  std::lock_guard<std::mutex> lock(g_cacheMutex);
  g_keyCache.emplace(std::move(labeled), key);
  return key;
}

BigInt aut_order(const MultiHypergraph& h) {
  auto labeled = labeled_encoding(h);
  {
    std::lock_guard<std::mutex> lock(g_cacheMutex);
    if (auto it = g_autCache.find(labeled); it != g_autCache.end()) return it->second;
  }

  SearchContext ctx = build_context(h);
  std::map<Edge, std::int64_t> edgeMap;
  for (size_t i = 0; i < h.edges.size(); ++i) edgeMap.emplace(h.edges[i], h.mult[i]);

  // Automorphisms permute vertices within invariant groups. Backtrack over
  // active vertices in group order; once every vertex of an edge is placed,
  // its image must be an edge of equal multiplicity.
  std::vector<int> order;
  for (auto& g : ctx.groups) order.insert(order.end(), g.begin(), g.end());
  std::vector<int> groupOf(h.n + 1, -1);
  for (size_t g = 0; g < ctx.groups.size(); ++g)
    for (int v : ctx.groups[g]) groupOf[v] = (int)g;

  std::vector<int> posOf(h.n + 1, -1);
  for (size_t i = 0; i < order.size(); ++i) posOf[order[i]] = (int)i;
  std::vector<std::vector<size_t>> closesAt(order.size());
  for (size_t i = 0; i < h.edges.size(); ++i) {
    int last = -1;
    for (int v : h.edges[i]) last = std::max(last, posOf[v]);
    if (last >= 0) closesAt[last].push_back(i);
  }

  std::vector<int> image(h.n + 1, 0);
  std::vector<char> used(h.n + 1, 0);
  BigInt count = 0;

  auto rec = [&](auto&& self, size_t pos) -> void {
    if (pos == order.size()) {
      ++count;
      return;
    }
    int v = order[pos];
    for (int w : ctx.groups[groupOf[v]]) {
      if (used[w]) continue;
      image[v] = w;
      used[w] = 1;
      bool ok = true;
      for (size_t ei : closesAt[pos]) {
        Edge mappedEdge;
        for (int u : h.edges[ei]) mappedEdge.push_back(image[u]);
        std::sort(mappedEdge.begin(), mappedEdge.end());
        auto it = edgeMap.find(mappedEdge);
        if (it == edgeMap.end() || it->second != h.mult[ei]) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, pos + 1);
      used[w] = 0;
    }
    image[v] = 0;
  };
  rec(rec, 0);

  count *= factorial(h.n - ctx.activeCount);

  std::lock_guard<std::mutex> lock(g_cacheMutex);
  g_autCache.emplace(std::move(labeled), count);
  return count;
}

bool isomorphic(const MultiHypergraph& a, const MultiHypergraph& b) {
  return canonical_key(a) == canonical_key(b);
}

}  // namespace veblen
