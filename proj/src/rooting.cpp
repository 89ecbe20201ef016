#include "veblen/rooting.hpp"

#include <stdexcept>

namespace veblen {

MultiDigraph rooted_digraph(const MultiHypergraph& h, const Rooting& r) {
  if (r.counts.size() != h.edges.size())
    throw std::invalid_argument("rooted_digraph: rooting shape mismatch");
  MultiDigraph d;
  d.n = h.n;
  for (size_t i = 0; i < h.edges.size(); ++i) {
    const Edge& e = h.edges[i];
    if (r.counts[i].size() != e.size())
      throw std::invalid_argument("rooted_digraph: rooting shape mismatch");
    for (size_t j = 0; j < e.size(); ++j) {
      std::int64_t c = r.counts[i][j];
      if (c == 0) continue;
      for (int v : e)
        if (v != e[j]) d.add_arc(e[j], v, c);
    }
  }
  return d;
}

std::vector<Rooting> enumerate_euler_rootings(const MultiHypergraph& h) {
  std::vector<Rooting> out;
  if (!is_veblen(h)) return out;
  if (h.edges.empty()) return out;
  if (!is_connected(h)) return out;  // disconnected rooted digraphs are never Eulerian

  auto deg = degrees(h);
  std::vector<std::int64_t> quota(h.n);  // stars still to be rooted at v
  for (int v = 0; v < h.n; ++v) quota[v] = deg[v] / h.k;

  // Last edge index touching each vertex: after it, the quota must be spent.
  std::vector<int> lastEdge(h.n + 1, -1);
  for (size_t i = 0; i < h.edges.size(); ++i)
    for (int v : h.edges[i]) lastEdge[v] = (int)i;

  Rooting current;
  current.counts.assign(h.edges.size(), {});
  for (size_t i = 0; i < h.edges.size(); ++i)
    current.counts[i].assign(h.edges[i].size(), 0);

  // Distribute the copies of edge i over its vertices within remaining quota.
  auto place = [&](auto&& self, size_t i, size_t j, std::int64_t left) -> void {
    const Edge& e = h.edges[i];
    if (j + 1 == e.size()) {
      int v = e[j];
      if (left > quota[v - 1]) return;
      current.counts[i][j] = left;
      quota[v - 1] -= left;
      bool ok = true;
      for (int u : e)
        if (lastEdge[u] == (int)i && quota[u - 1] != 0) { ok = false; break; }
      if (ok) {
        if (i + 1 == h.edges.size())
          out.push_back(current);
        else
          self(self, i + 1, 0, h.mult[i + 1]);
      }
      quota[v - 1] += left;
      current.counts[i][j] = 0;
      return;
    }
    int v = e[j];
    std::int64_t maxHere = std::min(left, quota[v - 1]);
    for (std::int64_t c = 0; c <= maxHere; ++c) {
      current.counts[i][j] = c;
      quota[v - 1] -= c;
      self(self, i, j + 1, left - c);
      quota[v - 1] += c;
      current.counts[i][j] = 0;
    }
  };
  place(place, 0, 0, h.mult[0]);
  return out;
}

BigInt rooting_multiplicity(const MultiHypergraph& h, const Rooting& r) {
  std::vector<std::int64_t> nv(h.n, 0);
  for (size_t i = 0; i < h.edges.size(); ++i)
    for (size_t j = 0; j < h.edges[i].size(); ++j)
      nv[h.edges[i][j] - 1] += r.counts[i][j];
  BigInt w = 1;
  for (int v = 0; v < h.n; ++v) w *= factorial((int)nv[v]);
  for (size_t i = 0; i < h.edges.size(); ++i)
    for (auto c : r.counts[i]) w = exact_div(w, factorial((int)c));
  return w;
}

}  // namespace veblen
