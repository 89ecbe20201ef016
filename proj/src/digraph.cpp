#include "veblen/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace veblen {

void MultiDigraph::add_arc(int u, int v, std::int64_t m) {
  if (u == v) throw std::invalid_argument("digraph: loops not allowed");
  if (u < 1 || u > n || v < 1 || v > n)
    throw std::invalid_argument("digraph: vertex out of range");
  if (m <= 0) throw std::invalid_argument("digraph: multiplicity must be >= 1");
  arcs[{u, v}] += m;
}

std::int64_t total_arc_count(const MultiDigraph& d) {
  std::int64_t t = 0;
  for (auto& [a, m] : d.arcs) t += m;
  return t;
}

std::vector<std::int64_t> out_degrees(const MultiDigraph& d) {
  std::vector<std::int64_t> deg(d.n, 0);
  for (auto& [a, m] : d.arcs) deg[a.first - 1] += m;
  return deg;
}

std::vector<std::int64_t> in_degrees(const MultiDigraph& d) {
  std::vector<std::int64_t> deg(d.n, 0);
  for (auto& [a, m] : d.arcs) deg[a.second - 1] += m;
  return deg;
}

bool is_eulerian(const MultiDigraph& d) {
  auto out = out_degrees(d), in = in_degrees(d);
  for (int v = 0; v < d.n; ++v)
    if (out[v] != in[v]) return false;

  std::vector<int> parent(d.n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](auto&& self, int x) -> int {
    return parent[x] == x ? x : parent[x] = self(self, parent[x]);
  };
  for (auto& [a, m] : d.arcs) parent[find(find, a.first)] = find(find, a.second);
  int root = -1;
  for (int v = 1; v <= d.n; ++v) {
    if (out[v - 1] == 0) continue;
    int r = find(find, v);
    if (root == -1) root = r;
    else if (root != r) return false;
  }
  return true;
}

namespace {

// Fraction-free Gaussian elimination; exact over BigInt.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  int n = (int)m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    if (m[c][c] == 0) {
      int swapRow = -1;
      for (int r = c + 1; r < n; ++r)
        if (m[r][c] != 0) { swapRow = r; break; }
      if (swapRow == -1) return 0;
      std::swap(m[c], m[swapRow]);
      sign = -sign;
    }
    for (int r = c + 1; r < n; ++r) {
      for (int j = c + 1; j < n; ++j)
        m[r][j] = exact_div(m[r][j] * m[c][c] - m[r][c] * m[c][j], prev);
      m[r][c] = 0;
    }
    prev = m[c][c];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace

BigInt arborescence_count(const MultiDigraph& d, int root) {
  if (root < 1 || root > d.n) throw std::invalid_argument("arborescence_count: bad root");
  int n = d.n;
  if (n == 1) return 1;
  // Out-degree Laplacian, root row/column deleted.
  std::vector<int> idx(n + 1, -1);
  int m = 0;
  for (int v = 1; v <= n; ++v)
    if (v != root) idx[v] = m++;
  std::vector<std::vector<BigInt>> L(m, std::vector<BigInt>(m, 0));
  auto out = out_degrees(d);
  for (int v = 1; v <= n; ++v)
    if (v != root) L[idx[v]][idx[v]] = out[v - 1];
  for (auto& [a, mult] : d.arcs) {
    auto [u, v] = a;
    if (u != root && v != root) L[idx[u]][idx[v]] -= mult;
  }
  BigInt det = bareiss_determinant(std::move(L));
  if (det < 0) throw std::logic_error("arborescence_count: negative determinant");
  return det;
}

BigInt euler_circuit_count_best(const MultiDigraph& d) {
  if (!is_eulerian(d)) throw std::invalid_argument("euler_circuit_count_best: not Eulerian");
  if (d.arcs.empty()) return 1;

  // Restrict to vertices that carry arcs; isolated vertices are irrelevant
  // and would zero out the Laplacian minor.
  auto out = out_degrees(d);
  std::vector<int> newLabel(d.n + 1, 0);
  MultiDigraph active;
  for (int v = 1; v <= d.n; ++v)
    if (out[v - 1] > 0) newLabel[v] = ++active.n;
  for (auto& [a, m] : d.arcs) active.add_arc(newLabel[a.first], newLabel[a.second], m);

  BigInt count = arborescence_count(active, 1);
  for (auto deg : in_degrees(active)) count *= factorial((int)deg - 1);
  return count;
}

BigInt euler_circuit_count_brute(const MultiDigraph& d) {
  std::int64_t arcTotal = total_arc_count(d);
  if (arcTotal > kEulerBruteArcCap)
    throw CapExceeded("euler_circuit_count_brute: more than " +
                      std::to_string(kEulerBruteArcCap) + " arcs");
  if (!is_eulerian(d)) return 0;
  if (d.arcs.empty()) return 1;

  // Expand parallel arcs into distinguishable instances. Fixing the first
  // instance of the lexicographically least arc as the start picks exactly
  // one representative from each rotation class.
  std::vector<std::pair<int, int>> arcs;
  for (auto& [a, m] : d.arcs)
    for (std::int64_t i = 0; i < m; ++i) arcs.push_back(a);

  std::vector<std::vector<size_t>> from(d.n + 1);
  for (size_t i = 0; i < arcs.size(); ++i) from[arcs[i].first].push_back(i);

  std::vector<char> usedArc(arcs.size(), 0);
  usedArc[0] = 1;
  int startVertex = arcs[0].first;
  BigInt count = 0;
  auto walk = [&](auto&& self, int at, size_t remaining) -> void {
    if (remaining == 0) {
      if (at == startVertex) ++count;
      return;
    }
    for (size_t i : from[at]) {
      if (usedArc[i]) continue;
      usedArc[i] = 1;
      self(self, arcs[i].second, remaining - 1);
      usedArc[i] = 0;
    }
  };
  walk(walk, arcs[0].second, arcs.size() - 1);
  return count;
}

BigInt euler_circuit_count_undirected(const MultiHypergraph& g) {
  if (g.k != 2) throw std::invalid_argument("euler_circuit_count_undirected: k must be 2");
  if (!is_veblen(g)) throw std::invalid_argument("euler_circuit_count_undirected: odd degrees");
  if (!is_connected(g))
    throw std::invalid_argument("euler_circuit_count_undirected: not connected");
  if (g.edges.empty()) return 0;

  auto deg = degrees(g);
  size_t m = g.edges.size();

  // Orientation vector: j[i] copies of edge i run low->high endpoint. Balance
  // needs outdeg(v) = deg(v)/2 at every vertex. Each choice of which copies go
  // forward contributes binomial(mult, j) since copies are distinguishable.
  std::vector<std::int64_t> outNeeded(g.n);
  for (int v = 0; v < g.n; ++v) outNeeded[v] = deg[v] / 2;

  std::vector<std::int64_t> j(m, 0);
  BigInt total = 0;
  auto rec = [&](auto&& self, size_t i, std::vector<std::int64_t>& need) -> void {
    if (i == m) {
      for (auto r : need)
        if (r != 0) return;
      MultiDigraph d;
      d.n = g.n;
      BigInt weight = 1;
      for (size_t t = 0; t < m; ++t) {
        int u = g.edges[t][0], v = g.edges[t][1];
        if (j[t] > 0) d.add_arc(u, v, j[t]);
        if (g.mult[t] - j[t] > 0) d.add_arc(v, u, g.mult[t] - j[t]);
        weight *= binomial(BigInt(g.mult[t]), (int)j[t]);
      }
      total += weight * euler_circuit_count_best(d);
      return;
    }
    int u = g.edges[i][0], v = g.edges[i][1];
    for (std::int64_t f = 0; f <= g.mult[i]; ++f) {
      // f copies u->v, rest v->u.
      if (need[u - 1] < f || need[v - 1] < g.mult[i] - f) continue;
      j[i] = f;
      need[u - 1] -= f;
      need[v - 1] -= g.mult[i] - f;
      self(self, i + 1, need);
      need[u - 1] += f;
      need[v - 1] += g.mult[i] - f;
    }
  };
  rec(rec, 0, outNeeded);
  return total;
}

}  // namespace veblen
