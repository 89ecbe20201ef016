#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "veblen/digraph.hpp"
#include "veblen/enumerate.hpp"
#include "veblen/presets.hpp"
#include "veblen/rooting.hpp"

using namespace veblen;

namespace {

// The rooted digraph of a derangement sigma of [k+1]: arcs u -> v for every
// v not in {u, sigma^{-1}(u)}, i.e. the star of the edge missing sigma^{-1}(u)
// rooted at u. This is the digraph family behind the simplex constant.
MultiDigraph derangement_digraph(const std::vector<int>& sigma_inv) {
  const int n = static_cast<int>(sigma_inv.size()) - 1;
  MultiDigraph d;
  d.n = n;
  for (int u = 1; u <= n; ++u)
    for (int v = 1; v <= n; ++v)
      if (v != u && v != sigma_inv[static_cast<std::size_t>(u)]) d.add_arc(u, v);
  return d;
}

std::vector<MultiDigraph> random_digraph_corpus() {
  std::mt19937 rng(414243);
  std::vector<MultiDigraph> corpus;
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> nd(2, 5);
    int n = nd(rng);
    MultiDigraph d;
    d.n = n;
    std::uniform_int_distribution<int> arcs(1, 8);
    std::uniform_int_distribution<int> vd(1, n);
    std::uniform_int_distribution<int> md(1, 2);
    int m = arcs(rng);
    for (int i = 0; i < m; ++i) {
      int u = vd(rng), v = vd(rng);
      if (u != v) d.add_arc(u, v, md(rng));
    }
    if (!d.arcs.empty()) corpus.push_back(d);
  }
  return corpus;
}

}  // namespace

TEST_SUITE("digraph") {
  TEST_CASE("matrix-tree arborescence count matches brute force") {
    for (const MultiDigraph& d : random_digraph_corpus())
      for (int root = 1; root <= d.n; ++root)
        CHECK(arborescence_count(d, root) == oracles::brute_arborescence_count(d, root));
  }

  TEST_CASE("derangement digraph of a 4-cycle has 5 arborescences") {
    // sigma = (1 2 3 4), so sigma^{-1}(u) = u - 1 cyclically.
    MultiDigraph d = derangement_digraph({0, 4, 1, 2, 3});
    CHECK(total_arc_count(d) == 8);
    CHECK(arborescence_count(d, 1) == 5);
    CHECK(oracles::brute_arborescence_count(d, 1) == 5);
    // balanced out/in degrees of 2 everywhere, so Eulerian
    CHECK(is_eulerian(d));
  }

  TEST_CASE("BEST theorem equals exhaustive circuit extension") {
    // corpus: every Eulerian rooted digraph D_R arising from the small Veblen
    // 2-graphs and 3-graphs, plus the k=2,3 derangement digraphs; <= 10 arcs.
    std::vector<MultiDigraph> corpus;
    for (int d = 2; d <= 5; ++d)
      for (const VeblenClass& cls : connected_veblen_classes(2, d))
        for (const Rooting& r : enumerate_euler_rootings(cls.representative))
          corpus.push_back(rooted_digraph(cls.representative, r));
    for (int d = 3; d <= 5; ++d)
      for (const VeblenClass& cls : connected_veblen_classes(3, d))
        for (const Rooting& r : enumerate_euler_rootings(cls.representative))
          corpus.push_back(rooted_digraph(cls.representative, r));
    corpus.push_back(derangement_digraph({0, 3, 1, 2}));     // k=2, 3-cycle
    corpus.push_back(derangement_digraph({0, 4, 1, 2, 3}));  // k=3, 4-cycle
    corpus.push_back(derangement_digraph({0, 2, 1, 4, 3}));  // k=3, two swaps
    int tested = 0;
    for (const MultiDigraph& d : corpus) {
      if (total_arc_count(d) > 10 || !is_eulerian(d)) continue;
      CHECK(euler_circuit_count_best(d) == euler_circuit_count_brute(d));
      ++tested;
    }
    CHECK(tested >= 30);  // the corpus genuinely exercises the comparison
  }

  TEST_CASE("BEST rejects non-Eulerian input, brute counts it as zero") {
    MultiDigraph d;
    d.n = 3;
    d.add_arc(1, 2);
    d.add_arc(2, 3);
    CHECK_THROWS_AS(euler_circuit_count_best(d), std::invalid_argument);
    CHECK(euler_circuit_count_brute(d) == 0);
  }

  TEST_CASE("undirected Euler circuit counts on small Veblen 2-graphs") {
    CHECK(euler_circuit_count_undirected(cycle_graph(2)) == 2);  // two labeled copies
    CHECK(euler_circuit_count_undirected(cycle_graph(3)) == 2);  // two directions
    CHECK(euler_circuit_count_undirected(cycle_graph(6)) == 2);
    // figure-eight: two triangles glued at a vertex
    MultiHypergraph fig8 = make_hypergraph(
        2, 5, {{{1, 2}, 1}, {{2, 3}, 1}, {{1, 3}, 1}, {{1, 4}, 1}, {{4, 5}, 1}, {{1, 5}, 1}});
    // balanced orientations direct each triangle as a cycle (2 x 2 choices),
    // and each orientation carries exactly one circuit up to rotation
    CHECK(euler_circuit_count_undirected(fig8) == 4);
  }

  TEST_CASE("degree bookkeeping") {
    MultiDigraph d;
    d.n = 3;
    d.add_arc(1, 2, 2);
    d.add_arc(2, 1);
    d.add_arc(2, 3);
    d.add_arc(3, 1);
    CHECK(total_arc_count(d) == 5);
    CHECK(out_degrees(d) == std::vector<std::int64_t>{2, 2, 1});
    CHECK(in_degrees(d) == std::vector<std::int64_t>{2, 2, 1});
    CHECK(is_eulerian(d));
  }
}
