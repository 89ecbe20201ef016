#include <doctest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "veblen/canonical.hpp"
#include "veblen/enumerate.hpp"
#include "veblen/presets.hpp"

using namespace veblen;

namespace {

// Random relabeling of a hypergraph onto n fresh labels.
MultiHypergraph shuffled(const MultiHypergraph& g, std::mt19937& rng) {
  std::vector<int> image(static_cast<std::size_t>(g.n) + 1);
  for (int v = 1; v <= g.n; ++v) image[static_cast<std::size_t>(v)] = v;
  std::shuffle(image.begin() + 1, image.end(), rng);
  return relabel(g, image);
}

}  // namespace

TEST_SUITE("canonical") {
  TEST_CASE("keys are invariant under relabeling") {
    std::mt19937 rng(20260814);
    for (const CatalogEntry& entry : reference_catalog()) {
      CanonicalKey base = canonical_key(entry.graph);
      for (int trial = 0; trial < 5; ++trial)
        CHECK(canonical_key(shuffled(entry.graph, rng)) == base);
    }
  }

  TEST_CASE("keys separate the d=6 classes") {
    auto classes = connected_veblen_classes(3, 6);
    REQUIRE(classes.size() == 11);
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j)
        CHECK(classes[i].key != classes[j].key);
  }

  TEST_CASE("isomorphic() matches brute-force search on class pairs") {
    std::mt19937 rng(7);
    auto d5 = connected_veblen_classes(3, 5);
    auto d6 = connected_veblen_classes(3, 6);
    std::vector<MultiHypergraph> reps;
    for (const auto& c : d5) reps.push_back(c.representative);
    for (const auto& c : d6) reps.push_back(c.representative);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i; j < reps.size(); ++j) {
        MultiHypergraph b = shuffled(reps[j], rng);
        bool expected = oracles::brute_isomorphic(reps[i], b);
        CHECK(isomorphic(reps[i], b) == expected);
        CHECK(expected == (i == j));
      }
    }
  }

  TEST_CASE("aut_order matches brute-force count") {
    std::vector<MultiHypergraph> graphs = {
        preset_single_edge(3),
        preset_rowling(),
        preset_fano(),
        preset_fano_minus_one(),
        cycle_graph(2),
        cycle_graph(5),
        compact_edges(3, "(123)^2(124)(135)(145)^2"),      // v6_3
        compact_edges(3, "(123)(124)(156)(256)(345)(346)")  // v6_5
    };
    for (int k = 2; k <= 4; ++k) graphs.push_back(preset_simplex(k));
    for (const MultiHypergraph& g : graphs)
      CHECK(aut_order(g) == oracles::brute_aut_order(g));
  }

  TEST_CASE("known automorphism group orders") {
    CHECK(aut_order(preset_single_edge(3)) == 6);
    CHECK(aut_order(preset_fano()) == 168);  // PGL(3,2)
    CHECK(aut_order(preset_simplex(4)) == factorial(5));
    CHECK(aut_order(cycle_graph(6)) == 12);  // dihedral
    // isolated vertices permute freely
    MultiHypergraph padded = make_hypergraph(3, 6, {{{1, 2, 3}, 1}});
    CHECK(aut_order(padded) == 6 * factorial(3));
  }

  TEST_CASE("vertex cap is enforced") {
    std::vector<std::pair<Edge, std::int64_t>> raw;
    for (int i = 0; i < 6; ++i) raw.push_back({{3 * i + 1, 3 * i + 2, 3 * i + 3}, 1});
    MultiHypergraph wide = make_hypergraph(3, 18, std::move(raw));  // 18 active vertices
    CHECK_THROWS_AS(canonical_key(wide), CapExceeded);
  }
}
