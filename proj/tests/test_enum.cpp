#include <doctest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "veblen/canonical.hpp"
#include "veblen/enumerate.hpp"
#include "veblen/presets.hpp"

using namespace veblen;

TEST_SUITE("enum") {
  TEST_CASE("connected 3-graph class counts") {
    const std::vector<std::size_t> expected = {1, 1, 2, 11, 26};  // d = 3..7
    for (int d = 3; d <= 7; ++d)
      CHECK(connected_veblen_classes(3, d).size() == expected[static_cast<std::size_t>(d - 3)]);
    // d < 3 has no nonempty Veblen 3-graphs
    CHECK(connected_veblen_classes(3, 1).empty());
    CHECK(connected_veblen_classes(3, 2).empty());
  }

  TEST_CASE("unrestricted 3-graph class counts via the Euler transform") {
    const std::vector<BigInt> expected = {1, 1, 2, 12, 27};  // d = 3..7
    for (int d = 3; d <= 7; ++d)
      CHECK(all_veblen_class_counts(3, d) == expected[static_cast<std::size_t>(d - 3)]);
    for (int d = 3; d <= 6; ++d)
      CHECK(all_veblen_class_counts(3, d) == all_veblen_class_counts_direct(3, d));
  }

  TEST_CASE("classes are valid, distinct, and closed under the brute search") {
    // library classes: each representative connected Veblen with the right
    // edge count; keys pairwise distinct
    for (int d = 3; d <= 6; ++d) {
      auto classes = connected_veblen_classes(3, d);
      std::set<CanonicalKey> keys;
      for (const VeblenClass& c : classes) {
        CHECK(is_veblen(c.representative));
        CHECK(is_connected(c.representative));
        CHECK(total_edge_count(c.representative) == d);
        CHECK(c.edge_count == d);
        keys.insert(c.key);
      }
      CHECK(keys.size() == classes.size());
      // completeness: a literal multiset-over-slots search finds the same
      // number of classes (a connected Veblen 3-graph with d edges has at
      // most d vertices)
      auto brute = oracles::brute_connected_classes(3, d, d);
      CHECK(brute.size() == classes.size());
      for (const MultiHypergraph& b : brute) CHECK(keys.count(canonical_key(b)) == 1);
    }
  }

  TEST_CASE("2-graph classes match the brute search") {
    const std::vector<std::size_t> expected = {1, 1, 3, 3};  // d = 2..5
    for (int d = 2; d <= 5; ++d) {
      auto classes = connected_veblen_classes(2, d);
      CHECK(classes.size() == expected[static_cast<std::size_t>(d - 2)]);
      auto brute = oracles::brute_connected_classes(2, d, d);
      CHECK(brute.size() == classes.size());
    }
  }

  TEST_CASE("enumeration caps are documented and enforced") {
    CHECK(veblen_enumeration_cap(2) == 8);
    CHECK(veblen_enumeration_cap(3) == 8);
    CHECK(veblen_enumeration_cap(4) == 7);
    CHECK_THROWS_AS(connected_veblen_classes(3, 9), CapExceeded);
  }

  TEST_CASE("host-constrained infragraphs: the five-edge host at d = 3") {
    MultiHypergraph host = preset_rowling();
    auto infra = veblen_infragraphs(host, 3);
    // five tripled single lines, nothing else
    CHECK(infra.size() == 5);
    for (const auto& dec : infra) {
      CHECK(dec.total_edges == 3);
      REQUIRE(dec.parts.size() == 1);
      CHECK(isomorphic(dec.parts[0].first.representative, compact_edges(3, "(123)^3")));
    }
  }

  TEST_CASE("connected tally matches the published host counts at d = 6") {
    MultiHypergraph host = preset_rowling();
    auto tally = connected_infragraph_tally(host, 6);
    // d=6 connected classes inside the five-edge linear host: e^6 on each of
    // the 5 lines, and the two-line join (123)^3(145)^3 once per intersecting
    // pair (the only Veblen multiplicity split is 3+3); all 10 pairs intersect
    const auto& at6 = tally[6];
    BigInt e6 = 0, pair = 0;
    for (const auto& [key, t] : at6) {
      if (isomorphic(t.representative, compact_edges(3, "(123)^6")))
        e6 = t.placements;
      else if (isomorphic(t.representative, compact_edges(3, "(123)^3(145)^3")))
        pair = t.placements;
      else
        FAIL("unexpected d=6 connected class in the five-edge host");
    }
    CHECK(e6 == 5);
    CHECK(pair == 10);
  }
}
