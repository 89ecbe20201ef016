#include <doctest.h>

#include <stdexcept>

#include "veblen/exact.hpp"
#include "veblen/hypergraph.hpp"
#include "veblen/presets.hpp"

using namespace veblen;

TEST_SUITE_BEGIN("core");

TEST_CASE("exact arithmetic helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(BigInt(10), 3) == 120);
  CHECK(binomial(BigInt(0), 0) == 1);
  CHECK(binomial(BigInt(4), 7) == 0);
  CHECK(int_pow(BigInt(2), 10) == 1024);
  CHECK(int_pow(BigInt(-3), 3) == -27);
  CHECK(int_pow(BigInt(7), 0) == 1);
  CHECK(exact_div(BigInt(84), BigInt(12)) == 7);
  CHECK_THROWS_AS(exact_div(BigInt(85), BigInt(12)), std::logic_error);
  CHECK(rational_to_string(Rational(6, 4)) == "3/2");
  CHECK(rational_to_string(Rational(-8, 2)) == "-4");
  CHECK(rational_to_string(Rational(0)) == "0");
}

TEST_CASE("make_hypergraph normalizes and validates") {
  MultiHypergraph h = make_hypergraph(3, 5, {{{3, 1, 2}, 1}, {{1, 2, 3}, 2}, {{1, 4, 5}, 1}});
  CHECK(h.edges.size() == 2);
  CHECK(h.edges[0] == Edge{1, 2, 3});
  CHECK(h.mult[0] == 3);  // merged duplicate
  CHECK(total_edge_count(h) == 4);
  CHECK(degree(h, 1) == 4);
  CHECK(degree(h, 4) == 1);

  CHECK_THROWS_AS(make_hypergraph(1, 3, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_hypergraph(3, 3, {{{1, 2}, 1}}), std::invalid_argument);       // wrong arity
  CHECK_THROWS_AS(make_hypergraph(3, 3, {{{1, 2, 4}, 1}}), std::invalid_argument);    // label out of range
  CHECK_THROWS_AS(make_hypergraph(3, 3, {{{1, 2, 2}, 1}}), std::invalid_argument);    // repeated label
  CHECK_THROWS_AS(make_hypergraph(3, 3, {{{1, 2, 3}, 0}}), std::invalid_argument);    // zero multiplicity
}

TEST_CASE("veblen predicate and flattening") {
  MultiHypergraph e3 = make_hypergraph(3, 3, {{{1, 2, 3}, 3}});
  CHECK(is_veblen(e3));
  MultiHypergraph e2 = make_hypergraph(3, 3, {{{1, 2, 3}, 2}});
  CHECK_FALSE(is_veblen(e2));
  CHECK(is_veblen(preset_simplex(3)));
  CHECK(is_veblen(preset_fano()));
  CHECK_FALSE(is_veblen(preset_rowling()));

  MultiHypergraph flat = flatten(e3);
  CHECK(flat.mult[0] == 1);
  CHECK(flat.edges == e3.edges);
}

TEST_CASE("components, connectivity, relabeling") {
  MultiHypergraph h = make_hypergraph(3, 9, {{{1, 2, 3}, 3}, {{5, 6, 7}, 1}, {{5, 6, 8}, 1}});
  CHECK_FALSE(is_connected(h));
  auto comps = connected_components(h);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].n == 3);
  CHECK(comps[0].mult[0] == 3);
  CHECK(comps[1].n == 4);
  CHECK(comps[1].edges.size() == 2);

  MultiHypergraph dropped = drop_isolated(h);
  CHECK(dropped.n == 7);  // vertices 4 and 9 removed
  CHECK(degree(dropped, 4) == 2);  // old vertex 5

  // relabel by the 3-cycle (1 2 3); image vector is 1-indexed
  MultiHypergraph e3 = make_hypergraph(3, 3, {{{1, 2, 3}, 3}});
  MultiHypergraph r = relabel(e3, {0, 2, 3, 1});
  CHECK(r.edges[0] == Edge{1, 2, 3});
  CHECK_THROWS_AS(relabel(e3, {2, 3, 1}), std::invalid_argument);
}

TEST_CASE("single-edge component count matches degree structure") {
  MultiHypergraph single = preset_single_edge(4);
  CHECK(single.k == 4);
  CHECK(is_connected(single));
  CHECK(degrees(single) == std::vector<std::int64_t>{1, 1, 1, 1});
}

TEST_CASE("text format round trip and errors") {
  MultiHypergraph r = preset_rowling();
  MultiHypergraph back = parse_hypergraph(format_hypergraph(r));
  CHECK(back.k == r.k);
  CHECK(back.n == r.n);
  CHECK(back.edges == r.edges);
  CHECK(back.mult == r.mult);

  MultiHypergraph withMult = parse_hypergraph("k=3 n=4\n# comment\n1 2 3 x6\n\n1 2 4\n");
  CHECK(withMult.mult[0] == 6);
  CHECK(withMult.mult[1] == 1);

  CHECK_THROWS_AS(parse_hypergraph("k=3\n1 2 3\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph("k=3 n=3\n1 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hypergraph("k=3 n=3\n1 2 z\n"), std::invalid_argument);
  // line/column present in the message
  try {
    parse_hypergraph("k=3 n=3\n1 2 3\n1 2 9\n");
    CHECK(false);
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
  }
}

TEST_CASE("compact edge notation") {
  MultiHypergraph g = compact_edges(3, "(123)^3(145)");
  CHECK(g.n == 5);
  CHECK(g.mult[0] == 3);
  CHECK(g.mult[1] == 1);
  CHECK_THROWS_AS(compact_edges(3, "(12"), std::invalid_argument);
  CHECK_THROWS_AS(compact_edges(3, "(123)^"), std::invalid_argument);
}

TEST_CASE("presets") {
  CHECK(preset_rowling().edges.size() == 5);
  CHECK(preset_fano_minus_one().edges.size() == 6);
  CHECK(preset_fano().edges.size() == 7);
  CHECK(preset_simplex(3).edges.size() == 4);
  CHECK(preset_by_name("simplex-4").edges.size() == 5);
  CHECK(preset_by_name("single-edge-5").k == 5);
  CHECK_THROWS_AS(preset_by_name("nope"), std::invalid_argument);

  // the seven-line host is linear: every pair of lines meets in one vertex
  MultiHypergraph fano = preset_fano();
  for (std::size_t i = 0; i < fano.edges.size(); ++i)
    for (std::size_t j = i + 1; j < fano.edges.size(); ++j) {
      int shared = 0;
      for (int v : fano.edges[i])
        for (int w : fano.edges[j])
          if (v == w) ++shared;
      CHECK(shared == 1);
    }
}

TEST_SUITE_END();
