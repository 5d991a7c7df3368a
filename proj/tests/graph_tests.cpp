#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sgqft/canonical.hpp"
#include "sgqft/enumerate.hpp"
#include "sgqft/json_io.hpp"
#include "sgqft/operators.hpp"
#include "sgqft/verify.hpp"

using namespace sgqft;

namespace {

StableGraph loop_graph() {
  StableGraph g;
  g.add_vertex(0);
  g.add_edge(0, 0);
  g.add_leg(0);
  return g;
}

StableGraph dumbbell() {
  StableGraph g;
  g.add_vertex(0);
  g.add_vertex(0);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  return g;
}

std::vector<std::pair<int, int>> types(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; 2 * g - 2 <= bound; ++g)
    for (int n = 0; 2 * g - 2 + n <= bound; ++n)
      if (is_stable_type(g, n)) out.emplace_back(g, n);
  return out;
}

}  // namespace

TEST_CASE("validation rejects malformed graphs") {
  StableGraph g;
  g.add_vertex(-1);
  CHECK(validate(g)->find("negative genus") != std::string::npos);

  StableGraph two_valent;
  two_valent.add_vertex(0);
  two_valent.add_edge(0, 0);
  CHECK(validate(two_valent)->find("valence") != std::string::npos);

  StableGraph dangling;
  dangling.add_vertex(1);
  dangling.legs.push_back({{3, 0}, 0});
  CHECK(validate(dangling)->find("missing vertex") != std::string::npos);

  StableGraph twice;
  twice.add_vertex(1);
  twice.legs.push_back({{0, 0}, 0});
  twice.legs.push_back({{0, 0}, 0});
  CHECK(validate(twice)->find("used twice") != std::string::npos);

  StableGraph gap;
  gap.add_vertex(1);
  gap.legs.push_back({{0, 1}, 0});
  CHECK(validate(gap)->find("contiguous") != std::string::npos);

  CHECK_FALSE(validate(dumbbell()));
}

TEST_CASE("genus is additive over components") {
  StableGraph a = vertex_graph(1, 1), b = vertex_graph(1, 1);
  StableGraph u = disjoint_union(a, b);
  CHECK(graph_genus(u) == 2);
  CHECK(component_count(u) == 2);
  CHECK(graph_genus(dumbbell()) == 2);
  CHECK(component_count(dumbbell()) == 1);
}

TEST_CASE("union of two loop graphs has aut 2 * aut^2") {
  StableGraph piece;
  piece.add_vertex(1);
  piece.add_leg(0);
  piece.add_vertex(0);
  piece.add_edge(0, 1);
  piece.add_edge(1, 1);
  piece.add_leg(1);
  StableGraph u = disjoint_union(piece, piece);
  std::uint64_t a = oracle::aut_count(piece);
  CHECK(oracle::aut_count(u) == 2 * a * a);
  CHECK(automorphism_count(u) == 2 * a * a);
  CHECK(automorphism_count(disjoint_union(loop_graph(), loop_graph())) == 8);
}

TEST_CASE("canonical aut matches the vertex-first oracle") {
  int checked = 0;
  for (auto [g, n] : types(3))
    for (const GraphClass& c : enumerate_connected(g, n)) {
      if (2 * c.graph.edge_count() + c.graph.leg_count() > 8) continue;
      CHECK(oracle::aut_count(c.graph) == c.aut_order);
      CHECK(brute_force_aut(c.graph) == c.aut_order);
      ++checked;
    }
  CHECK(checked > 30);
}

TEST_CASE("enumeration agrees with brute-force generation") {
  for (auto [g, n] : types(2)) {
    auto found = oracle::brute_force_graphs(g, std::vector<int>(n, 0), 0, 0, 3);
    const auto& classes = enumerate_connected(g, n);
    REQUIRE(found.size() == classes.size());
    for (const GraphClass& c : classes) CHECK(found.count(c.key) == 1);
  }
}

TEST_CASE("labelled enumeration of (1;1,0) at N=2 agrees with brute force") {
  auto found = oracle::brute_force_graphs(1, {1}, 1, 2, 2);
  const auto& classes = enumerate_labelled(1, {1, 0});
  CHECK(found.size() == classes.size());
  for (const GraphClass& c : classes) {
    CHECK(found.count(c.key) == 1);
    CHECK(oracle::aut_count(c.graph) == c.aut_order);
  }
  CHECK(enumerate_labelled(0, {1, 2}).size() == 1);
  CHECK(enumerate_labelled(2, {0}).size() == 7);
}

TEST_CASE("enumerated representatives are canonical") {
  for (auto [g, n] : types(4))
    for (const GraphClass& c : enumerate_connected(g, n)) {
      CHECK(canonical_key(c.graph) == c.key);
      CHECK(c.graph.leg_count() == n);
      CHECK(graph_genus(c.graph) == g);
    }
}

TEST_CASE("canonical key ignores vertex and slot order") {
  StableGraph a;
  a.add_vertex(1);
  a.add_vertex(0);
  a.add_edge(0, 1);
  a.add_edge(1, 1);
  a.add_leg(1);
  StableGraph b;
  b.add_vertex(0);
  b.add_leg(0);
  b.add_edge(0, 0);
  b.add_vertex(1);
  b.add_edge(1, 0);
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, loop_graph()));
}

TEST_CASE("forgetting names") {
  for (auto [g, n] : types(3)) {
    if (n == 0) continue;
    for (const GraphClass& c : enumerate_connected(g, n)) {
      std::vector<int> names(n);
      std::iota(names.begin(), names.end(), 1);
      std::map<std::string, std::uint64_t> variants;
      do {
        StableGraph named = c.graph;
        for (int k = 0; k < n; ++k) named.legs[k].label = names[k];
        variants.emplace(canonical_key(named), oracle::aut_count(named));
      } while (std::next_permutation(names.begin(), names.end()));
      Rational sum;
      for (const auto& [key, aut] : variants) sum += inverse(aut);
      CHECK(sum == factorial(n) / c.aut_order);
    }
  }
}

TEST_CASE("graph JSON round trip keeps the canonical key") {
  for (auto [g, n] : types(3))
    for (const GraphClass& c : enumerate_connected(g, n)) {
      Json j = Json::parse(graph_to_json(c.graph).dump());
      CHECK(canonical_key(graph_from_json(j)) == c.key);
    }
  for (const GraphClass& c : enumerate_labelled(1, {1, 1})) {
    Json j = graph_to_json(c.graph);
    CHECK(canonical_key(graph_from_json(j)) == c.key);
  }
}

TEST_CASE("graph JSON parsing rejects bad input") {
  CHECK_THROWS_AS(graph_from_json(Json::parse("[]")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[0],"edges":[],"legs":[]})")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[1],"edges":[],"legs":[[[0,0],0]]})")),
                  std::invalid_argument);
  CHECK_NOTHROW(graph_from_json(Json::parse(R"({"vertices":[1],"edges":[],"legs":[[[0,0],null]]})")));
}

TEST_CASE("square of the genus-one free energy") {
  RationalSum f11 = abstract_F(1, 1);
  RationalSum sq = f11 * f11;
  CHECK(sq.coefficient(disjoint_union(loop_graph(), loop_graph())) == Rational(1, 4));
  CHECK(sq.coefficient(disjoint_union(vertex_graph(1, 1), loop_graph())) == Rational(1));
  CHECK(sq.size() == 3);
}
