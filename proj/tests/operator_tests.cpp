#include <doctest.h>

#include "sgqft/canonical.hpp"
#include "sgqft/enumerate.hpp"
#include "sgqft/operators.hpp"
#include "sgqft/transforms.hpp"

using namespace sgqft;

namespace {

StableGraph dumbbell() {
  StableGraph g;
  g.add_vertex(0);
  g.add_vertex(0);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  return g;
}

int edges(const StableGraph& g) { return g.edge_count(); }

}  // namespace

TEST_CASE("K on the dumbbell") {
  // cutting a loop gives a (1,2) graph, cutting the bridge gives two (1,1) loop graphs
  RationalSum k = op_K(dumbbell());
  CHECK(k.size() == 2);
  Rational total;
  for (const auto& [key, t] : k.terms()) {
    CHECK(t.graph.leg_count() == 2);
    total += t.coeff;
  }
  CHECK(total == 3);
}

TEST_CASE("operators are linear") {
  RationalSum a = abstract_F(1, 2), b = abstract_F(2, 0);
  Rational c(3, 7);
  CHECK(op_D(a + b * c) == op_D(a) + op_D(b) * c);
  CHECK(op_K(a + b * c) == op_K(a) + op_K(b) * c);
  CHECK(op_gamma(a) + op_partial(a) == op_D(a));
}

TEST_CASE("K is a derivation for disjoint union") {
  StableGraph a = enumerate_connected(1, 1).back().graph;
  StableGraph b = dumbbell();
  RationalSum A = RationalSum::of(a), B = RationalSum::of(b);
  CHECK(op_K(A * B) == op_K(A) * B + A * op_K(B));
}

TEST_CASE("recursion checks") {
  CHECK(check_lemma_D(1, 1));
  CHECK(check_recursion_K(2, 0));
  CHECK(check_recursion_K(3, 0));
  CHECK(op_K(abstract_F(2, 0)) == abstract_F(1, 2) + Rational(1, 2) * (abstract_F(1, 1) * abstract_F(1, 1)));
  CHECK(check_lemma_D_labelled(1, {1, 0}, 2));
  CHECK(check_recursion_K_labelled(1, {1, 1}, 1, 2));
}

TEST_CASE("D maps connected sums to connected sums") {
  RationalSum d = op_D(abstract_F(2, 1));
  for (const auto& [key, t] : d.terms()) CHECK(is_connected(t.graph));
}

TEST_CASE("duality is triangular and involutive") {
  for (const GraphClass& c : enumerate_connected(2, 1)) {
    RationalSum d = duality(c.graph);
    CHECK(d.coefficient(c.graph) == (edges(c.graph) % 2 ? -1 : 1));
    for (const auto& [key, t] : d.terms()) CHECK(edges(t.graph) >= edges(c.graph));
    CHECK(duality(d) == RationalSum::of(c.graph));
  }
}

TEST_CASE("dual operators") {
  CHECK(dual_operator_check(vertex_graph(1, 1)));
  CHECK(dual_operator_check(vertex_graph(0, 3)));
  CHECK(dual_operator_check(dumbbell()));
  CHECK(dual_operator_check(labelled_vertex_graph(0, {2, 1}), 1, 2));
}

TEST_CASE("transform at zero and composition") {
  Poly e1(Symbol::scalar("e1")), e2(Symbol::scalar("e2"));
  PolySum d = to_poly_sum(RationalSum::of(dumbbell()));
  CHECK(graph_transform(d, Poly()) == d);
  CHECK(graph_transform(graph_transform(d, e1), e2) == graph_transform(d, e1 + e2));
  CHECK(dual_abstract_F(2, 0) == RationalSum::of(vertex_graph(2, 0)));
  CHECK(dual_abstract_F(1, {1, 1}) == RationalSum::of(labelled_vertex_graph(1, {1, 1})));
}
