#include <doctest.h>

#include "sgqft/enumerate.hpp"
#include "sgqft/hae.hpp"
#include "sgqft/realization.hpp"

using namespace sgqft;

namespace {

StableGraph theta() {
  StableGraph g;
  g.add_vertex(0);
  g.add_vertex(0);
  for (int k = 0; k < 3; ++k) g.add_edge(0, 1);
  return g;
}

}  // namespace

TEST_CASE("Feynman weights") {
  FeynmanRules r = symbolic_rules();
  CHECK(feynman_weight(vertex_graph(2, 0), r) == Poly::parse("F[2,0]"));
  CHECK(feynman_weight(theta(), r) == Poly::parse("kappa^3*F[0,3]^2"));
  StableGraph loop;
  loop.add_vertex(0);
  loop.add_edge(0, 0);
  loop.add_leg(0);
  CHECK(feynman_weight(loop, r) == Poly::parse("kappa*F[0,3]"));
  Theory partial = {{{0, {3}}, Poly::parse("F[0,3]")}};
  CHECK_THROWS_AS(feynman_weight(vertex_graph(1, 1), theory_rules(partial, symbolic_kappa())), std::invalid_argument);
}

TEST_CASE("realization at zero propagator keeps the vertex") {
  for (const TheoryIndex& idx : stable_indices(4, 1)) {
    Poly p = hat_F(idx.genus, idx.legs[0]).substitute(Symbol::kappa(), Poly());
    CHECK(p == Poly(Symbol::theory(idx.genus, idx.legs[0])) * (Rational(1) / factorial(idx.legs[0])));
  }
}

TEST_CASE("Wick oracle") {
  Theory t = symbolic_theory(3);
  CHECK(wick_gaussian(t, Poly(), 3) == t);
  Theory w = wick_gaussian(t, Poly(Symbol::kappa()), 3);
  CHECK(w == s_transform(t, Poly(Symbol::kappa()), 3));
  Poly k2 = Poly(Symbol::kappa()) * Poly(Symbol::kappa());
  Poly mono = k2 * Poly(Symbol::theory(0, 4));
  CHECK(w.at({2, {0}}).coefficient(mono.terms().begin()->first) == Rational(1, 8));
  Theory t2 = symbolic_theory(2, 2);
  CHECK(wick_gaussian(t2, symbolic_kappa(2), 2) == s_transform(t2, symbolic_kappa(2), 2));
}

TEST_CASE("dual realization is kappa-free") {
  for (const TheoryIndex& idx : stable_indices(4, 1))
    CHECK(dual_hat_F(idx.genus, idx.legs[0]) == Poly(Symbol::theory(idx.genus, idx.legs[0])));
}

TEST_CASE("holomorphic anomaly") {
  using namespace hae;
  for (const TheoryIndex& idx : stable_indices(4, 1)) {
    int g = idx.genus, n = idx.legs[0];
    CHECK(check_independence(g, n));
    CHECK(homogeneous_weight(tilde_F(g, n)) == n);
    CHECK(homogeneous_weight(holo_F(g, n)) == n);
  }
  CHECK(check_holo_lemma(2, 0));
  CHECK(check_hae_recursion(2, 0));
  CHECK(d_cov(Poly(kappa())) == Poly::parse("-kappa^2*F03 + E4*F03"));
  CHECK(d_cov(Poly(E4())) == Poly::parse("D^1:E4 - 4*kappa*F03*E4"));
  CHECK(d_hol(Poly(F03())) == Poly::parse("D^1:F03"));
  CHECK_THROWS_AS(d_cov(Poly::parse("F[0,3]")), std::invalid_argument);
  CHECK_THROWS_AS(tilde_F(0, 2), std::invalid_argument);
}
