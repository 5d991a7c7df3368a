#pragma once

#include <compare>
#include <functional>
#include <map>
#include <vector>

#include "sgqft/graph.hpp"
#include "sgqft/graph_sum.hpp"
#include "sgqft/poly.hpp"

namespace sgqft {

// legs.size() is the field dimension N; N = 1 is the unlabelled theory.
struct TheoryIndex {
  int genus = 0;
  std::vector<int> legs;
  auto operator<=>(const TheoryIndex&) const = default;
};

int grade(const TheoryIndex& idx);
bool is_stable(const TheoryIndex& idx);
std::vector<TheoryIndex> stable_indices(int bound, int dimension);

using Theory = std::map<TheoryIndex, Poly>;
using KappaMatrix = std::vector<std::vector<Poly>>;

// F[g,n] (N = 1) or F[g;l1,..,lN] for every stable index of grade <= bound
Theory symbolic_theory(int bound, int dimension = 1);
KappaMatrix symbolic_kappa(int dimension = 1);
KappaMatrix scalar_kappa(const Poly& kappa);

// Vertex rule by (genus, per-label valence); edge rule by half-edge labels.
struct FeynmanRules {
  std::function<Poly(int genus, const std::vector<int>& legs)> vertex;
  std::function<Poly(int label_a, int label_b)> edge;
};

FeynmanRules symbolic_rules(int dimension = 1);
FeynmanRules theory_rules(const Theory& t, const KappaMatrix& kappa);

// Graphs of dimension 1 carry label 0, otherwise labels 1..N.
Poly feynman_weight(const StableGraph& g, const FeynmanRules& rules, int dimension = 1);
Poly realize(const RationalSum& s, const FeynmanRules& rules, int dimension = 1);

Poly hat_F(int g, int n);
Poly hat_F(int g, const std::vector<int>& legs);
// Dual realization with kappa -> -kappa applied to n! hat_F; equals F[g,n].
Poly dual_hat_F(int g, int n);

Theory s_transform(const Theory& t, const KappaMatrix& kappa, int bound);
Theory s_transform(const Theory& t, const Poly& kappa, int bound);

// Independent of graphs: truncated exp, Wick contraction, log.
Theory wick_gaussian(const Theory& t, const KappaMatrix& kappa, int bound);
Theory wick_gaussian(const Theory& t, const Poly& kappa, int bound);

// d/dkappa hat_F_{g,n} against the index-shifted product formula
bool check_realized_recursion(int g, int n);

}  // namespace sgqft
