#pragma once

#include <vector>

#include "sgqft/graph.hpp"
#include "sgqft/graph_sum.hpp"
#include "sgqft/poly.hpp"

namespace sgqft {

// n_labels = 0 for unlabelled graphs, N for graphs labelled by 1..N.

// n! * sum over connected graphs of type (g, n) of eps^|E| / |Aut|
PolySum vertex_expansion(int g, int n, const Poly& eps);

// Replace each vertex by its weighted expansion and glue along the edges.
PolySum graph_transform(const StableGraph& g, const Poly& eps, int n_labels = 0);
PolySum graph_transform(const PolySum& s, const Poly& eps, int n_labels = 0);

// (-1)^|E| times the transform at eps = 1
RationalSum duality(const StableGraph& g, int n_labels = 0);
RationalSum duality(const RationalSum& s, int n_labels = 0);

RationalSum dual_abstract_F(int g, int n);
RationalSum dual_abstract_F(int g, const std::vector<int>& legs);

// duality intertwines partial with D and D with partial
bool dual_operator_check(const StableGraph& g);
bool dual_operator_check(const StableGraph& g, int i, int n_labels);

}  // namespace sgqft
