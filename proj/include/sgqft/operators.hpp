#pragma once

#include <vector>

#include "sgqft/graph.hpp"
#include "sgqft/graph_sum.hpp"

namespace sgqft {

// Unlabelled operators (all labels 0).
RationalSum op_K(const StableGraph& g);
RationalSum op_partial(const StableGraph& g);
RationalSum op_gamma(const StableGraph& g);
RationalSum op_D(const StableGraph& g);

// N-labelled operators; new internal half-edges range over labels 1..N.
RationalSum op_K(const StableGraph& g, int i, int j);
RationalSum op_partial(const StableGraph& g, int i, int n_labels);
RationalSum op_gamma(const StableGraph& g, int i, int n_labels);
RationalSum op_D(const StableGraph& g, int i, int n_labels);

RationalSum op_K(const RationalSum& s);
RationalSum op_partial(const RationalSum& s);
RationalSum op_gamma(const RationalSum& s);
RationalSum op_D(const RationalSum& s);
RationalSum op_K(const RationalSum& s, int i, int j);
RationalSum op_partial(const RationalSum& s, int i, int n_labels);
RationalSum op_gamma(const RationalSum& s, int i, int n_labels);
RationalSum op_D(const RationalSum& s, int i, int n_labels);

// Sum of 1/|Aut| over connected stable graphs of the type.
RationalSum abstract_F(int g, int n);
RationalSum abstract_F(int g, const std::vector<int>& legs);

bool check_lemma_D(int g, int n);
bool check_recursion_K(int g, int n);
bool check_lemma_D_labelled(int g, const std::vector<int>& legs, int j);
bool check_recursion_K_labelled(int g, const std::vector<int>& legs, int i, int j);

}  // namespace sgqft
