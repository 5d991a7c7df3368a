#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgqft/graph.hpp"

namespace sgqft {

struct GraphClass {
  StableGraph graph;  // canonical representative
  std::string key;
  std::uint64_t aut_order = 1;
};

// Connected stable graphs of genus g with n unlabelled legs, sorted by key.
// Results are cached; throws std::invalid_argument for unstable (g, n).
const std::vector<GraphClass>& enumerate_connected(int g, int n);

// Field labels 1..legs.size() on every half-edge, legs[j] legs of label j + 1.
const std::vector<GraphClass>& enumerate_labelled(int g, const std::vector<int>& legs);

}  // namespace sgqft
