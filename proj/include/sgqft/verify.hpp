#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgqft/graph.hpp"

namespace sgqft {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// enumeration, recursions, duality, transforms, realization, gaussian, grouplaw, hae
const std::vector<std::string>& suite_names();

// bound limits 2g - 2 + n; suite "all" runs every suite; throws on unknown suite
std::vector<CheckResult> run_suite(const std::string& suite, int bound);

// exhaustive count over half-edge permutations; for small graphs only
std::uint64_t brute_force_aut(const StableGraph& g);

}  // namespace sgqft
