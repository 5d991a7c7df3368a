#pragma once

#include <cstdint>
#include <string>

#include "sgqft/graph.hpp"

namespace sgqft {

struct CanonicalForm {
  std::string key;  // binary; equal keys iff isomorphic
  std::uint64_t aut_order = 1;
  StableGraph graph;
};

CanonicalForm canonicalize(const StableGraph& g);
std::string canonical_key(const StableGraph& g);
std::uint64_t automorphism_count(const StableGraph& g);
bool isomorphic(const StableGraph& a, const StableGraph& b);

std::string base64_encode(const std::string& bytes);

}  // namespace sgqft
