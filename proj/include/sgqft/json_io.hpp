#pragma once

#include <json.hpp>

#include "sgqft/graph.hpp"
#include "sgqft/graph_sum.hpp"
#include "sgqft/poly.hpp"
#include "sgqft/realization.hpp"

namespace sgqft {

using Json = nlohmann::json;

// {"vertices": [g..], "edges": [[[v,s],[v,s]]..], "legs": [[[v,s], label|null]..]}
// plus "edge_labels": [[a,b]..] when any internal half-edge is labelled.
Json graph_to_json(const StableGraph& g);
// throws std::invalid_argument on malformed or unstable input
StableGraph graph_from_json(const Json& j);

std::string coefficient_text(const Rational& c);
std::string coefficient_text(const Poly& c);

template <class C>
Json sum_to_json(const GraphSum<C>& s) {
  Json out = Json::array();
  for (const auto& [key, t] : s.terms())
    out.push_back({{"coefficient", coefficient_text(t.coeff)}, {"graph", graph_to_json(t.graph)}});
  return out;
}

// [{"coeff": "p/q", "monomial": [symbol..]}..] in display order
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

std::string index_key(const TheoryIndex& idx);
TheoryIndex index_from_key(const std::string& key);
Json theory_to_json(const Theory& t);
Theory theory_from_json(const Json& j);

}  // namespace sgqft
