#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sgqft {

struct HalfEdge {
  int vertex = 0;
  int slot = 0;
  auto operator<=>(const HalfEdge&) const = default;
};

// Labels: 0 = unlabelled; otherwise a field label 1..N or a leg name.
struct Edge {
  HalfEdge a, b;
  int label_a = 0;
  int label_b = 0;
};

struct Leg {
  HalfEdge at;
  int label = 0;
};

struct StableGraph {
  std::vector<int> genus;
  std::vector<Edge> edges;
  std::vector<Leg> legs;

  int vertex_count() const { return static_cast<int>(genus.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int leg_count() const { return static_cast<int>(legs.size()); }
  int valence(int v) const;

  int add_vertex(int g);
  void add_edge(int u, int v, int label_u = 0, int label_v = 0);
  void add_leg(int v, int label = 0);
};

// First violated condition, or nullopt for a valid stable graph.
std::optional<std::string> validate(const StableGraph& g);

int graph_genus(const StableGraph& g);
int component_count(const StableGraph& g);
bool is_connected(const StableGraph& g);
bool is_stable_type(int g, int n);

StableGraph disjoint_union(const StableGraph& a, const StableGraph& b);
StableGraph vertex_graph(int g, int n);
// legs[j] legs carrying label j + 1
StableGraph labelled_vertex_graph(int g, const std::vector<int>& legs);

// leg count per label 1..n_labels
std::vector<int> leg_label_counts(const StableGraph& g, int n_labels);

}  // namespace sgqft
