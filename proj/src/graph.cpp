#include "sgqft/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace sgqft {

int StableGraph::valence(int v) const {
  int k = 0;
  for (const Edge& e : edges) k += (e.a.vertex == v) + (e.b.vertex == v);
  for (const Leg& l : legs) k += l.at.vertex == v;
  return k;
}

int StableGraph::add_vertex(int g) {
  genus.push_back(g);
  return vertex_count() - 1;
}

void StableGraph::add_edge(int u, int v, int label_u, int label_v) {
  int su = valence(u);
  int sv = valence(v) + (u == v);
  edges.push_back({{u, su}, {v, sv}, label_u, label_v});
}

void StableGraph::add_leg(int v, int label) { legs.push_back({{v, valence(v)}, label}); }

std::optional<std::string> validate(const StableGraph& g) {
  int n = g.vertex_count();
  for (int v = 0; v < n; ++v)
    if (g.genus[v] < 0) return "vertex " + std::to_string(v) + " has negative genus";
  std::map<HalfEdge, int> used;
  auto use = [&](HalfEdge h) -> std::optional<std::string> {
    if (h.vertex < 0 || h.vertex >= n)
      return "half-edge refers to missing vertex " + std::to_string(h.vertex);
    if (h.slot < 0) return "negative slot at vertex " + std::to_string(h.vertex);
    if (++used[h] > 1)
      return "half-edge (" + std::to_string(h.vertex) + "," + std::to_string(h.slot) + ") used twice";
    return std::nullopt;
  };
  for (const Edge& e : g.edges) {
    if (e.a == e.b) return "half-edge paired with itself";
    if (auto err = use(e.a)) return err;
    if (auto err = use(e.b)) return err;
  }
  for (const Leg& l : g.legs)
    if (auto err = use(l.at)) return err;
  std::vector<int> count(n, 0), max_slot(n, -1);
  for (const auto& [h, k] : used) {
    ++count[h.vertex];
    max_slot[h.vertex] = std::max(max_slot[h.vertex], h.slot);
  }
  for (int v = 0; v < n; ++v) {
    if (max_slot[v] + 1 != count[v]) return "slots at vertex " + std::to_string(v) + " are not contiguous";
    if (2 * g.genus[v] - 2 + count[v] <= 0)
      return "vertex " + std::to_string(v) + " of genus " + std::to_string(g.genus[v]) + " has valence " +
             std::to_string(count[v]) + " and is unstable";
  }
  return std::nullopt;
}

namespace {

std::vector<int> component_labels(const StableGraph& g) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : g.edges) parent[find(e.a.vertex)] = find(e.b.vertex);
  std::vector<int> out(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) out[v] = find(v);
  return out;
}

}  // namespace

int component_count(const StableGraph& g) {
  auto c = component_labels(g);
  std::sort(c.begin(), c.end());
  return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
}

bool is_connected(const StableGraph& g) { return component_count(g) == 1; }

int graph_genus(const StableGraph& g) {
  int s = g.edge_count() - g.vertex_count() + component_count(g);
  for (int x : g.genus) s += x;
  return s;
}

bool is_stable_type(int g, int n) { return g >= 0 && n >= 0 && 2 * g - 2 + n > 0; }

StableGraph disjoint_union(const StableGraph& a, const StableGraph& b) {
  StableGraph out = a;
  int off = a.vertex_count();
  out.genus.insert(out.genus.end(), b.genus.begin(), b.genus.end());
  for (Edge e : b.edges) {
    e.a.vertex += off;
    e.b.vertex += off;
    out.edges.push_back(e);
  }
  for (Leg l : b.legs) {
    l.at.vertex += off;
    out.legs.push_back(l);
  }
  return out;
}

StableGraph vertex_graph(int g, int n) {
  if (!is_stable_type(g, n)) throw std::invalid_argument("unstable vertex type");
  StableGraph out;
  out.add_vertex(g);
  for (int i = 0; i < n; ++i) out.legs.push_back({{0, i}, 0});
  return out;
}

StableGraph labelled_vertex_graph(int g, const std::vector<int>& legs) {
  int n = std::accumulate(legs.begin(), legs.end(), 0);
  if (!is_stable_type(g, n)) throw std::invalid_argument("unstable vertex type");
  StableGraph out;
  out.add_vertex(g);
  int slot = 0;
  for (std::size_t j = 0; j < legs.size(); ++j)
    for (int k = 0; k < legs[j]; ++k) out.legs.push_back({{0, slot++}, static_cast<int>(j) + 1});
  return out;
}

std::vector<int> leg_label_counts(const StableGraph& g, int n_labels) {
  std::vector<int> out(n_labels, 0);
  for (const Leg& l : g.legs) {
    if (l.label < 1 || l.label > n_labels) throw std::invalid_argument("leg label out of range");
    ++out[l.label - 1];
  }
  return out;
}

}  // namespace sgqft
