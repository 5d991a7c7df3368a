#include "sgqft/transforms.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "sgqft/enumerate.hpp"
#include "sgqft/operators.hpp"

namespace sgqft {

namespace {

constexpr int kNameStride = 1 << 12;

struct NamedPiece {
  StableGraph graph;
  Rational weight;
  std::vector<HalfEdge> site;  // site[s]: half-edge carrying name s
};

using PieceKey = std::tuple<int, std::vector<int>, int>;

std::vector<NamedPiece> compute_pieces(int g, const std::vector<int>& slot_labels, int n_labels) {
  int n = static_cast<int>(slot_labels.size());
  if (n_labels > 0)
    for (int l : slot_labels)
      if (l < 1 || l > n_labels) throw std::invalid_argument("half-edge label out of range");
  int lo = n_labels == 0 ? 0 : 1, hi = n_labels == 0 ? 0 : n_labels;
  std::map<std::string, CanonicalForm> found;
  for (const GraphClass& base : enumerate_connected(g, n)) {
    std::vector<int> names(n);
    std::iota(names.begin(), names.end(), 0);
    int E = base.graph.edge_count();
    do {
      std::vector<int> inner(2 * E, lo);
      while (true) {
        StableGraph G = base.graph;
        for (int k = 0; k < n; ++k) G.legs[k].label = (names[k] + 1) * kNameStride + slot_labels[names[k]];
        for (int e = 0; e < E; ++e) {
          G.edges[e].label_a = inner[2 * e];
          G.edges[e].label_b = inner[2 * e + 1];
        }
        CanonicalForm c = canonicalize(G);
        if (!found.count(c.key)) found.emplace(c.key, std::move(c));
        int p = 0;
        while (p < 2 * E && inner[p] == hi) inner[p++] = lo;
        if (p == 2 * E) break;
        ++inner[p];
      }
    } while (std::next_permutation(names.begin(), names.end()));
  }
  std::vector<NamedPiece> out;
  for (auto& [k, c] : found) {
    NamedPiece piece{std::move(c.graph), inverse(c.aut_order), std::vector<HalfEdge>(n)};
    for (const Leg& l : piece.graph.legs) piece.site[l.label / kNameStride - 1] = l.at;
    piece.graph.legs.clear();
    out.push_back(std::move(piece));
  }
  return out;
}

const std::vector<NamedPiece>& pieces(int g, const std::vector<int>& slot_labels, int n_labels) {
  static std::mutex mutex;
  static std::map<PieceKey, std::vector<NamedPiece>> cache;
  PieceKey key{g, slot_labels, n_labels};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto value = compute_pieces(g, slot_labels, n_labels);
  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), std::move(value)).first->second;
}

// emit(glued graph, product of piece weights, total piece edges)
template <class Emit>
void expand(const StableGraph& G, int n_labels, Emit&& emit) {
  if (auto err = validate(G)) throw std::invalid_argument(*err);
  int V = G.vertex_count();
  std::vector<std::vector<int>> slot_labels(V);
  for (int v = 0; v < V; ++v) slot_labels[v].assign(G.valence(v), 0);
  for (const Edge& e : G.edges) {
    slot_labels[e.a.vertex][e.a.slot] = e.label_a;
    slot_labels[e.b.vertex][e.b.slot] = e.label_b;
  }
  for (const Leg& l : G.legs) slot_labels[l.at.vertex][l.at.slot] = l.label;
  std::vector<const std::vector<NamedPiece>*> choices(V);
  for (int v = 0; v < V; ++v) choices[v] = &pieces(G.genus[v], slot_labels[v], n_labels);

  std::vector<const NamedPiece*> pick(V);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == V) {
      StableGraph out;
      std::vector<int> offset(V);
      Rational w = 1;
      int edges = 0;
      for (int u = 0; u < V; ++u) {
        const NamedPiece& p = *pick[u];
        offset[u] = out.vertex_count();
        out.genus.insert(out.genus.end(), p.graph.genus.begin(), p.graph.genus.end());
        for (Edge e : p.graph.edges) {
          e.a.vertex += offset[u];
          e.b.vertex += offset[u];
          out.edges.push_back(e);
        }
        w *= p.weight;
        edges += p.graph.edge_count();
      }
      auto site = [&](HalfEdge h) {
        HalfEdge s = pick[h.vertex]->site[h.slot];
        s.vertex += offset[h.vertex];
        return s;
      };
      for (const Edge& e : G.edges) out.edges.push_back({site(e.a), site(e.b), e.label_a, e.label_b});
      for (const Leg& l : G.legs) out.legs.push_back({site(l.at), l.label});
      emit(out, w, edges);
      return;
    }
    for (const NamedPiece& p : *choices[v]) {
      pick[v] = &p;
      self(self, v + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

PolySum vertex_expansion(int g, int n, const Poly& eps) {
  PolySum out;
  Rational nf = factorial(n);
  for (const GraphClass& c : enumerate_connected(g, n))
    out.add_canonical(c.key, c.graph, Poly(nf * inverse(c.aut_order)) * eps.pow(c.graph.edge_count()));
  return out;
}

PolySum graph_transform(const StableGraph& g, const Poly& eps, int n_labels) {
  PolySum out;
  std::map<int, Poly> powers;
  expand(g, n_labels, [&](const StableGraph& h, const Rational& w, int edges) {
    auto it = powers.find(edges);
    if (it == powers.end()) it = powers.emplace(edges, eps.pow(edges)).first;
    out.add(h, Poly(w) * it->second);
  });
  return out;
}

PolySum graph_transform(const PolySum& s, const Poly& eps, int n_labels) {
  return s.map_linear([&](const StableGraph& g) { return graph_transform(g, eps, n_labels); });
}

RationalSum duality(const StableGraph& g, int n_labels) {
  static std::mutex mutex;
  static std::map<std::pair<int, std::string>, RationalSum> cache;
  CanonicalForm c = canonicalize(g);
  std::pair<int, std::string> key{n_labels, c.key};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  RationalSum out;
  Rational sign = g.edge_count() % 2 ? -1 : 1;
  expand(c.graph, n_labels, [&](const StableGraph& h, const Rational& w, int) { out.add(h, sign * w); });
  std::lock_guard lock(mutex);
  return cache.emplace(std::move(key), std::move(out)).first->second;
}

RationalSum duality(const RationalSum& s, int n_labels) {
  return s.map_linear([&](const StableGraph& g) { return duality(g, n_labels); });
}

RationalSum dual_abstract_F(int g, int n) { return duality(abstract_F(g, n)); }

RationalSum dual_abstract_F(int g, const std::vector<int>& legs) {
  return duality(abstract_F(g, legs), static_cast<int>(legs.size()));
}

bool dual_operator_check(const StableGraph& g) {
  RationalSum phi = duality(g);
  return duality(op_partial(g)) == op_D(phi) && duality(op_D(g)) == op_partial(phi);
}

bool dual_operator_check(const StableGraph& g, int i, int n_labels) {
  RationalSum phi = duality(g, n_labels);
  return duality(op_partial(g, i, n_labels), n_labels) == op_D(phi, i, n_labels) &&
         duality(op_D(g, i, n_labels), n_labels) == op_partial(phi, i, n_labels);
}

}  // namespace sgqft
