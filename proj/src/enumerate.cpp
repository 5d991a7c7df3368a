#include "sgqft/enumerate.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "sgqft/canonical.hpp"

namespace sgqft {

namespace {

using Triple = std::array<int, 3>;  // genus, legs, internal degree

void fill_matrix(const std::vector<Triple>& t, std::vector<int>& rem, std::vector<std::vector<int>>& a,
                 int i, int j, const std::function<void()>& leaf) {
  int V = static_cast<int>(t.size());
  if (i == V) {
    leaf();
    return;
  }
  if (j == V) {
    if (rem[i] % 2) return;
    a[i][i] = rem[i] / 2;
    int saved = rem[i];
    rem[i] = 0;
    fill_matrix(t, rem, a, i + 1, i + 2, leaf);
    rem[i] = saved;
    a[i][i] = 0;
    return;
  }
  int top = std::min(rem[i], rem[j]);
  for (int k = 0; k <= top; ++k) {
    a[i][j] = k;
    rem[i] -= k;
    rem[j] -= k;
    fill_matrix(t, rem, a, i, j + 1, leaf);
    rem[i] += k;
    rem[j] += k;
  }
  a[i][j] = 0;
}

std::vector<GraphClass> compute_connected(int g, int n) {
  std::map<std::string, GraphClass> found;
  int max_v = 2 * g - 2 + n;
  for (int V = 1; V <= max_v; ++V) {
    std::vector<Triple> seq;
    auto choose = [&](auto&& self, int sg, int sn, int sd) -> void {
      int idx = static_cast<int>(seq.size());
      int dmax = 2 * (g - sg + V - 1);
      if (idx == V) {
        if (sn != n || sd != 2 * (g - sg + V - 1)) return;
        std::vector<int> rem(V);
        for (int v = 0; v < V; ++v) rem[v] = seq[v][2];
        std::vector<std::vector<int>> a(V, std::vector<int>(V, 0));
        fill_matrix(seq, rem, a, 0, 1, [&]() {
          StableGraph G;
          for (const Triple& x : seq) G.add_vertex(x[0]);
          for (int v = 0; v < V; ++v)
            for (int k = 0; k < seq[v][1]; ++k) G.add_leg(v);
          for (int v = 0; v < V; ++v)
            for (int w = v; w < V; ++w)
              for (int k = 0; k < a[v][w]; ++k) G.add_edge(v, w);
          if (!is_connected(G)) return;
          CanonicalForm c = canonicalize(G);
          if (!found.count(c.key)) found.emplace(c.key, GraphClass{std::move(c.graph), c.key, c.aut_order});
        });
        return;
      }
      Triple lo = idx ? seq.back() : Triple{0, 0, 0};
      for (int gv = lo[0]; gv + sg <= g; ++gv) {
        for (int nv = (gv == lo[0] ? lo[1] : 0); nv + sn <= n; ++nv) {
          int dstart = (gv == lo[0] && nv == lo[1]) ? lo[2] : 0;
          for (int dv = dstart; sd + dv <= 2 * (g - sg - gv + V - 1) && dv <= dmax; ++dv) {
            if (2 * gv - 2 + nv + dv <= 0) continue;
            seq.push_back({gv, nv, dv});
            self(self, sg + gv, sn + nv, sd + dv);
            seq.pop_back();
          }
        }
      }
    };
    choose(choose, 0, 0, 0);
  }
  std::vector<GraphClass> out;
  for (auto& [k, c] : found) out.push_back(std::move(c));
  return out;
}

std::vector<GraphClass> compute_labelled(int g, const std::vector<int>& legs) {
  int N = static_cast<int>(legs.size());
  int n = std::accumulate(legs.begin(), legs.end(), 0);
  std::vector<int> leg_seq;
  for (int j = 0; j < N; ++j) leg_seq.insert(leg_seq.end(), legs[j], j + 1);
  std::map<std::string, GraphClass> found;
  for (const GraphClass& base : enumerate_connected(g, n)) {
    std::vector<int> perm = leg_seq;
    int E = base.graph.edge_count();
    do {
      std::vector<int> inner(2 * E, 1);
      while (true) {
        StableGraph G = base.graph;
        for (int k = 0; k < n; ++k) G.legs[k].label = perm[k];
        for (int e = 0; e < E; ++e) {
          G.edges[e].label_a = inner[2 * e];
          G.edges[e].label_b = inner[2 * e + 1];
        }
        CanonicalForm c = canonicalize(G);
        if (!found.count(c.key)) found.emplace(c.key, GraphClass{std::move(c.graph), c.key, c.aut_order});
        int p = 0;
        while (p < 2 * E && inner[p] == N) inner[p++] = 1;
        if (p == 2 * E) break;
        ++inner[p];
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<GraphClass> out;
  for (auto& [k, c] : found) out.push_back(std::move(c));
  return out;
}

struct Cache {
  std::mutex mutex;
  std::map<std::pair<int, std::vector<int>>, std::vector<GraphClass>> connected, labelled;
};

Cache& cache() {
  static Cache c;
  return c;
}

template <class F>
const std::vector<GraphClass>& cached(std::map<std::pair<int, std::vector<int>>, std::vector<GraphClass>>& m,
                                      std::pair<int, std::vector<int>> key, F compute) {
  {
    std::lock_guard lock(cache().mutex);
    auto it = m.find(key);
    if (it != m.end()) return it->second;
  }
  auto value = compute();
  std::lock_guard lock(cache().mutex);
  return m.emplace(std::move(key), std::move(value)).first->second;
}

}  // namespace

const std::vector<GraphClass>& enumerate_connected(int g, int n) {
  if (!is_stable_type(g, n)) throw std::invalid_argument("unstable type (" + std::to_string(g) + "," + std::to_string(n) + ")");
  return cached(cache().connected, {g, {n}}, [&] { return compute_connected(g, n); });
}

const std::vector<GraphClass>& enumerate_labelled(int g, const std::vector<int>& legs) {
  if (legs.empty()) throw std::invalid_argument("at least one label required");
  for (int l : legs)
    if (l < 0) throw std::invalid_argument("negative leg count");
  int n = std::accumulate(legs.begin(), legs.end(), 0);
  if (!is_stable_type(g, n)) throw std::invalid_argument("unstable type");
  return cached(cache().labelled, {g, legs}, [&] { return compute_labelled(g, legs); });
}

}  // namespace sgqft
