#include "sgqft/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace sgqft {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

struct Layout {
  int n = 0;
  std::vector<int> genus;
  std::vector<std::vector<int>> ext;
  std::vector<Pairs> loops;
  std::vector<std::vector<Pairs>> adj;  // adj[v][w]: (label at v, label at w)
};

Layout layout_of(const StableGraph& g) {
  Layout L;
  L.n = g.vertex_count();
  L.genus = g.genus;
  L.ext.assign(L.n, {});
  L.loops.assign(L.n, {});
  L.adj.assign(L.n, std::vector<Pairs>(L.n));
  for (const Leg& l : g.legs) L.ext[l.at.vertex].push_back(l.label);
  for (const Edge& e : g.edges) {
    int u = e.a.vertex, v = e.b.vertex;
    if (u == v) {
      L.loops[u].emplace_back(std::min(e.label_a, e.label_b), std::max(e.label_a, e.label_b));
    } else {
      L.adj[u][v].emplace_back(e.label_a, e.label_b);
      L.adj[v][u].emplace_back(e.label_b, e.label_a);
    }
  }
  for (int v = 0; v < L.n; ++v) {
    std::sort(L.ext[v].begin(), L.ext[v].end());
    std::sort(L.loops[v].begin(), L.loops[v].end());
    for (int w = 0; w < L.n; ++w) std::sort(L.adj[v][w].begin(), L.adj[v][w].end());
  }
  return L;
}

void append_pairs(std::vector<int>& out, const Pairs& p) {
  out.push_back(static_cast<int>(p.size()));
  for (const auto& [a, b] : p) {
    out.push_back(a);
    out.push_back(b);
  }
}

std::vector<int> rank(const std::vector<std::vector<int>>& sigs) {
  std::vector<std::vector<int>> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> out(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i)
    out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[i]) - sorted.begin());
  return out;
}

std::vector<int> refine(const Layout& L) {
  std::vector<std::vector<int>> sigs(L.n);
  for (int v = 0; v < L.n; ++v) {
    auto& s = sigs[v];
    s.push_back(L.genus[v]);
    s.push_back(static_cast<int>(L.ext[v].size()));
    s.insert(s.end(), L.ext[v].begin(), L.ext[v].end());
    append_pairs(s, L.loops[v]);
  }
  std::vector<int> color = rank(sigs);
  int classes = 0;
  while (true) {
    int now = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
    if (now == classes) break;
    classes = now;
    for (int v = 0; v < L.n; ++v) {
      std::vector<std::vector<int>> nbrs;
      for (int w = 0; w < L.n; ++w) {
        if (w == v || L.adj[v][w].empty()) continue;
        std::vector<int> entry{color[w]};
        append_pairs(entry, L.adj[v][w]);
        nbrs.push_back(std::move(entry));
      }
      std::sort(nbrs.begin(), nbrs.end());
      auto& s = sigs[v];
      s.assign(1, color[v]);
      for (auto& e : nbrs) {
        s.push_back(static_cast<int>(e.size()));
        s.insert(s.end(), e.begin(), e.end());
      }
    }
    color = rank(sigs);
  }
  return color;
}

std::vector<int> encode(const Layout& L, const std::vector<int>& order) {
  std::vector<int> out{L.n};
  for (int v : order) {
    out.push_back(L.genus[v]);
    out.push_back(static_cast<int>(L.ext[v].size()));
    out.insert(out.end(), L.ext[v].begin(), L.ext[v].end());
    append_pairs(out, L.loops[v]);
  }
  for (int i = 0; i < L.n; ++i)
    for (int j = i + 1; j < L.n; ++j) append_pairs(out, L.adj[order[i]][order[j]]);
  return out;
}

std::uint64_t fact(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

template <class T>
std::uint64_t run_factor(const std::vector<T>& sorted, bool doubled_if_symmetric) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    int m = static_cast<int>(j - i);
    r *= fact(m);
    if constexpr (std::is_same_v<T, std::pair<int, int>>)
      if (doubled_if_symmetric && sorted[i].first == sorted[i].second) r <<= m;
    i = j;
  }
  return r;
}

std::uint64_t local_factor(const Layout& L) {
  std::uint64_t r = 1;
  for (int v = 0; v < L.n; ++v) {
    r *= run_factor(L.ext[v], false);
    r *= run_factor(L.loops[v], true);
    for (int w = v + 1; w < L.n; ++w) r *= run_factor(L.adj[v][w], false);
  }
  return r;
}

std::string to_bytes(const std::vector<int>& enc) {
  std::string out;
  for (int x : enc) {
    auto u = static_cast<std::uint32_t>(x);
    do {
      unsigned char b = u & 0x7f;
      u >>= 7;
      if (u) b |= 0x80;
      out.push_back(static_cast<char>(b));
    } while (u);
  }
  return out;
}

}  // namespace

CanonicalForm canonicalize(const StableGraph& g) {
  Layout L = layout_of(g);
  std::vector<int> color = refine(L);
  std::map<int, std::vector<int>> by_color;
  for (int v = 0; v < L.n; ++v) by_color[color[v]].push_back(v);
  std::vector<std::vector<int>> cells;
  for (auto& [c, vs] : by_color) cells.push_back(vs);

  std::vector<int> best, best_order;
  std::uint64_t ties = 0;
  std::vector<int> order;
  auto visit = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      std::vector<int> enc = encode(L, order);
      if (best.empty() || enc < best) {
        best = std::move(enc);
        best_order = order;
        ties = 1;
      } else if (enc == best) {
        ++ties;
      }
      return;
    }
    std::vector<int> perm = cells[cell];
    do {
      order.insert(order.end(), perm.begin(), perm.end());
      self(self, cell + 1);
      order.resize(order.size() - perm.size());
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  visit(visit, 0);
  if (L.n == 0) best = encode(L, {}), ties = 1;

  CanonicalForm out;
  out.key = to_bytes(best);
  out.aut_order = ties * local_factor(L);
  StableGraph& c = out.graph;
  for (int i = 0; i < L.n; ++i) c.add_vertex(L.genus[best_order[i]]);
  for (int i = 0; i < L.n; ++i) {
    int v = best_order[i];
    for (int lab : L.ext[v]) c.add_leg(i, lab);
    for (const auto& [a, b] : L.loops[v]) c.add_edge(i, i, a, b);
    for (int j = i + 1; j < L.n; ++j)
      for (const auto& [a, b] : L.adj[v][best_order[j]]) c.add_edge(i, j, a, b);
  }
  return out;
}

std::string canonical_key(const StableGraph& g) { return canonicalize(g).key; }

std::uint64_t automorphism_count(const StableGraph& g) { return canonicalize(g).aut_order; }

bool isomorphic(const StableGraph& a, const StableGraph& b) { return canonical_key(a) == canonical_key(b); }

std::string base64_encode(const std::string& bytes) {
  static constexpr char table[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  std::size_t i = 0;
  for (; i + 2 < bytes.size(); i += 3) {
    unsigned v = (static_cast<unsigned char>(bytes[i]) << 16) | (static_cast<unsigned char>(bytes[i + 1]) << 8) |
                 static_cast<unsigned char>(bytes[i + 2]);
    for (int k = 3; k >= 0; --k) out.push_back(table[(v >> (6 * k)) & 63]);
  }
  std::size_t rest = bytes.size() - i;
  if (rest) {
    unsigned v = static_cast<unsigned char>(bytes[i]) << 16;
    if (rest == 2) v |= static_cast<unsigned char>(bytes[i + 1]) << 8;
    out.push_back(table[(v >> 18) & 63]);
    out.push_back(table[(v >> 12) & 63]);
    out.push_back(rest == 2 ? table[(v >> 6) & 63] : '=');
    out.push_back('=');
  }
  return out;
}

}  // namespace sgqft
