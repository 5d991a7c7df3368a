#include "sgqft/operators.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "sgqft/enumerate.hpp"

namespace sgqft {

namespace {

std::vector<int> label_range(int n_labels) {
  if (n_labels < 1) throw std::invalid_argument("label count must be positive");
  std::vector<int> out(n_labels);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

void check_label(int i, int n_labels) {
  if (i < 1 || i > n_labels) throw std::invalid_argument("label " + std::to_string(i) + " out of range");
}

RationalSum cut_edges(const StableGraph& g, bool any, int i, int j) {
  RationalSum out;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges[e];
    bool match = (ed.label_a == i && ed.label_b == j) || (ed.label_a == j && ed.label_b == i);
    if (!any && !match) continue;
    StableGraph h = g;
    h.edges.erase(h.edges.begin() + e);
    h.legs.push_back({ed.a, ed.label_a});
    h.legs.push_back({ed.b, ed.label_b});
    out.add(h, Rational(1));
  }
  return out;
}

RationalSum partial_impl(const StableGraph& g, int new_label, const std::vector<int>& choices) {
  RationalSum out;
  for (int e = 0; e < g.edge_count(); ++e) {
    for (int c : choices) {
      for (int d : choices) {
        StableGraph h = g;
        Edge ed = h.edges[e];
        int w = h.add_vertex(0);
        h.edges[e] = {ed.a, {w, 0}, ed.label_a, c};
        h.edges.push_back({{w, 1}, ed.b, d, ed.label_b});
        h.legs.push_back({{w, 2}, new_label});
        out.add(h, Rational(1));
      }
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    StableGraph h = g;
    h.add_leg(v, new_label);
    out.add(h, Rational(1));
  }
  return out;
}

RationalSum gamma_impl(const StableGraph& g, int new_label, const std::vector<int>& choices) {
  RationalSum out;
  for (int k = 0; k < g.leg_count(); ++k) {
    for (int a : choices) {
      for (int b : choices) {
        StableGraph h = g;
        Leg leg = h.legs[k];
        h.legs.erase(h.legs.begin() + k);
        int w = h.add_vertex(0);
        h.edges.push_back({leg.at, {w, 0}, a, b});
        h.legs.push_back({{w, 1}, leg.label});
        h.legs.push_back({{w, 2}, new_label});
        out.add(h, Rational(1));
      }
    }
  }
  return out;
}

struct Mode {
  int n_labels;  // 0: unlabelled, legs has one entry

  RationalSum F(int g, const std::vector<int>& l) const {
    int n = std::accumulate(l.begin(), l.end(), 0);
    if (g < 0 || !is_stable_type(g, n)) return {};
    return n_labels == 0 ? abstract_F(g, l[0]) : abstract_F(g, l);
  }
  RationalSum D(const RationalSum& s, int j) const { return n_labels == 0 ? op_D(s) : op_D(s, j, n_labels); }
  std::vector<int> bump(std::vector<int> l, int j) const {
    ++l[n_labels == 0 ? 0 : j - 1];
    return l;
  }
  int count(const std::vector<int>& l, int j) const { return l[n_labels == 0 ? 0 : j - 1]; }
  static bool stable(int g, const std::vector<int>& l) {
    return g >= 0 && is_stable_type(g, std::accumulate(l.begin(), l.end(), 0));
  }

  // D_j F_{g;l}, formal when (g;l) is unstable
  RationalSum D1(int g, const std::vector<int>& l, int j) const {
    if (g < 0) return {};
    if (stable(g, l)) return D(F(g, l), j);
    return Rational(count(l, j) + 1) * F(g, bump(l, j));
  }

  // D_i D_j F_{g;l}, formal until a stable type is reached
  RationalSum D2(int g, const std::vector<int>& l, int i, int j) const {
    if (g < 0) return {};
    if (stable(g, l)) return D(D(F(g, l), j), i);
    std::vector<int> lj = bump(l, j);
    Rational c(count(l, j) + 1);
    if (stable(g, lj)) return c * D(F(g, lj), i);
    return c * Rational(count(lj, i) + 1) * F(g, bump(lj, i));
  }

  RationalSum K(const RationalSum& s, int i, int j) const { return n_labels == 0 ? op_K(s) : op_K(s, i, j); }
};

void sub_vectors(const std::vector<int>& l, std::vector<int>& p, std::size_t k,
                 const std::function<void(const std::vector<int>&)>& f) {
  if (k == l.size()) {
    f(p);
    return;
  }
  for (int x = 0; x <= l[k]; ++x) {
    p[k] = x;
    sub_vectors(l, p, k + 1, f);
  }
}

bool recursion_D_form(const Mode& m, int g, const std::vector<int>& l, int i, int j) {
  RationalSum lhs = m.K(m.F(g, l), i, j);
  RationalSum rhs = m.D2(g - 1, l, i, j);
  std::vector<int> p(l.size());
  sub_vectors(l, p, 0, [&](const std::vector<int>& p) {
    std::vector<int> q(l.size());
    for (std::size_t k = 0; k < l.size(); ++k) q[k] = l[k] - p[k];
    for (int g1 = 0; g1 <= g; ++g1) {
      RationalSum a = m.D1(g1, p, i);
      if (a.empty()) continue;
      RationalSum b = m.D1(g - g1, q, j);
      if (!b.empty()) rhs += a * b;
    }
  });
  if (m.n_labels == 0 || i == j) rhs *= Rational(1, 2);
  return lhs == rhs;
}

}  // namespace

RationalSum op_K(const StableGraph& g) { return cut_edges(g, true, 0, 0); }
RationalSum op_partial(const StableGraph& g) { return partial_impl(g, 0, {0}); }
RationalSum op_gamma(const StableGraph& g) { return gamma_impl(g, 0, {0}); }
RationalSum op_D(const StableGraph& g) { return op_partial(g) + op_gamma(g); }

RationalSum op_K(const StableGraph& g, int i, int j) { return cut_edges(g, false, i, j); }

RationalSum op_partial(const StableGraph& g, int i, int n_labels) {
  check_label(i, n_labels);
  return partial_impl(g, i, label_range(n_labels));
}

RationalSum op_gamma(const StableGraph& g, int i, int n_labels) {
  check_label(i, n_labels);
  return gamma_impl(g, i, label_range(n_labels));
}

RationalSum op_D(const StableGraph& g, int i, int n_labels) {
  return op_partial(g, i, n_labels) + op_gamma(g, i, n_labels);
}

RationalSum op_K(const RationalSum& s) {
  return s.map_linear([](const StableGraph& g) { return op_K(g); });
}
RationalSum op_partial(const RationalSum& s) {
  return s.map_linear([](const StableGraph& g) { return op_partial(g); });
}
RationalSum op_gamma(const RationalSum& s) {
  return s.map_linear([](const StableGraph& g) { return op_gamma(g); });
}
RationalSum op_D(const RationalSum& s) {
  return s.map_linear([](const StableGraph& g) { return op_D(g); });
}
RationalSum op_K(const RationalSum& s, int i, int j) {
  return s.map_linear([&](const StableGraph& g) { return op_K(g, i, j); });
}
RationalSum op_partial(const RationalSum& s, int i, int n_labels) {
  return s.map_linear([&](const StableGraph& g) { return op_partial(g, i, n_labels); });
}
RationalSum op_gamma(const RationalSum& s, int i, int n_labels) {
  return s.map_linear([&](const StableGraph& g) { return op_gamma(g, i, n_labels); });
}
RationalSum op_D(const RationalSum& s, int i, int n_labels) {
  return s.map_linear([&](const StableGraph& g) { return op_D(g, i, n_labels); });
}

RationalSum abstract_F(int g, int n) {
  RationalSum out;
  for (const GraphClass& c : enumerate_connected(g, n)) out.add_canonical(c.key, c.graph, inverse(c.aut_order));
  return out;
}

RationalSum abstract_F(int g, const std::vector<int>& legs) {
  RationalSum out;
  for (const GraphClass& c : enumerate_labelled(g, legs)) out.add_canonical(c.key, c.graph, inverse(c.aut_order));
  return out;
}

bool check_lemma_D(int g, int n) {
  return op_D(abstract_F(g, n)) == Rational(n + 1) * abstract_F(g, n + 1);
}

bool check_recursion_K(int g, int n) {
  RationalSum lhs = op_K(abstract_F(g, n));
  RationalSum stable_form;
  if (is_stable_type(g - 1, n + 2)) stable_form += Rational((n + 2) * (n + 1)) * abstract_F(g - 1, n + 2);
  for (int g1 = 0; g1 <= g; ++g1)
    for (int n1 = 1; n1 <= n + 1; ++n1) {
      int g2 = g - g1, n2 = n + 2 - n1;
      if (!is_stable_type(g1, n1) || !is_stable_type(g2, n2)) continue;
      stable_form += Rational(n1 * n2) * (abstract_F(g1, n1) * abstract_F(g2, n2));
    }
  stable_form *= Rational(1, 2);
  if (!(lhs == stable_form)) return false;
  return recursion_D_form(Mode{0}, g, {n}, 0, 0);
}

bool check_lemma_D_labelled(int g, const std::vector<int>& legs, int j) {
  int N = static_cast<int>(legs.size());
  check_label(j, N);
  std::vector<int> up = legs;
  ++up[j - 1];
  return op_D(abstract_F(g, legs), j, N) == Rational(legs[j - 1] + 1) * abstract_F(g, up);
}

bool check_recursion_K_labelled(int g, const std::vector<int>& legs, int i, int j) {
  int N = static_cast<int>(legs.size());
  check_label(i, N);
  check_label(j, N);
  return recursion_D_form(Mode{N}, g, legs, i, j);
}

}  // namespace sgqft
