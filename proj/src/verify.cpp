#include "sgqft/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "sgqft/enumerate.hpp"
#include "sgqft/hae.hpp"
#include "sgqft/operators.hpp"
#include "sgqft/realization.hpp"
#include "sgqft/transforms.hpp"

namespace sgqft {

namespace {

using Results = std::vector<CheckResult>;

std::string type_name(int g, int n) { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

std::string type_name(int g, const std::vector<int>& l) {
  std::string s = "(" + std::to_string(g) + ";";
  for (std::size_t i = 0; i < l.size(); ++i) s += (i ? "," : "") + std::to_string(l[i]);
  return s + ")";
}

std::vector<std::pair<int, int>> types_up_to(int bound) {
  std::vector<std::pair<int, int>> out;
  for (const TheoryIndex& idx : stable_indices(bound, 1)) out.emplace_back(idx.genus, idx.legs[0]);
  return out;
}

void add(Results& r, std::string name, bool ok, std::string detail = {}) {
  r.push_back({std::move(name), ok, std::move(detail)});
}

Poly P(const char* text) { return Poly::parse(text); }

// The seven connected genus-2 graphs without legs.
struct Genus2 {
  StableGraph v2, v1_loop, v1_v1, v0_double_loop, v1_v0_loop, dumbbell, theta;
};

Genus2 genus2_graphs() {
  Genus2 G;
  G.v2.add_vertex(2);
  G.v1_loop.add_vertex(1);
  G.v1_loop.add_edge(0, 0);
  G.v1_v1.add_vertex(1);
  G.v1_v1.add_vertex(1);
  G.v1_v1.add_edge(0, 1);
  G.v0_double_loop.add_vertex(0);
  G.v0_double_loop.add_edge(0, 0);
  G.v0_double_loop.add_edge(0, 0);
  G.v1_v0_loop.add_vertex(1);
  G.v1_v0_loop.add_vertex(0);
  G.v1_v0_loop.add_edge(0, 1);
  G.v1_v0_loop.add_edge(1, 1);
  G.dumbbell.add_vertex(0);
  G.dumbbell.add_vertex(0);
  G.dumbbell.add_edge(0, 0);
  G.dumbbell.add_edge(0, 1);
  G.dumbbell.add_edge(1, 1);
  G.theta.add_vertex(0);
  G.theta.add_vertex(0);
  for (int k = 0; k < 3; ++k) G.theta.add_edge(0, 1);
  return G;
}

RationalSum combo(std::initializer_list<std::pair<Rational, const StableGraph*>> terms) {
  RationalSum s;
  for (const auto& [c, g] : terms) s.add(*g, c);
  return s;
}

Results suite_enumeration(int bound) {
  Results r;
  std::map<std::pair<int, int>, std::size_t> counts{{{0, 3}, 1}, {{1, 1}, 2}, {{1, 2}, 5}, {{2, 0}, 7}};
  for (const auto& [t, expected] : counts) {
    std::size_t got = enumerate_connected(t.first, t.second).size();
    add(r, "count " + type_name(t.first, t.second), got == expected,
        "got " + std::to_string(got) + ", expected " + std::to_string(expected));
  }
  std::vector<std::uint64_t> auts;
  for (const GraphClass& c : enumerate_connected(2, 0)) auts.push_back(c.aut_order);
  std::sort(auts.begin(), auts.end());
  add(r, "aut orders of genus-2 classes", auts == std::vector<std::uint64_t>{1, 2, 2, 2, 8, 8, 12});

  int checked = 0, bad = 0;
  for (auto [g, n] : types_up_to(std::min(bound, 3)))
    for (const GraphClass& c : enumerate_connected(g, n)) {
      if (2 * c.graph.edge_count() + c.graph.leg_count() > 8) continue;
      ++checked;
      if (brute_force_aut(c.graph) != c.aut_order) ++bad;
    }
  add(r, "brute-force aut agreement", bad == 0, std::to_string(checked) + " graphs, " + std::to_string(bad) + " mismatches");

  int invalid = 0;
  for (auto [g, n] : types_up_to(bound))
    for (const GraphClass& c : enumerate_connected(g, n))
      if (validate(c.graph) || graph_genus(c.graph) != g || !is_connected(c.graph) || c.graph.leg_count() != n)
        ++invalid;
  add(r, "enumerated graphs are stable, connected, of the right type", invalid == 0);
  return r;
}

Results suite_recursions(int bound) {
  Results r;
  for (auto [g, n] : types_up_to(bound)) {
    add(r, "lemma D " + type_name(g, n), check_lemma_D(g, n));
    add(r, "K recursion " + type_name(g, n), check_recursion_K(g, n));
  }
  if (bound >= 2) {
    RationalSum lhs = op_K(abstract_F(2, 0));
    RationalSum rhs = abstract_F(1, 2) + Rational(1, 2) * (abstract_F(1, 1) * abstract_F(1, 1));
    add(r, "K F2 = F(1,2) + 1/2 F(1,1)^2", lhs == rhs);
  }
  for (const TheoryIndex& idx : stable_indices(std::min(bound, 2), 2)) {
    for (int j = 1; j <= 2; ++j)
      add(r, "labelled lemma D_" + std::to_string(j) + " " + type_name(idx.genus, idx.legs),
          check_lemma_D_labelled(idx.genus, idx.legs, j));
    for (int i = 1; i <= 2; ++i)
      for (int j = i; j <= 2; ++j)
        add(r, "labelled K_" + std::to_string(i) + std::to_string(j) + " " + type_name(idx.genus, idx.legs),
            check_recursion_K_labelled(idx.genus, idx.legs, i, j));
  }
  return r;
}

Results suite_duality(int bound) {
  Results r;
  for (auto [g, n] : types_up_to(bound)) {
    int bad = 0, bad_ops = 0;
    for (const GraphClass& c : enumerate_connected(g, n)) {
      if (!(duality(duality(c.graph)) == RationalSum::of(c.graph))) ++bad;
      if (2 * g - 2 + n <= 3 && !dual_operator_check(c.graph)) ++bad_ops;
    }
    add(r, "phi^2 = id on " + type_name(g, n), bad == 0, std::to_string(bad) + " failures");
    if (2 * g - 2 + n <= 3) add(r, "phi intertwines partial and D on " + type_name(g, n), bad_ops == 0);
    add(r, "dual free energy " + type_name(g, n) + " = vertex/n!",
        dual_abstract_F(g, n) == RationalSum::of(vertex_graph(g, n), Rational(1) / factorial(n)));
  }
  for (const TheoryIndex& idx : stable_indices(std::min(bound, 2), 2)) {
    Rational c = Rational(1) / (factorial(idx.legs[0]) * factorial(idx.legs[1]));
    add(r, "labelled dual free energy " + type_name(idx.genus, idx.legs),
        dual_abstract_F(idx.genus, idx.legs) == RationalSum::of(labelled_vertex_graph(idx.genus, idx.legs), c));
  }
  if (bound >= 2) {
    Genus2 G = genus2_graphs();
    const Rational h(1, 2), e(1, 8), q(1, 4), t(1, 12), one(1), m(-1), mh(-1, 2), mq(-1, 4);
    std::vector<std::pair<const StableGraph*, RationalSum>> expected = {
        {&G.v2, combo({{one, &G.v2}, {h, &G.v1_loop}, {h, &G.v1_v1}, {e, &G.v0_double_loop},
                       {h, &G.v1_v0_loop}, {e, &G.dumbbell}, {t, &G.theta}})},
        {&G.v1_loop, combo({{m, &G.v1_loop}, {mh, &G.v0_double_loop}, {m, &G.v1_v0_loop}, {mh, &G.dumbbell},
                            {mh, &G.theta}})},
        {&G.v1_v1, combo({{m, &G.v1_v1}, {m, &G.v1_v0_loop}, {mq, &G.dumbbell}})},
        {&G.v1_v0_loop, combo({{one, &G.v1_v0_loop}, {h, &G.dumbbell}})},
        {&G.v0_double_loop, combo({{one, &G.v0_double_loop}, {one, &G.dumbbell}, {Rational(2), &G.theta}})},
        {&G.dumbbell, combo({{m, &G.dumbbell}})},
        {&G.theta, combo({{m, &G.theta}})},
    };
    int k = 0;
    for (const auto& [g, sum] : expected)
      add(r, "genus-2 dotted expansion #" + std::to_string(++k), duality(*g) == sum);
  }
  return r;
}

Results suite_transforms(int bound) {
  Results r;
  Poly e1(Symbol::scalar("e1")), e2(Symbol::scalar("e2"));
  for (auto [g, n] : types_up_to(bound)) {
    PolySum v = PolySum::of(vertex_graph(g, n));
    PolySum target = vertex_expansion(g, n, e1 + e2);
    add(r, "Phi_e1 Phi_e2 = Phi_(e1+e2) on V" + type_name(g, n),
        graph_transform(graph_transform(v, e2), e1) == target && graph_transform(graph_transform(v, e1), e2) == target);
    add(r, "Phi_0 = id on V" + type_name(g, n), graph_transform(v, Poly()) == v);
  }
  return r;
}

Results suite_realization(int bound) {
  Results r;
  std::vector<std::pair<std::pair<int, int>, const char*>> eq1 = {
      {{0, 3}, "1/6*F[0,3]"},
      {{0, 4}, "1/24*F[0,4] + 1/8*kappa*F[0,3]^2"},
      {{1, 1}, "F[1,1] + 1/2*kappa*F[0,3]"},
      {{1, 2}, "1/2*F[1,2] + 1/4*kappa*F[0,4] + 1/2*kappa*F[1,1]*F[0,3] + 1/2*kappa^2*F[0,3]^2"},
  };
  for (const auto& [t, text] : eq1) add(r, "realized " + type_name(t.first, t.second), hat_F(t.first, t.second) == P(text));

  // F in terms of W = hat_F, with W substituted back
  auto W = [](int g, int n) { return hat_F(g, n); };
  Poly k(Symbol::kappa());
  std::vector<std::pair<std::pair<int, int>, Poly>> eq2 = {
      {{0, 3}, W(0, 3) * Rational(6)},
      {{0, 4}, W(0, 4) * Rational(24) - k * W(0, 3) * W(0, 3) * Rational(108)},
      {{1, 1}, W(1, 1) - k * W(0, 3) * Rational(3)},
      {{1, 2}, W(1, 2) * Rational(2) - k * W(0, 4) * Rational(12) - k * W(1, 1) * W(0, 3) * Rational(6) +
                   k * k * W(0, 3) * W(0, 3) * Rational(36)},
  };
  for (const auto& [t, value] : eq2)
    add(r, "inverted " + type_name(t.first, t.second), value == Poly(Symbol::theory(t.first, t.second)));

  Theory sym = symbolic_theory(4);
  Theory inv = s_transform(sym, -k, 4);
  add(r, "F2 dual expansion",
      inv.at({2, {0}}) == P("F[2,0] - kappa*(1/2*F[1,2] + 1/2*F[1,1]^2) + kappa^2*(1/8*F[0,4] + 1/2*F[1,1]*F[0,3])"
                            " - 5/24*kappa^3*F[0,3]^2"));
  add(r, "F3 dual expansion",
      inv.at({3, {0}}) ==
          P("F[3,0] - kappa*(1/2*F[2,2] + F[1,1]*F[2,1])"
            " + kappa^2*(1/8*F[1,4] + 1/4*F[1,2]^2 + 1/2*F[0,3]*F[2,1] + 1/2*F[1,1]*F[1,3] + 1/2*F[1,1]^2*F[1,2])"
            " - kappa^3*(1/48*F[0,6] + 1/4*F[0,4]*F[1,2] + 5/12*F[0,3]*F[1,3] + 1/8*F[0,5]*F[1,1]"
            " + F[0,3]*F[1,1]*F[1,2] + 1/4*F[0,4]*F[1,1]^2 + 1/6*F[0,3]*F[1,1]^3)"
            " + kappa^4*(1/12*F[0,4]^2 + 7/48*F[0,3]*F[0,5] + 5/8*F[0,3]^2*F[1,2] + 2/3*F[0,3]*F[0,4]*F[1,1]"
            " + 1/2*F[0,3]^2*F[1,1]^2)"
            " - kappa^5*(25/48*F[0,3]^2*F[0,4] + 5/8*F[0,3]^3*F[1,1]) + 5/16*kappa^6*F[0,3]^4"));
  for (auto [g, n] : types_up_to(bound)) {
    Poly d = dual_hat_F(g, n);
    add(r, "dual realization " + type_name(g, n) + " is kappa-free and equals F",
        !d.contains(Symbol::kappa()) && d == Poly(Symbol::theory(g, n)));
    add(r, "realized recursion " + type_name(g, n), check_realized_recursion(g, n));
  }
  return r;
}

Results suite_gaussian(int bound) {
  Results r;
  Theory t = symbolic_theory(bound);
  Theory w = wick_gaussian(t, Poly(Symbol::kappa()), bound);
  Theory s = s_transform(t, Poly(Symbol::kappa()), bound);
  for (const auto& [idx, p] : s)
    add(r, "wick = s-transform " + type_name(idx.genus, idx.legs[0]), w.at(idx) == p);
  int b2 = std::min(bound, 2);
  Theory t2 = symbolic_theory(b2, 2);
  Theory w2 = wick_gaussian(t2, symbolic_kappa(2), b2);
  Theory s2 = s_transform(t2, symbolic_kappa(2), b2);
  for (const auto& [idx, p] : s2)
    add(r, "N=2 wick = s-transform " + type_name(idx.genus, idx.legs), w2.at(idx) == p);
  return r;
}

Results suite_grouplaw(int bound) {
  Results r;
  Poly k1(Symbol::scalar("k1")), k2(Symbol::scalar("k2")), k(Symbol::kappa());
  Theory t = symbolic_theory(bound);
  Theory twice = s_transform(s_transform(t, k1, bound), k2, bound);
  Theory once = s_transform(t, k1 + k2, bound);
  for (const auto& [idx, p] : once)
    add(r, "S_k2 S_k1 = S_(k1+k2) " + type_name(idx.genus, idx.legs[0]), twice.at(idx) == p);
  Theory back = s_transform(s_transform(t, k, bound), -k, bound);
  add(r, "S_-k S_k = id", back == t);

  auto sub = [&](const char* text) { return P(text).substitute(Symbol::kappa(), k1 + k2); };
  std::vector<std::pair<TheoryIndex, const char*>> worked = {
      {{0, {4}}, "F[0,4] + 3*kappa*F[0,3]^2"},
      {{1, {1}}, "F[1,1] + 1/2*kappa*F[0,3]"},
      {{1, {2}}, "F[1,2] + kappa*F[1,1]*F[0,3] + 1/2*kappa*F[0,4] + kappa^2*F[0,3]^2"},
      {{2, {0}}, "F[2,0] + 1/2*kappa*F[1,1]^2 + 1/2*kappa*F[1,2] + 1/2*kappa^2*F[1,1]*F[0,3] + 1/8*kappa^2*F[0,4]"
                 " + 5/24*kappa^3*F[0,3]^2"},
  };
  if (bound >= 2)
    for (const auto& [idx, text] : worked)
      add(r, "worked composite " + type_name(idx.genus, idx.legs[0]), twice.at(idx) == sub(text));
  return r;
}

Results suite_hae(int bound) {
  Results r;
  using namespace hae;
  add(r, "holo F(0,4)", holo_F(0, 4) == P("D^1:F03"));
  add(r, "holo F(0,5)", holo_F(0, 5) == d_hol(holo_F(0, 4)) + P("3*E4*F03^3"));
  add(r, "holo F(0,6)",
      holo_F(0, 6) == d_hol(holo_F(0, 5)) + P("10*E4*F03^2") * (tilde_F(0, 4) - P("3*kappa*F03^2")));
  add(r, "holo F(1,2)", holo_F(1, 2) == P("D^1:h11 + 1/2*E4*F03^2"));
  Poly k(kappa()), f(F03());
  add(r, "holo F(0,4) from dotted", holo_F(0, 4) == tilde_F(0, 4) - k * f * f * Rational(3));
  add(r, "holo F(0,5) from dotted",
      holo_F(0, 5) == tilde_F(0, 5) - k * f * tilde_F(0, 4) * Rational(10) + k * k * f * f * f * Rational(15));
  add(r, "holo F(1,2) from dotted",
      holo_F(1, 2) == tilde_F(1, 2) - k * tilde_F(0, 4) * Rational(1, 2) - k * f * tilde_F(1, 1) + k * k * f * f);
  add(r, "tilde F(1,2)",
      tilde_F(1, 2) == P("D^1:h11") + P("kappa*F03") * tilde_F(1, 1) + P("1/2*kappa") * tilde_F(0, 4) -
                           P("kappa^2*F03^2") + P("1/2*E4*F03^2"));

  Poly kz2 = P("-1/8*kappa^2*F[0,4] + 1/2*kappa*F[1,2] + 5/24*kappa^3*F[0,3]^2 - 1/2*kappa^2*F[1,1]*F[0,3]"
               " + 1/2*kappa*F[1,1]^2 + amb[2]");
  Poly kz3 = P(
      "kappa*F[2,1]*F[1,1] - 1/2*kappa^2*F[2,1]*F[0,3] + 1/2*kappa*F[2,2] + 1/6*kappa^3*F[1,1]^3*F[0,3]"
      " - 1/2*kappa^2*F[1,2]*F[1,1]^2 - 1/2*kappa^4*F[1,1]^2*F[0,3]^2 + 1/4*kappa^3*F[1,1]^2*F[0,4]"
      " + kappa^3*F[1,2]*F[1,1]*F[0,3] - 1/2*kappa^2*F[1,3]*F[1,1] - 1/4*kappa^2*F[1,2]^2"
      " + 5/8*kappa^5*F[1,1]*F[0,3]^3 - 2/3*kappa^4*F[1,1]*F[0,4]*F[0,3] - 5/8*kappa^4*F[1,2]*F[0,3]^2"
      " + 1/4*kappa^3*F[1,2]*F[0,4] + 5/12*kappa^3*F[1,3]*F[0,3] + 1/8*kappa^3*F[0,5]*F[1,1]"
      " - 1/8*kappa^2*F[1,4] - 7/48*kappa^4*F[0,5]*F[0,3] + 25/48*kappa^5*F[0,4]*F[0,3]^2"
      " - 5/16*kappa^6*F[0,3]^4 - 1/12*kappa^4*F[0,4]^2 + 1/48*kappa^3*F[0,6] + amb[3]");
  add(r, "genus-2 ambiguity formula term-by-term", kz_symbolic(2) == kz2);
  add(r, "genus-3 ambiguity formula term-by-term", kz_symbolic(3) == kz3);
  add(r, "tilde F(2,0) equals expanded formula", tilde_F(2, 0) == expand_symbolic(kz2));
  add(r, "tilde F(3,0) equals expanded formula", tilde_F(3, 0) == expand_symbolic(kz3));

  bool weights = true;
  for (auto [g, n] : types_up_to(std::max(bound, 4))) {
    if (2 * g - 2 + n <= bound) add(r, "kappa independence " + type_name(g, n), check_independence(g, n));
    if (2 * g - 2 + n < bound) add(r, "holo lemma " + type_name(g, n), check_holo_lemma(g, n));
    if (2 * g - 2 + n <= std::min(bound, 3)) add(r, "anomaly recursion " + type_name(g, n), check_hae_recursion(g, n));
    weights = weights && homogeneous_weight(tilde_F(g, n)) == n && homogeneous_weight(holo_F(g, n)) == n;
    if (n == 0 && g >= 2) weights = weights && !(tilde_F(g, 0) - Poly(amb(g))).contains(amb(g));
  }
  add(r, "weight homogeneity", weights);
  return r;
}

using SuiteFn = Results (*)(int);

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> m = {
      {"enumeration", suite_enumeration}, {"recursions", suite_recursions}, {"duality", suite_duality},
      {"transforms", suite_transforms},   {"realization", suite_realization}, {"gaussian", suite_gaussian},
      {"grouplaw", suite_grouplaw},       {"hae", suite_hae},
  };
  return m;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"enumeration", "recursions", "duality", "transforms",
                                                 "realization", "gaussian",   "grouplaw", "hae"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  if (suite == "all") {
    Results all;
    for (const std::string& name : suite_names()) {
      Results part = suites().at(name)(bound);
      for (auto& c : part) c.name = name + ": " + c.name;
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second(bound);
}

std::uint64_t brute_force_aut(const StableGraph& g) {
  struct H {
    int vertex, partner, label;
  };
  std::vector<H> hs;
  for (const Edge& e : g.edges) {
    int a = static_cast<int>(hs.size());
    hs.push_back({e.a.vertex, a + 1, e.label_a});
    hs.push_back({e.b.vertex, a, e.label_b});
  }
  for (const Leg& l : g.legs) hs.push_back({l.at.vertex, -1, l.label});
  if (hs.size() > 10) throw std::invalid_argument("graph too large for brute force");

  int V = g.vertex_count();
  std::vector<int> degree(V, 0);
  for (const H& h : hs) ++degree[h.vertex];
  std::map<int, int> bare;
  for (int v = 0; v < V; ++v)
    if (degree[v] == 0) ++bare[g.genus[v]];
  std::uint64_t bare_factor = 1;
  for (auto [genus, count] : bare)
    for (int k = 2; k <= count; ++k) bare_factor *= static_cast<std::uint64_t>(k);

  std::vector<int> perm(hs.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    std::vector<int> sigma(V, -1);
    bool ok = true;
    for (std::size_t x = 0; x < hs.size() && ok; ++x) {
      const H& from = hs[x];
      const H& to = hs[perm[x]];
      int& s = sigma[from.vertex];
      if (s == -1)
        s = to.vertex;
      else if (s != to.vertex)
        ok = false;
      ok = ok && g.genus[from.vertex] == g.genus[to.vertex] && from.label == to.label;
      ok = ok && (from.partner == -1 ? to.partner == -1 : to.partner == perm[from.partner]);
    }
    if (!ok) continue;
    std::vector<int> image;
    for (int v = 0; v < V; ++v)
      if (sigma[v] != -1) image.push_back(sigma[v]);
    std::sort(image.begin(), image.end());
    if (std::adjacent_find(image.begin(), image.end()) == image.end()) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count * bare_factor;
}

}  // namespace sgqft
