#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sgqft/enumerate.hpp"
#include "sgqft/hae.hpp"
#include "sgqft/json_io.hpp"
#include "sgqft/operators.hpp"
#include "sgqft/realization.hpp"
#include "sgqft/transforms.hpp"

using namespace sgqft;

namespace {

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<bool()> check;
};

std::vector<std::pair<int, int>> types(int bound) {
  std::vector<std::pair<int, int>> out;
  for (int g = 0; 2 * g - 2 <= bound; ++g)
    for (int n = 0; 2 * g - 2 + n <= bound; ++n)
      if (is_stable_type(g, n)) out.emplace_back(g, n);
  return out;
}

std::vector<std::vector<int>> labelled_types(int g, int bound) {
  std::vector<std::vector<int>> out;
  for (int a = 0; 2 * g - 2 + a <= bound; ++a)
    for (int b = 0; 2 * g - 2 + a + b <= bound; ++b)
      if (2 * g - 2 + a + b > 0) out.push_back({a, b});
  return out;
}

Poly P(const char* s) { return Poly::parse(s); }

StableGraph G(const char* json) { return graph_from_json(Json::parse(json)); }

bool enumeration_counts() {
  bool ok = enumerate_connected(0, 3).size() == 1 && enumerate_connected(1, 1).size() == 2 &&
            enumerate_connected(1, 2).size() == 5 && enumerate_connected(2, 0).size() == 7;
  std::multiset<std::uint64_t> auts;
  for (const GraphClass& c : enumerate_connected(2, 0)) auts.insert(c.aut_order);
  return ok && auts == std::multiset<std::uint64_t>{1, 2, 2, 8, 2, 8, 12};
}

bool aut_oracle() {
  int n_checked = 0;
  for (auto [g, n] : types(3))
    for (const GraphClass& c : enumerate_connected(g, n)) {
      if (2 * c.graph.edge_count() + c.graph.leg_count() > 8) continue;
      if (oracle::aut_count(c.graph) != c.aut_order) return false;
      ++n_checked;
    }
  return n_checked > 0;
}

bool recursions() {
  for (auto [g, n] : types(4))
    if (!check_lemma_D(g, n) || !check_recursion_K(g, n)) return false;
  if (!(op_K(abstract_F(2, 0)) == abstract_F(1, 2) + Rational(1, 2) * (abstract_F(1, 1) * abstract_F(1, 1))))
    return false;
  for (int g = 0; g <= 2; ++g)
    for (const auto& legs : labelled_types(g, 2))
      for (int i = 1; i <= 2; ++i) {
        if (!check_lemma_D_labelled(g, legs, i)) return false;
        for (int j = i; j <= 2; ++j)
          if (!check_recursion_K_labelled(g, legs, i, j)) return false;
      }
  return true;
}

bool duality_checks() {
  for (auto [g, n] : types(4)) {
    for (const GraphClass& c : enumerate_connected(g, n))
      if (!(duality(duality(c.graph)) == RationalSum::of(c.graph))) return false;
    if (!(dual_abstract_F(g, n) == RationalSum::of(vertex_graph(g, n), Rational(1) / factorial(n)))) return false;
  }
  StableGraph v2 = G(R"({"vertices":[2],"edges":[],"legs":[]})");
  StableGraph v1l = G(R"({"vertices":[1],"edges":[[[0,0],[0,1]]],"legs":[]})");
  StableGraph v11 = G(R"({"vertices":[1,1],"edges":[[[0,0],[1,0]]],"legs":[]})");
  StableGraph v0dl = G(R"({"vertices":[0],"edges":[[[0,0],[0,1]],[[0,2],[0,3]]],"legs":[]})");
  StableGraph v10l = G(R"({"vertices":[0,1],"edges":[[[0,0],[0,1]],[[0,2],[1,0]]],"legs":[]})");
  StableGraph db = G(R"({"vertices":[0,0],"edges":[[[0,0],[0,1]],[[0,2],[1,0]],[[1,1],[1,2]]],"legs":[]})");
  StableGraph th = G(R"({"vertices":[0,0],"edges":[[[0,0],[1,2]],[[0,1],[1,1]],[[0,2],[1,0]]],"legs":[]})");
  auto S = [](std::vector<std::pair<Rational, StableGraph>> terms) {
    RationalSum s;
    for (auto& [c, g] : terms) s.add(g, c);
    return s;
  };
  using R = Rational;
  return duality(v2) == S({{R(1), v2}, {R(1, 2), v1l}, {R(1, 2), v11}, {R(1, 8), v0dl}, {R(1, 2), v10l},
                           {R(1, 8), db}, {R(1, 12), th}}) &&
         duality(v1l) == S({{R(-1), v1l}, {R(-1, 2), v0dl}, {R(-1), v10l}, {R(-1, 2), db}, {R(-1, 2), th}}) &&
         duality(v11) == S({{R(-1), v11}, {R(-1), v10l}, {R(-1, 4), db}}) &&
         duality(v10l) == S({{R(1), v10l}, {R(1, 2), db}}) &&
         duality(v0dl) == S({{R(1), v0dl}, {R(1), db}, {R(2), th}}) && duality(db) == S({{R(-1), db}}) &&
         duality(th) == S({{R(-1), th}});
}

bool transforms() {
  Poly e1(Symbol::scalar("e1")), e2(Symbol::scalar("e2"));
  for (auto [g, n] : types(3)) {
    PolySum v = PolySum::of(vertex_graph(g, n));
    PolySum sum = graph_transform(v, e1 + e2);
    if (!(graph_transform(graph_transform(v, e2), e1) == sum)) return false;
    if (!(graph_transform(graph_transform(v, e1), e2) == sum)) return false;
  }
  return true;
}

bool realization() {
  bool eq1 = hat_F(0, 3) == P("1/6*F[0,3]") && hat_F(0, 4) == P("1/24*F[0,4] + 1/8*kappa*F[0,3]^2") &&
             hat_F(1, 1) == P("F[1,1] + 1/2*kappa*F[0,3]") &&
             hat_F(1, 2) == P("1/2*F[1,2] + 1/4*kappa*F[0,4] + 1/2*kappa*F[1,1]*F[0,3] + 1/2*kappa^2*F[0,3]^2");
  // Wgn stands for the realized value at (g,n)
  auto toW = [&](const Poly& p) {
    return p.substitute([&](Symbol s) -> std::optional<Poly> {
      const SymbolInfo& i = s.info();
      if (i.kind != SymbolKind::Scalar || i.name.size() != 3 || i.name[0] != 'W') return std::nullopt;
      return hat_F(i.name[1] - '0', i.name[2] - '0');
    });
  };
  bool eq2 = toW(P("24*W04 - 108*kappa*W03^2")) == P("F[0,4]") && toW(P("W11 - 3*kappa*W03")) == P("F[1,1]") &&
             toW(P("2*W12 - 12*kappa*W04 - 6*kappa*W11*W03 + 36*kappa^2*W03^2")) == P("F[1,2]");

  Theory inv = s_transform(symbolic_theory(4), P("-kappa"), 4);
  bool f2 = inv.at({2, {0}}) == P("F[2,0] - kappa*(1/2*F[1,2] + 1/2*F[1,1]^2)"
                                  " + kappa^2*(1/8*F[0,4] + 1/2*F[1,1]*F[0,3]) - 5/24*kappa^3*F[0,3]^2");
  bool f3 =
      inv.at({3, {0}}) ==
      P("F[3,0] - kappa*(1/2*F[2,2] + F[1,1]*F[2,1])"
        " + kappa^2*(1/8*F[1,4] + 1/4*F[1,2]^2 + 1/2*F[0,3]*F[2,1] + 1/2*F[1,1]*F[1,3] + 1/2*F[1,1]^2*F[1,2])"
        " - kappa^3*(1/48*F[0,6] + 1/4*F[0,4]*F[1,2] + 5/12*F[0,3]*F[1,3] + 1/8*F[0,5]*F[1,1]"
        "   + F[0,3]*F[1,1]*F[1,2] + 1/4*F[0,4]*F[1,1]^2 + 1/6*F[0,3]*F[1,1]^3)"
        " + kappa^4*(1/12*F[0,4]^2 + 7/48*F[0,3]*F[0,5] + 5/8*F[0,3]^2*F[1,2] + 2/3*F[0,3]*F[0,4]*F[1,1]"
        "   + 1/2*F[0,3]^2*F[1,1]^2)"
        " - kappa^5*(25/48*F[0,3]^2*F[0,4] + 5/8*F[0,3]^3*F[1,1]) + 5/16*kappa^6*F[0,3]^4");
  bool kappa_free = true;
  for (auto [g, n] : types(4)) kappa_free = kappa_free && !dual_hat_F(g, n).contains(Symbol::kappa());
  return eq1 && eq2 && f2 && f3 && kappa_free;
}

bool gaussian() {
  Theory t = symbolic_theory(4);
  if (!(wick_gaussian(t, P("kappa"), 4) == s_transform(t, P("kappa"), 4))) return false;
  Theory t2 = symbolic_theory(2, 2);
  return wick_gaussian(t2, symbolic_kappa(2), 2) == s_transform(t2, symbolic_kappa(2), 2);
}

bool group_law() {
  Theory t = symbolic_theory(4);
  Theory twice = s_transform(s_transform(t, P("k1"), 4), P("k2"), 4);
  if (!(twice == s_transform(t, P("k1 + k2"), 4))) return false;
  if (!(s_transform(s_transform(t, P("kappa"), 4), P("-kappa"), 4) == t)) return false;
  auto at = [](const char* s) { return P(s).substitute(Symbol::kappa(), P("k1 + k2")); };
  return twice.at({0, {4}}) == at("F[0,4] + 3*kappa*F[0,3]^2") &&
         twice.at({1, {1}}) == at("F[1,1] + 1/2*kappa*F[0,3]") &&
         twice.at({1, {2}}) == at("F[1,2] + kappa*F[1,1]*F[0,3] + 1/2*kappa*F[0,4] + kappa^2*F[0,3]^2") &&
         twice.at({2, {0}}) == at("F[2,0] + 1/2*kappa*F[1,1]^2 + 1/2*kappa*F[1,2] + 1/2*kappa^2*F[1,1]*F[0,3]"
                                  " + 1/8*kappa^2*F[0,4] + 5/24*kappa^3*F[0,3]^2");
}

bool anomaly() {
  using namespace hae;
  bool displays = holo_F(0, 4) == P("D^1:F03") && holo_F(0, 5) == d_hol(holo_F(0, 4)) + P("3*E4*F03^3") &&
                  holo_F(0, 6) == d_hol(holo_F(0, 5)) + P("10*E4*F03^2") * (tilde_F(0, 4) - P("3*kappa*F03^2")) &&
                  holo_F(1, 2) == d_hol(holo_F(1, 1)) + P("1/2*E4*F03^2") &&
                  tilde_F(1, 2) == P("D^1:h11 + 1/2*kappa*D^1:F03 + kappa*F03*h11 + 1/2*E4*F03^2 + kappa^2*F03^2");
  bool independent = true;
  for (auto [g, n] : types(4)) independent = independent && check_independence(g, n);
  // direct-integration formulas with the dotted vertices written as F[g,n]
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
  bool kz = kz_symbolic(2) == kz2 && kz_symbolic(3) == kz3 && tilde_F(2, 0) == expand_symbolic(kz2) &&
            tilde_F(3, 0) == expand_symbolic(kz3);
  bool weights = true;
  for (auto [g, n] : types(4))
    weights = weights && homogeneous_weight(tilde_F(g, n)) == n && homogeneous_weight(holo_F(g, n)) == n;
  return displays && independent && kz && weights;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"enumeration counts and genus-2 automorphism orders", 1, enumeration_counts},
      {"automorphism orders against exhaustive permutation count", 30, aut_oracle},
      {"operator recursions, unlabelled and N=2", 120, recursions},
      {"duality involution, collapse and genus-2 dotted expansions", 120, duality_checks},
      {"transform addition law", 60, transforms},
      {"realization, inversion and dual expansions", 60, realization},
      {"Gaussian oracle against propagator shift", 120, gaussian},
      {"propagator-shift group law and worked composites", 60, group_law},
      {"holomorphic anomaly displays, independence, ambiguity formulas, weights", 120, anomaly},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Criterion& c = criteria[k];
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string error;
    try {
      ok = c.check();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = ok && dt < c.limit_seconds;
    failed += !pass;
    std::printf("%s %zu %s (%.3f s, limit %.0f s)%s%s\n", pass ? "PASS" : "FAIL", k + 1, c.name, dt, c.limit_seconds,
                error.empty() ? "" : " error: ", error.c_str());
  }
  return failed == 0 ? 0 : 1;
}
