#include "sgqft/hae.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

#include "sgqft/enumerate.hpp"
#include "sgqft/realization.hpp"

namespace sgqft::hae {

namespace {

bool is_holo(Symbol s) { return s.info().kind == SymbolKind::Holo; }

Poly derive(const Poly& p, const std::function<Poly(Symbol)>& rule) {
  Poly out;
  std::map<Symbol, Poly> images;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      Symbol s = m[i].first;
      auto it = images.find(s);
      if (it == images.end()) it = images.emplace(s, rule(s)).first;
      Monomial rest = m;
      if (rest[i].second == 1)
        rest.erase(rest.begin() + static_cast<long>(i));
      else
        --rest[i].second;
      out += Poly::from_terms({{rest, c * m[i].second}}) * it->second;
    }
  }
  return out;
}

class Table {
 public:
  template <class F>
  const Poly& get(std::pair<int, int> key, F compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = values_.find(key);
      if (it != values_.end()) return it->second;
    }
    Poly value = compute();
    std::unique_lock lock(mutex_);
    return values_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, Poly> values_;
};

Table& tilde_table() {
  static Table t;
  return t;
}

Table& holo_table() {
  static Table t;
  return t;
}

FeynmanRules dotted_rules() {
  return {[](int g, const std::vector<int>& legs) { return tilde_F(g, legs[0]); },
          [](int, int) { return -Poly(kappa()); }};
}

FeynmanRules symbolic_dotted_rules() {
  return {[](int g, const std::vector<int>& legs) { return Poly(Symbol::theory(g, legs[0])); },
          [](int, int) { return -Poly(kappa()); }};
}

// sum over connected (g, 0) graphs other than the single vertex
Poly closure_sum(int g, const FeynmanRules& rules) {
  Poly sum;
  for (const GraphClass& c : enumerate_connected(g, 0)) {
    if (c.graph.vertex_count() == 1 && c.graph.edge_count() == 0) continue;
    sum += feynman_weight(c.graph, rules) * inverse(c.aut_order);
  }
  return sum;
}

void require_stable(int g, int n) {
  if (!is_stable_type(g, n))
    throw std::invalid_argument("unstable type (" + std::to_string(g) + "," + std::to_string(n) + ")");
}

// D applied to the formal object What_{g,n} = tilde_F_{g,n} / n!
Poly formal_D(int g, int n, int times) {
  if (g < 0) return Poly();
  Rational scale = Rational(1) / factorial(n);
  while (times > 0 && !is_stable_type(g, n)) {
    ++n;
    --times;
  }
  if (!is_stable_type(g, n)) return Poly();
  Poly p = tilde_F(g, n);
  for (int k = 0; k < times; ++k) p = d_cov(p);
  return p * scale;
}

}  // namespace

Symbol kappa() { return Symbol::kappa(); }
Symbol F03() { return Symbol::holo("F03"); }
Symbol h11() { return Symbol::holo("h11"); }
Symbol E4() { return Symbol::holo("E4"); }
Symbol amb(int g) { return Symbol::holo("amb", 0, g); }

Symbol hol_derivative(Symbol x) {
  const SymbolInfo& i = x.info();
  if (i.kind != SymbolKind::Holo) throw std::invalid_argument("not a holomorphic generator: " + x.text());
  return Symbol::holo(i.name, i.derivative + 1, i.genus);
}

int weight(Symbol s) {
  const SymbolInfo& i = s.info();
  if (i.kind == SymbolKind::Kappa && i.index.empty()) return -2;
  if (i.kind != SymbolKind::Holo) throw std::invalid_argument("no weight for symbol " + s.text());
  int base = 0;
  if (i.name == "F03")
    base = 3;
  else if (i.name == "h11")
    base = 1;
  else if (i.name == "E4")
    base = -4;
  else if (i.name == "amb")
    base = 0;
  else
    throw std::invalid_argument("unknown generator " + s.text());
  return base + i.derivative;
}

std::optional<int> homogeneous_weight(const Poly& p) {
  std::optional<int> w;
  for (const auto& [m, c] : p.terms()) {
    int x = 0;
    for (const auto& [s, e] : m) x += e * weight(s);
    if (w && *w != x) return std::nullopt;
    w = x;
  }
  return w ? w : std::optional<int>(0);
}

Poly d_cov(const Poly& p) {
  Poly k(kappa()), f(F03()), e(E4());
  return derive(p, [&](Symbol s) -> Poly {
    if (s == kappa()) return -(k * k * f) + e * f;
    if (!is_holo(s)) throw std::invalid_argument("d_cov: foreign symbol " + s.text());
    return Poly(hol_derivative(s)) + k * f * Poly(s) * Rational(weight(s));
  });
}

Poly d_hol(const Poly& p) {
  Poly k(kappa()), f(F03()), e(E4());
  return derive(p, [&](Symbol s) -> Poly {
    if (s == kappa()) return k * k * f + e * f;
    if (!is_holo(s)) throw std::invalid_argument("d_hol: foreign symbol " + s.text());
    return Poly(hol_derivative(s));
  });
}

const Poly& tilde_F(int g, int n) {
  require_stable(g, n);
  return tilde_table().get({g, n}, [&]() -> Poly {
    if (g == 0 && n == 3) return Poly(F03());
    if (g == 1 && n == 1) return Poly(F03()) * Poly(kappa()) * Rational(1, 2) + Poly(h11());
    if (n == 0) return Poly(amb(g)) - closure_sum(g, dotted_rules());
    return d_cov(tilde_F(g, n - 1));
  });
}

const Poly& holo_F(int g, int n) {
  require_stable(g, n);
  return holo_table().get({g, n}, [&]() -> Poly {
    FeynmanRules rules = dotted_rules();
    Poly sum;
    for (const GraphClass& c : enumerate_connected(g, n)) sum += feynman_weight(c.graph, rules) * inverse(c.aut_order);
    return sum * factorial(n);
  });
}

Poly kz_symbolic(int g) {
  if (g < 2) throw std::invalid_argument("genus must be at least 2");
  return Poly(amb(g)) - closure_sum(g, symbolic_dotted_rules());
}

Poly expand_symbolic(const Poly& p) {
  return p.substitute([](Symbol s) -> std::optional<Poly> {
    const SymbolInfo& i = s.info();
    if (i.kind != SymbolKind::Theory || i.index.size() != 1) return std::nullopt;
    return tilde_F(i.genus, i.index[0]);
  });
}

Poly holo_lemma_A(int g, int n) {
  require_stable(g, n);
  Poly A;
  if (is_stable_type(g - 1, n + 2)) A += holo_F(g - 1, n + 2) * Rational(1, 2);
  for (int g1 = 0; g1 <= g; ++g1)
    for (int n1 = 1; n1 <= n + 1; ++n1) {
      int g2 = g - g1, n2 = n + 2 - n1;
      if (!is_stable_type(g1, n1) || !is_stable_type(g2, n2)) continue;
      Rational c = factorial(n) / (factorial(n1 - 1) * factorial(n2 - 1)) / 2;
      A += holo_F(g1, n1) * holo_F(g2, n2) * c;
    }
  return A;
}

bool check_independence(int g, int n) { return !holo_F(g, n).contains(kappa()); }

bool check_holo_lemma(int g, int n) {
  Poly lhs = holo_F(g, n + 1) - d_hol(holo_F(g, n));
  return lhs == Poly(E4()) * Poly(F03()) * holo_lemma_A(g, n);
}

bool check_hae_recursion(int g, int n) {
  require_stable(g, n);
  Poly lhs = (tilde_F(g, n) * (Rational(1) / factorial(n))).derivative(kappa());
  Poly rhs = formal_D(g - 1, n, 2);
  for (int g1 = 0; g1 <= g; ++g1)
    for (int n1 = 0; n1 <= n; ++n1) {
      Poly a = formal_D(g1, n1, 1);
      if (a.is_zero()) continue;
      rhs += a * formal_D(g - g1, n - n1, 1);
    }
  rhs *= Rational(1, 2);
  return lhs == rhs;
}

}  // namespace sgqft::hae
