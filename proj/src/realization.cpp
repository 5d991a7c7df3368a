#include "sgqft/realization.hpp"

#include <numeric>
#include <stdexcept>

#include "sgqft/enumerate.hpp"
#include "sgqft/operators.hpp"

namespace sgqft {

namespace {

int total(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::string index_text(const TheoryIndex& idx) {
  std::string s = "(" + std::to_string(idx.genus) + ";";
  for (std::size_t i = 0; i < idx.legs.size(); ++i) s += (i ? "," : "") + std::to_string(idx.legs[i]);
  return s + ")";
}

void compositions(int n, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == parts - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = n; k >= 0; --k) {
    cur.push_back(k);
    compositions(n - k, parts, cur, out);
    cur.pop_back();
  }
}

const std::vector<GraphClass>& classes_of(const TheoryIndex& idx) {
  if (idx.legs.size() == 1) return enumerate_connected(idx.genus, idx.legs[0]);
  return enumerate_labelled(idx.genus, idx.legs);
}

Rational leg_factorials(const std::vector<int>& legs) {
  Rational r = 1;
  for (int l : legs) r *= factorial(l);
  return r;
}

Poly transform_at(const FeynmanRules& rules, const TheoryIndex& idx) {
  int N = static_cast<int>(idx.legs.size());
  Poly sum;
  for (const GraphClass& c : classes_of(idx)) sum += feynman_weight(c.graph, rules, N) * inverse(c.aut_order);
  return sum * leg_factorials(idx.legs);
}

int dimension_of(const Theory& t) {
  if (t.empty()) throw std::invalid_argument("empty theory");
  return static_cast<int>(t.begin()->first.legs.size());
}

void check_kappa(const KappaMatrix& k, int N) {
  if (static_cast<int>(k.size()) != N) throw std::invalid_argument("kappa matrix dimension mismatch");
  for (const auto& row : k)
    if (static_cast<int>(row.size()) != N) throw std::invalid_argument("kappa matrix is not square");
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (!(k[i][j] == k[j][i])) throw std::invalid_argument("kappa matrix is not symmetric");
}

using Key = std::vector<int>;
using Series = std::map<Key, Poly>;

Series series_mul(const Series& a, const Series& b, int bound) {
  Series out;
  for (const auto& [ka, pa] : a)
    for (const auto& [kb, pb] : b) {
      if (ka[0] + kb[0] > bound) continue;
      Key k(ka.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      Poly p = pa * pb;
      auto [it, inserted] = out.emplace(k, p);
      if (!inserted) it->second += p;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

void series_add(Series& a, const Series& b, const Rational& c) {
  for (const auto& [k, p] : b) {
    Poly q = p * c;
    auto [it, inserted] = a.emplace(k, q);
    if (!inserted) {
      it->second += q;
      if (it->second.is_zero()) a.erase(it);
    }
  }
}

class Moments {
 public:
  Moments(const KappaMatrix& k) : k_(k) {}

  const Poly& operator()(const std::vector<int>& a) {
    auto it = memo_.find(a);
    if (it != memo_.end()) return it->second;
    Poly value;
    int n = total(a);
    if (n == 0) {
      value = Poly(1L);
    } else if (n % 2 == 0) {
      std::size_t j = 0;
      while (a[j] == 0) ++j;
      std::vector<int> rest = a;
      --rest[j];
      for (std::size_t m = 0; m < a.size(); ++m) {
        if (rest[m] == 0) continue;
        std::vector<int> r2 = rest;
        --r2[m];
        value += (*this)(r2) * k_[j][m] * Rational(rest[m]);
      }
    }
    return memo_.emplace(a, std::move(value)).first->second;
  }

 private:
  const KappaMatrix& k_;
  std::map<std::vector<int>, Poly> memo_;
};

}  // namespace

int grade(const TheoryIndex& idx) { return 2 * idx.genus - 2 + total(idx.legs); }

bool is_stable(const TheoryIndex& idx) { return idx.genus >= 0 && grade(idx) > 0; }

std::vector<TheoryIndex> stable_indices(int bound, int dimension) {
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  std::vector<TheoryIndex> out;
  for (int g = 0; 2 * g - 2 <= bound; ++g)
    for (int n = 0; 2 * g - 2 + n <= bound; ++n) {
      if (!is_stable_type(g, n)) continue;
      std::vector<std::vector<int>> comps;
      std::vector<int> cur;
      compositions(n, dimension, cur, comps);
      for (auto& c : comps) out.push_back({g, c});
    }
  return out;
}

Theory symbolic_theory(int bound, int dimension) {
  Theory t;
  for (const TheoryIndex& idx : stable_indices(bound, dimension)) t[idx] = Poly(Symbol::theory(idx.genus, idx.legs));
  return t;
}

KappaMatrix symbolic_kappa(int dimension) {
  if (dimension == 1) return {{Poly(Symbol::kappa())}};
  KappaMatrix k(dimension, std::vector<Poly>(dimension));
  for (int i = 0; i < dimension; ++i)
    for (int j = 0; j < dimension; ++j) k[i][j] = Poly(Symbol::kappa(i + 1, j + 1));
  return k;
}

KappaMatrix scalar_kappa(const Poly& kappa) { return {{kappa}}; }

FeynmanRules symbolic_rules(int dimension) {
  KappaMatrix k = symbolic_kappa(dimension);
  return {[](int g, const std::vector<int>& legs) { return Poly(Symbol::theory(g, legs)); },
          [k, dimension](int a, int b) { return dimension == 1 ? k[0][0] : k[a - 1][b - 1]; }};
}

FeynmanRules theory_rules(const Theory& t, const KappaMatrix& kappa) {
  int N = static_cast<int>(kappa.size());
  return {[&t](int g, const std::vector<int>& legs) {
            auto it = t.find({g, legs});
            if (it == t.end()) throw std::invalid_argument("no Feynman rule for vertex type " + index_text({g, legs}));
            return it->second;
          },
          [kappa, N](int a, int b) { return N == 1 ? kappa[0][0] : kappa[a - 1][b - 1]; }};
}

Poly feynman_weight(const StableGraph& g, const FeynmanRules& rules, int dimension) {
  int V = g.vertex_count();
  std::vector<std::vector<int>> counts(V, std::vector<int>(dimension, 0));
  auto bump = [&](int v, int label) {
    int slot = dimension == 1 ? 0 : label - 1;
    if (slot < 0 || slot >= dimension) throw std::invalid_argument("half-edge label outside 1..N");
    ++counts[v][slot];
  };
  Poly w(1L);
  for (const Edge& e : g.edges) {
    bump(e.a.vertex, e.label_a);
    bump(e.b.vertex, e.label_b);
    w *= rules.edge(e.label_a, e.label_b);
  }
  for (const Leg& l : g.legs) bump(l.at.vertex, l.label);
  for (int v = 0; v < V; ++v) w *= rules.vertex(g.genus[v], counts[v]);
  return w;
}

Poly realize(const RationalSum& s, const FeynmanRules& rules, int dimension) {
  Poly out;
  for (const auto& [k, t] : s.terms()) out += feynman_weight(t.graph, rules, dimension) * t.coeff;
  return out;
}

Poly hat_F(int g, int n) { return realize(abstract_F(g, n), symbolic_rules(1), 1); }

Poly hat_F(int g, const std::vector<int>& legs) {
  if (legs.size() == 1) return hat_F(g, legs[0]);
  return realize(abstract_F(g, legs), symbolic_rules(static_cast<int>(legs.size())), static_cast<int>(legs.size()));
}

Poly dual_hat_F(int g, int n) {
  if (!is_stable_type(g, n)) throw std::invalid_argument("unstable type");
  Theory tilde;
  for (const TheoryIndex& idx : stable_indices(2 * g - 2 + n, 1))
    tilde[idx] = hat_F(idx.genus, idx.legs[0]) * factorial(idx.legs[0]);
  KappaMatrix minus{{-Poly(Symbol::kappa())}};
  return transform_at(theory_rules(tilde, minus), {g, {n}});
}

Theory s_transform(const Theory& t, const KappaMatrix& kappa, int bound) {
  int N = dimension_of(t);
  check_kappa(kappa, N);
  FeynmanRules rules = theory_rules(t, kappa);
  Theory out;
  for (const TheoryIndex& idx : stable_indices(bound, N)) out[idx] = transform_at(rules, idx);
  return out;
}

Theory s_transform(const Theory& t, const Poly& kappa, int bound) { return s_transform(t, scalar_kappa(kappa), bound); }

Theory wick_gaussian(const Theory& t, const KappaMatrix& kappa, int bound) {
  int N = dimension_of(t);
  check_kappa(kappa, N);
  Series S;
  for (const auto& [idx, F] : t) {
    int d = grade(idx);
    if (d < 1 || d > bound) continue;
    if (static_cast<int>(idx.legs.size()) != N) throw std::invalid_argument("mixed theory dimensions");
    std::vector<int> zs(N, 0);
    auto split = [&](auto&& self, int j) -> void {
      if (j == N) {
        Key k{d};
        Rational c = 1;
        for (int i = 0; i < N; ++i) {
          k.push_back(zs[i]);
          c /= factorial(zs[i]) * factorial(idx.legs[i] - zs[i]);
        }
        for (int i = 0; i < N; ++i) k.push_back(idx.legs[i] - zs[i]);
        series_add(S, {{k, F}}, c);
        return;
      }
      for (int b = 0; b <= idx.legs[j]; ++b) {
        zs[j] = b;
        self(self, j + 1);
      }
    };
    split(split, 0);
  }

  Series E{{Key(1 + 2 * N, 0), Poly(1L)}};
  Series P = E;
  for (int k = 1; k <= bound; ++k) {
    P = series_mul(P, S, bound);
    for (auto& [key, p] : P) p *= Rational(1, k);
    series_add(E, P, 1);
  }

  Moments moments(kappa);
  Series X;
  for (const auto& [key, p] : E) {
    if (key[0] == 0) continue;
    std::vector<int> a(key.begin() + 1 + N, key.end());
    const Poly& m = moments(a);
    if (m.is_zero()) continue;
    Key zk(key.begin(), key.begin() + 1 + N);
    series_add(X, {{zk, p * m}}, 1);
  }

  Series L, power{{Key(1 + N, 0), Poly(1L)}};
  for (int k = 1; k <= bound; ++k) {
    power = series_mul(power, X, bound);
    series_add(L, power, Rational(k % 2 ? 1 : -1, k));
  }

  Theory out;
  for (const TheoryIndex& idx : stable_indices(bound, N)) {
    Key k{grade(idx)};
    k.insert(k.end(), idx.legs.begin(), idx.legs.end());
    auto it = L.find(k);
    out[idx] = it == L.end() ? Poly() : it->second * leg_factorials(idx.legs);
  }
  return out;
}

Theory wick_gaussian(const Theory& t, const Poly& kappa, int bound) {
  return wick_gaussian(t, scalar_kappa(kappa), bound);
}

bool check_realized_recursion(int g, int n) {
  auto tilde = [](int g, int m) -> Poly {
    if (g < 0 || !is_stable_type(g, m)) return Poly();
    return hat_F(g, m) * factorial(m);
  };
  Poly rhs = tilde(g - 1, n + 2) * (Rational(1) / factorial(n));
  for (int g1 = 0; g1 <= g; ++g1)
    for (int n1 = 0; n1 <= n; ++n1)
      rhs += tilde(g1, n1 + 1) * tilde(g - g1, n - n1 + 1) * (Rational(1) / (factorial(n1) * factorial(n - n1)));
  rhs *= Rational(1, 2);
  return hat_F(g, n).derivative(Symbol::kappa()) == rhs;
}

}  // namespace sgqft
