#pragma once

#include <map>
#include <string>
#include <utility>

#include "sgqft/canonical.hpp"
#include "sgqft/graph.hpp"
#include "sgqft/poly.hpp"
#include "sgqft/rational.hpp"

namespace sgqft {

// Finite linear combination of isomorphism classes, keyed by canonical key.
template <class C>
class GraphSum {
 public:
  struct Term {
    StableGraph graph;
    C coeff;
  };

  GraphSum() = default;

  static GraphSum of(const StableGraph& g, const C& c = C(1L)) {
    GraphSum s;
    s.add(g, c);
    return s;
  }

  void add(const StableGraph& g, const C& c) {
    if (is_zero(c)) return;
    CanonicalForm f = canonicalize(g);
    add_canonical(f.key, std::move(f.graph), c);
  }

  void add_canonical(const std::string& key, StableGraph canon, const C& c) {
    if (is_zero(c)) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, Term{std::move(canon), c});
      return;
    }
    it->second.coeff += c;
    if (is_zero(it->second.coeff)) terms_.erase(it);
  }

  const std::map<std::string, Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coefficient(const StableGraph& g) const {
    auto it = terms_.find(canonical_key(g));
    return it == terms_.end() ? C(0L) : it->second.coeff;
  }

  GraphSum& operator+=(const GraphSum& o) {
    for (const auto& [k, t] : o.terms_) add_canonical(k, t.graph, t.coeff);
    return *this;
  }

  GraphSum& operator-=(const GraphSum& o) {
    for (const auto& [k, t] : o.terms_) add_canonical(k, t.graph, C(0L) - t.coeff);
    return *this;
  }

  GraphSum& operator*=(const C& c) {
    if (is_zero(c)) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, t] : terms_) t.coeff = t.coeff * c;
    return *this;
  }

  friend GraphSum operator+(GraphSum a, const GraphSum& b) { return a += b; }
  friend GraphSum operator-(GraphSum a, const GraphSum& b) { return a -= b; }
  friend GraphSum operator*(const C& c, GraphSum a) { return a *= c; }
  friend GraphSum operator*(GraphSum a, const C& c) { return a *= c; }

  // bilinear extension of disjoint union
  friend GraphSum operator*(const GraphSum& a, const GraphSum& b) {
    GraphSum out;
    for (const auto& [ka, ta] : a.terms_)
      for (const auto& [kb, tb] : b.terms_) out.add(disjoint_union(ta.graph, tb.graph), ta.coeff * tb.coeff);
    return out;
  }

  friend bool operator==(const GraphSum& a, const GraphSum& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second.coeff == ib->second.coeff)) return false;
    return true;
  }

  // linear extension of f: StableGraph -> GraphSum<D>, scaled by coefficients
  template <class D = C, class F>
  GraphSum<D> map_linear(F&& f) const {
    GraphSum<D> out;
    for (const auto& [k, t] : terms_) {
      GraphSum<D> img = f(t.graph);
      for (const auto& [k2, t2] : img.terms()) out.add_canonical(k2, t2.graph, D(t.coeff) * t2.coeff);
    }
    return out;
  }

 private:
  std::map<std::string, Term> terms_;
};

using RationalSum = GraphSum<Rational>;
using PolySum = GraphSum<Poly>;

inline PolySum to_poly_sum(const RationalSum& s) {
  PolySum out;
  for (const auto& [k, t] : s.terms()) out.add_canonical(k, t.graph, Poly(t.coeff));
  return out;
}

}  // namespace sgqft
