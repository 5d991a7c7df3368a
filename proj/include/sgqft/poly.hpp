#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgqft/rational.hpp"

namespace sgqft {

enum class SymbolKind { Kappa, Scalar, Theory, Holo };

struct SymbolInfo {
  SymbolKind kind = SymbolKind::Scalar;
  int genus = -1;
  std::vector<int> index;
  std::string name;
  int derivative = 0;

  auto operator<=>(const SymbolInfo&) const = default;
};

// Interned handle; identity comparison is by id, display order by info().
class Symbol {
 public:
  static Symbol intern(const SymbolInfo& info);
  static Symbol kappa();
  static Symbol kappa(int i, int j);
  static Symbol scalar(std::string name);
  static Symbol theory(int g, int n);
  static Symbol theory(int g, std::vector<int> legs);
  static Symbol holo(std::string name, int derivative = 0, int genus = -1);
  // throws std::invalid_argument
  static Symbol parse(std::string_view text);

  const SymbolInfo& info() const;
  std::string text() const;
  std::string json_name() const;
  std::uint32_t id() const { return id_; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend auto operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

 private:
  explicit Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_;
};

bool display_less(Symbol a, Symbol b);

// sorted by symbol id, exponents > 0
using Monomial = std::vector<std::pair<Symbol, int>>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
int monomial_degree(const Monomial& m);

class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);
  Poly(long c);
  Poly(Symbol s);

  static Poly from_terms(std::map<Monomial, Rational> terms);
  // throws std::invalid_argument
  static Poly parse(std::string_view text);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly pow(int k) const;
  Poly derivative(Symbol s) const;
  int degree_in(Symbol s) const;
  bool contains(Symbol s) const;
  bool any_symbol(const std::function<bool(Symbol)>& pred) const;
  std::vector<Symbol> symbols() const;
  // symbols mapped to nullopt are kept
  Poly substitute(const std::function<std::optional<Poly>(Symbol)>& f) const;
  Poly substitute(Symbol s, const Poly& value) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }

// display-ordered terms: (coefficient, symbols with repetition)
std::vector<std::pair<Rational, std::vector<Symbol>>> display_terms(const Poly& p);

}  // namespace sgqft
