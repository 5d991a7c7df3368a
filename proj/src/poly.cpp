#include "sgqft/poly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace sgqft {

namespace {

struct Registry {
  std::shared_mutex mutex;
  std::deque<SymbolInfo> infos;
  std::map<SymbolInfo, std::uint32_t> ids;
};

Registry& registry() {
  static Registry r;
  return r;
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s.push_back(sep);
    s += std::to_string(v[i]);
  }
  return s;
}

int parse_int(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("expected integer");
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("expected integer, got '" + std::string(s) + "'");
    v = v * 10 + (c - '0');
    if (v > 1000000) throw std::invalid_argument("integer too large");
  }
  return v;
}

std::vector<int> parse_int_list(std::string_view s, char sep) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    out.push_back(parse_int(s.substr(start, p == std::string_view::npos ? s.npos : p - start)));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

bool is_ident(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

Symbol Symbol::intern(const SymbolInfo& info) {
  Registry& r = registry();
  {
    std::shared_lock lock(r.mutex);
    auto it = r.ids.find(info);
    if (it != r.ids.end()) return Symbol(it->second);
  }
  std::unique_lock lock(r.mutex);
  auto it = r.ids.find(info);
  if (it != r.ids.end()) return Symbol(it->second);
  auto id = static_cast<std::uint32_t>(r.infos.size());
  r.infos.push_back(info);
  r.ids.emplace(info, id);
  return Symbol(id);
}

const SymbolInfo& Symbol::info() const {
  Registry& r = registry();
  std::shared_lock lock(r.mutex);
  return r.infos[id_];
}

Symbol Symbol::kappa() { return intern({SymbolKind::Kappa, -1, {}, "kappa", 0}); }

Symbol Symbol::kappa(int i, int j) {
  if (i > j) std::swap(i, j);
  return intern({SymbolKind::Kappa, -1, {i, j}, "kappa", 0});
}

Symbol Symbol::scalar(std::string name) {
  return intern({SymbolKind::Scalar, -1, {}, std::move(name), 0});
}

Symbol Symbol::theory(int g, int n) { return intern({SymbolKind::Theory, g, {n}, "F", 0}); }

Symbol Symbol::theory(int g, std::vector<int> legs) {
  return intern({SymbolKind::Theory, g, std::move(legs), "F", 0});
}

Symbol Symbol::holo(std::string name, int derivative, int genus) {
  return intern({SymbolKind::Holo, genus, {}, std::move(name), derivative});
}

std::string Symbol::text() const {
  const SymbolInfo& i = info();
  switch (i.kind) {
    case SymbolKind::Kappa:
      return i.index.empty() ? "kappa" : "kappa[" + join_ints(i.index, ',') + "]";
    case SymbolKind::Scalar:
      return i.name;
    case SymbolKind::Theory:
      if (i.index.size() == 1) return "F[" + std::to_string(i.genus) + "," + std::to_string(i.index[0]) + "]";
      return "F[" + std::to_string(i.genus) + ";" + join_ints(i.index, ',') + "]";
    case SymbolKind::Holo: {
      std::string base = i.genus >= 0 ? i.name + "[" + std::to_string(i.genus) + "]" : i.name;
      if (i.derivative == 0) return base;
      return "D^" + std::to_string(i.derivative) + ":" + base;
    }
  }
  return {};
}

std::string Symbol::json_name() const {
  if (info().kind == SymbolKind::Scalar) return "scalar:" + info().name;
  return text();
}

Symbol Symbol::parse(std::string_view t) {
  auto bad = [&]() { return std::invalid_argument("unknown symbol '" + std::string(t) + "'"); };
  if (t == "kappa") return kappa();
  if (t.rfind("kappa[", 0) == 0 && t.back() == ']') {
    auto ij = parse_int_list(t.substr(6, t.size() - 7), ',');
    if (ij.size() != 2) throw bad();
    return kappa(ij[0], ij[1]);
  }
  if (t.rfind("scalar:", 0) == 0) {
    auto name = t.substr(7);
    if (!is_ident(name)) throw bad();
    return scalar(std::string(name));
  }
  if (t.rfind("D^", 0) == 0) {
    auto colon = t.find(':');
    if (colon == std::string_view::npos) throw bad();
    int k = parse_int(t.substr(2, colon - 2));
    Symbol base = parse(t.substr(colon + 1));
    const SymbolInfo& b = base.info();
    if (b.kind != SymbolKind::Holo) throw bad();
    return holo(b.name, b.derivative + k, b.genus);
  }
  if (t.rfind("F[", 0) == 0 && t.back() == ']') {
    auto body = t.substr(2, t.size() - 3);
    auto semi = body.find(';');
    if (semi != std::string_view::npos)
      return theory(parse_int(body.substr(0, semi)), parse_int_list(body.substr(semi + 1), ','));
    auto gn = parse_int_list(body, ',');
    if (gn.size() != 2) throw bad();
    return theory(gn[0], gn[1]);
  }
  if (t.rfind("amb[", 0) == 0 && t.back() == ']') return holo("amb", 0, parse_int(t.substr(4, t.size() - 5)));
  if (t == "F03" || t == "h11" || t == "E4") return holo(std::string(t));
  if (is_ident(t)) return scalar(std::string(t));
  throw bad();
}

bool display_less(Symbol a, Symbol b) { return a.info() < b.info(); }

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [s, e] : m) d += e;
  return d;
}

Poly::Poly(const Rational& c) {
  if (!sgqft::is_zero(c)) terms_.emplace(Monomial{}, c);
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(Symbol s) { terms_.emplace(Monomial{{s, 1}}, Rational(1)); }

Poly Poly::from_terms(std::map<Monomial, Rational> terms) {
  Poly p;
  for (auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant_term() const { return coefficient({}); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (sgqft::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgqft::is_zero(it->second)) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (sgqft::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [m, v] : p.terms_) v = -v;
  return p;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw std::domain_error("negative power");
  Poly result(1L), base = *this;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Poly Poly::derivative(Symbol s) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i].first != s) continue;
      Monomial r = m;
      int e = r[i].second;
      if (e == 1)
        r.erase(r.begin() + static_cast<long>(i));
      else
        r[i].second = e - 1;
      out.add_term(r, c * e);
    }
  }
  return out;
}

int Poly::degree_in(Symbol s) const {
  int d = 0;
  for (const auto& [m, c] : terms_)
    for (const auto& [sym, e] : m)
      if (sym == s) d = std::max(d, e);
  return d;
}

bool Poly::contains(Symbol s) const {
  return any_symbol([s](Symbol x) { return x == s; });
}

bool Poly::any_symbol(const std::function<bool(Symbol)>& pred) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [sym, e] : m)
      if (pred(sym)) return true;
  return false;
}

std::vector<Symbol> Poly::symbols() const {
  std::vector<Symbol> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [sym, e] : m) out.push_back(sym);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Poly Poly::substitute(const std::function<std::optional<Poly>(Symbol)>& f) const {
  std::map<Symbol, std::optional<Poly>> values;
  std::map<std::pair<Symbol, int>, Poly> powers;
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly term(c);
    Monomial kept;
    for (const auto& [sym, e] : m) {
      auto it = values.find(sym);
      if (it == values.end()) it = values.emplace(sym, f(sym)).first;
      if (!it->second) {
        kept.emplace_back(sym, e);
        continue;
      }
      auto pit = powers.find({sym, e});
      if (pit == powers.end()) pit = powers.emplace(std::make_pair(sym, e), it->second->pow(e)).first;
      term *= pit->second;
    }
    if (!kept.empty()) term *= Poly::from_terms({{kept, Rational(1)}});
    out += term;
  }
  return out;
}

Poly Poly::substitute(Symbol s, const Poly& value) const {
  return substitute([&](Symbol x) -> std::optional<Poly> {
    if (x == s) return value;
    return std::nullopt;
  });
}

std::vector<std::pair<Rational, std::vector<Symbol>>> display_terms(const Poly& p) {
  std::vector<std::pair<Rational, std::vector<Symbol>>> out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Symbol> syms;
    for (const auto& [s, e] : m)
      for (int k = 0; k < e; ++k) syms.push_back(s);
    std::sort(syms.begin(), syms.end(), display_less);
    out.emplace_back(c, std::move(syms));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return std::lexicographical_compare(a.second.begin(), a.second.end(), b.second.begin(),
                                        b.second.end(), display_less);
  });
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [c, syms] : display_terms(*this)) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string body;
    for (std::size_t i = 0; i < syms.size();) {
      std::size_t j = i;
      while (j < syms.size() && syms[j] == syms[i]) ++j;
      if (!body.empty()) body += "*";
      body += syms[i].text();
      if (j - i > 1) body += "^" + std::to_string(j - i);
      i = j;
    }
    if (body.empty())
      s += to_text(a);
    else if (a == 1)
      s += body;
    else
      s += to_text(a) + "*" + body;
  }
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Poly parse_all() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly p = term();
    while (true) {
      if (eat('+'))
        p += term();
      else if (eat('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = unary();
    while (eat('*')) p *= unary();
    return p;
  }

  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    Poly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(parse_int(s_.substr(start, pos_ - start)));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
        ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return Poly(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return Poly(symbol_token());
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Symbol symbol_token() {
    std::size_t start = pos_;
    auto ident = [&]() {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    };
    ident();
    std::string_view head = s_.substr(start, pos_ - start);
    if (head == "D" && pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ >= s_.size() || s_[pos_] != ':') fail("expected ':' after D^k");
      ++pos_;
      symbol_token();
    } else if (head == "scalar" && pos_ < s_.size() && s_[pos_] == ':') {
      ++pos_;
      ident();
    } else if (pos_ < s_.size() && s_[pos_] == '[') {
      auto close = s_.find(']', pos_);
      if (close == std::string_view::npos) fail("expected ']'");
      pos_ = close + 1;
    }
    return Symbol::parse(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace sgqft
