#include "sgqft/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sgqft {

std::string to_pq(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_text(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_pq(r);
}

Rational parse_rational(std::string_view s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (std::size_t i = start; i < t.size(); ++i) {
    if (t[i] == '/') {
      if (seen_slash) throw std::invalid_argument("bad rational: " + t);
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(t[i]))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw std::invalid_argument("bad rational: " + t);
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw std::invalid_argument("bad rational: " + t);
  if (t[0] == '+') t.erase(0, 1);
  Rational r;
  r.set_str(t, 10);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + t);
  r.canonicalize();
  return r;
}

Rational factorial(int n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return Rational(z);
}

Rational inverse(std::uint64_t n) {
  if (n == 0) throw std::domain_error("inverse of zero");
  Rational r(mpz_class(1), mpz_class(static_cast<unsigned long>(n)));
  r.canonicalize();
  return r;
}

}  // namespace sgqft
