#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace sgqft {

using Rational = mpq_class;

// "p/q" with q > 0, also for integers
std::string to_pq(const Rational& r);

// "p" when integral, "p/q" otherwise
std::string to_text(const Rational& r);

// accepts "p", "p/q", "-p/q"; throws std::invalid_argument
Rational parse_rational(std::string_view s);

Rational factorial(int n);
Rational inverse(std::uint64_t n);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace sgqft
