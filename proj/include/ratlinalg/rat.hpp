#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace ratlinalg {

// Arbitrary-precision integers and rationals over Q. mpq_rational keeps
// values canonical (positive denominator, gcd(|num|, den) = 1) through
// every operation, so equality and sign tests are exact.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using Vec = std::vector<Rat>;

inline int sign_of(const Rat& x) { return x.sign(); }

inline Rat abs_of(const Rat& x) { return x < 0 ? Rat(-x) : x; }

/// sgn over Q: x/|x|, or zero when x = 0.
inline Rat sgn(const Rat& x) { return Rat(x.sign()); }

inline Vec sgn(const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = sgn(v[i]);
  return out;
}

/// Renders as "p" or "p/q" with q > 1; canonical by construction.
inline std::string to_token(const Rat& x) { return x.str(); }

}  // namespace ratlinalg
