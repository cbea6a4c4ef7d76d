#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace khs {

// Exact rational scalar. All homology ranks and filtration levels are computed
// over Q with arbitrary-precision integers; no floating point anywhere.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Pivot quality heuristic: total bit length of numerator and denominator.
// Smaller is better; keeps elimination coefficients from blowing up.
inline std::size_t bit_size(const Rational& r) {
  return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace khs
