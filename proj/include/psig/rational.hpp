#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace psig {

// Exact arithmetic everywhere: bound checks never touch floating point.
// Rationals are kept canonical (reduced, positive denominator), which is
// what GMP's mpq arithmetic requires and preserves.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(std::uint64_t num, std::uint64_t den) {
  return make_rational(BigInt(static_cast<unsigned long>(num)),
                       BigInt(static_cast<unsigned long>(den)));
}

inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace psig
