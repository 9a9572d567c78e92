#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "psig/errors.hpp"
#include "psig/rational.hpp"

namespace psig {

inline constexpr std::uint64_t kMaxFactorizeInput =
    9223372036854775807ULL;  // 2^63 - 1

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition of a positive integer.  Factors are strictly
/// ascending by prime; n == 1 has an empty factor list.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  std::uint64_t smallest_prime() const {
    if (factors.empty())
      throw std::invalid_argument("smallest_prime: n = 1 has no prime divisor");
    return factors.front().prime;
  }

  std::uint64_t largest_prime() const {
    if (factors.empty())
      throw std::invalid_argument("largest_prime: n = 1 has no prime divisor");
    return factors.back().prime;
  }
};

/// Deterministic trial division; intended for desk-scale inputs.
inline Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  if (n > kMaxFactorizeInput)
    throw std::invalid_argument("factorize: n exceeds 2^63 - 1");
  Factorization result;
  result.n = n;
  auto strip = [&](std::uint64_t p) {
    if (n % p != 0) return;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    result.factors.push_back({p, e});
  };
  strip(2);
  strip(3);
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) result.factors.push_back({n, 1});
  return result;
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

/// All primes <= bound, ascending.
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

/// The first `count` primes, ascending.
inline std::vector<std::uint64_t> first_primes(std::size_t count) {
  if (count == 0) return {};
  // p_k < k (ln k + ln ln k) for k >= 6; pad for small counts.
  double k = static_cast<double>(count);
  std::uint64_t bound =
      count < 6 ? 13
                : static_cast<std::uint64_t>(k * (std::log(k) + std::log(std::log(k))) * 1.2) + 16;
  std::vector<std::uint64_t> primes = sieve_primes(bound);
  while (primes.size() < count) {
    bound *= 2;
    primes = sieve_primes(bound);
  }
  primes.resize(count);
  return primes;
}

inline std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t result = f.n;
  for (const PrimePower& pp : f.factors) {
    result /= pp.prime;
    result *= pp.prime - 1;
  }
  return result;
}

/// phi(n) = n * prod (1 - 1/p) over the prime divisors of n.
inline std::uint64_t euler_phi(std::uint64_t n) { return euler_phi(factorize(n)); }

struct BoundCheck {
  Rational bound;
  bool holds = false;
};

/// Lower bound phi(n) >= (q-1) n / p, q and p the smallest and largest
/// prime divisors of n.  Requires n >= 2.
inline BoundCheck phi_lower_bound(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("phi_lower_bound: n must be >= 2");
  Factorization f = factorize(n);
  BigInt num = BigInt(static_cast<unsigned long>(f.smallest_prime() - 1)) *
               BigInt(static_cast<unsigned long>(n));
  BoundCheck check;
  check.bound = make_rational(num, BigInt(static_cast<unsigned long>(f.largest_prime())));
  check.holds = Rational(BigInt(static_cast<unsigned long>(euler_phi(f)))) >= check.bound;
  return check;
}

/// psi(C_{p^r}) = (p^{2r+1} + 1) / (p + 1), an exact integer.
inline BigInt psi_cyclic_prime_power(std::uint64_t p, std::uint32_t r) {
  BigInt pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), 2UL * r + 1UL);
  pw += 1;
  BigInt result;
  mpz_divexact_ui(result.get_mpz_t(), pw.get_mpz_t(),
                  static_cast<unsigned long>(p + 1));
  return result;
}

/// Sum of element orders of the cyclic group of order n, by the
/// multiplicative closed form over the factorization of n.
inline BigInt psi_cyclic(std::uint64_t n) {
  Factorization f = factorize(n);
  BigInt result = 1;
  for (const PrimePower& pp : f.factors)
    result *= psi_cyclic_prime_power(pp.prime, pp.exponent);
  return result;
}

/// psi(C_n) >= 2 n^2 / (p + 1), p the largest prime divisor.  n >= 2.
inline BoundCheck psi_cyclic_floor(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("psi_cyclic_floor: n must be >= 2");
  Factorization f = factorize(n);
  BigInt n2 = BigInt(static_cast<unsigned long>(n));
  n2 *= n2;
  BoundCheck check;
  check.bound = make_rational(2 * n2, BigInt(static_cast<unsigned long>(f.largest_prime() + 1)));
  check.holds = Rational(psi_cyclic(n)) >= check.bound;
  return check;
}

/// Partial product prod_{i=1..s} (q_i^2 + 1)/(q_i^2 - 1) over the first s
/// primes.  Strictly increasing in s with limit 5/2.
inline Rational ramanujan_partial(std::size_t s) {
  if (s == 0) throw std::invalid_argument("ramanujan_partial: s must be >= 1");
  std::vector<std::uint64_t> primes = first_primes(s);
  BigInt num = 1;
  BigInt den = 1;
  for (std::uint64_t q : primes) {
    unsigned long q2 = static_cast<unsigned long>(q * q);
    num *= q2 + 1;
    den *= q2 - 1;
  }
  return make_rational(num, den);
}

struct Lemma28Result {
  Rational value;
  bool holds = false;  // value > 5/6; always true when the least prime > 3
};

/// prod (p^2 - 1)/(p^2 + 1) over a strictly ascending list of primes.
inline Lemma28Result lemma28_product(const std::vector<std::uint64_t>& primes) {
  if (primes.empty())
    throw std::invalid_argument("lemma28_product: prime list must be non-empty");
  std::uint64_t prev = 0;
  for (std::uint64_t p : primes) {
    if (p <= prev)
      throw std::invalid_argument("lemma28_product: primes must be strictly ascending");
    if (!is_prime(p))
      throw std::invalid_argument("lemma28_product: " + std::to_string(p) + " is not prime");
    prev = p;
  }
  BigInt num = 1;
  BigInt den = 1;
  for (std::uint64_t p : primes) {
    BigInt p2 = BigInt(static_cast<unsigned long>(p));
    p2 *= p2;
    num *= p2 - 1;
    den *= p2 + 1;
  }
  Lemma28Result result;
  result.value = make_rational(num, den);
  result.holds = result.value > make_rational(5, 6);
  return result;
}

}  // namespace psig
