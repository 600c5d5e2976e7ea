#pragma once

// Integer and modular helpers shared by every sum evaluator.

#include <cstdint>
#include <utility>
#include <vector>

#include "symsq/error.hpp"

namespace symsq::arith {

using i64 = std::int64_t;
using i128 = __int128;

/// Element of Z/mZ, always stored reduced into [0, m).
struct Residue {
  i64 value = 0;
  i64 modulus = 1;

  Residue() = default;
  Residue(i64 v, i64 m);

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  bool operator==(const Residue& o) const = default;
};

/// Least non-negative residue of a mod m (m > 0).
constexpr i64 mod(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 gcd(i64 a, i64 b);
i64 lcm(i64 a, i64 b);
i64 mul_mod(i64 a, i64 b, i64 m);
i64 pow_mod(i64 base, i64 exp, i64 m);
i64 ipow(i64 base, int exp);

/// Inverse of a modulo m; throws NonInvertible when gcd(a, m) > 1.
Residue mod_inverse(i64 a, i64 m);

/// Inverse as a plain integer in [0, m) (m = 1 gives 0).
i64 inv(i64 a, i64 m);

/// Kronecker symbol (a/n), including n even and n negative.
int kronecker(i64 a, i64 n);

/// Jacobi symbol (a/n) for odd n > 0.
int jacobi(i64 a, i64 n);

bool is_prime(i64 n);

/// Prime factorisation as (p, exponent) pairs in increasing order.
std::vector<std::pair<i64, int>> factorize(i64 n);

i64 euler_phi(i64 n);

/// Exponent of p in n; n = 0 yields a sentinel of 1000.
int valuation(i64 n, i64 p);

/// Writes n = free * root^2 with free square-free (n > 0).
struct SquareSplit {
  i64 free = 1;
  i64 root = 1;
};
SquareSplit square_split(i64 n);

bool is_squarefree(i64 n);
bool is_square(i64 n);

/// Largest divisor of n composed only of primes dividing base.
i64 part_supported_on(i64 n, i64 base);

/// Multiplicative order of a modulo m (a a unit).
i64 multiplicative_order(i64 a, i64 m);

/// Smallest generator of the cyclic group (Z/p^l)^*, p odd prime.
i64 primitive_root_prime_power(i64 p, int l);

/// Primes up to limit (inclusive).
std::vector<i64> primes_up_to(i64 limit);

/// Moebius function.
int moebius(i64 n);

}  // namespace symsq::arith
