#include "symsq/arith.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

namespace symsq::arith {

Residue::Residue(i64 v, i64 m) : value(mod(v, m)), modulus(m) {
  if (m <= 0) throw DomainError("Residue: modulus must be positive");
}

Residue Residue::operator+(const Residue& o) const {
  if (o.modulus != modulus) throw DomainError("Residue: modulus mismatch");
  return {value + o.value, modulus};
}

Residue Residue::operator-(const Residue& o) const {
  if (o.modulus != modulus) throw DomainError("Residue: modulus mismatch");
  return {value - o.value, modulus};
}

Residue Residue::operator*(const Residue& o) const {
  if (o.modulus != modulus) throw DomainError("Residue: modulus mismatch");
  return {mul_mod(value, o.value, modulus), modulus};
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 lcm(i64 a, i64 b) {
  if (a == 0 || b == 0) return 0;
  return std::abs(a / gcd(a, b) * b);
}

i64 mul_mod(i64 a, i64 b, i64 m) {
  return static_cast<i64>(mod(static_cast<i64>((static_cast<i128>(mod(a, m)) * mod(b, m)) % m), m));
}

i64 pow_mod(i64 base, i64 exp, i64 m) {
  i64 result = 1 % m;
  base = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

i64 ipow(i64 base, int exp) {
  i64 r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Residue mod_inverse(i64 a, i64 m) {
  if (m <= 0) throw DomainError("mod_inverse: modulus must be positive");
  i64 old_r = mod(a, m), r = m;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 qt = old_r / r;
    i64 t = old_r - qt * r;
    old_r = r;
    r = t;
    t = old_s - qt * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1 && m != 1) {
    throw NonInvertible("mod_inverse: gcd(" + std::to_string(a) + ", " + std::to_string(m) + ") > 1");
  }
  return {old_s, m};
}

i64 inv(i64 a, i64 m) { return mod_inverse(a, m).value; }

int jacobi(i64 a, i64 n) {
  if (n <= 0 || n % 2 == 0) throw DomainError("jacobi: n must be odd and positive");
  a = mod(a, n);
  int t = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 r = n % 8;
      if (r == 3 || r == 5) t = -t;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    a %= n;
  }
  return n == 1 ? t : 0;
}

int kronecker(i64 a, i64 n) {
  if (a == 0 && n == 0) throw DomainError("kronecker: both arguments zero");
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  if (v > 0) {
    if (a % 2 == 0) return 0;
    if (v % 2 == 1) {
      i64 r = mod(a, 8);
      if (r == 3 || r == 5) result = -result;
    }
  }
  if (n == 1) return result;
  return result * jacobi(a, n);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  i64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (i64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    i64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
  if (n <= 0) throw DomainError("factorize: n must be positive");
  std::vector<std::pair<i64, int>> out;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

i64 euler_phi(i64 n) {
  i64 r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

int valuation(i64 n, i64 p) {
  if (n == 0) return 1000;
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

SquareSplit square_split(i64 n) {
  SquareSplit s;
  for (auto [p, e] : factorize(n)) {
    if (e % 2) s.free *= p;
    s.root *= ipow(p, e / 2);
  }
  return s;
}

bool is_squarefree(i64 n) {
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

bool is_square(i64 n) {
  if (n < 0) return false;
  i64 r = static_cast<i64>(std::llround(std::sqrt(static_cast<long double>(n))));
  for (i64 t = r > 0 ? r - 1 : 0; t <= r + 1; ++t) {
    if (t * t == n) return true;
  }
  return false;
}

i64 part_supported_on(i64 n, i64 base) {
  i64 out = 1;
  for (auto [p, e] : factorize(n)) {
    if (base % p == 0) out *= ipow(p, e);
  }
  return out;
}

i64 multiplicative_order(i64 a, i64 m) {
  i64 phi = euler_phi(m);
  i64 order = phi;
  for (auto [p, e] : factorize(phi)) {
    for (int i = 0; i < e; ++i) {
      if (pow_mod(a, order / p, m) == 1) {
        order /= p;
      } else {
        break;
      }
    }
  }
  return order;
}

i64 primitive_root_prime_power(i64 p, int l) {
  if (p == 2 || !is_prime(p)) throw DomainError("primitive_root_prime_power: p must be an odd prime");
  i64 m = ipow(p, l);
  i64 phi = euler_phi(m);
  for (i64 g = 2; g < m; ++g) {
    if (g % p == 0) continue;
    if (multiplicative_order(g, m) == phi) return g;
  }
  return 1;  // m = 3^0 style degenerate moduli only
}

std::vector<i64> primes_up_to(i64 limit) {
  std::vector<i64> out;
  if (limit < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(limit + 1), true);
  for (i64 i = 2; i <= limit; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (i64 j = i * i; j <= limit; j += i) sieve[j] = false;
  }
  return out;
}

int moebius(i64 n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

}  // namespace symsq::arith
