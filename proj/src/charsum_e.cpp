#include "symsq/arith.hpp"
#include "symsq/charsum.hpp"

namespace symsq::charsum {

using arith::mod;
using arith::mul_mod;

namespace {

// (b / k) for k > 0 is periodic mod `period` in b.
bool kronecker_periodic(i64 k, i64 period) {
  const int v = arith::valuation(k, 2);
  if (period % (k >> v) != 0) return false;
  return v % 2 == 0 || period % 8 == 0;
}

bool divides_power(i64 x, i64 base) {
  for (auto [p, e] : arith::factorize(x)) {
    if (base % p != 0) return false;
  }
  return true;
}

}  // namespace

CycNum g_star(i64 delta, i64 u, i64 v, i64 c2) {
  if (delta < 1 || u < 1 || v < 1) throw DomainError("g_star: delta, u, v must be positive");
  if (arith::gcd(u, v) != 1 || !divides_power(u * v, 2 * delta)) {
    throw DomainError("g_star: need (u, v) = 1 and uv | (2 delta)^infinity");
  }
  const i64 k = 2 * delta * u * v;
  if (!kronecker_periodic(u * v, k)) throw DomainError("g_star: (b/uv) is not periodic mod 2 delta u v");
  CycNum z(k);
  const i64 cc = mod(c2, k);
  for (i64 b = 1; b < k; ++b) {
    if (arith::gcd(b, k) != 1) continue;
    z.add_root(mul_mod(b, cc, k), arith::kronecker(b, u * v));
  }
  return z;
}

i64 g_star_bound(i64 delta, i64 u, i64 v, i64 c2) {
  const auto ds = arith::square_split(delta);
  i64 g1, g2;
  if (c2 == 0) {
    g1 = ds.free;
    g2 = ds.free * ds.root;
  } else {
    const auto cs = arith::square_split(c2 < 0 ? -c2 : c2);
    g1 = arith::gcd(ds.free, cs.free);
    g2 = arith::gcd(ds.free * ds.root, cs.root);
  }
  return u * v * ds.root * g1 * g2;
}

CycNum s_r_q2(i64 x, i64 y, i64 q, int r) {
  const i64 q2 = q * q;
  const i64 xx = mod(x, q2), yy = mod(y, q2);
  CycNum z(q2);
  for (i64 b = 1; b < q2; ++b) {
    if (b % q == 0) continue;
    const int s = (r % 2 == 1) ? arith::jacobi(b, q) : 1;
    z.add_root(mul_mod(xx, b, q2) + mul_mod(yy, arith::inv(b, q2), q2), s);
  }
  return z;
}

CycNum s_r_zero_closed(i64 q, int r, i64 c1, i64 delta) {
  if (mod(c1 * delta, q) == 0) throw DomainError("s_r_zero_closed: q divides c1 delta");
  if (r == 1) {
    const int sym = arith::jacobi(mod(-mul_mod(mod(c1, q), mod(delta, q), q), q), q);
    CycNum z = quadratic_gauss_odd(q) * q;
    z *= sym;
    return z;
  }
  if (r > 0 && r % 2 == 0) return CycNum::integer(1, q * (q - 1));
  return CycNum::zero(1);
}

CycNum e_sum_brute(int r, i64 q, i64 c1, i64 c2, i64 big_n, i64 big_m) {
  const i64 l = arith::lcm(big_n, big_m);
  const i64 k = 2 * q * q * l;
  const i64 q2 = q * q;
  const i64 nm_q2 = mul_mod(mul_mod(mod(big_n, q2), mod(big_m, q2), q2), arith::pow_mod(q, r, q2), q2);
  const i64 c1_q2 = mod(c1, q2);
  const i64 scale = k / q2;
  const i64 cc = mod(c2, k);
  CycNum z(k);
  for (i64 b = 1; b < k; ++b) {
    if (arith::gcd(b, k) != 1) continue;
    int s = arith::kronecker(b, big_n) * arith::kronecker(b, big_m);
    if (r % 2 == 1) s *= arith::jacobi(b, q);
    const i64 inv = arith::inv(mul_mod(c1_q2, b % q2, q2), q2);
    const i64 e1 = mod(-mul_mod(inv, nm_q2, q2), q2);
    z.add_root(e1 * scale + mul_mod(b, cc, k), s);
  }
  return z;
}

bool e_sum_admissible(i64 q, i64 c1, i64 delta, i64 u, i64 v, i64 n, i64 m) {
  if (mod(c1, q) == 0 || mod(delta, q) == 0) return false;
  if (arith::gcd(u, v) != 1 || arith::gcd(n, m) != 1) return false;
  if (mod(n, 4) != 1 || mod(m, 4) != 1) return false;
  if (arith::gcd(n * m, delta * q) != 1) return false;
  if (!divides_power(u * v, 2 * delta)) return false;
  return kronecker_periodic(u * v, 2 * delta * u * v);
}

CycNum e_sum_factored(int r, i64 q, i64 c1, i64 c2, i64 delta, i64 u, i64 v, i64 n, i64 m, bool with_two_factor) {
  if (!e_sum_admissible(q, c1, delta, u, v, n, m)) throw DomainError("e_sum_factored: inadmissible parameters");
  const i64 q2 = q * q;
  CycNum z = g_star(delta, u, v, c2) * gauss_sum(n, c2) * gauss_sum(m, c2);
  const i64 two_bar = arith::inv(2, q2);
  const i64 c1_bar = arith::inv(mod(c1, q2), q2);
  const i64 y = mod(-mul_mod(mul_mod(c1_bar, arith::pow_mod(q, r, q2), q2), mod(delta, q2), q2), q2);
  z = z * s_r_q2(mul_mod(two_bar, mod(c2, q2), q2), y, q, r);
  int sign = arith::jacobi(mod(delta, n * m), n * m);
  if (with_two_factor) sign *= arith::jacobi(2, n * m);
  if (r % 2 == 1) {
    const i64 prod = mul_mod(mul_mod(mod(delta * u, q), mod(v * n, q), q), mod(m, q), q);
    sign *= arith::jacobi(prod, q);
  }
  z *= sign;
  return z;
}

CycNum g_c2(i64 n, i64 c2) {
  if (n < 1 || n % 2 == 0) throw DomainError("g_c2: n must be odd and positive");
  CycNum g = gauss_sum(n, c2);
  if (n % 4 == 1) return g;
  return CycNum::root(4, 3) * g;
}

}  // namespace symsq::charsum
