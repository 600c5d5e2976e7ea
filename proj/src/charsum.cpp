#include "symsq/charsum.hpp"

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "symsq/arith.hpp"

namespace symsq::charsum {

using arith::mod;
using arith::mul_mod;

CycNum additive(i64 num, i64 den) { return CycNum::root(den, num); }

CycNum quadratic_gauss_odd(i64 d) {
  if (d <= 0 || d % 2 == 0) throw DomainError("quadratic_gauss_odd: d must be odd and positive");
  CycNum z(d);
  for (i64 x = 0; x < d; ++x) z.add_root(mul_mod(x, x, d));
  return z;
}

CycNum sqrt2() { return CycNum::root(8, 1) + CycNum::root(8, 7); }

CycNum eps_sqrt(i64 c) {
  const int eta = arith::valuation(c, 2);
  const i64 d = c >> eta;
  CycNum z = quadratic_gauss_odd(d) * (i64{1} << (eta / 2));
  if (eta % 2 == 1) z = z * sqrt2();
  return z;
}

namespace {

struct UnitTable {
  std::vector<i64> units;
  std::vector<i64> inverses;
};

UnitTable units_mod(i64 c) {
  UnitTable t;
  if (c == 1) {
    t.units.push_back(0);
    t.inverses.push_back(0);
    return t;
  }
  for (i64 x = 1; x < c; ++x) {
    if (arith::gcd(x, c) != 1) continue;
    t.units.push_back(x);
    t.inverses.push_back(arith::inv(x, c));
  }
  return t;
}

int legendre_pow(i64 a, i64 q, int r) {
  int s = arith::jacobi(a, q);
  return (r % 2 == 0) ? (s == 0 ? 0 : 1) : s;
}

}  // namespace

// ---------------------------------------------------------------- Kloosterman

CycNum kloosterman(i64 a, i64 b, i64 c) {
  if (c < 1) throw DomainError("kloosterman: c must be positive");
  a = mod(a, c);
  b = mod(b, c);
  const auto t = units_mod(c);
  CycNum z(c);
  for (std::size_t i = 0; i < t.units.size(); ++i) {
    z.add_root(mul_mod(a, t.units[i], c) + mul_mod(b, t.inverses[i], c));
  }
  return z;
}

double kloosterman_real(i64 a, i64 b, i64 c) {
  a = mod(a, c);
  b = mod(b, c);
  const auto t = units_mod(c);
  const double w = 2.0 * boost::math::constants::pi<double>() / static_cast<double>(c);
  double s = 0.0;
  for (std::size_t i = 0; i < t.units.size(); ++i) {
    const i64 e = mod(mul_mod(a, t.units[i], c) + mul_mod(b, t.inverses[i], c), c);
    s += std::cos(w * static_cast<double>(e));
  }
  return s;
}

std::vector<double> kloosterman_batch(const std::vector<std::pair<i64, i64>>& ab, i64 c, Exec exec) {
  const auto t = units_mod(c);
  std::vector<double> cos_table(static_cast<std::size_t>(c));
  const double w = 2.0 * boost::math::constants::pi<double>() / static_cast<double>(c);
  for (i64 j = 0; j < c; ++j) cos_table[j] = std::cos(w * static_cast<double>(j));
  std::vector<double> out(ab.size());
  const auto n = static_cast<std::int64_t>(ab.size());
  auto one = [&](std::int64_t k) {
    const i64 a = mod(ab[k].first, c), b = mod(ab[k].second, c);
    double s = 0.0;
    for (std::size_t i = 0; i < t.units.size(); ++i) {
      s += cos_table[(a * t.units[i] + b * t.inverses[i]) % c];
    }
    out[k] = s;
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t k = 0; k < n; ++k) one(k);
  } else {
    for (std::int64_t k = 0; k < n; ++k) one(k);
  }
  return out;
}

std::pair<CycNum, CycNum> kloosterman_twisted_split(i64 n, i64 m, i64 q, int s, i64 cprime) {
  if (s < 1) throw DomainError("kloosterman_twisted_split: s must be positive");
  if (arith::gcd(cprime, q) != 1) throw NonInvertible("kloosterman_twisted_split: (c', q) > 1");
  const i64 qs = arith::ipow(q, s);
  const i64 cbar = arith::inv(cprime, qs);
  const i64 n2q = mul_mod(n, n, qs), m2q = mul_mod(m, m, qs);
  CycNum first = kloosterman(mul_mod(cbar, n2q, qs), mul_mod(cbar, m2q, qs), qs);
  if (cprime == 1) return {first, CycNum::integer(1, 1)};
  const i64 qbar = arith::inv(qs % cprime, cprime);
  const i64 n2c = mul_mod(n, n, cprime), m2c = mul_mod(m, m, cprime);
  CycNum second = kloosterman(mul_mod(qbar, n2c, cprime), mul_mod(qbar, m2c, cprime), cprime);
  return {first, second};
}

std::complex<double> salie_eval(i64 a, i64 q, int s) {
  if (mod(a, q) == 0) throw DomainError("salie_eval: q divides a");
  const double pi = boost::math::constants::pi<double>();
  const i64 qs = arith::ipow(q, s);
  const int sym = legendre_pow(a, q, s);
  const double ang = 2.0 * pi * static_cast<double>(mod(2 * a, qs)) / static_cast<double>(qs);
  std::complex<double> eps = (qs % 4 == 1) ? std::complex<double>{1.0, 0.0} : std::complex<double>{0.0, 1.0};
  std::complex<double> z = eps * std::complex<double>{std::cos(ang), std::sin(ang)};
  return 2.0 * sym * std::pow(static_cast<double>(q), 0.5 * s) * z.real();
}

CycNum salie_exact(i64 a, i64 q, int s) {
  if (mod(a, q) == 0) throw DomainError("salie_exact: q divides a");
  if (s < 1) throw DomainError("salie_exact: s must be positive");
  const i64 qs = arith::ipow(q, s);
  const int sym = legendre_pow(a, q, s);
  CycNum half;
  if (s % 2 == 0) {
    half = CycNum::root(qs, 2 * a) * arith::ipow(q, s / 2);
  } else {
    // q^{s/2} eps_q = q^{(s-1)/2} g(1; q)
    half = quadratic_gauss_odd(q).lifted(qs) * CycNum::root(qs, 2 * a) * arith::ipow(q, (s - 1) / 2);
  }
  CycNum z = half + half.conj();
  z *= sym;
  return z;
}

// --------------------------------------------------------------- Gauss sums

CycNum gauss_sum(i64 n, i64 c) {
  if (n < 1 || n % 2 == 0) throw DomainError("gauss_sum: n must be odd and positive");
  CycNum z(n);
  if (n == 1) return CycNum::integer(1, 1);
  const i64 cc = mod(c, n);
  for (i64 b = 1; b < n; ++b) {
    const int s = arith::jacobi(b, n);
    if (s == 0) continue;
    z.add_root(mul_mod(b, cc, n), s);
  }
  return z;
}

CycNum quadratic_gauss_brute(i64 a, i64 b, i64 c) {
  CycNum z(c);
  a = mod(a, c);
  b = mod(b, c);
  for (i64 x = 0; x < c; ++x) z.add_root(mul_mod(a, mul_mod(x, x, c), c) + mul_mod(b, x, c));
  return z;
}

CycNum quadratic_gauss_complete(i64 a, i64 b, i64 c) {
  const int eta = arith::valuation(c, 2);
  if (eta < 4) throw DomainError("quadratic_gauss_complete: need 16 | c");
  if (arith::gcd(a, c) != 1) throw DomainError("quadratic_gauss_complete: a must be a unit mod c");
  if (mod(b, 2) == 1) return CycNum::zero(c);
  const i64 d = c >> eta;
  const i64 abar = arith::inv(a, c);
  const i64 bh = mod(b / 2, c);
  CycNum phase = CycNum::root(c, -mul_mod(abar, mul_mod(bh, bh, c), c));
  CycNum two_adic(4);
  if (eta % 2 == 0) {
    two_adic = CycNum::integer(4, 1) + CycNum::imag_unit(4) * chi_m4(mod(a * (d % 4), 4));
  } else {
    two_adic = CycNum::integer(4, chi_8(a)) + CycNum::imag_unit(4) * (chi_m4(d) * chi_m8(a));
  }
  return eps_sqrt(c) * phase * two_adic * arith::jacobi(a, d);
}

// ------------------------------------------------------- C-type character sums

i64 c_sum_brute(i64 n, i64 m, i64 d) {
  if (d < 1 || d % 2 == 0) throw DomainError("c_sum_brute: d must be odd and positive");
  if (d == 1) return 1;
  const i64 nn = mod(n, d), mm = mod(m, d);
  i64 s = 0;
  for (i64 a = 1; a < d; ++a) {
    if (mod(mul_mod(a, nn, d) - mm, d) != 0) continue;
    s += arith::jacobi(a, d);
  }
  return s;
}

i64 c_sum_closed(i64 n, i64 m, i64 d) {
  if (d < 1 || d % 2 == 0) throw DomainError("c_sum_closed: d must be odd and positive");
  i64 total = 1;
  for (auto [p, l] : arith::factorize(d)) {
    const i64 pl = arith::ipow(p, l);
    const i64 nn = mod(n, pl), mm = mod(m, pl);
    const int jn = std::min(arith::valuation(nn, p), l);
    const int jm = std::min(arith::valuation(mm, p), l);
    i64 local = 0;
    if (jn == jm && jn < l) {
      const i64 pj = arith::ipow(p, jn);
      const i64 ns = mod(nn / pj, p), ms = mod(mm / pj, p);
      local = legendre_pow(ns * ms, p, l) * pj;
    } else if (jn >= l && jm >= l) {
      local = (l % 2 == 0) ? arith::euler_phi(pl) : 0;
    }
    total *= local;
    if (total == 0) return 0;
  }
  return total;
}

TwoAdicCharacter psi_character(int eta, int sign) {
  return {sign > 0 ? TwoAdicLabel::PsiPlus : TwoAdicLabel::PsiMinus, eta % 2};
}

i64 c_pm_brute(i64 n, i64 m, int eta, int sign) {
  if (eta < 4) throw DomainError("c_pm_brute: eta must be at least 4");
  const i64 c = i64{1} << eta;
  const auto psi = psi_character(eta, sign);
  const i64 nn = mod(n, c), mm = mod(m, c);
  i64 s = 0;
  for (i64 a = 1; a < c; a += 2) {
    if (mod(a * nn - mm, c) == 0) s += two_adic_eval(psi, a);
  }
  return s;
}

i64 c_pm_closed(i64 n, i64 m, int eta, int sign) {
  if (eta < 4) throw DomainError("c_pm_closed: eta must be at least 4");
  const i64 c = i64{1} << eta;
  const auto psi = psi_character(eta, sign);
  const bool trivial = (eta % 2 == 0) && sign > 0;
  const i64 nn = mod(n, c), mm = mod(m, c);
  const int jn = std::min(arith::valuation(nn, 2), eta);
  const int jm = std::min(arith::valuation(mm, 2), eta);
  const int margin = (eta % 2 == 0) ? 2 : 3;
  if (jn == jm && jn + margin <= eta) {
    const i64 pj = i64{1} << jn;
    return two_adic_eval(psi, mod((nn / pj) * (mm / pj), 8)) * pj;
  }
  // Remaining even-eta cases: a n = m holds for every odd a.
  if (eta % 2 == 0 && trivial) {
    if ((jn == eta - 1 && jm == eta - 1) || (jn >= eta && jm >= eta)) return c / 2;
  }
  return 0;
}

i64 c_pm_general_brute(i64 n, i64 m, i64 c, int sign) {
  const int eta = arith::valuation(c, 2);
  if (eta < 4) throw DomainError("c_pm_general_brute: need 16 | c");
  const i64 d = c >> eta;
  const auto psi = psi_character(eta, sign);
  const i64 nn = mod(n, c), mm = mod(m, c);
  i64 s = 0;
  for (i64 a = 1; a < c; a += 2) {
    if (arith::gcd(a, d) != 1) continue;
    if (mod(mul_mod(a, nn, c) - mm, c) != 0) continue;
    s += arith::jacobi(a, d) * two_adic_eval(psi, a);
  }
  return s;
}

i64 c_pm_general_closed(i64 n, i64 m, i64 c, int sign) {
  const int eta = arith::valuation(c, 2);
  if (eta < 4) throw DomainError("c_pm_general_closed: need 16 | c");
  const i64 d = c >> eta;
  const i64 odd = c_sum_closed(n, m, d);
  if (odd == 0) return 0;
  return odd * c_pm_closed(n, m, eta, sign);
}

CorDecomposition cor_decompose(i64 n, i64 m, i64 c, int sign) {
  if (n == 0 || m == 0) throw DomainError("cor_decompose: n and m must be nonzero");
  CorDecomposition out;
  out.delta = arith::gcd(n, m);
  out.nstar = n / out.delta;
  out.mstar = m / out.delta;
  for (auto [p, e] : arith::factorize(c)) {
    const i64 pe = arith::ipow(p, e);
    if (n % p == 0 || m % p == 0) {
      out.c1 *= pe;
      if (out.delta % p != 0) out.c1_divides_delta_power = false;
    } else {
      out.c2 *= pe;
    }
  }
  out.c11 = arith::square_split(out.c1).free;
  const int eta = arith::valuation(c, 2);
  const i64 prod_mod8 = mod(mod(out.nstar, 8) * mod(out.mstar, 8), 8);
  if (prod_mod8 % 2 == 0) {
    out.prefactor = 0;
    return out;
  }
  i64 odd = out.c11 * out.c2;
  while (odd % 2 == 0) odd /= 2;
  const i64 ns = mod(out.nstar, odd), ms = mod(out.mstar, odd);
  out.prefactor = arith::jacobi(mul_mod(ns, ms, odd), odd) * two_adic_eval(psi_character(eta, sign), prod_mod8);
  return out;
}

}  // namespace symsq::charsum
