#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <unsupported/Eigen/FFT>

#include "symsq/arith.hpp"
#include "symsq/charsum.hpp"

namespace symsq::charsum {

using arith::mod;
using arith::mul_mod;

namespace {

void require_cube_primitive(const DirichletCharacter& chi) {
  if (chi.ell() != 3 || !chi.is_primitive()) throw DomainError("character must be primitive mod q^3");
}

CycNum from_counts(const std::vector<i64>& counts) {
  const auto order = static_cast<i64>(counts.size());
  CycNum z(order);
  for (i64 j = 0; j < order; ++j) {
    if (counts[j] != 0) z.add_root(j, counts[j]);
  }
  return z;
}

struct Units {
  std::vector<i64> x;
  std::vector<i64> xinv;
};

Units units_of(i64 c) {
  Units u;
  for (i64 x = 0; x < c; ++x) {
    if (arith::gcd(x, c) != 1) continue;
    u.x.push_back(x);
    u.xinv.push_back(c == 1 ? 0 : arith::inv(x, c));
  }
  return u;
}

}  // namespace

CycNum a_coeff(const DirichletCharacter& chi, int r, i64 n) {
  require_cube_primitive(chi);
  const i64 q = chi.q(), q3 = chi.modulus(), phi = chi.value_order();
  const i64 order = arith::lcm(phi, q3);
  std::vector<i64> counts(static_cast<std::size_t>(order), 0);
  const i64 nn = mod(n, q3);
  for (i64 a = 1; a < q3; ++a) {
    const i64 e = chi.exponent(a);
    if (e < 0) continue;
    i64 j = e * (order / phi) + mul_mod(a, nn, q3) * (order / q3);
    if (r % 2 == 1 && arith::jacobi(a, q) < 0) j += order / 2;
    counts[j % order] += 1;
  }
  return from_counts(counts);
}

CycNum a_r_brute(const DirichletCharacter& chi, int r, i64 n, i64 m, i64 c) {
  require_cube_primitive(chi);
  const i64 q = chi.q(), q3 = chi.modulus(), phi = chi.value_order();
  const i64 cbar = arith::inv(mod(c, q3), q3);
  const i64 nn = mul_mod(cbar, n, q3), mm = mul_mod(cbar, m, q3);
  const i64 order = arith::lcm(phi, q3);
  const i64 sphi = order / phi, sq = order / q3;
  std::vector<i64> echi(static_cast<std::size_t>(q3), -1), eleg(static_cast<std::size_t>(q3), 0);
  for (i64 a = 1; a < q3; ++a) {
    const i64 e = chi.exponent(a);
    if (e < 0) continue;
    echi[a] = e * sphi;
    eleg[a] = (r % 2 == 1 && arith::jacobi(a, q) < 0) ? order / 2 : 0;
  }
  std::vector<i64> counts(static_cast<std::size_t>(order), 0);
  for (i64 a = 1; a < q3; ++a) {
    if (echi[a] < 0) continue;
    const i64 base = echi[a] + eleg[a] + (a * nn % q3) * sq;
    for (i64 b = 1; b < q3; ++b) {
      if (echi[b] < 0) continue;
      counts[mod(base - echi[b] + eleg[b] + (b * mm % q3) * sq, order)] += 1;
    }
  }
  return from_counts(counts);
}

CycNum a_r_closed(const DirichletCharacter& chi, int r, i64 n, i64 m) {
  require_cube_primitive(chi);
  const i64 q = chi.q();
  if (mod(n, q) == 0 || mod(m, q) == 0) return CycNum::zero(1);
  CycNum a1 = a_coeff(chi, r, 1);
  CycNum z = chi.conj().value(n) * chi.value(-m) * (a1 * a1.conj());
  if (r % 2 == 1) z *= arith::jacobi(mod(-mul_mod(mod(n, q), mod(m, q), q), q), q);
  return z;
}

CycNum b_r_brute(i64 n, i64 m, i64 c, i64 q, int r) {
  if (arith::gcd(c, q) != 1) throw NonInvertible("b_r_brute: (c, q) > 1");
  const i64 qinv = arith::inv(arith::pow_mod(q, 4 + r, c), c);
  const auto u = units_of(c);
  const i64 nn = mod(n, c), mm = mod(m, c);
  std::vector<i64> counts(static_cast<std::size_t>(c), 0);
  for (i64 a = 0; a < c; ++a) {
    const i64 qa2 = qinv * (a * a % c) % c;
    for (i64 b = 0; b < c; ++b) {
      const i64 qb2 = qinv * (b * b % c) % c;
      const i64 base = mod(-2 * qinv % c * (a * b % c) + a * nn + b * mm, c);
      for (std::size_t k = 0; k < u.x.size(); ++k) {
        counts[(base + qa2 * u.x[k] + qb2 * u.xinv[k]) % c] += 1;
      }
    }
  }
  return from_counts(counts);
}

namespace {

CycNum b_r_closed_with_phase(i64 n, i64 m, i64 c, i64 q, int r, i64 phase_mult) {
  const int eta = arith::valuation(c, 2);
  if (eta < 4) throw DomainError("B_r closed form: need 16 | c");
  if (arith::gcd(c, q) != 1) throw NonInvertible("B_r closed form: (c, q) > 1");
  const i64 d = c >> eta;
  const i64 nn = mod(n, c), mm = mod(m, c);
  if (nn % 4 != 0 || mm % 4 != 0) return CycNum::zero(c);
  if (arith::gcd(nn, c) != arith::gcd(mm, c)) return CycNum::zero(c);
  const i64 np = nn / 2, mp = mm / 2;
  const i64 qq = arith::pow_mod(q, 4 + r, c);
  const i64 cp = c_pm_general_closed(mul_mod(qq, nn, c), mod(-mm, c), c, +1);
  const i64 cm = c_pm_general_closed(mul_mod(qq, nn, c), mod(-mm, c), c, -1);
  if (cp == 0 && cm == 0) return CycNum::zero(c);
  CycNum bracket = CycNum::integer(4, cp) + CycNum::imag_unit(4) * (chi_m4(d) * cm);
  CycNum phase = CycNum::root(c, mul_mod(phase_mult, mul_mod(np, mp, c), c));
  return eps_sqrt(c) * phase * bracket * c;
}

}  // namespace

CycNum b_r_closed(i64 n, i64 m, i64 c, i64 q, int r) {
  return b_r_closed_with_phase(n, m, c, q, r, arith::pow_mod(q, 4 + r, c));
}

CycNum b_r_twisted_closed(i64 n, i64 m, i64 c, i64 q, int r) {
  const i64 mult = mul_mod(arith::inv(mul_mod(q, q, c), c), arith::pow_mod(q, r, c), c);
  return b_r_closed_with_phase(n, m, c, q, r, mult);
}

CycNum d_r_brute(const DirichletCharacter& chi, int r, i64 n, i64 m, i64 c) {
  require_cube_primitive(chi);
  const i64 q = chi.q(), q3 = chi.modulus(), phi = chi.value_order();
  if (arith::gcd(c, q) != 1) throw NonInvertible("d_r_brute: (c, q) > 1");
  const i64 big = q3 * c;
  const i64 order = arith::lcm(phi, big);
  const i64 sphi = order / phi, sbig = order / big, sc = order / c;
  const i64 qinv = arith::inv(arith::pow_mod(q, 4 + r, c), c);
  const auto u = units_of(c);
  const i64 nn = mod(n, big), mm = mod(m, big);
  std::vector<i64> echi(static_cast<std::size_t>(big), -1), eleg(static_cast<std::size_t>(big), 0);
  for (i64 a = 0; a < big; ++a) {
    const i64 e = chi.exponent(a);
    if (e < 0) continue;
    echi[a] = e * sphi;
    eleg[a] = (r % 2 == 1 && arith::jacobi(a, q) < 0) ? order / 2 : 0;
  }
  std::vector<i64> counts(static_cast<std::size_t>(order), 0);
  for (i64 a = 0; a < big; ++a) {
    if (echi[a] < 0) continue;
    const i64 ac = a % c;
    const i64 qa2 = qinv * (ac * ac % c) % c;
    for (i64 b = 0; b < big; ++b) {
      if (echi[b] < 0) continue;
      const i64 bc = b % c;
      const i64 qb2 = qinv * (bc * bc % c) % c;
      const i64 outer = mod(echi[a] - echi[b] + eleg[a] + eleg[b] + ((a * nn + b * mm) % big) * sbig, order);
      const i64 cbase = mod(-2 * qinv % c * (ac * bc % c), c);
      for (std::size_t k = 0; k < u.x.size(); ++k) {
        const i64 e = (cbase + qa2 * u.x[k] + qb2 * u.xinv[k]) % c;
        counts[(outer + e * sc) % order] += 1;
      }
    }
  }
  return from_counts(counts);
}

CycNum d_r_factored(const DirichletCharacter& chi, int r, i64 n, i64 m, i64 c) {
  const i64 q = chi.q();
  const i64 q3bar = arith::inv(arith::pow_mod(q, 3, c), c);
  CycNum a = a_r_brute(chi, r, n, m, c);
  CycNum b = b_r_brute(mul_mod(q3bar, mod(n, c), c), mul_mod(q3bar, mod(m, c), c), c, q, r);
  return a * b;
}

CycNum d_r_closed(const DirichletCharacter& chi, int r, i64 n, i64 m, i64 c) {
  return a_r_closed(chi, r, n, m) * b_r_twisted_closed(n, m, c, chi.q(), r);
}

std::complex<double> DrTable::at(i64 n, i64 m) const {
  return values[static_cast<std::size_t>(mod(n, modulus) * modulus + mod(m, modulus))];
}

DrTable d_r_table(const DirichletCharacter& chi, int r, i64 c, Exec exec) {
  require_cube_primitive(chi);
  const i64 q = chi.q(), phi = chi.value_order();
  if (arith::gcd(c, q) != 1) throw NonInvertible("d_r_table: (c, q) > 1");
  const i64 big = chi.modulus() * c;
  const double two_pi = 2.0 * boost::math::constants::pi<double>();
  const i64 qinv = arith::inv(arith::pow_mod(q, 4 + r, c), c);
  const auto u = units_of(c);

  // Kloosterman kernel e(-2 qinv a b / c) S(qinv a^2, qinv b^2; c) on residues mod c.
  std::vector<std::complex<double>> kern(static_cast<std::size_t>(c * c));
  for (i64 a = 0; a < c; ++a) {
    for (i64 b = 0; b < c; ++b) {
      const i64 qa2 = qinv * (a * a % c) % c, qb2 = qinv * (b * b % c) % c;
      const i64 base = mod(-2 * qinv % c * (a * b % c), c);
      std::complex<double> s{0.0, 0.0};
      for (std::size_t k = 0; k < u.x.size(); ++k) {
        const i64 e = (base + qa2 * u.x[k] + qb2 * u.xinv[k]) % c;
        s += std::polar(1.0, two_pi * static_cast<double>(e) / static_cast<double>(c));
      }
      kern[a * c + b] = s;
    }
  }
  // chi(a) (a/q)^r along each axis.
  std::vector<std::complex<double>> w(static_cast<std::size_t>(big));
  for (i64 a = 0; a < big; ++a) {
    const i64 e = chi.exponent(a);
    if (e < 0) {
      w[a] = 0.0;
      continue;
    }
    double sgn = (r % 2 == 1 && arith::jacobi(a, q) < 0) ? -1.0 : 1.0;
    w[a] = sgn * std::polar(1.0, two_pi * static_cast<double>(e) / static_cast<double>(phi));
  }

  DrTable table;
  table.modulus = big;
  table.values.assign(static_cast<std::size_t>(big * big), 0.0);
  auto& vals = table.values;
  // Rows: F(a, .) then the unscaled inverse transform over b.
  auto row_pass = [&](i64 a) {
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    std::vector<std::complex<double>> in(static_cast<std::size_t>(big)), out;
    for (i64 b = 0; b < big; ++b) in[b] = w[a] * std::conj(w[b]) * kern[(a % c) * c + (b % c)];
    fft.inv(out, in);
    for (i64 b = 0; b < big; ++b) vals[a * big + b] = out[b];
  };
  auto col_pass = [&](i64 col) {
    Eigen::FFT<double> fft;
    fft.SetFlag(Eigen::FFT<double>::Unscaled);
    std::vector<std::complex<double>> in(static_cast<std::size_t>(big)), out;
    for (i64 a = 0; a < big; ++a) in[a] = vals[a * big + col];
    fft.inv(out, in);
    for (i64 a = 0; a < big; ++a) vals[a * big + col] = out[a];
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (i64 a = 0; a < big; ++a) row_pass(a);
#pragma omp parallel for schedule(static)
    for (i64 col = 0; col < big; ++col) col_pass(col);
  } else {
    for (i64 a = 0; a < big; ++a) row_pass(a);
    for (i64 col = 0; col < big; ++col) col_pass(col);
  }
  return table;
}

}  // namespace symsq::charsum
