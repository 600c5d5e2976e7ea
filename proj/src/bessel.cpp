#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "symsq/special.hpp"

namespace symsq::special {

namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

const double kPi = boost::math::constants::pi<double>();

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

}  // namespace

BesselValue bessel_j_series(double nu, double x) {
  if (x <= 0.0 || nu < 0.0) throw DomainError("bessel_j_series: need nu >= 0, x > 0");
  const Real half = Real(x) / 2;
  const Real h2 = half * half;
  const Real rnu(nu);
  Real term = pow(half, rnu) / boost::math::tgamma(rnu + 1);
  Real sum = term;
  Real biggest = abs(term);
  BesselValue out;
  for (int m = 0; m < 2000; ++m) {
    term *= -h2 / (Real(m + 1) * (Real(m + 1) + rnu));
    sum += term;
    if (abs(term) > biggest) biggest = abs(term);
    if (m > x && abs(term) < abs(sum) * Real("1e-55")) {
      out.converged = true;
      break;
    }
  }
  out.value = static_cast<double>(sum);
  out.error = static_cast<double>(biggest * Real("1e-49") + abs(term));
  return out;
}

BesselValue bessel_j_asymptotic(double nu, double x) {
  if (x <= 0.0 || nu < 0.0) throw DomainError("bessel_j_asymptotic: need nu >= 0, x > 0");
  const Real rx(x);
  const Real mu = 4 * Real(nu) * Real(nu);
  Real p = 0, qq = 0;
  Real a = 1;  // a_k(nu) / x^k
  Real last = 1;
  BesselValue out;
  for (int k = 0; k < 500; ++k) {
    if (k > 0) {
      a *= (mu - Real(2 * k - 1) * (2 * k - 1)) / (Real(k) * 8 * rx);
      // Terms may grow while (2k-1)^2 < 4 nu^2; stop at the first increase after that.
      if (2 * k - 1 > 2 * nu + 1 && abs(a) > last) break;
      last = abs(a);
    }
    const int sgn = ((k / 2) % 2 == 0) ? 1 : -1;
    if (k % 2 == 0) {
      p += sgn * a;
    } else {
      qq += sgn * a;
    }
    if (a == 0) {
      last = 0;
      break;
    }
  }
  const Real pi = boost::math::constants::pi<Real>();
  const Real omega = rx - Real(nu) * pi / 2 - pi / 4;
  const Real amp = sqrt(2 / (pi * rx));
  out.value = static_cast<double>(amp * (p * cos(omega) - qq * sin(omega)));
  out.error = static_cast<double>(amp * last);
  out.converged = true;
  return out;
}

BesselValue bessel_j_integral(int n, double x) {
  if (n < 0 || x <= 0.0) throw DomainError("bessel_j_integral: need n >= 0, x > 0");
  const Real rx(x);
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  auto trap = [&](int pts) {
    Real s = 0;
    for (int j = 0; j < pts; ++j) {
      const Real t = two_pi * j / pts;
      s += cos(n * t - rx * sin(t));
    }
    return Real(s / pts);
  };
  int pts = 2 * (n + static_cast<int>(x)) + 64;
  Real prev = trap(pts);
  BesselValue out;
  for (int it = 0; it < 8; ++it) {
    pts *= 2;
    const Real cur = trap(pts);
    const Real diff = abs(cur - prev);
    prev = cur;
    if (diff < Real("1e-45")) {
      out.converged = true;
      out.error = 1e-45;
      break;
    }
    out.error = static_cast<double>(diff);
  }
  out.value = static_cast<double>(prev);
  return out;
}

BesselValue bessel_j(double nu, double x, int digits) {
  if (x <= 0.0 || nu < 0.0) throw DomainError("bessel_j: need nu >= 0, x > 0");
  BesselValue best = bessel_j_asymptotic(nu, x);
  if (x <= 60.0) {
    BesselValue s = bessel_j_series(nu, x);
    if (s.converged && s.error < best.error) best = s;
  }
  const double target = std::pow(10.0, -digits) * std::max(std::abs(best.value), 1e-300);
  if (best.error > target && nu == std::floor(nu) && nu < 1e6) {
    BesselValue t = bessel_j_integral(static_cast<int>(nu), x);
    if (t.converged && t.error < best.error) best = t;
  }
  best.converged = best.error <= std::pow(10.0, -digits) * std::max(std::abs(best.value), 1e-300);
  return best;
}

cplx w_kernel(int k, double x) {
  if (k < 2 || x <= 0.0) throw DomainError("w_kernel: need k >= 2, x > 0");
  const double nu = k - 1;
  const double z = 2.0 * kPi * x;
  const double j = boost::math::cyl_bessel_j(nu, z);
  const double lo = nu / (4.0 * kPi), hi = nu / (2.0 * kPi);
  const double rho = smooth_step((x - lo) / (hi - lo));
  const double y = rho > 0.0 ? boost::math::cyl_neumann(nu, z) : 0.0;
  const cplx ex = std::polar(1.0, -z);
  return 0.5 * ex * cplx(j, rho * y);
}

}  // namespace symsq::special
