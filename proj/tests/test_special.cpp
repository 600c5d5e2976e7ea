#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/special_functions/bessel.hpp>
#include <doctest.h>

#include "symsq/special.hpp"

using namespace symsq;
using namespace symsq::special;

TEST_CASE("Bessel branches") {
  BesselValue small = bessel_j(0.0, 1e-8);
  CHECK(std::abs(small.value - (1.0 - 2.5e-17)) < 1e-16);

  const double x = 4.0 * std::numbers::pi;
  BesselValue s = bessel_j_series(11.0, x);
  BesselValue t = bessel_j_integral(11, x);
  BesselValue a = bessel_j_asymptotic(11.0, x);
  CHECK(std::abs(s.value - t.value) < 1e-12);
  CHECK(std::abs(s.value - boost::math::cyl_bessel_j(11.0, x)) < 1e-14);
  CHECK(std::abs(a.value - s.value) < 1e-12);

  for (double big : {45.0, 55.0}) {
    BesselValue sb = bessel_j_series(11.0, big);
    BesselValue ab = bessel_j_asymptotic(11.0, big);
    CHECK(std::abs(sb.value - ab.value) < 1e-12);
  }

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dn(1.0, 20.0), dx(0.5, 80.0);
  for (int i = 0; i < 50; ++i) {
    const double nu = dn(rng), xx = dx(rng);
    const double lhs = bessel_j(nu - 1, xx).value + bessel_j(nu + 1, xx).value;
    const double rhs = 2.0 * nu / xx * bessel_j(nu, xx).value;
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("W_k reconstruction and size") {
  for (double x : {0.01, 0.3, 1.0, 1.3, 2.5, 10.0, 50.0}) {
    const cplx w = w_kernel(12, x);
    const double j = boost::math::cyl_bessel_j(11.0, 2.0 * std::numbers::pi * x);
    const double rec = 2.0 * (std::polar(1.0, 2.0 * std::numbers::pi * x) * w).real();
    CHECK(std::abs(rec - j) < 1e-10);
  }
  const double c_small = std::abs(w_kernel(12, 0.01)) / std::pow(0.01, 11);
  const double c_large = std::abs(w_kernel(12, 50.0)) * std::sqrt(50.0);
  MESSAGE("W_12 constants: small " << c_small << ", large " << c_large);
  CHECK(c_small < 1e-2);
  CHECK(c_large < 1.0);
}

TEST_CASE("windows") {
  const SmoothWindow h{WindowKind::H, 0};
  CHECK(window_eval(h, 0.5) == 0.0);
  const double mid = window_eval(h, 1.5);
  CHECK(mid > 0.0);
  CHECK(mid <= 1.0);
  double total = 0.0;
  for (int j = -10; j <= 10; ++j) total += window_eval({WindowKind::Partition, j}, 3.7);
  CHECK(std::abs(total - 1.0) < 1e-12);
  for (double x : {0.013, 0.77, 5.5, 123.0}) {
    double s = 0.0;
    for (int j = -12; j <= 12; ++j) s += window_eval({WindowKind::Partition, j}, x);
    CHECK(std::abs(s - 1.0) < 1e-12);
  }
  // Derivatives against central differences of the next lower order.
  for (double x : {1.2, 1.5, 1.9}) {
    for (int d = 1; d <= 8; ++d) {
      const double e = 1e-6;
      const double fd = (window_eval(h, x + e, d - 1) - window_eval(h, x - e, d - 1)) / (2 * e);
      const double ex = window_eval(h, x, d);
      CHECK(std::abs(fd - ex) <= 1e-5 * std::max(1.0, std::abs(ex)));
    }
  }
  for (int d = 0; d <= 8; ++d) {
    CHECK(std::abs(window_eval(h, 1.0 + 1e-4, d)) < 1e-10);
    CHECK(std::abs(window_eval(h, 2.0 - 1e-4, d)) < 1e-10);
  }
}

TEST_CASE("gamma factor") {
  CHECK(std::abs(lgamma_complex(5.0) - std::log(24.0)) < 1e-14);
  CHECK(std::abs(std::exp(lgamma_complex(cplx(0.5, 0.0))) - std::sqrt(std::numbers::pi)) < 1e-13);
  const GammaFactor g = make_gamma_factor(12, 0);
  const cplx v = gamma_factor_eval(g, 0.5);
  CHECK(v.real() > 0.0);
  CHECK(std::abs(v.imag()) < 1e-12 * v.real());
  const cplx s(0.3, 1.7);
  cplx lin = std::pow(std::numbers::pi, -3.0);
  for (double k : g.kappa) lin *= (s + k) / 2.0;
  CHECK(std::abs(gamma_factor_eval(g, s + 2.0) / gamma_factor_eval(g, s) / lin - 1.0) < 1e-10);
  double prev = std::abs(gamma_factor_eval(g, cplx(0.5, 1.0)));
  for (double t : {5.0, 10.0}) {
    const double cur = std::abs(gamma_factor_eval(g, cplx(0.5, t)));
    CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("Hurwitz zeta and L-values") {
  CHECK(std::abs(hurwitz_zeta(2.0, 1.0) - std::numbers::pi * std::numbers::pi / 6.0) < 1e-14);
  CHECK(std::abs(hurwitz_zeta(cplx(0.5, 14.134725141734693), 1.0)) < 1e-10);
  DirichletCharacter chi(3, 3, 1);
  const CharacterTable psi = character_table_power(chi, 2);
  const cplx l1 = dirichlet_l(1.0, psi);
  const cplx l1s = dirichlet_l1_series(psi);
  CHECK(std::abs(l1 - l1s) < 1e-9);
}

TEST_CASE("V weight") {
  const GammaFactor g = make_gamma_factor(12, 1);
  for (const auto& chi : primitive_characters(3, 3)) {
    const CharacterTable psi = character_table_power(chi, 2);
    VWeight v(psi, make_gamma_factor(12, chi.parity()));
    const cplx l1 = dirichlet_l1_series(psi);
    CHECK(std::abs(v(1e-4) - l1) < 1e-3);
    CHECK(v.tail_bound(1e-4) < 1e-10);
  }
  DirichletCharacter chi(3, 3, 1);
  const CharacterTable psi = character_table_power(chi, 2);
  VWeightOptions o50, o100;
  o50.T = 50.0;
  o100.T = 100.0;
  VWeight v50(psi, g, o50), v100(psi, g, o100);
  for (double y : {1e-3, 0.5, 2.0, 10.0}) CHECK(std::abs(v50(y) - v100(y)) < 1e-10);
  VWeight v(psi, g);
  const double c3 = std::abs(v(10.0)) * 1e3;
  MESSAGE("V decay constant C_3 at y = 10: " << c3);
  CHECK(c3 < 1e3);
}

TEST_CASE("integral I_r") {
  IntegralParams p;
  p.q = 3;
  p.r = 0;
  p.N = 10.0;
  const OscIntegral a = integral_I(p, 16.0, 1.0, 1.0);
  const OscIntegral b = integral_I_adaptive(p, 16.0, 1.0, 1.0, 1e-13);
  CHECK(std::abs(a.value - b.value) < 1e-10);
  CHECK(a.converged);

  const OscIntegral far = integral_I(p, 16.0, 1e4, 1.0);
  CHECK(std::abs(far.value) < 1e-8);

  // n = m = 0 with a small phase, independent low-order rule.
  IntegralParams p0 = p;
  p0.N = 2.0;
  const double lam = 2.0 * p0.N * p0.N / (std::pow(3.0, 4) * 16.0);
  auto f = [&](double x, double y) {
    return window_eval({WindowKind::H, 0}, x) * window_eval({WindowKind::H, 0}, y) * w_kernel(12, lam * x * y) *
           std::polar(1.0, 2.0 * std::numbers::pi * 2.0 * lam * x * y);
  };
  cplx mid = 0.0;
  const int n = 400;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) mid += f(1.0 + (i + 0.5) / n, 1.0 + (j + 0.5) / n);
  }
  mid /= static_cast<double>(n) * n;
  const cplx zero = integral_I(p0, 16.0, 0.0, 0.0).value;
  CHECK(std::abs(mid - zero) <= 1e-8 * std::abs(zero) + 1e-30);
}

TEST_CASE("integral I tilde") {
  IntegralParams p;
  p.q = 3;
  p.r = 0;
  p.N = 10.0;
  const double C = 16.0;
  const OscIntegral t = integral_I_tilde(p, C, 1, 0.0, 1, 1);
  const OscIntegral u = integral_I_tilde_unrolled(p, C, 1, 0.0, 1, 1, 1);
  CHECK(std::abs(t.value - u.value) < 1e-10);
  // W_k is not conjugated under (n, m, c2) -> -(n, m, c2); the exact symmetry is n <-> m.
  const OscIntegral nm = integral_I_tilde(p, C, 1, 3.0, 1, 2);
  const OscIntegral mn = integral_I_tilde(p, C, 1, 3.0, 2, 1);
  CHECK(std::abs(nm.value - mn.value) < 1e-10);
  const OscIntegral minus = integral_I_tilde(p, C, 1, -3.0, -1, -2);
  MESSAGE("conjugation defect " << std::abs(nm.value - std::conj(minus.value)) << " at |I~| = " << std::abs(nm.value));
}
