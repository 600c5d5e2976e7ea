#pragma once

// Special functions and oscillatory quadrature: Bessel kernels, smooth
// windows, gamma factors, Dirichlet L-values, the AFE weight V and the
// integrals I_r and I~.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "symsq/characters.hpp"
#include "symsq/error.hpp"

namespace symsq::special {

using i64 = std::int64_t;
using cplx = std::complex<double>;

// -------------------------------------------------------------------- Bessel

struct BesselValue {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

/// Power series in 50-digit arithmetic; error grows like e^x * 10^-50.
BesselValue bessel_j_series(double nu, double x);
/// Hankel expansion truncated at its smallest term.
BesselValue bessel_j_asymptotic(double nu, double x);
/// Bessel's integral (1/pi) int_0^pi cos(n t - x sin t) dt, integer order.
BesselValue bessel_j_integral(int n, double x);

/// J_nu(x) to relative accuracy 10^-digits, choosing between the branches above.
BesselValue bessel_j(double nu, double x, int digits = 15);

/// W_k(x) with J_{k-1}(2 pi x) = e(x) W_k(x) + e(-x) conj(W_k(x)):
/// W_k = e(-x) (J + i rho(x) Y)(2 pi x) / 2, rho a smooth step near the turning point.
cplx w_kernel(int k, double x);

// ------------------------------------------------------------------- windows

enum class WindowKind { H, G, Partition };

struct SmoothWindow {
  WindowKind kind = WindowKind::H;
  int j = 0;  ///< index of the partition member G_j
};

/// Value (order 0) or derivative of order <= 8.
double window_eval(const SmoothWindow& w, double x, int derivative_order = 0);

/// Taylor coefficients f^(i)(x)/i!, i = 0..order.
std::vector<double> window_taylor(const SmoothWindow& w, double x, int order);

// --------------------------------------------------------------- quadrature

/// int_a^b f by Gauss-Legendre with 24 nodes on each of `panels` equal panels.
cplx gauss_legendre(const std::function<cplx(double)>& f, double a, double b, int panels);
/// Nodes and weights of the same composite rule.
void gauss_legendre_nodes(double a, double b, int panels, std::vector<double>& x, std::vector<double>& w);
/// Adaptive Gauss-Kronrod (7, 15).
cplx adaptive_gk(const std::function<cplx(double)>& f, double a, double b, double tol, double* err = nullptr,
                 int max_depth = 30);

// --------------------------------------------------------------------- gamma

/// log Gamma(z) for complex z away from the poles.
cplx lgamma_complex(cplx z);

struct GammaFactor {
  int k = 12;
  int parity = 0;
  double kappa[3] = {1.0, 11.0, 12.0};
};

enum class KappaConvention { OnePlusA, OneMinusA };

/// kappa = (1 +- a, k - 1, k).
GammaFactor make_gamma_factor(int k, int parity, KappaConvention conv = KappaConvention::OneMinusA);

/// pi^{-3s/2} prod Gamma((s + kappa_j)/2); throws DomainError near a pole.
cplx gamma_factor_eval(const GammaFactor& g, cplx s);
cplx log_gamma_factor(const GammaFactor& g, cplx s);

// --------------------------------------------------------------- L-functions

/// Hurwitz zeta(s, a), a in (0, 1], s != 1, by Euler-Maclaurin.
cplx hurwitz_zeta(cplx s, double a);

/// Values psi(1..M) of a Dirichlet character of modulus M, as complex numbers.
struct CharacterTable {
  i64 modulus = 1;
  std::vector<cplx> values;  ///< values[a mod M]
};
CharacterTable character_table(const DirichletCharacter& chi);
CharacterTable character_table_power(const DirichletCharacter& chi, int power);

/// L(s, psi) = M^{-s} sum_a psi(a) zeta(s, a/M).
cplx dirichlet_l(cplx s, const CharacterTable& psi);
/// L(1, psi) by partial summation of the Dirichlet series, nontrivial psi.
cplx dirichlet_l1_series(const CharacterTable& psi, i64 terms = 2000000);

// -------------------------------------------------------------- AFE weight

enum class WeightShape { Cosine, Unit };

struct VWeightOptions {
  /// Cosine: G(u) = cos(pi u/4A)^{-12A}. Unit: G(u) = 1, decay from the gamma factor alone.
  WeightShape shape = WeightShape::Cosine;
  int A = 3;
  double T = 15.0;
  double step = 0.05;
  /// The weight V_s; s = 1/2 is the central weight.
  cplx s = 0.5;
  /// Contours Re u = sigma_small for y < 1 and Re u = sigma_large for y >= 1.
  double sigma_small = 0.5;
  double sigma_large = 3.0;
};

/// V_s(y) = (1/2 pi i) int gamma(s+u)/gamma(s) cos(pi u/4A)^{-12A} L(2s+2u, psi) y^{-u} du/u,
/// with psi = chi^2. The integrand on the contour is tabulated once.
class VWeight {
 public:
  VWeight(const CharacterTable& psi, const GammaFactor& gamma, const VWeightOptions& opt = {});

  cplx operator()(double y) const;
  /// Size of the discarded tails |Im u| > T, bounded from the end values.
  double tail_bound(double y) const;
  const VWeightOptions& options() const { return opt_; }

  /// Tabulates V on a uniform grid in log y over [ymin, ymax]; fast() then interpolates.
  void tabulate(double ymin, double ymax, double log_step = 0.01);
  /// 8-point Lagrange interpolation in log y; falls back to operator() off the grid.
  cplx fast(double y) const;

 private:
  struct Line {
    double sigma;
    std::vector<cplx> u;
    std::vector<cplx> f;  ///< integrand without y^{-u}
  };
  cplx integrate(const Line& line, double y) const;

  VWeightOptions opt_;
  Line small_y_, large_y_;
  double grid_lo_ = 0.0, grid_step_ = 0.0;
  std::vector<cplx> grid_;
};

/// Convenience wrapper: a single V(y) value and its tail bound.
struct VValue {
  cplx value;
  double tail = 0.0;
  bool certified = false;
};
VValue v_weight(double y, const DirichletCharacter& chi_squared_source, int A, const GammaFactor& gamma,
                double T = 15.0);

// ------------------------------------------------------------- integrals

struct OscIntegral {
  cplx value;
  double abs_error_estimate = 0.0;
  bool converged = false;
};

struct IntegralParams {
  int r = 0;
  i64 q = 3;
  int k = 12;
  double N = 10.0;
};

/// I_r(n, m; c) = int int h(x)h(y) e(4xyN^2/(q^{4+r}c)) W_k(2xyN^2/(q^{4+r}c)) e(-(nx+my)N/(q^3 c)) dx dy.
/// c is real so that the dyadic variable c = Cz/q^r can be used directly.
OscIntegral integral_I(const IntegralParams& p, double c, double n, double m, double tol = 1e-12);
/// The same integral by nested adaptive Gauss-Kronrod.
OscIntegral integral_I_adaptive(const IntegralParams& p, double c, double n, double m, double tol = 1e-12);

/// Values I_r(n, m; c) for all n in ns and m in ms (row-major, ns.size() x ms.size()).
std::vector<cplx> integral_I_grid(const IntegralParams& p, double c, const std::vector<double>& ns,
                                  const std::vector<double>& ms, int panels = 0);

/// Nodes and weights on [1, 2] with the window h folded into the weights (tanh substitution).
void window_quadrature(int panels, std::vector<double>& x, std::vector<double>& w);

/// Number of 24-point panels per axis used for I_r at frequency bound max(|n|,|m|).
int integral_I_panels(const IntegralParams& p, double c, double nmax);

/// I~_{r,c1}(c2; n, m) = int G(z) I_r(2n, 2m; Cz/q^r) e(q^{2r}nm/(q^2 Cz) - c2 Cz/(2 q^{2+r} c1 [n,m])) z^{-3/2} dz.
OscIntegral integral_I_tilde(const IntegralParams& p, double C, i64 c1, double c2, i64 n, i64 m,
                             double tol = 1e-10);
/// I~ for many c2 at once; I_r is interpolated in z from Chebyshev samples.
std::vector<OscIntegral> integral_I_tilde_batch(const IntegralParams& p, double C, i64 c1, const std::vector<double>& c2s,
                                                i64 n, i64 m, double tol = 1e-10);
/// The unrolled triple integral over x, y, z for (delta n, delta m) with (n, m) = 1.
OscIntegral integral_I_tilde_unrolled(const IntegralParams& p, double C, i64 c1, double c2, i64 delta, i64 n,
                                      i64 m, int panels = 0);

}  // namespace symsq::special
