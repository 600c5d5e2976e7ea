#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "symsq/special.hpp"

namespace symsq::special {

namespace {

// Truncated Taylor series in a local variable eps.
using Series = std::vector<double>;

Series mul(const Series& a, const Series& b) {
  Series c(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Series reciprocal(const Series& a) {
  Series b(a.size(), 0.0);
  b[0] = 1.0 / a[0];
  for (std::size_t n = 1; n < a.size(); ++n) {
    double s = 0.0;
    for (std::size_t i = 1; i <= n; ++i) s += a[i] * b[n - i];
    b[n] = -s * b[0];
  }
  return b;
}

Series exp_series(const Series& a) {
  Series b(a.size(), 0.0);
  b[0] = std::exp(a[0]);
  for (std::size_t n = 1; n < a.size(); ++n) {
    double s = 0.0;
    for (std::size_t i = 1; i <= n; ++i) s += static_cast<double>(i) * a[i] * b[n - i];
    b[n] = s / static_cast<double>(n);
  }
  return b;
}

// f(g(eps)) with g(0) = 0.
Series compose(const Series& f, const Series& g) {
  Series r(f.size(), 0.0);
  for (std::size_t i = f.size(); i-- > 0;) {
    r = mul(r, g);
    r[0] += f[i];
  }
  return r;
}

// exp(c - 1/(1 - v^2)) with v = v0 + slope * eps; zero when |v0| >= 1.
Series bump_series(double v0, double slope, double c, int order) {
  Series out(order + 1, 0.0);
  if (std::abs(v0) >= 1.0) return out;
  const double s0 = 1.0 - v0 * v0;
  if (c - 1.0 / s0 < -745.0) return out;
  Series s(order + 1, 0.0);
  s[0] = s0;
  if (order >= 1) s[1] = -2.0 * v0 * slope;
  if (order >= 2) s[2] = -slope * slope;
  Series inv = reciprocal(s);
  for (auto& x : inv) x = -x;
  inv[0] += c;
  return exp_series(inv);
}

// Unnormalised bump on (0, 1).
double unit_bump(double s) {
  if (s <= 0.0 || s >= 1.0) return 0.0;
  const double v = 2.0 * s - 1.0;
  return std::exp(-1.0 / (1.0 - v * v));
}

double bump_integral(double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(unit_bump, a, b, 15, 1e-13);
}

double bump_mass() {
  static const double z = bump_integral(0.0, 1.0);
  return z;
}

// B(s) = int_0^s bump / mass.
double bump_cdf(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  if (s > 0.5) return 1.0 - bump_integral(s, 1.0) / bump_mass();
  return bump_integral(0.0, s) / bump_mass();
}

// psi(t) = B(t + 1) for t <= 0, 1 - B(t) for t > 0; sum_k psi(t - k) = 1.
Series psi_series(double t, int order) {
  Series out(order + 1, 0.0);
  if (t <= -1.0 || t >= 1.0) return out;
  const double z = bump_mass();
  double sign;
  double s0;
  if (t <= 0.0) {
    out[0] = bump_cdf(t + 1.0);
    sign = 1.0;
    s0 = t + 1.0;
  } else {
    out[0] = 1.0 - bump_cdf(t);
    sign = -1.0;
    s0 = t;
  }
  if (order >= 1) {
    const Series b = bump_series(2.0 * s0 - 1.0, 2.0, 0.0, order - 1);
    for (int i = 1; i <= order; ++i) out[i] = sign * b[i - 1] / (z * i);
  }
  return out;
}

}  // namespace

std::vector<double> window_taylor(const SmoothWindow& w, double x, int order) {
  if (order < 0 || order > 8) throw DomainError("window_taylor: derivative order must be in [0, 8]");
  switch (w.kind) {
    case WindowKind::H:
    case WindowKind::G:
      return bump_series(2.0 * x - 3.0, 2.0, 1.0, order);
    case WindowKind::Partition: {
      if (x <= 0.0) return Series(order + 1, 0.0);
      const double t = std::log2(x) - w.j;
      if (t <= -1.0 || t >= 1.0) return Series(order + 1, 0.0);
      const Series f = psi_series(t, order);
      Series g(order + 1, 0.0);
      double p = 1.0;
      for (int i = 1; i <= order; ++i) {
        p /= x;
        g[i] = ((i % 2 == 1) ? p : -p) / (i * std::numbers::ln2);
      }
      return compose(f, g);
    }
  }
  return Series(order + 1, 0.0);
}

double window_eval(const SmoothWindow& w, double x, int derivative_order) {
  const Series s = window_taylor(w, x, derivative_order);
  double fact = 1.0;
  for (int i = 2; i <= derivative_order; ++i) fact *= i;
  return s[derivative_order] * fact;
}

}  // namespace symsq::special
