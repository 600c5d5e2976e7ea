#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "symsq/arith.hpp"
#include "symsq/special.hpp"

namespace symsq::special {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

cplx e_of(double t) { return std::polar(1.0, kTwoPi * t); }

double h_window(double x) { return window_eval({WindowKind::H, 0}, x); }

double qpow(i64 q, int e) { return std::pow(static_cast<double>(q), e); }

// 2 N^2 / (q^{4+r} c): the W_k argument is lambda x y, the phase is e(2 lambda x y).
double lambda_of(const IntegralParams& p, double c) { return 2.0 * p.N * p.N / (qpow(p.q, 4 + p.r) * c); }

cplx kernel(int k, double t) { return e_of(2.0 * t) * w_kernel(k, t); }

constexpr int kMinPanels = 3;
constexpr double kHalfWidth = 3.5;

// Nodes on [1, 2] for integrands carrying the bump window: x = 3/2 + tanh(v)/2,
// Gauss-Legendre in v; the returned weights include the window and the Jacobian.
void window_nodes(int panels, std::vector<double>& x, std::vector<double>& w) {
  std::vector<double> v, wv;
  gauss_legendre_nodes(-kHalfWidth, kHalfWidth, panels, v, wv);
  x.resize(v.size());
  w.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double sh = std::sinh(v[i]), ch = std::cosh(v[i]);
    x[i] = 1.5 + 0.5 * std::tanh(v[i]);
    w[i] = wv[i] * 0.5 / (ch * ch) * std::exp(-sh * sh);
  }
}

int panels_for(double cycles) { return kMinPanels + static_cast<int>(std::ceil(1.5 * cycles)); }

}  // namespace

void window_quadrature(int panels, std::vector<double>& x, std::vector<double>& w) { window_nodes(panels, x, w); }

int integral_I_panels(const IntegralParams& p, double c, double nmax) {
  const double lam = lambda_of(p, c);
  const double a = p.N / (qpow(p.q, 3) * c);
  return panels_for(4.0 * lam + std::abs(nmax) * a);
}

namespace {

// e(2t) W_k(t) on [lo, hi] by Chebyshev interpolation of degree 16 on panels of width <= 0.05.
class KernelTable {
 public:
  KernelTable(int k, double lo, double hi) : lo_(lo) {
    const int panels = std::max(1, static_cast<int>(std::ceil((hi - lo) / 0.05)));
    width_ = (hi - lo) / panels;
    coef_.resize(static_cast<std::size_t>(panels) * kDeg);
    std::vector<cplx> f(kDeg);
    for (int pnl = 0; pnl < panels; ++pnl) {
      for (int j = 0; j < kDeg; ++j) {
        const double t = std::cos(std::numbers::pi * (j + 0.5) / kDeg);
        f[j] = kernel(k, lo + width_ * (pnl + 0.5 + 0.5 * t));
      }
      for (int m = 0; m < kDeg; ++m) {
        cplx c = 0.0;
        for (int j = 0; j < kDeg; ++j) c += f[j] * std::cos(std::numbers::pi * m * (j + 0.5) / kDeg);
        coef_[pnl * kDeg + m] = c * (m == 0 ? 1.0 : 2.0) / static_cast<double>(kDeg);
      }
    }
    last_ = panels - 1;
  }
  cplx operator()(double t) const {
    const int pnl = std::clamp(static_cast<int>((t - lo_) / width_), 0, last_);
    const double u = 2.0 * (t - lo_ - width_ * pnl) / width_ - 1.0;
    const cplx* c = &coef_[static_cast<std::size_t>(pnl) * kDeg];
    cplx b1 = 0.0, b2 = 0.0;
    for (int m = kDeg - 1; m >= 1; --m) {
      const cplx b0 = 2.0 * u * b1 - b2 + c[m];
      b2 = b1;
      b1 = b0;
    }
    return u * b1 - b2 + c[0];
  }

 private:
  static constexpr int kDeg = 17;
  double lo_, width_;
  int last_;
  std::vector<cplx> coef_;
};

std::vector<cplx> grid_xy(const IntegralParams& p, double c, const std::vector<double>& ns,
                          const std::vector<double>& ms, int px, int py) {
  std::vector<double> x, hx, y, hy;
  window_nodes(px, x, hx);
  window_nodes(py, y, hy);
  const Eigen::Index g = static_cast<Eigen::Index>(x.size());
  const Eigen::Index gy = static_cast<Eigen::Index>(y.size());
  const double lam = lambda_of(p, c);
  const double a = p.N / (qpow(p.q, 3) * c);

  Eigen::MatrixXcd kmat(g, gy);
  const bool tabulate = g * gy > 20000;
  const KernelTable table = tabulate ? KernelTable(p.k, lam, 4.0 * lam) : KernelTable(p.k, lam, lam);
#pragma omp parallel for schedule(static)
  for (Eigen::Index i = 0; i < g; ++i) {
    for (Eigen::Index j = 0; j < gy; ++j) {
      if (hx[i] == 0.0 || hy[j] == 0.0) {
        kmat(i, j) = 0.0;
        continue;
      }
      const double t = lam * x[i] * y[j];
      kmat(i, j) = hx[i] * hy[j] * (tabulate ? table(t) : kernel(p.k, t));
    }
  }
  Eigen::MatrixXcd u(static_cast<Eigen::Index>(ns.size()), g);
  Eigen::MatrixXcd v(static_cast<Eigen::Index>(ms.size()), gy);
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    for (Eigen::Index i = 0; i < g; ++i) u(r, i) = e_of(-ns[r] * x[i] * a);
  }
  for (Eigen::Index r = 0; r < v.rows(); ++r) {
    for (Eigen::Index j = 0; j < gy; ++j) v(r, j) = e_of(-ms[r] * y[j] * a);
  }
  const Eigen::MatrixXcd res = u * kmat * v.transpose();
  std::vector<cplx> out(static_cast<std::size_t>(res.size()));
  for (Eigen::Index r = 0; r < res.rows(); ++r) {
    for (Eigen::Index s = 0; s < res.cols(); ++s) out[r * res.cols() + s] = res(r, s);
  }
  return out;
}

}  // namespace

std::vector<cplx> integral_I_grid(const IntegralParams& p, double c, const std::vector<double>& ns,
                                  const std::vector<double>& ms, int panels) {
  if (c <= 0.0) throw DomainError("integral_I: c must be positive");
  double nmax = 0.0, mmax = 0.0;
  for (double v : ns) nmax = std::max(nmax, std::abs(v));
  for (double v : ms) mmax = std::max(mmax, std::abs(v));
  const int px = panels > 0 ? panels : integral_I_panels(p, c, nmax);
  const int py = panels > 0 ? panels : integral_I_panels(p, c, mmax);
  return grid_xy(p, c, ns, ms, px, py);
}

OscIntegral integral_I(const IntegralParams& p, double c, double n, double m, double tol) {
  if (c <= 0.0) throw DomainError("integral_I: c must be positive");
  const int px = integral_I_panels(p, c, n), py = integral_I_panels(p, c, m);
  const cplx a = grid_xy(p, c, {n}, {m}, px, py)[0];
  const cplx b = grid_xy(p, c, {n}, {m}, px + px / 2, py + py / 2)[0];
  OscIntegral out;
  out.value = b;
  out.abs_error_estimate = std::abs(a - b);
  out.converged = out.abs_error_estimate <= tol;
  return out;
}

OscIntegral integral_I_adaptive(const IntegralParams& p, double c, double n, double m, double tol) {
  if (c <= 0.0) throw DomainError("integral_I_adaptive: c must be positive");
  const double lam = lambda_of(p, c);
  const double a = p.N / (qpow(p.q, 3) * c);
  double worst = 0.0;
  auto outer = [&](double x) -> cplx {
    const double hx = h_window(x);
    if (hx == 0.0) return 0.0;
    auto inner = [&](double y) -> cplx {
      const double hy = h_window(y);
      if (hy == 0.0) return 0.0;
      return hy * kernel(p.k, lam * x * y) * e_of(-m * y * a);
    };
    double err = 0.0;
    const cplx v = adaptive_gk(inner, 1.0, 2.0, tol, &err, 15);
    worst = std::max(worst, err);
    return hx * v * e_of(-n * x * a);
  };
  double err = 0.0;
  OscIntegral out;
  out.value = adaptive_gk(outer, 1.0, 2.0, tol, &err, 15);
  out.abs_error_estimate = err * std::max(1.0, std::abs(out.value)) + worst;
  out.converged = out.abs_error_estimate <= std::max(tol, 1e-14);
  return out;
}

namespace {

// Phase cycles of the z-integrand of I~ over [1, 2].
int tilde_panels(const IntegralParams& p, double C, i64 c1, double c2, i64 n, i64 m) {
  const double l = static_cast<double>(std::abs(arith::lcm(std::abs(n), std::abs(m))));
  const double qr = qpow(p.q, p.r);
  const double v1 = std::pow(static_cast<double>(p.q), 2 * p.r) * std::abs(static_cast<double>(n * m)) /
                    (qpow(p.q, 2) * C) / 2.0;
  const double v2 = std::abs(c2) * C / (2.0 * qpow(p.q, 2) * qr * c1 * l);
  const double v3 = 4.0 * p.N * p.N / (qpow(p.q, 4) * C) + 2.0 * (std::abs(n) + std::abs(m)) * p.N * qr / (qpow(p.q, 3) * C);
  return panels_for(v1 + v2 + v3);
}

}  // namespace

namespace {

// I_r(2n, 2m; Cz/q^r) on Chebyshev points of [1, 2], evaluated by barycentric interpolation.
class ChebInterp {
 public:
  ChebInterp(const IntegralParams& p, double C, i64 n, i64 m, int points) : z_(points), f_(points), w_(points) {
    const double qr = qpow(p.q, p.r);
    const int xp = integral_I_panels(p, C / qr, 2.0 * std::max(std::abs(n), std::abs(m)));
    for (int j = 0; j < points; ++j) {
      const double t = std::cos(std::numbers::pi * (j + 0.5) / points);
      z_[j] = 1.5 + 0.5 * t;
      w_[j] = ((j % 2) ? -1.0 : 1.0) * std::sin(std::numbers::pi * (j + 0.5) / points);
      f_[j] = integral_I_grid(p, C * z_[j] / qr, {2.0 * n}, {2.0 * m}, xp)[0];
    }
  }
  cplx operator()(double z) const {
    cplx num = 0.0;
    double den = 0.0;
    for (std::size_t j = 0; j < z_.size(); ++j) {
      const double d = z - z_[j];
      if (d == 0.0) return f_[j];
      num += w_[j] / d * f_[j];
      den += w_[j] / d;
    }
    return num / den;
  }

 private:
  std::vector<double> z_;
  std::vector<cplx> f_;
  std::vector<double> w_;
};

// Oscillation of z -> I_r(2n, 2m; Cz/q^r) over [1, 2], in cycles.
double tilde_inner_cycles(const IntegralParams& p, double C, i64 n, i64 m) {
  const double qr = qpow(p.q, p.r);
  const double lam = lambda_of(p, C / qr);
  const double a = p.N / (qpow(p.q, 3) * C / qr);
  return 4.0 * lam + 2.0 * (std::abs(n) + std::abs(m)) * a;
}

cplx tilde_from_interp(const IntegralParams& p, const ChebInterp& ir, double C, i64 c1, double c2, i64 n, i64 m,
                       int zpanels) {
  const double l = static_cast<double>(std::abs(arith::lcm(std::abs(n), std::abs(m))));
  const double qr = qpow(p.q, p.r);
  std::vector<double> z, w;
  window_nodes(zpanels, z, w);
  cplx s = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (w[i] == 0.0) continue;
    const double ph = std::pow(static_cast<double>(p.q), 2 * p.r) * static_cast<double>(n * m) / (qpow(p.q, 2) * C * z[i]) -
                      c2 * C * z[i] / (2.0 * qpow(p.q, 2) * qr * c1 * l);
    s += w[i] * ir(z[i]) * e_of(ph) / std::pow(z[i], 1.5);
  }
  return s;
}

}  // namespace

std::vector<OscIntegral> integral_I_tilde_batch(const IntegralParams& p, double C, i64 c1, const std::vector<double>& c2s,
                                                i64 n, i64 m, double tol) {
  if (C <= 0.0 || c1 < 1 || n == 0 || m == 0) throw DomainError("integral_I_tilde_batch: inadmissible parameters");
  const int k = 24 + 2 * static_cast<int>(std::ceil(tilde_inner_cycles(p, C, n, m)));
  const ChebInterp coarse(p, C, n, m, k), fine(p, C, n, m, k + k / 2);
  std::vector<OscIntegral> out(c2s.size());
  for (std::size_t i = 0; i < c2s.size(); ++i) {
    const int zp = tilde_panels(p, C, c1, c2s[i], n, m);
    const cplx a = tilde_from_interp(p, coarse, C, c1, c2s[i], n, m, zp);
    const cplx b = tilde_from_interp(p, fine, C, c1, c2s[i], n, m, 2 * zp);
    out[i].value = b;
    out[i].abs_error_estimate = std::abs(a - b);
    out[i].converged = out[i].abs_error_estimate <= tol;
  }
  return out;
}

OscIntegral integral_I_tilde(const IntegralParams& p, double C, i64 c1, double c2, i64 n, i64 m, double tol) {
  if (C <= 0.0 || c1 < 1 || n == 0 || m == 0) throw DomainError("integral_I_tilde: inadmissible parameters");
  return integral_I_tilde_batch(p, C, c1, {c2}, n, m, tol)[0];
}

OscIntegral integral_I_tilde_unrolled(const IntegralParams& p, double C, i64 c1, double c2, i64 delta, i64 n, i64 m,
                                      int panels) {
  if (C <= 0.0 || c1 < 1 || delta < 1) throw DomainError("integral_I_tilde_unrolled: inadmissible parameters");
  const double qd = static_cast<double>(p.q);
  const double q4c = std::pow(qd, 4) * C;
  const double nd = static_cast<double>(n), md = static_cast<double>(m), dd = static_cast<double>(delta);
  const double q1r = std::pow(qd, 1 + p.r), q22r = std::pow(qd, 2 + 2 * p.r);
  const double qr2 = std::pow(qd, 2 + p.r);
  if (panels <= 0) {
    panels = 1 + tilde_panels(p, C, c1, c2, delta * n, delta * m);
    panels = std::max(panels, 1 + integral_I_panels(p, C / std::pow(qd, p.r), 2.0 * delta * std::max(std::abs(n), std::abs(m))));
  }
  std::vector<double> x, hw;
  window_nodes(panels, x, hw);
  std::vector<double> gw(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) gw[i] = hw[i] / std::pow(x[i], 1.5);
  const double n2 = p.N * p.N;
  cplx s = 0.0;
  for (std::size_t kz = 0; kz < x.size(); ++kz) {
    if (gw[kz] == 0.0) continue;
    const double z = x[kz];
    const double tail = -c2 * C * z / (2.0 * qr2 * c1 * dd * std::abs(nd * md));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (hw[i] == 0.0) continue;
      for (std::size_t j = 0; j < x.size(); ++j) {
        if (hw[j] == 0.0) continue;
        const double xx = x[i], yy = x[j];
        const double ph = (4.0 * xx * yy * n2 + q22r * dd * dd * nd * md - 2.0 * dd * (nd * xx + md * yy) * p.N * q1r) /
                              (q4c * z) + tail;
        s += gw[kz] * hw[i] * hw[j] * w_kernel(p.k, 2.0 * xx * yy * n2 / (q4c * z)) * e_of(ph);
      }
    }
  }
  OscIntegral out;
  out.value = s;
  out.converged = true;
  return out;
}

}  // namespace symsq::special
