#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "symsq/arith.hpp"
#include "symsq/pipeline.hpp"

namespace symsq::pipeline {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kK = modform::HeckeForm::kWeight;

double qpow(i64 q, int e) { return std::pow(static_cast<double>(q), e); }

void check_params(const Stage1Params& p, const DirichletCharacter& chi) {
  if (chi.q() != p.q || chi.ell() != 3 || !chi.is_primitive())
    throw DomainError("poisson_stage1: chi must be primitive of modulus q^3");
  if (p.c % 16 != 0 || arith::gcd(p.c, p.q) != 1) throw DomainError("poisson_stage1: need 16 | c and (c, q) = 1");
  if (p.r < 0 || p.r > 4 || p.N < 1.0 || p.cheb_points < 8) throw DomainError("poisson_stage1: bad r or N");
}

// Chebyshev points of [1, 2] and the barycentric basis L_j(x).
struct Cheb {
  std::vector<double> pts, wts;
  explicit Cheb(int n) : pts(n), wts(n) {
    for (int j = 0; j < n; ++j) {
      pts[j] = 1.5 + 0.5 * std::cos(std::numbers::pi * (j + 0.5) / n);
      wts[j] = ((j % 2) ? -1.0 : 1.0) * std::sin(std::numbers::pi * (j + 0.5) / n);
    }
  }
  void basis(double x, std::vector<double>& out) const {
    out.assign(pts.size(), 0.0);
    double den = 0.0;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double d = x - pts[j];
      if (d == 0.0) {
        out.assign(pts.size(), 0.0);
        out[j] = 1.0;
        return;
      }
      out[j] = wts[j] / d;
      den += out[j];
    }
    for (auto& v : out) v /= den;
  }
};

// F(alpha, j) = sum_{|n| <= K, n = alpha mod M} sum_i w_i L_j(x_i) e(-n a x_i).
Eigen::MatrixXcd folded_transform(const Cheb& cheb, i64 modulus, i64 cutoff, double a, int panels, Exec exec) {
  std::vector<double> x, w;
  special::window_quadrature(panels, x, w);
  const Eigen::Index P = static_cast<Eigen::Index>(cheb.pts.size());
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(modulus, P);
  const i64 nodes = static_cast<i64>(x.size());
  auto run = [&](i64 lo, i64 hi, Eigen::MatrixXcd& acc) {
    std::vector<cplx> fold(static_cast<std::size_t>(modulus));
    std::vector<double> l;
    for (i64 i = lo; i < hi; ++i) {
      if (w[i] == 0.0) continue;
      std::fill(fold.begin(), fold.end(), cplx(0.0));
      const cplx step = std::polar(1.0, -kTwoPi * a * x[i]);
      cplx z;
      for (i64 n = -cutoff; n <= cutoff; ++n) {
        // Restart the recurrence from an exact value every 256 steps.
        if ((n + cutoff) % 256 == 0) z = std::polar(1.0, -kTwoPi * std::fmod(static_cast<double>(n) * a * x[i], 1.0));
        fold[arith::mod(n, modulus)] += z;
        z *= step;
      }
      cheb.basis(x[i], l);
      for (Eigen::Index j = 0; j < P; ++j) {
        const double c = w[i] * l[j];
        if (c == 0.0) continue;
        for (i64 al = 0; al < modulus; ++al) acc(al, j) += c * fold[al];
      }
    }
  };
  if (exec == Exec::Parallel) {
#pragma omp parallel
    {
      Eigen::MatrixXcd local = Eigen::MatrixXcd::Zero(modulus, P);
#pragma omp for schedule(dynamic, 8)
      for (i64 i = 0; i < nodes; ++i) run(i, i + 1, local);
#pragma omp critical
      out += local;
    }
  } else {
    run(0, nodes, out);
  }
  return out;
}

// sum over |n|, |m| <= K of D_r(n, m; c) I_r(n, m; c).
cplx dual_sum(const Stage1Params& p, const charsum::DrTable& d, i64 cutoff, Exec exec) {
  const double cd = static_cast<double>(p.c);
  const double lam = 2.0 * p.N * p.N / (qpow(p.q, 4 + p.r) * cd);
  const double a = p.N / (qpow(p.q, 3) * cd);
  const Cheb cheb(p.cheb_points);
  const Eigen::Index P = p.cheb_points;
  Eigen::MatrixXcd kc(P, P);
  for (Eigen::Index i = 0; i < P; ++i) {
    for (Eigen::Index j = 0; j < P; ++j) {
      const double t = lam * cheb.pts[i] * cheb.pts[j];
      kc(i, j) = std::polar(1.0, kTwoPi * 2.0 * t) * special::w_kernel(kK, t);
    }
  }
  special::IntegralParams ip;
  ip.q = p.q;
  ip.r = p.r;
  ip.N = p.N;
  const int panels = special::integral_I_panels(ip, cd, static_cast<double>(cutoff));
  const i64 M = d.modulus;
  const Eigen::MatrixXcd f = folded_transform(cheb, M, cutoff, a, panels, exec);
  const Eigen::MatrixXcd g = f * kc * f.transpose();
  cplx s = 0.0;
  for (i64 al = 0; al < M; ++al) {
    for (i64 be = 0; be < M; ++be) s += d.values[al * M + be] * g(al, be);
  }
  return s;
}

}  // namespace

cplx poisson_stage1_lhs(const Stage1Params& p, const DirichletCharacter& chi) {
  check_params(p, chi);
  const i64 c = p.c, q = p.q;
  const i64 qr = arith::ipow(q, 4 + p.r);
  const i64 qbar = arith::inv(arith::mod(qr, c), c);
  const double cd = static_cast<double>(c);
  const i64 lo = static_cast<i64>(std::ceil(p.N)), hi = static_cast<i64>(std::floor(2.0 * p.N));
  cplx sum = 0.0;
  for (i64 n = lo; n <= hi; ++n) {
    const double hn = special::window_eval({special::WindowKind::H, 0}, n / p.N);
    const cplx cn = chi.value_c(n);
    if (hn == 0.0 || cn == 0.0) continue;
    for (i64 m = lo; m <= hi; ++m) {
      const double hm = special::window_eval({special::WindowKind::H, 0}, m / p.N);
      const cplx cm = std::conj(chi.value_c(m));
      if (hm == 0.0 || cm == 0.0) continue;
      const double jac = p.r % 2 == 1 ? arith::jacobi(arith::mod(c * n % q * m, q), q) : 1.0;
      const i64 ph = arith::mod(-2 * qbar % c * (n * m % c), c);
      const double kl = charsum::kloosterman_real(qbar * (n * n % c) % c, qbar * (m * m % c) % c, c);
      const double t = 2.0 * static_cast<double>(n) * static_cast<double>(m) / (static_cast<double>(qr) * cd);
      const cplx phi = hn * hm * std::polar(1.0, kTwoPi * 2.0 * t) * special::w_kernel(kK, t);
      sum += cn * cm * jac * std::polar(1.0, kTwoPi * static_cast<double>(ph) / cd) * kl * phi;
    }
  }
  return sum;
}

Stage1Detail poisson_stage1(const Stage1Params& p, const DirichletCharacter& chi, Exec exec) {
  check_params(p, chi);
  Stage1Detail out;
  out.lhs = poisson_stage1_lhs(p, chi);
  const double cd = static_cast<double>(p.c);
  const double lam = 2.0 * p.N * p.N / (qpow(p.q, 4 + p.r) * cd);
  const double a = p.N / (qpow(p.q, 3) * cd);
  const charsum::DrTable d = charsum::d_r_table(chi, p.r, p.c, exec);
  const double jac = p.r % 2 == 1 ? arith::jacobi(arith::mod(p.c, p.q), p.q) : 1.0;
  const double pref = jac * p.N * p.N / (qpow(p.q, 6) * cd * cd);
  out.dual_cutoff = static_cast<i64>(std::ceil((p.dual_cycles + 8.0 * lam) / a));
  out.rank = p.cheb_points;
  out.rhs = pref * dual_sum(p, d, out.dual_cutoff, exec);
  out.rhs_doubled = pref * dual_sum(p, d, 2 * out.dual_cutoff, exec);
  return out;
}

VerificationReport poisson_stage1_check(const Stage1Params& p, const DirichletCharacter& chi, Exec exec) {
  const Stage1Detail d = poisson_stage1(p, chi, exec);
  VerificationReport rep;
  rep.suite = "poisson-stage1";
  rep.tolerance = 1e-6;
  const double tail = std::abs(d.rhs_doubled - d.rhs) / std::max(std::abs(d.rhs), 1e-300);
  rep.cases.push_back(make_case({{"q", double(p.q)},
                                 {"r", double(p.r)},
                                 {"c", double(p.c)},
                                 {"N", p.N},
                                 {"chi", double(chi.index())},
                                 {"dual_cutoff", double(d.dual_cutoff)}},
                                d.lhs, d.rhs, tail < 1e-9));
  rep.extras.push_back({"dual_tail_rel_change", tail});
  return rep;
}

}  // namespace symsq::pipeline
