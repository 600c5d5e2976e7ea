#include <cmath>
#include <numbers>
#include <tuple>

#include "symsq/arith.hpp"
#include "symsq/pipeline.hpp"

namespace symsq::pipeline {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double qpow(i64 q, int e) { return std::pow(static_cast<double>(q), e); }

special::IntegralParams integral_params(const Stage2Params& p) {
  special::IntegralParams ip;
  ip.q = p.q;
  ip.r = p.r;
  ip.N = p.N;
  return ip;
}

// (c2 / n'm' q^r) as a product of Kronecker symbols, matching the E-sum.
int lhs_symbol(i64 c2, i64 n, i64 m, i64 q, int r) {
  int s = arith::kronecker(c2, n) * arith::kronecker(c2, m);
  if (r % 2 == 1) s *= arith::jacobi(arith::mod(c2, q), q);
  return s;
}

// Partial sums of the RHS over |c2| <= cutoff and |c2| <= 2 cutoff, sharing one batch of I~.
std::pair<cplx, cplx> sum_rhs(const Stage2Params& p, i64 n, i64 m, i64 cutoff, bool* converged) {
  const i64 l = arith::lcm(n, m);
  std::vector<double> c2s;
  for (i64 c2 = -2 * cutoff; c2 <= 2 * cutoff; ++c2) c2s.push_back(static_cast<double>(c2));
  const auto tilde = special::integral_I_tilde_batch(integral_params(p), p.C, p.c1, c2s, n, m);
  cplx inner = 0.0, outer = 0.0;
  for (std::size_t i = 0; i < c2s.size(); ++i) {
    if (!tilde[i].converged) *converged = false;
    const i64 c2 = static_cast<i64>(c2s[i]);
    const cplx t = charsum::e_sum_brute(p.r, p.q, p.c1, c2, n, m).to_complex() * tilde[i].value;
    (std::abs(c2) <= cutoff ? inner : outer) += t;
  }
  const double pref = std::pow(static_cast<double>(p.q), p.r / 2.0) /
                      (2.0 * static_cast<double>(p.c1) * qpow(p.q, 2) * std::sqrt(p.C) * static_cast<double>(l));
  return {pref * inner, pref * (inner + outer)};
}

}  // namespace

bool stage2_admissible(const Stage2Params& p) {
  if (p.q < 3 || !arith::is_prime(p.q) || p.r < 0 || p.r > 4 || p.C <= 0.0 || p.N <= 0.0) return false;
  if (p.c1 < 1 || !charsum::e_sum_admissible(p.q, p.c1, p.delta, p.u, p.v, p.n, p.m)) return false;
  return arith::part_supported_on(p.c1, 2 * p.delta) == p.c1;
}

Stage2Detail poisson_stage2(const Stage2Params& p) {
  if (!stage2_admissible(p)) throw DomainError("poisson_stage2: inadmissible parameters");
  const i64 n = p.delta * p.u * p.n, m = p.delta * p.v * p.m;
  const i64 q2 = p.q * p.q, qr = arith::ipow(p.q, p.r);
  const special::IntegralParams ip = integral_params(p);
  Stage2Detail out;

  // c = c1 c2 with c q^r / C inside (1, 2), the support of G.
  const double lo = p.C / (static_cast<double>(qr) * p.c1), hi = 2.0 * lo;
  const i64 x = arith::mod(arith::mod(qr, q2) * arith::mod(n, q2) % q2 * arith::mod(m, q2), q2);
  for (i64 c2 = static_cast<i64>(std::floor(lo)) + 1; static_cast<double>(c2) < hi; ++c2) {
    if (arith::gcd(c2, 2 * p.q * n * m) != 1) continue;
    const i64 c = p.c1 * c2;
    const double g = special::window_eval({special::WindowKind::H, 0}, static_cast<double>(c * qr) / p.C);
    if (g == 0.0) continue;
    const i64 cinv = arith::inv(arith::mod(c, q2), q2);
    const double ph = -static_cast<double>(arith::mod(cinv * x, q2)) / static_cast<double>(q2) +
                      static_cast<double>(qr) * static_cast<double>(n) * static_cast<double>(m) /
                          (static_cast<double>(q2) * static_cast<double>(c));
    const special::OscIntegral in = special::integral_I(ip, static_cast<double>(c), 2.0 * n, 2.0 * m, 1e-11);
    if (!in.converged) out.converged = false;
    out.lhs += static_cast<double>(lhs_symbol(c2, n, m, p.q, p.r)) * std::polar(1.0, kTwoPi * ph) * in.value *
               g / std::pow(static_cast<double>(c), 1.5);
    ++out.lhs_terms;
  }

  // Frequency of I~ in c2 per unit, and the other phase cycles of its z-integrand.
  const double l = static_cast<double>(arith::lcm(n, m));
  const double f = p.C / (2.0 * qpow(p.q, 2 + p.r) * p.c1 * l);
  const double other = qpow(p.q, 2 * p.r) * n * m / (qpow(p.q, 2) * p.C) +
                       4.0 * 2.0 * p.N * p.N / (qpow(p.q, 4) * p.C) +
                       2.0 * (n + m) * p.N * static_cast<double>(qr) / (qpow(p.q, 3) * p.C);
  out.c2_cutoff = static_cast<i64>(std::ceil((p.dual_cycles + other) / f));
  std::tie(out.rhs, out.rhs_doubled) = sum_rhs(p, n, m, out.c2_cutoff, &out.converged);
  return out;
}

VerificationReport poisson_stage2_check(const Stage2Params& p) {
  const Stage2Detail d = poisson_stage2(p);
  VerificationReport rep;
  rep.suite = "poisson-stage2";
  rep.tolerance = 1e-6;
  const double tail = std::abs(d.rhs_doubled - d.rhs) / std::max(std::abs(d.rhs), 1e-300);
  rep.cases.push_back(make_case({{"q", double(p.q)},
                                 {"r", double(p.r)},
                                 {"c1", double(p.c1)},
                                 {"delta", double(p.delta)},
                                 {"u", double(p.u)},
                                 {"v", double(p.v)},
                                 {"n", double(p.n)},
                                 {"m", double(p.m)},
                                 {"C", p.C},
                                 {"N", p.N},
                                 {"c2_cutoff", double(d.c2_cutoff)}},
                                d.lhs, d.rhs, tail < 1e-9 && d.converged));
  rep.extras.push_back({"c2_tail_rel_change", tail});
  return rep;
}

}  // namespace symsq::pipeline
