#include <cmath>
#include <cstdint>

#include "symsq/arith.hpp"
#include "symsq/pipeline.hpp"

namespace symsq::pipeline {

namespace {

double dpow(i64 p, int e) { return std::pow(static_cast<double>(p), e); }

// G_{c2}(p^j) for odd p from the closed form of g(p^j, c2); always real.
double g_closed(i64 p, int j, i64 c2) {
  if (j == 0) return 1.0;
  int a = 0;
  i64 rest = c2;
  while (rest % p == 0) {
    rest /= p;
    ++a;
  }
  if (j % 2 == 0) {
    if (j <= a) return dpow(p, j) - dpow(p, j - 1);
    if (j == a + 1) return -dpow(p, j - 1);
    return 0.0;
  }
  if (j != a + 1) return 0.0;
  return dpow(p, a) * arith::jacobi(arith::mod(rest, p), p) * std::sqrt(static_cast<double>(p));
}

// (n / delta) for odd delta, as in the series.
int symbol_over_delta(i64 n, i64 delta) { return delta == 1 ? 1 : arith::jacobi(arith::mod(n, delta), delta); }

// psi = chi (delta1 c21 / .), times the character mod 4 when delta = 3 mod 4.
cplx psi(const DirichletCharacter& chi, i64 d1c21, i64 delta, i64 n) {
  cplx v = chi.value_c(n) * static_cast<double>(arith::kronecker(d1c21, n));
  if (delta % 4 == 3 && n % 2 == 1 && n % 4 == 3) v = -v;
  if (delta % 4 == 3 && n % 2 == 0) v = 0.0;
  return v;
}

i64 squarefree_part(i64 n) {
  i64 out = 1;
  for (const auto& [p, e] : arith::factorize(n)) {
    if (e % 2 == 1) out *= p;
  }
  return out;
}

// Local factor sum_{j >= start} chi(p^j) G(p^j) p^{-j(1/2+s)} (p^j / delta), closed-form G.
cplx local_factor(i64 p, int start, i64 delta, i64 c2, cplx s, const DirichletCharacter& chi) {
  cplx sum = 0.0;
  i64 pj = arith::ipow(p, start);
  for (int j = start; j < 64; ++j) {
    const double g = g_closed(p, j, c2);
    const cplx term = chi.value_c(pj) * g * std::pow(static_cast<double>(p), -static_cast<double>(j) * (0.5 + s)) *
                      static_cast<double>(symbol_over_delta(pj, delta));
    sum += term;
    if (j > start && std::abs(term) < 1e-20 && g_closed(p, j + 1, c2) == 0.0) break;
    if (pj > (INT64_MAX / p) / 4) break;
    pj *= p;
  }
  return sum;
}

void check_lseries(const LSeriesParams& p, const DirichletCharacter& chi) {
  const i64 q = chi.q();
  if (p.delta < 1 || p.delta % 2 == 0 || arith::gcd(p.delta, q) != 1) throw DomainError("lseries: delta must be odd and prime to q");
  if (p.theta < 1 || !arith::is_squarefree(p.theta) || arith::gcd(p.theta, 2 * p.delta * q) != 1)
    throw DomainError("lseries: theta must be square-free and prime to 2 delta q");
  if (p.c2 < 1 || p.s.real() < 1.2 || p.nmax < 10 || p.prime_cutoff < 3) throw DomainError("lseries: bad c2, s or cutoffs");
}

}  // namespace

LSeriesDetail lseries_factorization(const LSeriesParams& p, const DirichletCharacter& chi) {
  check_lseries(p, chi);
  const i64 q = chi.q();
  LSeriesDetail out;

  // Smallest prime factors, for G(theta n) by multiplicativity.
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(p.nmax) + 1, 0);
  for (i64 i = 2; i <= p.nmax; ++i) {
    if (spf[i] != 0) continue;
    for (i64 j = i; j <= p.nmax; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  const auto theta_primes = arith::factorize(p.theta);
  for (i64 n = 1; n <= p.nmax; ++n) {
    if (arith::gcd(n, 2 * p.delta * q) != 1) continue;
    double g = 1.0;
    i64 rest = n;
    std::vector<std::pair<i64, int>> fac;
    while (rest > 1) {
      const i64 pr = spf[rest];
      int e = 0;
      while (rest % pr == 0) {
        rest /= pr;
        ++e;
      }
      fac.push_back({pr, e});
    }
    for (const auto& [tp, te] : theta_primes) {
      bool merged = false;
      for (auto& [pr, e] : fac) {
        if (pr == tp) {
          e += te;
          merged = true;
        }
      }
      if (!merged) fac.push_back({tp, te});
    }
    for (const auto& [pr, e] : fac) {
      g *= g_closed(pr, e, p.c2);
      if (g == 0.0) break;
    }
    if (g == 0.0) continue;
    const i64 m = p.theta * n;
    out.series += chi.value_c(m) * g * std::pow(static_cast<double>(m), -(0.5 + p.s)) *
                  static_cast<double>(symbol_over_delta(m, p.delta));
  }

  const i64 d1c21 = squarefree_part(p.delta) * squarefree_part(p.c2);
  cplx l = 0.0;
  for (i64 n = 1; n <= p.nmax; ++n) l += psi(chi, d1c21, p.delta, n) * std::pow(static_cast<double>(n), -p.s);

  out.l_tilde = 1.0;
  for (i64 pr : arith::primes_up_to(p.prime_cutoff)) {
    cplx local = 1.0;
    if (p.theta % pr == 0) {
      local = local_factor(pr, 1, p.delta, p.c2, p.s, chi);
    } else if (pr != 2 && (2 * p.delta * q) % pr != 0) {
      local = local_factor(pr, 0, p.delta, p.c2, p.s, chi);
    }
    out.l_tilde *= local * (1.0 - psi(chi, d1c21, p.delta, pr) * std::pow(static_cast<double>(pr), -p.s));
  }
  out.product = l * out.l_tilde;
  out.bound_constant = std::abs(out.l_tilde) * std::pow(static_cast<double>(p.theta), 0.6) /
                       std::pow(static_cast<double>(q * p.delta * p.c2), 0.1);
  return out;
}

double lseries_local_deviation(i64 p, i64 delta, i64 c2, cplx s, const DirichletCharacter& chi, int jmax) {
  if (p < 3 || !arith::is_prime(p)) throw DomainError("lseries_local_deviation: p must be an odd prime");
  cplx direct = 0.0, closed = 0.0;
  for (int j = 0; j <= jmax && arith::ipow(p, j) <= 200000; ++j) {
    const i64 pj = arith::ipow(p, j);
    const cplx w = chi.value_c(pj) * std::pow(static_cast<double>(p), -static_cast<double>(j) * (0.5 + s)) *
                   static_cast<double>(symbol_over_delta(pj, delta));
    direct += w * charsum::g_c2(pj, c2).to_complex();
    closed += w * g_closed(p, j, c2);
  }
  return std::abs(direct - closed);
}

VerificationReport lseries_factorization_check(const LSeriesParams& p, const DirichletCharacter& chi) {
  const LSeriesDetail d = lseries_factorization(p, chi);
  VerificationReport rep;
  rep.suite = "lseries-factorization";
  rep.tolerance = 1e-6;
  const std::vector<std::pair<std::string, double>> base = {{"q", double(chi.q())},      {"chi", double(chi.index())},
                                                            {"theta", double(p.theta)}, {"delta", double(p.delta)},
                                                            {"c2", double(p.c2)},       {"s_re", p.s.real()},
                                                            {"s_im", p.s.imag()}};
  rep.cases.push_back(make_case(base, d.series, d.product));

  // G_{c2} is multiplicative: closed form against direct Gauss sums on odd n.
  for (i64 n = 1; n <= 99; n += 2) {
    double g = 1.0;
    for (const auto& [pr, e] : arith::factorize(n)) g *= g_closed(pr, e, p.c2);
    auto params = base;
    params.push_back({"n", double(n)});
    CaseRecord rec = make_case(std::move(params), charsum::g_c2(n, p.c2).to_complex(), g);
    rec.rel_err = rec.abs_err / std::max(1.0, std::sqrt(static_cast<double>(n)));
    rep.cases.push_back(rec);
  }
  for (i64 pr : {3, 5, 7, 11, 13}) {
    if (arith::gcd(pr, 2 * p.delta * chi.q() * p.theta) != 1) continue;
    auto params = base;
    params.push_back({"p", double(pr)});
    CaseRecord rec = make_case(std::move(params), 0.0, 0.0);
    rec.abs_err = rec.rel_err = lseries_local_deviation(pr, p.delta, p.c2, p.s, chi);
    rep.cases.push_back(rec);
  }
  rep.extras.push_back({"l_tilde_abs", std::abs(d.l_tilde)});
  rep.extras.push_back({"bound_constant", d.bound_constant});
  return rep;
}

}  // namespace symsq::pipeline
