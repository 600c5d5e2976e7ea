#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "symsq/arith.hpp"
#include "symsq/modform.hpp"

namespace symsq::modform {

namespace {
constexpr double kPi = std::numbers::pi;
}

HeckeForm::HeckeForm(i64 limit, const std::filesystem::path& cache_dir) {
  if (limit < 1) throw DomainError("HeckeForm: limit must be positive");
  if (!cache_dir.empty()) {
    const auto path = cache_dir / "tau.csv";
    if (auto cached = read_tau_csv(path, limit)) {
      tau_ = std::move(*cached);
      return;
    }
    tau_ = tau_table(limit);
    write_tau_csv(path, tau_);
    return;
  }
  tau_ = tau_table(limit);
}

i128 HeckeForm::tau(i64 n) const {
  if (n < 1 || n > limit()) throw DomainError("HeckeForm::tau: index outside the table");
  return tau_[n];
}

double HeckeForm::lambda(i64 n) const {
  return static_cast<double>(static_cast<long double>(tau(n)) / std::pow(static_cast<long double>(n), 5.5L));
}

double HeckeForm::lambda_prime_power(i64 p, int j) const {
  if (j == 0) return 1.0;
  const double l = lambda(p);
  double prev = 1.0, cur = l;
  for (int i = 1; i < j; ++i) {
    const double next = l * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double HeckeForm::lambda_sq(i64 n) const {
  if (n < 1) throw DomainError("HeckeForm::lambda_sq: n must be positive");
  double out = 1.0;
  for (const auto& [p, e] : arith::factorize(n)) {
    if (p > limit()) throw DomainError("HeckeForm::lambda_sq: prime outside the table");
    out *= lambda_prime_power(p, 2 * e);
  }
  return out;
}

std::vector<double> HeckeForm::lambda_sq_table(i64 nmax) const {
  std::vector<i64> spf(static_cast<std::size_t>(nmax) + 1, 0);
  for (i64 i = 2; i <= nmax; ++i) {
    if (spf[i] != 0) continue;
    for (i64 j = i; j <= nmax; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
  if (nmax >= 1) out[1] = 1.0;
  for (i64 n = 2; n <= nmax; ++n) {
    const i64 p = spf[n];
    if (p > limit()) throw DomainError("HeckeForm::lambda_sq_table: prime outside the table");
    i64 rest = n;
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out[n] = out[rest] * lambda_prime_power(p, 2 * e);
  }
  return out;
}

std::pair<cplx, cplx> HeckeForm::satake(i64 p) const {
  const double l = lambda(p);
  const cplx root = std::sqrt(cplx(l * l - 4.0, 0.0));
  return {(l + root) / 2.0, (l - root) / 2.0};
}

i64 index_gamma0(i64 m) {
  if (m < 1) throw DomainError("index_gamma0: level must be positive");
  i64 out = m;
  for (const auto& [p, e] : arith::factorize(m)) out = out / p * (p + 1);
  return out;
}

// ------------------------------------------------------- symmetric square

cplx sym2_euler_factor(const HeckeForm& f, i64 p, cplx s, const special::CharacterTable& chi) {
  const cplx x = chi.values[static_cast<std::size_t>(p % chi.modulus)] * std::pow(static_cast<double>(p), -s);
  // (1 - a^2 x)(1 - x)(1 - b^2 x) = 1 - lambda(p^2) x + lambda(p^2) x^2 - x^3
  const double l2 = f.lambda_prime_power(p, 2);
  return 1.0 / (1.0 - l2 * x + l2 * x * x - x * x * x);
}

Sym2Check sym2_dirichlet_identity_check(const HeckeForm& f, cplx s, const special::CharacterTable& chi, i64 prime_cutoff,
                                        i64 nmax) {
  Sym2Check out;
  out.euler = 1.0;
  for (i64 p : arith::primes_up_to(prime_cutoff)) out.euler *= sym2_euler_factor(f, p, s, chi);
  special::CharacterTable chi2 = chi;
  for (auto& v : chi2.values) v *= v;
  const std::vector<double> l = f.lambda_sq_table(nmax);
  cplx series = 0.0;
  for (i64 n = nmax; n >= 1; --n) {
    const cplx c = chi.values[static_cast<std::size_t>(n % chi.modulus)];
    if (c != 0.0) series += l[n] * c * std::pow(static_cast<double>(n), -s);
  }
  out.dirichlet = special::dirichlet_l(2.0 * s, chi2) * series;
  out.deviation = std::abs(out.euler - out.dirichlet);
  return out;
}

double sym2_local_deviation(const HeckeForm& f, i64 p, cplx s, const special::CharacterTable& chi, int jmax) {
  const cplx c = chi.values[static_cast<std::size_t>(p % chi.modulus)];
  const cplx x = c * std::pow(static_cast<double>(p), -s);
  cplx sum = 0.0, xp = 1.0;
  const double l = f.lambda(p);
  // lambda(p^{2j}) from the recursion, kept in step with j.
  double prev = 1.0, cur = l;  // lambda(p^{i-1}), lambda(p^i) with i = 1
  for (int j = 0; j <= jmax; ++j) {
    const double l2j = j == 0 ? 1.0 : cur;
    sum += l2j * xp;
    xp *= x;
    for (int k = 0; k < (j == 0 ? 1 : 2); ++k) {
      const double next = l * cur - prev;
      prev = cur;
      cur = next;
    }
  }
  const cplx lhs = sum / (1.0 - x * x);
  return std::abs(lhs - sym2_euler_factor(f, p, s, chi));
}

// ------------------------------------------------------------- Petersson

double l1_sym2_delta(const HeckeForm& f) {
  // Level one, trivial twist: Lambda(s) = gamma(s) L(s) with epsilon = 1 and
  // L(s) = zeta(2s) sum lambda(n^2) n^{-s}. At s = 1 the dual side sits at s = 0.
  const special::CharacterTable one{1, {cplx(1.0)}};
  const special::GammaFactor g = special::make_gamma_factor(HeckeForm::kWeight, 0);
  special::VWeightOptions o1, o0;
  o1.shape = o0.shape = special::WeightShape::Unit;
  o1.T = o0.T = 50.0;
  o1.s = 1.0;
  o0.s = 0.0;
  o1.sigma_small = o0.sigma_small = 1.5;
  const special::VWeight v1(one, g, o1), v0(one, g, o0);
  if (f.limit() < 60) throw DomainError("l1_sym2_delta: tau table too short");
  const i64 nmax = 60;
  const std::vector<double> l = f.lambda_sq_table(nmax);
  cplx s1 = 0.0, s0 = 0.0;
  for (i64 n = nmax; n >= 1; --n) {
    const double y = static_cast<double>(n);
    s1 += l[n] / y * v1(y);
    s0 += l[n] * v0(y);
  }
  const cplx g1 = special::gamma_factor_eval(g, 1.0), g0 = special::gamma_factor_eval(g, 0.0);
  return ((g1 * s1 + g0 * s0) / g1).real();
}

double petersson_norm_delta(const HeckeForm& f, i64 level) {
  const int k = HeckeForm::kWeight;
  const double gk = boost::math::factorial<double>(k - 1);
  return static_cast<double>(index_gamma0(level)) * (2.0 / kPi) * gk / std::pow(4.0 * kPi, k) * l1_sym2_delta(f);
}

PeterssonCheck petersson_check(const HeckeForm& f, i64 n, i64 m, i64 c_max, double norm) {
  const int k = HeckeForm::kWeight;
  PeterssonCheck out;
  out.n = n;
  out.m = m;
  out.spectral = boost::math::factorial<double>(k - 2) / std::pow(4.0 * kPi, k - 1) * f.lambda(n) * f.lambda(m) / norm;
  // i^{-k} = 1 for k = 12.
  const double sign = (k % 4 == 0) ? 1.0 : -1.0;
  const double root = 4.0 * kPi * std::sqrt(static_cast<double>(n * m));
  double sum = 0.0;
#pragma omp parallel for reduction(+ : sum) schedule(dynamic, 64)
  for (i64 c = 1; c <= c_max; ++c) {
    const double cd = static_cast<double>(c);
    sum += charsum::kloosterman_real(n, m, c) / cd * boost::math::cyl_bessel_j(k - 1, root / cd);
  }
  out.geometric = (n == m ? 1.0 : 0.0) + 2.0 * kPi * sign * sum;
  out.deviation = std::abs(out.spectral - out.geometric);
  return out;
}

std::vector<PeterssonCheck> petersson_grid(const HeckeForm& f, i64 nmax, i64 c_max, double norm) {
  const int k = HeckeForm::kWeight;
  const double sign = (k % 4 == 0) ? 1.0 : -1.0;
  const std::size_t pairs = static_cast<std::size_t>(nmax * nmax);
  std::vector<double> sums(pairs, 0.0);
#pragma omp parallel
  {
    std::vector<double> local(pairs, 0.0), kl(pairs), cosines;
#pragma omp for schedule(dynamic, 16)
    for (i64 c = 1; c <= c_max; ++c) {
      cosines.resize(static_cast<std::size_t>(c));
      for (i64 t = 0; t < c; ++t) cosines[t] = std::cos(2.0 * kPi * static_cast<double>(t) / static_cast<double>(c));
      std::fill(kl.begin(), kl.end(), 0.0);
      for (i64 x = 0; x < c; ++x) {
        if (arith::gcd(x, c) != 1) continue;
        const i64 xb = arith::inv(x, c);
        for (i64 n = 1; n <= nmax; ++n) {
          const i64 nx = n * x % c;
          for (i64 m = 1; m <= nmax; ++m) kl[(n - 1) * nmax + (m - 1)] += cosines[(nx + m * xb) % c];
        }
      }
      const double cd = static_cast<double>(c);
      for (i64 n = 1; n <= nmax; ++n) {
        for (i64 m = 1; m <= nmax; ++m) {
          const double j = boost::math::cyl_bessel_j(k - 1, 4.0 * kPi * std::sqrt(static_cast<double>(n * m)) / cd);
          local[(n - 1) * nmax + (m - 1)] += kl[(n - 1) * nmax + (m - 1)] / cd * j;
        }
      }
    }
#pragma omp critical
    for (std::size_t i = 0; i < pairs; ++i) sums[i] += local[i];
  }
  std::vector<PeterssonCheck> out;
  for (i64 n = 1; n <= nmax; ++n) {
    for (i64 m = 1; m <= nmax; ++m) {
      PeterssonCheck pc;
      pc.n = n;
      pc.m = m;
      pc.spectral = boost::math::factorial<double>(k - 2) / std::pow(4.0 * kPi, k - 1) * f.lambda(n) * f.lambda(m) / norm;
      pc.geometric = (n == m ? 1.0 : 0.0) + 2.0 * kPi * sign * sums[(n - 1) * nmax + (m - 1)];
      pc.deviation = std::abs(pc.spectral - pc.geometric);
      out.push_back(pc);
    }
  }
  return out;
}

}  // namespace symsq::modform
