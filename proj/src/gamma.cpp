#include <cmath>
#include <numbers>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "symsq/special.hpp"

namespace symsq::special {

namespace {

constexpr double kPi = std::numbers::pi;

// Stirling series for log Gamma(z), |z| >= 15, Re z > 0.
cplx stirling(cplx z) {
  cplx s = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
  const cplx z2 = z * z;
  cplx zp = z;
  for (int j = 1; j <= 10; ++j) {
    const double b = boost::math::bernoulli_b2n<double>(j);
    s += b / ((2.0 * j) * (2.0 * j - 1.0) * zp);
    zp *= z2;
  }
  return s;
}

}  // namespace

cplx lgamma_complex(cplx z) {
  if (z.real() < 0.5) {
    const cplx sinpz = std::sin(kPi * z);
    if (std::abs(sinpz) < 1e-300) throw DomainError("lgamma_complex: pole");
    return std::log(kPi) - std::log(sinpz) - lgamma_complex(1.0 - z);
  }
  cplx shift = 0.0;
  while (std::abs(z) < 15.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

GammaFactor make_gamma_factor(int k, int parity, KappaConvention conv) {
  if (parity != 0 && parity != 1) throw DomainError("make_gamma_factor: parity must be 0 or 1");
  GammaFactor g;
  g.k = k;
  g.parity = parity;
  g.kappa[0] = conv == KappaConvention::OnePlusA ? 1.0 + parity : 1.0 - parity;
  g.kappa[1] = k - 1.0;
  g.kappa[2] = k;
  return g;
}

cplx log_gamma_factor(const GammaFactor& g, cplx s) {
  cplx out = -1.5 * s * std::log(kPi);
  for (double kap : g.kappa) {
    const cplx w = (s + kap) / 2.0;
    const double nearest = std::round(w.real());
    if (nearest <= 0.0 && std::abs(w - cplx(nearest, 0.0)) < 1e-12) {
      throw DomainError("gamma_factor_eval: too close to a pole");
    }
    out += lgamma_complex(w);
  }
  return out;
}

cplx gamma_factor_eval(const GammaFactor& g, cplx s) { return std::exp(log_gamma_factor(g, s)); }

cplx hurwitz_zeta(cplx s, double a) {
  if (a <= 0.0 || a > 1.0) throw DomainError("hurwitz_zeta: a must lie in (0, 1]");
  if (std::abs(s - 1.0) < 1e-14) throw DomainError("hurwitz_zeta: pole at s = 1");
  const int n = 20 + static_cast<int>(std::abs(s));
  cplx sum = 0.0;
  for (int j = 0; j < n; ++j) sum += std::exp(-s * std::log(j + a));
  const double na = n + a;
  const double lna = std::log(na);
  const cplx base = std::exp(-s * lna);
  sum += base * na / (s - 1.0) + 0.5 * base;
  cplx rising = s;  // s (s+1) ... (s+2j-2)
  double pw = 1.0 / na;
  for (int j = 1; j <= 14; ++j) {
    const double coef = boost::math::bernoulli_b2n<double>(j) / boost::math::factorial<double>(2 * j);
    const cplx term = coef * rising * base * pw;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
    pw /= na * na;
  }
  return sum;
}

CharacterTable character_table(const DirichletCharacter& chi) {
  CharacterTable t;
  t.modulus = chi.modulus();
  t.values.resize(static_cast<std::size_t>(t.modulus));
  for (i64 a = 0; a < t.modulus; ++a) t.values[a] = chi.value_c(a);
  return t;
}

CharacterTable character_table_power(const DirichletCharacter& chi, int power) {
  return character_table(chi.pow(power));
}

cplx dirichlet_l(cplx s, const CharacterTable& psi) {
  const double m = static_cast<double>(psi.modulus);
  cplx sum = 0.0;
  if (s == 1.0) {
    // L(1, psi) = -(1/M) sum psi(a) digamma(a/M) for nontrivial psi.
    for (i64 a = 1; a <= psi.modulus; ++a) sum -= psi.values[a % psi.modulus] * boost::math::digamma(a / m);
    return sum / m;
  }
  if (s.real() >= 5.0) {
    // Direct series; the tail past K is below K^{1-sigma}/(sigma-1) <= 1e-18.
    const double sig = s.real();
    const auto K = static_cast<i64>(std::ceil(std::pow(1e-18 * (sig - 1.0), 1.0 / (1.0 - sig))));
    for (i64 n = K; n >= 1; --n) {
      const cplx v = psi.values[n % psi.modulus];
      if (v != 0.0) sum += v * std::exp(-s * std::log(static_cast<double>(n)));
    }
    return sum;
  }
  for (i64 a = 1; a <= psi.modulus; ++a) {
    const cplx v = psi.values[a % psi.modulus];
    if (v == 0.0) continue;
    sum += v * hurwitz_zeta(s, a / m);
  }
  return sum * std::exp(-s * std::log(m));
}

cplx dirichlet_l1_series(const CharacterTable& psi, i64 terms) {
  // Stop at a full period so the partial sums of psi vanish at the cut.
  const i64 m = psi.modulus;
  const i64 x = std::max<i64>(1, terms / m) * m;
  cplx sum = 0.0;
  for (i64 n = x; n >= 1; --n) {
    const cplx v = psi.values[n % m];
    if (v != 0.0) sum += v / static_cast<double>(n);
  }
  return sum;
}

VWeight::VWeight(const CharacterTable& psi, const GammaFactor& gamma, const VWeightOptions& opt) : opt_(opt) {
  if (opt.A < 1) throw DomainError("VWeight: A must be positive");
  const cplx lg_s = log_gamma_factor(gamma, opt.s);
  auto build = [&](double sigma) {
    Line line;
    line.sigma = sigma;
    const int steps = static_cast<int>(std::ceil(opt_.T / opt_.step));
    for (int j = -steps; j <= steps; ++j) {
      const cplx u(sigma, j * opt_.step);
      const cplx ratio = std::exp(log_gamma_factor(gamma, opt.s + u) - lg_s);
      const cplx cosw = opt_.shape == WeightShape::Unit
                            ? cplx(1.0)
                            : std::exp(-12.0 * opt_.A * std::log(std::cos(kPi * u / (4.0 * opt_.A))));
      const cplx l = dirichlet_l(2.0 * opt.s + 2.0 * u, psi);
      line.u.push_back(u);
      line.f.push_back(ratio * cosw * l / u);
    }
    return line;
  };
  small_y_ = build(opt.sigma_small);
  large_y_ = build(opt.sigma_large);
}

void VWeight::tabulate(double ymin, double ymax, double log_step) {
  if (ymin <= 0.0 || ymax <= ymin) throw DomainError("VWeight::tabulate: bad range");
  grid_step_ = log_step;
  grid_lo_ = std::log(ymin) - 4 * log_step;
  const int pts = static_cast<int>(std::ceil((std::log(ymax) - grid_lo_) / log_step)) + 5;
  grid_.resize(static_cast<std::size_t>(pts));
  for (int i = 0; i < pts; ++i) grid_[i] = (*this)(std::exp(grid_lo_ + i * log_step));
}

cplx VWeight::fast(double y) const {
  if (grid_.empty()) return (*this)(y);
  const double t = (std::log(y) - grid_lo_) / grid_step_;
  const int i0 = static_cast<int>(std::floor(t)) - 3;
  if (i0 < 0 || i0 + 8 > static_cast<int>(grid_.size())) return (*this)(y);
  const double f = t - i0;
  cplx sum = 0.0;
  for (int j = 0; j < 8; ++j) {
    double l = 1.0;
    for (int k = 0; k < 8; ++k) {
      if (k != j) l *= (f - k) / static_cast<double>(j - k);
    }
    sum += l * grid_[i0 + j];
  }
  return sum;
}

cplx VWeight::integrate(const Line& line, double y) const {
  const double ly = std::log(y);
  cplx sum = 0.0;
  for (std::size_t j = 0; j < line.u.size(); ++j) sum += line.f[j] * std::exp(-line.u[j] * ly);
  return sum * (opt_.step / (2.0 * kPi));
}

cplx VWeight::operator()(double y) const {
  if (y <= 0.0) throw DomainError("VWeight: y must be positive");
  return integrate(y < 1.0 ? small_y_ : large_y_, y);
}

double VWeight::tail_bound(double y) const {
  const Line& line = y < 1.0 ? small_y_ : large_y_;
  const double end = std::max(std::abs(line.f.front()), std::abs(line.f.back()));
  // The integrand decays at least like exp(-3 pi |t|) beyond T.
  return 2.0 * end * std::pow(y, -line.sigma) / (2.0 * kPi * 3.0 * kPi);
}

VValue v_weight(double y, const DirichletCharacter& chi_squared_source, int A, const GammaFactor& gamma, double T) {
  VWeightOptions opt;
  opt.A = A;
  opt.T = T;
  VWeight v(character_table_power(chi_squared_source, 2), gamma, opt);
  VValue out;
  out.value = v(y);
  out.tail = v.tail_bound(y);
  out.certified = out.tail < 1e-10;
  return out;
}

}  // namespace symsq::special
