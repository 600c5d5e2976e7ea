#include <cmath>

#include "symsq/arith.hpp"
#include "symsq/modform.hpp"

namespace symsq::modform {

namespace {

double sqrt_conductor(i64 q) { return std::pow(static_cast<double>(q), 4.5); }

// Dirichlet series sums at one s:
// S1(X) = sum lambda(n^2) chi(n) n^{-s} V_s(n / (X sqrt Q)),
// S2(X) = sum lambda(n^2) conj(chi(n)) n^{s-1} V'_{1-s}(n X / sqrt Q),
// with V' built from conj(chi)^2, so that V'_{1-s} = conj(V_{1-conj s}); on Re s = 1/2 that is conj(V_s).
struct SidePair {
  cplx s1[2], s2[2];
};

SidePair side_sums(const std::vector<double>& lsq, const special::CharacterTable& chi, cplx s, double root_q,
                   const double xs[2], double y_max, const special::VWeight& v_s) {
  SidePair out{};
  const i64 nmax = static_cast<i64>(lsq.size()) - 1;
  for (i64 n = nmax; n >= 1; --n) {
    const cplx c = chi.values[static_cast<std::size_t>(n % chi.modulus)];
    if (c == 0.0 || lsq[n] == 0.0) continue;
    const double nd = static_cast<double>(n);
    const double ln = std::log(nd);
    const cplx a1 = lsq[n] * c * std::exp(-s * ln);
    const cplx a2 = lsq[n] * std::conj(c) * std::exp((s - 1.0) * ln);
    for (int i = 0; i < 2; ++i) {
      const double y1 = nd / (xs[i] * root_q);
      if (y1 <= y_max) out.s1[i] += a1 * v_s.fast(y1);
      const double y2 = nd * xs[i] / root_q;
      if (y2 <= y_max) out.s2[i] += a2 * std::conj(v_s.fast(y2));
    }
  }
  return out;
}

}  // namespace

i64 central_value_table_limit(i64 q, const CentralValueOptions& opt) {
  return static_cast<i64>(std::ceil(opt.y_max * std::max(1.0, opt.x_ratio) * sqrt_conductor(q)));
}

CentralValueResult central_value(const HeckeForm& f, const DirichletCharacter& chi, const CentralValueOptions& opt,
                                 const std::vector<double>* lambda_sq) {
  if (std::abs(opt.s_probe.real() - 0.5) > 1e-15) throw DomainError("central_value: probe point must lie on Re s = 1/2");
  if (!chi.is_primitive() || chi.ell() != 3) throw DomainError("central_value: chi must be primitive of modulus q^3");
  const i64 q = chi.q();
  const double root_q = sqrt_conductor(q);
  const i64 nmax = central_value_table_limit(q, opt);
  if (nmax > f.limit()) throw DomainError("central_value: tau table too short");

  const special::CharacterTable tab = special::character_table(chi);
  const special::CharacterTable psi = special::character_table_power(chi, 2);
  const special::GammaFactor g = special::make_gamma_factor(HeckeForm::kWeight, chi.parity(), opt.kappa);

  const double ymin = 1.0 / (std::max(1.0, opt.x_ratio) * root_q);
  const double ymax = opt.y_max * 1.0001;
  auto weight = [&](cplx s) {
    special::VWeightOptions o;
    o.A = opt.A;
    o.s = s;
    special::VWeight v(psi, g, o);
    v.tabulate(ymin, ymax);
    return v;
  };
  const cplx s0 = opt.s_probe, s0b = std::conj(opt.s_probe);
  const special::VWeight v_a = weight(s0), v_b = weight(s0b), v_c = weight(0.5);

  std::vector<double> own;
  if (lambda_sq == nullptr || static_cast<i64>(lambda_sq->size()) <= nmax) own = f.lambda_sq_table(nmax);
  const std::vector<double> lsq =
      own.empty() ? std::vector<double>(lambda_sq->begin(), lambda_sq->begin() + nmax + 1) : std::move(own);
  const double xs[2] = {1.0, opt.x_ratio};

  // Lambda(s) = P1(s) S1(s, X) + eps P2(s) S2(s, X) for every X; eps by least squares over s0 and conj(s0).
  cplx num = 0.0;
  double den = 0.0;
  for (const cplx s : {s0, s0b}) {
    const special::VWeight& vs = s == s0 ? v_a : v_b;
    const SidePair sp = side_sums(lsq, tab, s, root_q, xs, opt.y_max, vs);
    const cplx p1 = std::exp(s / 2.0 * std::log(root_q * root_q) + special::log_gamma_factor(g, s));
    const cplx p2 = std::exp((1.0 - s) / 2.0 * std::log(root_q * root_q) + special::log_gamma_factor(g, 1.0 - s));
    const cplx a = p2 * (sp.s2[1] - sp.s2[0]);
    const cplx b = p1 * (sp.s1[0] - sp.s1[1]);
    num += std::conj(a) * b;
    den += std::norm(a);
  }
  if (den == 0.0) throw NotConverged("central_value: degenerate root number system");

  CentralValueResult out;
  out.q = q;
  out.chi_index = chi.index();
  out.epsilon = num / den;

  cplx direct = 0.0, dual = 0.0;
  for (i64 n = std::min<i64>(nmax, static_cast<i64>(std::floor(opt.y_max * root_q))); n >= 1; --n) {
    const cplx c = tab.values[static_cast<std::size_t>(n % tab.modulus)];
    if (c == 0.0 || lsq[n] == 0.0) continue;
    const double nd = static_cast<double>(n);
    const cplx v = v_c.fast(nd / root_q);
    direct += lsq[n] * c / std::sqrt(nd) * v;
    dual += lsq[n] * std::conj(c) / std::sqrt(nd) * std::conj(v);
  }
  out.value = direct + out.epsilon * dual;
  out.afe_length = nmax;
  out.tail_estimate = std::max({std::abs(v_a(opt.y_max)), std::abs(v_b(opt.y_max)), std::abs(v_c(opt.y_max))});
  for (const special::VWeight* v : {&v_a, &v_b, &v_c}) {
    out.v_tail = std::max({out.v_tail, v->tail_bound(ymin), v->tail_bound(opt.y_max)});
  }
  out.v_certified = out.v_tail < 1e-10;
  return out;
}

cplx dyadic_linear_form(const HeckeForm& f, const DirichletCharacter& chi, double big_n) {
  if (big_n < 1.0) throw DomainError("dyadic_linear_form: N must be at least 1");
  const i64 hi = static_cast<i64>(std::ceil(2.0 * big_n));
  const std::vector<double> lsq = f.lambda_sq_table(hi);
  cplx sum = 0.0;
  for (i64 n = static_cast<i64>(std::floor(big_n)); n <= hi; ++n) {
    const double h = special::window_eval({special::WindowKind::H, 0}, static_cast<double>(n) / big_n);
    if (h == 0.0) continue;
    sum += lsq[n] * chi.value_c(n) * h;
  }
  return sum;
}

}  // namespace symsq::modform
