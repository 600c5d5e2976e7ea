#include <cmath>
#include <map>
#include <numbers>

#include <Eigen/Dense>

#include "symsq/arith.hpp"
#include "symsq/pipeline.hpp"

namespace symsq::pipeline {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kK = modform::HeckeForm::kWeight;

// 2 pi i^{-k}
cplx petersson_constant() {
  static const cplx ik[4] = {1.0, cplx(0.0, -1.0), -1.0, cplx(0.0, 1.0)};
  return kTwoPi * ik[kK % 4];
}

struct Support {
  std::vector<i64> n;
  std::vector<cplx> chi;
  std::vector<double> h;
};

Support support(const DirichletCharacter& chi, double N) {
  Support s;
  for (i64 n = static_cast<i64>(std::ceil(N)); n <= static_cast<i64>(std::floor(2.0 * N)); ++n) {
    const double h = special::window_eval({special::WindowKind::H, 0}, n / N);
    const cplx c = chi.value_c(n);
    if (h == 0.0 || c == 0.0) continue;
    s.n.push_back(n);
    s.chi.push_back(c);
    s.h.push_back(h);
  }
  return s;
}

// sum_{n,m} chi(n) chibar(m) h h S(n^2, m^2; q^4 c) J_{k-1}(4 pi nm / (q^4 c)) / (q^4 c),
// with the Kloosterman sum split over q^{4+r} and c' = c / q^r.
cplx c_term(const Support& s, i64 q, i64 c, Exec exec) {
  const int r = arith::valuation(c, q);
  const i64 cp = c / arith::ipow(q, r);
  const i64 Q = arith::ipow(q, 4 + r);
  const i64 cpbar = arith::inv(arith::mod(cp, Q), Q), qbar = arith::inv(arith::mod(Q, cp), cp);
  const std::size_t P = s.n.size();
  std::vector<std::pair<i64, i64>> qa, ca;
  std::map<i64, std::size_t> qidx;
  std::map<std::pair<i64, i64>, std::size_t> cidx;
  std::vector<std::size_t> qi(P * P), ci(P * P);
  for (std::size_t i = 0; i < P; ++i) {
    for (std::size_t j = 0; j < P; ++j) {
      // S(cpbar n^2, cpbar m^2; Q) = S(x, x; Q) with x = cpbar n m, since (nm, q) = 1.
      const i64 x = cpbar * arith::mod(s.n[i] * s.n[j], Q) % Q;
      auto [it, fresh] = qidx.try_emplace(x, qa.size());
      if (fresh) qa.push_back({x, x});
      qi[i * P + j] = it->second;
      const std::pair<i64, i64> y{qbar * (s.n[i] * s.n[i] % cp) % cp, qbar * (s.n[j] * s.n[j] % cp) % cp};
      auto [jt, fresh2] = cidx.try_emplace(y, ca.size());
      if (fresh2) ca.push_back(y);
      ci[i * P + j] = jt->second;
    }
  }
  const auto kq = charsum::kloosterman_batch(qa, Q, exec);
  const auto kc = charsum::kloosterman_batch(ca, cp, exec);
  const double mod = static_cast<double>(q * q * q * q) * static_cast<double>(c);
  cplx sum = 0.0;
  for (std::size_t i = 0; i < P; ++i) {
    for (std::size_t j = 0; j < P; ++j) {
      const double x = 2.0 * kTwoPi * static_cast<double>(s.n[i]) * static_cast<double>(s.n[j]) / mod;
      const double k = kq[qi[i * P + j]] * kc[ci[i * P + j]];
      sum += s.chi[i] * std::conj(s.chi[j]) * s.h[i] * s.h[j] * k * std::cyl_bessel_j(kK - 1.0, x);
    }
  }
  return sum / mod;
}

}  // namespace

MomentReport second_moment_kloosterman_side(const MomentParams& p, const DirichletCharacter& chi,
                                            const modform::HeckeForm& f, Exec exec) {
  if (p.q != chi.q() || p.N < 1.0 || p.N > 200.0 || p.c_max < 16) throw DomainError("second_moment: bad parameters");
  if (static_cast<i64>(4.0 * p.N * p.N) + 1 > f.limit()) throw DomainError("second_moment: tau table too short");
  MomentReport out;
  const Support s = support(chi, p.N);

  for (std::size_t i = 0; i < s.n.size(); ++i) {
    const double l = f.lambda(s.n[i] * s.n[i]);
    out.diagonal += std::norm(s.chi[i]) * l * l * s.h[i] * s.h[i];
  }
  const auto table = f.lambda_sq_table(static_cast<i64>(std::floor(2.0 * p.N)));
  Eigen::ArrayXd chi2(s.n.size()), lam(s.n.size()), h(s.n.size());
  for (std::size_t i = 0; i < s.n.size(); ++i) {
    chi2[i] = std::norm(s.chi[i]);
    lam[i] = table[s.n[i]];
    h[i] = s.h[i];
  }
  out.diagonal_vectorized = (chi2 * lam.square() * h.square()).sum();

  // Dyadic blocks C = 2^j with G_j from the partition of unity.
  const int jmax = static_cast<int>(std::ceil(std::log2(static_cast<double>(p.c_max)))) + 1;
  std::vector<cplx> blocks(static_cast<std::size_t>(jmax + 1), 0.0);
  for (i64 c = 16; c <= p.c_max; c += 16) {
    const cplx t = petersson_constant() * c_term(s, p.q, c, exec);
    out.off_diagonal += t;
    for (int j = 3; j <= jmax; ++j) {
      const double g = special::window_eval({special::WindowKind::Partition, j}, static_cast<double>(c));
      if (g != 0.0) blocks[j] += g * t;
    }
  }
  for (int j = 3; j <= jmax; ++j) {
    out.blocks.push_back({std::ldexp(1.0, j), blocks[j]});
    out.reassembled += blocks[j];
  }
  out.reassembly_deviation = std::abs(out.reassembled - out.off_diagonal);
  return out;
}

RepresentativeTerm representative_term(i64 q, int r, double C, double N, const DirichletCharacter& chi) {
  if (chi.q() != q || r < 0 || r > 4 || C <= 0.0 || N < 1.0) throw DomainError("representative_term: bad parameters");
  RepresentativeTerm out;
  const Support s = support(chi, N);
  const i64 qr = arith::ipow(q, r), Q = arith::ipow(q, 4 + r), q4 = arith::ipow(q, 4);
  out.eps = Q % 4 == 1 ? cplx(1.0) : cplx(0.0, 1.0);
  const double scale = std::pow(static_cast<double>(q), -2.0 - r / 2.0);
  const cplx pc = petersson_constant();

  // c = q^r c' with (c', q) = 1, 16 | c', weighted by the partition member G_0(c / C) on (C/2, 2C).
  for (i64 cp = 16; static_cast<double>(cp * qr) < 2.0 * C; cp += 16) {
    if (cp % q == 0) continue;
    const i64 c = cp * qr;
    const double g = special::window_eval({special::WindowKind::Partition, 0}, static_cast<double>(c) / C);
    if (g == 0.0) continue;
    const i64 full = q4 * c;
    const i64 cpbar = arith::inv(arith::mod(cp, Q), Q), qbar = arith::inv(arith::mod(Q, cp), cp);
    for (std::size_t i = 0; i < s.n.size(); ++i) {
      for (std::size_t j = 0; j < s.n.size(); ++j) {
        const i64 n = s.n[i], m = s.n[j];
        const cplx w = s.chi[i] * std::conj(s.chi[j]) * s.h[i] * s.h[j];
        const double bes = std::cyl_bessel_j(kK - 1.0,
                                             2.0 * kTwoPi * static_cast<double>(n) * static_cast<double>(m) /
                                                 static_cast<double>(full));
        out.block += pc * g / static_cast<double>(full) * w *
                     charsum::kloosterman_real(arith::mod(n * n, full), arith::mod(m * m, full), full) * bes;

        const double sym = r % 2 == 1 ? arith::jacobi(arith::mod(cp * n % q * m, q), q) : 1.0;
        const double ph = static_cast<double>(arith::mod(2 * cpbar % Q * arith::mod(n * m, Q), Q)) / static_cast<double>(Q);
        const double kl = charsum::kloosterman_real(qbar * (n * n % cp) % cp, qbar * (m * m % cp) % cp, cp);
        const cplx common = pc * scale * g / static_cast<double>(cp) * w * sym * kl * bes;
        out.plus += common * std::polar(1.0, kTwoPi * ph);
        out.minus += common * std::polar(1.0, -kTwoPi * ph);
      }
    }
  }
  out.deviation = std::abs(out.block - (out.eps * out.plus + std::conj(out.eps) * out.minus));
  out.conjugate_deviation = std::abs(out.eps * out.plus - std::conj(std::conj(out.eps) * out.minus));
  return out;
}

}  // namespace symsq::pipeline
