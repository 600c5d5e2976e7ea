#include <cmath>

#include "symsq/arith.hpp"
#include "symsq/pipeline.hpp"

namespace symsq::pipeline {

namespace {

CaseRecord exact_case(std::vector<std::pair<std::string, double>> params, const CycNum& lhs, const CycNum& rhs) {
  CaseRecord rec = make_case(std::move(params), lhs.to_complex(), rhs.to_complex());
  rec.rel_err = cyc_equal_lifted(lhs, rhs) ? 0.0 : 1.0;
  return rec;
}

}  // namespace

double zero_frequency_magnitude(i64 q, int r) {
  const double qd = static_cast<double>(q);
  if (r == 1) return std::pow(qd, 1.5);
  if (r > 0 && r % 2 == 0) return qd * (qd - 1.0);
  return 0.0;
}

VerificationReport zero_frequency_check(i64 q, int r, i64 c1, i64 delta, i64 u, i64 v) {
  if (q < 3 || !arith::is_prime(q) || r < 0 || r > 4) throw DomainError("zero_frequency_check: bad q or r");
  if (arith::mod(c1 * delta, q) == 0) throw DomainError("zero_frequency_check: q divides c1 delta");
  VerificationReport rep;
  rep.suite = "zero-frequency";
  rep.tolerance = 0.0;
  const i64 q2 = q * q;
  const i64 y = arith::mod(-arith::inv(arith::mod(c1, q2), q2) * (arith::ipow(q, r) % q2) % q2 * arith::mod(delta, q2), q2);
  const CycNum brute = charsum::s_r_q2(0, y, q, r);
  const std::vector<std::pair<std::string, double>> base = {
      {"q", double(q)}, {"r", double(r)}, {"c1", double(c1)}, {"delta", double(delta)}};

  // Magnitude: |S|^2 against the table, exactly.
  auto with = [&](const char* what) {
    auto p = base;
    p.push_back({what, 1.0});
    return p;
  };
  const CycNum norm = brute * brute.conj();
  const double mag = zero_frequency_magnitude(q, r);
  rep.cases.push_back(exact_case(with("norm"), norm, CycNum::integer(1, static_cast<i64>(std::llround(mag * mag)))));
  rep.cases.back().lhs = std::abs(brute.to_complex());
  rep.cases.back().rhs = mag;
  // Value, including the phase at r = 1.
  rep.cases.push_back(exact_case(with("value"), brute, charsum::s_r_zero_closed(q, r, c1, delta)));

  // g(n, 0) = phi(n) for square n and 0 otherwise, along n = u v j.
  for (i64 j = 1; j <= 45; j += 2) {
    const i64 n = u * v * j;
    if (n % 2 == 0 || arith::gcd(n, q) != 1) continue;
    const CycNum g = charsum::gauss_sum(n, 0);
    const i64 expect = arith::is_square(n) ? arith::euler_phi(n) : 0;
    auto p = base;
    p.push_back({"n", double(n)});
    rep.cases.push_back(exact_case(std::move(p), g, CycNum::integer(1, expect)));
  }
  return rep;
}

}  // namespace symsq::pipeline
