#include <cmath>
#include <numbers>
#include <random>

#include "symsq/arith.hpp"
#include "symsq/pipeline.hpp"

namespace symsq::pipeline {

namespace {

using i128 = __int128;

// e(num / den) with the numerator reduced first.
cplx e_frac(i128 num, i128 den) {
  i128 r = num % den;
  if (r < 0) r += den;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den));
}

i64 random_coprime(std::mt19937_64& rng, i64 lo, i64 hi, i64 to) {
  std::uniform_int_distribution<i64> d(lo, hi);
  for (;;) {
    const i64 v = d(rng);
    if (arith::gcd(v, to) == 1) return v;
  }
}

CaseRecord reciprocity_case(std::vector<std::pair<std::string, double>> params, i64 a, i64 c, i64 x) {
  const i64 abar = arith::inv(arith::mod(a, c), c), cbar = arith::inv(arith::mod(c, a), a);
  const cplx lhs = e_frac(static_cast<i128>(x) * abar, c);
  const cplx rhs = e_frac(-static_cast<i128>(x) * cbar, a) * e_frac(x, static_cast<i128>(a) * c);
  CaseRecord rec = make_case(std::move(params), lhs, rhs);
  rec.rel_err = reciprocity_holds(a, c, x) ? 0.0 : 1.0;
  return rec;
}

}  // namespace

CaseRecord make_case(std::vector<std::pair<std::string, double>> params, cplx lhs, cplx rhs, bool certified) {
  CaseRecord rec;
  rec.params = std::move(params);
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.abs_err = std::abs(lhs - rhs);
  const double scale = std::max(std::abs(lhs), std::abs(rhs));
  rec.rel_err = scale > 0.0 ? rec.abs_err / scale : rec.abs_err;
  rec.tail_certified = certified;
  return rec;
}

double VerificationReport::max_rel_err() const {
  double m = 0.0;
  for (const auto& c : cases) m = std::max(m, c.rel_err);
  return m;
}

bool VerificationReport::pass() const {
  for (const auto& c : cases) {
    if (!c.tail_certified || !(c.rel_err <= tolerance)) return false;
  }
  return true;
}

void VerificationReport::append(const VerificationReport& other) {
  cases.insert(cases.end(), other.cases.begin(), other.cases.end());
  extras.insert(extras.end(), other.extras.begin(), other.extras.end());
}

bool reciprocity_holds(i64 a, i64 c, i64 x) {
  if (a < 1 || c < 1 || arith::gcd(a, c) != 1) throw DomainError("reciprocity_holds: need coprime positive a, c");
  const i128 abar = arith::inv(arith::mod(a, c), c), cbar = arith::inv(arith::mod(c, a), a);
  const i128 ac = static_cast<i128>(a) * c;
  const i128 k = (abar * a + cbar * c - 1) % ac;
  return (k * (static_cast<i128>(x) % ac)) % ac == 0;
}

VerificationReport reciprocity_stage1(i64 q, int trials, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "reciprocity-stage1";
  rep.tolerance = 0.0;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rd(0, 4);
  for (int t = 0; t < trials; ++t) {
    const int r = rd(rng);
    const i64 c = 16 * random_coprime(rng, 1, 4000, q);
    const i64 n = random_coprime(rng, 1, 100000, q), m = random_coprime(rng, 1, 100000, q);
    const i64 qr = arith::ipow(q, 4 + r);
    rep.cases.push_back(reciprocity_case({{"q", double(q)}, {"r", double(r)}, {"c", double(c)}, {"n", double(n)}, {"m", double(m)}},
                                         c, qr, 2 * n * m));
  }
  return rep;
}

VerificationReport reciprocity_stage2(i64 q, int trials, std::uint64_t seed) {
  VerificationReport rep;
  rep.suite = "reciprocity-stage2";
  rep.tolerance = 0.0;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> rd(0, 4);
  for (int t = 0; t < trials; ++t) {
    const int r = rd(rng);
    const i64 c1 = random_coprime(rng, 1, 5000, q), c2 = random_coprime(rng, 1, 5000, q);
    const i64 n = random_coprime(rng, 1, 10000, q), m = random_coprime(rng, 1, 10000, q);
    const i64 x = arith::ipow(q, r) * n * m;
    rep.cases.push_back(reciprocity_case(
        {{"q", double(q)}, {"r", double(r)}, {"c1", double(c1)}, {"c2", double(c2)}, {"n", double(n)}, {"m", double(m)}},
        q * q, c1 * c2, x));
  }
  return rep;
}

}  // namespace symsq::pipeline
