#include "symsq/suites.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "symsq/arith.hpp"
#include "symsq/charsum.hpp"
#include "symsq/special.hpp"

namespace symsq::suites {

namespace {

using pipeline::CaseRecord;
using pipeline::make_case;
using Params = std::vector<std::pair<std::string, double>>;
using cplx = std::complex<double>;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// rel_err is 0 on exact equality; above the exact order limit it is the 50-digit relative distance.
CaseRecord exact_case(Params params, const CycNum& lhs, const CycNum& rhs) {
  const i64 order = arith::lcm(lhs.order(), rhs.order());
  const CycNum a = lhs.lifted(order), b = rhs.lifted(order);
  CaseRecord rec = make_case(std::move(params), a.to_complex(), b.to_complex());
  const bool equal = cyc_equal(a, b);
  if (order <= kExactOrderLimit) {
    rec.abs_err = equal ? 0.0 : std::max(rec.abs_err, 1e-300);
    rec.rel_err = equal ? 0.0 : std::max(rec.rel_err, 1e-300);
    return rec;
  }
  const Real50 dist = cyc_distance(a, b);
  const Complex50 za = a.to_complex50(), zb = b.to_complex50();
  const Real50 scale = std::max(sqrt(za.re * za.re + za.im * za.im), sqrt(zb.re * zb.re + zb.im * zb.im));
  rec.abs_err = static_cast<double>(dist);
  rec.rel_err = scale > 0 ? static_cast<double>(dist / scale) : rec.abs_err;
  if (!equal) rec.rel_err = std::max(rec.rel_err, 1e-300);
  return rec;
}

CaseRecord integer_case(Params params, i64 lhs, i64 rhs) {
  CaseRecord rec = make_case(std::move(params), cplx(double(lhs)), cplx(double(rhs)));
  rec.rel_err = lhs == rhs ? 0.0 : std::max(rec.rel_err, 1e-300);
  return rec;
}

enum Lemma { kChar1, kChar11, kChar12, kCor, kChar2, kCorB, kChar31 };

Params tagged(Lemma l, Params p) {
  p.insert(p.begin(), {"lemma", double(l)});
  return p;
}

void char1_cases(VerificationReport& rep, const std::vector<i64>& qs, i64 max_c) {
  for (i64 q : qs) {
    const auto chis = primitive_characters(q, 3);
    for (std::size_t k : {std::size_t{0}, chis.size() / 2}) {
      const auto& chi = chis[k];
      for (int r = 0; r <= 2; ++r) {
        for (auto [n, m] : {std::pair<i64, i64>{1, 1}, {2, 5}, {4, 7}}) {
          const i64 c = r % 2 == 1 && max_c >= 32 ? 32 : 16;
          rep.cases.push_back(exact_case(
              tagged(kChar1, {{"q", double(q)}, {"chi", double(chi.index())}, {"r", double(r)}, {"n", double(n)}, {"m", double(m)}, {"c", double(c)}}),
              charsum::a_r_brute(chi, r, n, m, c), charsum::a_r_closed(chi, r, n, m)));
        }
      }
    }
  }
}

void char11_cases(VerificationReport& rep, const std::vector<i64>& qs, i64 max_c) {
  for (i64 d = 3; d <= max_c; d += 2) {
    i64 rest = d;
    for (i64 q : qs) {
      while (rest % q == 0) rest /= q;
    }
    if (rest != 1) continue;
    for (auto [n, m] : {std::pair<i64, i64>{1, 1}, {2, 8}, {3, 12}, {5, 20}, {9, 4}, {7, 14}}) {
      rep.cases.push_back(integer_case(tagged(kChar11, {{"d", double(d)}, {"n", double(n)}, {"m", double(m)}}),
                                       charsum::c_sum_brute(n, m, d), charsum::c_sum_closed(n, m, d)));
    }
  }
}

void char12_cases(VerificationReport& rep, i64 max_c) {
  for (int eta = 4; (i64{1} << eta) <= max_c; ++eta) {
    for (int sign : {+1, -1}) {
      for (auto [n, m] : {std::pair<i64, i64>{1, 1}, {3, 5}, {1, 9}, {2, 6}, {7, 15}}) {
        rep.cases.push_back(integer_case(
            tagged(kChar12, {{"eta", double(eta)}, {"sign", double(sign)}, {"n", double(n)}, {"m", double(m)}}),
            charsum::c_pm_brute(n, m, eta, sign), charsum::c_pm_closed(n, m, eta, sign)));
      }
    }
  }
}

void cor_cases(VerificationReport& rep, i64 max_c) {
  for (i64 c = 16; c <= max_c; c += 16) {
    for (int sign : {+1, -1}) {
      for (auto [n, m] : {std::pair<i64, i64>{1, 1}, {3, 6}, {5, 7}, {9, 3}, {12, 18}}) {
        rep.cases.push_back(integer_case(tagged(kCor, {{"c", double(c)}, {"sign", double(sign)}, {"n", double(n)}, {"m", double(m)}}),
                                         charsum::c_pm_general_brute(n, m, c, sign),
                                         charsum::c_pm_general_closed(n, m, c, sign)));
      }
    }
  }
}

void char2_cases(VerificationReport& rep, const std::vector<i64>& qs, i64 max_c, bool twisted) {
  for (i64 q : qs) {
    for (i64 c = 16; c <= max_c; c += 16) {
      if (arith::gcd(c, q) != 1) continue;
      const i64 q3bar = arith::inv(arith::pow_mod(q, 3, c), c);
      for (int r : {0, 1}) {
        for (auto [n, m] : {std::pair<i64, i64>{1, 1}, {2, 6}, {4, 4}, {3, 8}}) {
          const Lemma l = twisted ? kCorB : kChar2;
          Params p = tagged(l, {{"q", double(q)}, {"c", double(c)}, {"r", double(r)}, {"n", double(n)}, {"m", double(m)}});
          if (twisted) {
            rep.cases.push_back(exact_case(std::move(p), charsum::b_r_brute(q3bar * n % c, q3bar * m % c, c, q, r),
                                           charsum::b_r_twisted_closed(n, m, c, q, r)));
          } else {
            rep.cases.push_back(exact_case(std::move(p), charsum::b_r_brute(n, m, c, q, r), charsum::b_r_closed(n, m, c, q, r)));
          }
        }
      }
    }
  }
}

void char31_cases(VerificationReport& rep, const std::vector<i64>& qs) {
  for (i64 q : qs) {
    for (int r : {0, 1, 2}) {
      for (auto [delta, u, v] : {std::tuple<i64, i64, i64>{1, 1, 1}, {2, 2, 1}, {4, 1, 1}, {2, 1, 4}}) {
        for (auto [n, m] : {std::pair<i64, i64>{1, 1}, {5, 1}, {1, 13}}) {
          if (!charsum::e_sum_admissible(q, 1, delta, u, v, n, m)) continue;
          for (i64 c2 : {1, -2, 3}) {
            rep.cases.push_back(exact_case(
                tagged(kChar31, {{"q", double(q)}, {"r", double(r)}, {"delta", double(delta)}, {"u", double(u)}, {"v", double(v)},
                                 {"n", double(n)}, {"m", double(m)}, {"c1", 1.0}, {"c2", double(c2)}}),
                charsum::e_sum_brute(r, q, 1, c2, delta * u * n, delta * v * m),
                charsum::e_sum_factored(r, q, 1, c2, delta, u, v, n, m)));
          }
        }
      }
    }
  }
}

void salie_cases(VerificationReport& rep, const std::vector<i64>& qs, int s_min, int s_max, int units) {
  for (i64 q : qs) {
    for (int s = s_min; s <= s_max; ++s) {
      const i64 qs_ = arith::ipow(q, s);
      int taken = 0;
      for (i64 a = 1; taken < units; ++a) {
        if (a % q == 0) continue;
        ++taken;
        rep.cases.push_back(exact_case({{"q", double(q)}, {"s", double(s)}, {"a", double(a)}}, charsum::salie_exact(a, q, s),
                                       charsum::kloosterman(a, a, qs_)));
      }
    }
  }
}

}  // namespace

const std::vector<const char*>& lemma_names() {
  static const std::vector<const char*> names = {"char1", "char11", "char12", "cor", "char2", "cor-b-sum", "char31"};
  return names;
}

VerificationReport charsum_lemmas(const std::vector<i64>& qs, i64 max_c) {
  if (qs.empty() || max_c < 16) throw DomainError("charsum_lemmas: need at least one prime and max_c >= 16");
  for (i64 q : qs) {
    if (q < 3 || !arith::is_prime(q)) throw DomainError("charsum_lemmas: q must be an odd prime");
  }
  VerificationReport rep;
  rep.suite = "charsums";
  rep.tolerance = 1e-25;
  char1_cases(rep, qs, max_c);
  char11_cases(rep, qs, max_c);
  char12_cases(rep, max_c);
  cor_cases(rep, max_c);
  char2_cases(rep, qs, max_c, false);
  char2_cases(rep, qs, max_c, true);
  char31_cases(rep, qs);
  std::vector<int> counts(lemma_names().size(), 0);
  for (const auto& c : rep.cases) ++counts[static_cast<std::size_t>(c.params.front().second)];
  for (std::size_t l = 0; l < counts.size(); ++l) rep.extras.push_back({std::string("cases_") + lemma_names()[l], double(counts[l])});
  return rep;
}

VerificationReport salie(const std::vector<i64>& qs, int s_min, int s_max, int units) {
  if (s_min < 2 || s_max < s_min || units < 1) throw DomainError("salie: need 2 <= s_min <= s_max and units >= 1");
  VerificationReport rep;
  rep.suite = "salie";
  rep.tolerance = 1e-20;
  salie_cases(rep, qs, s_min, s_max, units);
  return rep;
}

VerificationReport kloosterman(const std::vector<i64>& qs, int s_max, int units) {
  VerificationReport rep = salie(qs, 2, s_max, units);
  rep.suite = "kloosterman";
  for (i64 q : qs) {
    for (int s = 1; s <= 3; ++s) {
      for (i64 cp : {1, 2, 16, 7, 11}) {
        if (arith::gcd(cp, q) != 1) continue;
        for (auto [n, m] : {std::pair<i64, i64>{1, 1}, {2, 5}}) {
          const auto [f1, f2] = charsum::kloosterman_twisted_split(n, m, q, s, cp);
          rep.cases.push_back(exact_case({{"q", double(q)}, {"s", double(s)}, {"cprime", double(cp)}, {"n", double(n)}, {"m", double(m)}},
                                         f1 * f2, charsum::kloosterman(n * n, m * m, arith::ipow(q, s) * cp)));
        }
      }
    }
  }
  return rep;
}

VerificationReport besselsplit(int k) {
  VerificationReport rep;
  rep.suite = "besselsplit";
  rep.tolerance = 1e-10;
  const double nu = k - 1;
  for (double x : {0.01, 0.1, 0.3, 0.7, 1.0, 1.3, 1.75, 2.5, 4.0, 7.0, 10.0, 20.0, 50.0}) {
    const double j = special::bessel_j(nu, kTwoPi * x).value;
    const double rec = 2.0 * (std::polar(1.0, kTwoPi * x) * special::w_kernel(k, x)).real();
    rep.cases.push_back(make_case({{"kind", 0.0}, {"x", x}}, rec, j));
  }
  // Branch agreement at 2 pi x in the ranges where each is accurate.
  for (double y : {2.0, 4.0 * std::numbers::pi, 20.0, 30.0}) {
    rep.cases.push_back(make_case({{"kind", 1.0}, {"y", y}}, special::bessel_j_integral(k - 1, y).value,
                                  special::bessel_j_series(nu, y).value));
  }
  for (double y : {45.0, 55.0, 80.0}) {
    rep.cases.push_back(make_case({{"kind", 2.0}, {"y", y}}, special::bessel_j_asymptotic(nu, y).value,
                                  special::bessel_j_integral(k - 1, y).value));
  }
  return rep;
}

VerificationReport petersson(const modform::HeckeForm& f, i64 nmax, i64 c_max) {
  VerificationReport rep;
  rep.suite = "petersson";
  rep.tolerance = 1e-6;
  const double norm = modform::petersson_norm_delta(f);
  rep.extras.push_back({"petersson_norm", norm});
  for (const auto& pc : modform::petersson_grid(f, nmax, c_max, norm)) {
    CaseRecord rec = make_case({{"n", double(pc.n)}, {"m", double(pc.m)}, {"c_max", double(c_max)}}, pc.spectral, pc.geometric);
    // Absolute deviation, as in petersson_grid.
    rec.rel_err = pc.deviation;
    rep.cases.push_back(std::move(rec));
  }
  return rep;
}

VerificationReport sym2_identity(const modform::HeckeForm& f, const std::vector<i64>& qs) {
  VerificationReport rep;
  rep.suite = "sym2-identity";
  rep.tolerance = 1e-6;
  const i64 nmax = std::min<i64>(100000, f.limit());
  const i64 pmax = std::min<i64>(10000, f.limit());
  for (i64 q : qs) {
    const auto chis = primitive_characters(q, 3);
    for (std::size_t k : {std::size_t{0}, chis.size() / 2}) {
      const auto tab = special::character_table(chis[k]);
      for (cplx s : {cplx(3.0, 0.0), cplx(3.0, 1.0), cplx(4.0, -2.0)}) {
        const auto c = modform::sym2_dirichlet_identity_check(f, s, tab, pmax, nmax);
        CaseRecord rec = make_case({{"q", double(q)}, {"chi", double(chis[k].index())}, {"s_re", s.real()}, {"s_im", s.imag()}},
                                   c.euler, c.dirichlet);
        rec.rel_err = c.deviation;
        rep.cases.push_back(std::move(rec));
      }
    }
  }
  return rep;
}

}  // namespace symsq::suites

namespace symsq::suites {

VerificationReport zero_frequency(const std::vector<i64>& qs, int r_max, i64 c1, i64 delta, i64 u, i64 v) {
  VerificationReport rep;
  rep.suite = "zero-frequency";
  rep.tolerance = 0.0;
  for (i64 q : qs) {
    for (int r = 0; r <= r_max; ++r) {
      const VerificationReport one = pipeline::zero_frequency_check(q, r, c1, delta, u, v);
      rep.tolerance = std::max(rep.tolerance, one.tolerance);
      rep.append(one);
    }
  }
  return rep;
}

const std::vector<LSeriesPoint>& lseries_grid() {
  static const std::vector<LSeriesPoint> grid = [] {
    std::vector<LSeriesPoint> g;
    struct Row {
      i64 q, idx, theta, delta, c2;
      double s;
    };
    for (Row t : {Row{3, 1, 1, 1, 1, 2.0}, Row{5, 1, 3, 1, 2, 1.5}, Row{5, 1, 3, 1, 2, 2.0}, Row{3, 1, 7, 5, 9, 2.0},
                  Row{3, 2, 1, 11, 5, 2.0}, Row{3, 1, 7, 1, 25, 2.0}, Row{3, 1, 1, 13, 99, 1.5}, Row{7, 1, 1, 1, 1, 1.5}}) {
      LSeriesPoint pt;
      pt.q = t.q;
      pt.chi_index = t.idx;
      pt.params.theta = t.theta;
      pt.params.delta = t.delta;
      pt.params.c2 = t.c2;
      pt.params.s = t.s;
      g.push_back(pt);
    }
    return g;
  }();
  return grid;
}

VerificationReport lseries_factorization(const std::vector<LSeriesPoint>& grid, i64 nmax) {
  VerificationReport rep;
  rep.suite = "lseries-factorization";
  rep.tolerance = 1e-6;
  for (const auto& pt : grid) {
    pipeline::LSeriesParams p = pt.params;
    if (nmax > 0) p.nmax = nmax;
    rep.append(pipeline::lseries_factorization_check(p, DirichletCharacter(pt.q, 3, pt.chi_index)));
  }
  return rep;
}

VerificationReport sieve_ratio(const pipeline::SieveReport& s) {
  VerificationReport rep;
  rep.suite = "sieve-ratio";
  rep.tolerance = 0.0;
  for (std::size_t t = 0; t < s.ratios.size(); ++t) {
    CaseRecord rec = make_case({{"D", double(s.D)}, {"Nn", double(s.Nn)}, {"trial", double(t)}}, s.ratios[t], s.envelope);
    rec.rel_err = std::max(0.0, s.ratios[t] / s.envelope - 1.0);
    rep.cases.push_back(std::move(rec));
  }
  rep.extras = {{"seed", double(s.seed)}, {"max_ratio", s.max_ratio}, {"envelope", s.envelope}};
  return rep;
}

VerificationReport convexity(const std::vector<pipeline::ConvexityRow>& rows) {
  VerificationReport rep;
  rep.suite = "convexity";
  rep.tolerance = 1e-3;
  for (const auto& row : rows) {
    CaseRecord rec = make_case({{"kind", 0.0},
                                {"q", double(row.q)},
                                {"chi", double(row.chi_index)},
                                {"abs_l", row.abs_l},
                                {"ratio_convexity", row.ratio_convexity},
                                {"ratio_bound", row.ratio_bound},
                                {"max_linear_form", row.max_linear_form},
                                {"mirrored", row.mirrored ? 1.0 : 0.0}},
                               std::abs(row.epsilon), 1.0, row.certified);
    rec.rel_err = row.abs_eps_dev;
    rep.cases.push_back(std::move(rec));
  }
  for (const auto& a : rows) {
    if (a.mirrored) continue;
    const i64 conj_index = DirichletCharacter(a.q, 3, a.chi_index).conj().index();
    if (conj_index <= a.chi_index) continue;
    for (const auto& b : rows) {
      if (b.q != a.q || b.chi_index != conj_index || b.mirrored) continue;
      CaseRecord rec = make_case({{"kind", 1.0}, {"q", double(a.q)}, {"chi", double(a.chi_index)}, {"chi_conj", double(conj_index)}},
                                 a.value, std::conj(b.value));
      rec.rel_err = rec.abs_err;
      rep.cases.push_back(std::move(rec));
    }
  }
  return rep;
}

const std::vector<RepresentativePoint>& representative_grid() {
  static const std::vector<RepresentativePoint> grid = {{0, 16, 10}, {1, 48, 10}, {2, 144, 10}, {3, 400, 10}};
  return grid;
}

VerificationReport moment(const pipeline::MomentReport& m, const std::vector<pipeline::RepresentativeTerm>& terms,
                          const std::vector<RepresentativePoint>& points) {
  VerificationReport rep;
  rep.suite = "moment";
  rep.tolerance = 1e-9;
  rep.cases.push_back(make_case({{"kind", 0.0}}, m.diagonal, m.diagonal_vectorized));
  rep.cases.push_back(make_case({{"kind", 1.0}}, m.reassembled, m.off_diagonal));
  for (std::size_t k = 0; k < terms.size() && k < points.size(); ++k) {
    const auto& t = terms[k];
    rep.cases.push_back(make_case({{"kind", 2.0}, {"r", double(points[k].r)}, {"C", points[k].C}, {"N", points[k].N}}, t.block,
                                  t.eps * t.plus + std::conj(t.eps) * t.minus));
    rep.extras.push_back({"conjugate_deviation_r" + std::to_string(points[k].r), t.conjugate_deviation});
  }
  rep.extras.push_back({"diagonal", m.diagonal});
  rep.extras.push_back({"off_diagonal_re", m.off_diagonal.real()});
  rep.extras.push_back({"off_diagonal_im", m.off_diagonal.imag()});
  for (const auto& [C, v] : m.blocks) rep.extras.push_back({"block_abs_C" + std::to_string(static_cast<long long>(C)), std::abs(v)});
  return rep;
}

}  // namespace symsq::suites
