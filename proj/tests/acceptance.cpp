// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <memory>
#include <string>

#include "symsq/modform.hpp"
#include "symsq/pipeline.hpp"
#include "symsq/report.hpp"
#include "symsq/suites.hpp"

using namespace symsq;
using i64 = std::int64_t;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

int failures = 0;

void criterion(int id, const char* title, const std::function<Verdict()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!v.pass) ++failures;
  std::printf("criterion %2d: %s  %s; %s (%.1f s)\n", id, v.pass ? "PASS" : "FAIL", title, v.detail.c_str(), secs);
  std::fflush(stdout);
}

const modform::HeckeForm& form(i64 limit) {
  static std::unique_ptr<modform::HeckeForm> f;
  if (!f || f->limit() < limit) f = std::make_unique<modform::HeckeForm>(limit, modform::default_cache_dir());
  return *f;
}

Verdict c1_charsums() {
  const auto rep = suites::charsum_lemmas({3, 5, 7}, 64);
  double fewest = 1e9;
  for (const auto& [k, v] : rep.extras) fewest = std::min(fewest, v);
  return {rep.pass() && fewest >= 25 && rep.max_rel_err() <= 1e-25,
          std::to_string(rep.cases.size()) + " cases, fewest per lemma " + fmt("%.0f", fewest) + ", max rel " + fmt("%.3g", rep.max_rel_err())};
}

Verdict c2_salie() {
  const auto rep = suites::salie({3, 5, 7}, 2, 6, 25);
  return {rep.pass() && rep.cases.size() == 375, std::to_string(rep.cases.size()) + " cases, max rel " + fmt("%.3g", rep.max_rel_err())};
}

Verdict c3_stage1() {
  pipeline::VerificationReport all;
  const DirichletCharacter chi(3, 3, 1);
  struct P {
    int r;
    i64 c;
    double N;
  };
  for (P pt : {P{0, 16, 10}, P{0, 32, 10}, P{0, 16, 20}, P{0, 64, 30}, P{1, 16, 10}, P{1, 32, 20}, P{2, 16, 10}}) {
    pipeline::Stage1Params p;
    p.r = pt.r;
    p.c = pt.c;
    p.N = pt.N;
    all.append(pipeline::poisson_stage1_check(p, chi));
  }
  all.tolerance = 1e-6;
  return {all.pass() && all.cases.size() >= 6, std::to_string(all.cases.size()) + " points, max rel " + fmt("%.3g", all.max_rel_err())};
}

Verdict c4_stage2() {
  pipeline::VerificationReport all;
  struct P {
    int r;
    i64 c1, delta, u, v, n, m;
    double C, N;
  };
  for (P pt : {P{0, 1, 1, 1, 1, 1, 1, 40, 10}, P{0, 1, 1, 1, 1, 1, 1, 40, 60}, P{0, 1, 1, 1, 1, 5, 1, 40, 60},
               P{1, 1, 1, 1, 1, 1, 1, 120, 180}, P{0, 2, 1, 1, 1, 1, 1, 80, 60}}) {
    pipeline::Stage2Params p;
    p.r = pt.r;
    p.c1 = pt.c1;
    p.delta = pt.delta;
    p.u = pt.u;
    p.v = pt.v;
    p.n = pt.n;
    p.m = pt.m;
    p.C = pt.C;
    p.N = pt.N;
    all.append(pipeline::poisson_stage2_check(p));
  }
  all.tolerance = 1e-6;
  return {all.pass() && all.cases.size() >= 4, std::to_string(all.cases.size()) + " points, max rel " + fmt("%.3g", all.max_rel_err())};
}

Verdict c5_reciprocity() {
  const auto a = pipeline::reciprocity_stage1(3, 100, 42);
  const auto b = pipeline::reciprocity_stage2(3, 100, 43);
  int bad = 0;
  for (const auto* r : {&a, &b}) {
    for (const auto& c : r->cases) bad += c.rel_err != 0.0;
  }
  return {bad == 0 && a.cases.size() == 100 && b.cases.size() == 100, "200 tuples, " + std::to_string(bad) + " failures"};
}

Verdict c6_petersson() {
  const auto rep = suites::petersson(form(1000), 6, 5000);
  return {rep.pass() && rep.cases.size() == 36, "36 pairs, max deviation " + fmt("%.3g", rep.max_rel_err())};
}

Verdict c7_zero_frequency() {
  auto rep = suites::zero_frequency({3, 5, 7}, 4, 1, 1, 1, 1);
  rep.append(suites::zero_frequency({3, 5, 7}, 4, 2, 1, 1, 9));
  return {rep.pass(), std::to_string(rep.cases.size()) + " cases, max rel " + fmt("%.3g", rep.max_rel_err())};
}

Verdict c8_series() {
  const auto sym = suites::sym2_identity(form(100000), {3, 5, 7});
  const auto lf = suites::lseries_factorization(suites::lseries_grid());
  const double worst = std::max(sym.max_rel_err(), lf.max_rel_err());
  return {sym.pass() && lf.pass() && worst < 1e-6, std::to_string(sym.cases.size()) + " sym2 and " + std::to_string(lf.cases.size()) +
                                                       " factorisation cases, max deviation " + fmt("%.3g", worst)};
}

Verdict c9_central_values() {
  pipeline::ConvexityOptions full;
  pipeline::ConvexityOptions wide;
  wide.use_conjugation = true;
  wide.central.y_max = 250.0;
  const i64 limit = std::max({pipeline::convexity_table_limit(3, full.central), pipeline::convexity_table_limit(5, full.central),
                              pipeline::convexity_table_limit(7, wide.central)});
  const auto& f = form(limit);

  auto rows = pipeline::convexity_experiment({3, 5}, f, full);
  bool ok = true;
  double eps_dev = 0.0, sym_dev = 0.0;
  for (const auto& r : rows) {
    ok = ok && r.certified;
    eps_dev = std::max(eps_dev, r.abs_eps_dev);
  }
  const auto rep = suites::convexity(rows);
  for (const auto& c : rep.cases) {
    if (c.params.front().second == 1.0) sym_dev = std::max(sym_dev, c.abs_err);
  }
  auto seven = pipeline::convexity_experiment({7}, f, wide);
  rows.insert(rows.end(), seven.begin(), seven.end());
  report::write_text("acceptance_convexity.csv", report::emit_csv(suites::convexity(rows)));

  std::string table;
  for (i64 q : {3, 5, 7}) {
    double lo = 1e300, hi = 0.0, hib = 0.0;
    for (const auto& r : rows) {
      if (r.q != q) continue;
      lo = std::min(lo, r.ratio_convexity);
      hi = std::max(hi, r.ratio_convexity);
      hib = std::max(hib, r.ratio_bound);
    }
    table += " q=" + std::to_string(q) + ": |L|/q^{9/4} in [" + fmt("%.3g", lo) + ", " + fmt("%.3g", hi) + "], max |L|/q^2 " + fmt("%.3g", hib) + ";";
  }
  ok = ok && eps_dev < 1e-3 && sym_dev < 1e-8;
  return {ok, "max ||eps|-1| " + fmt("%.3g", eps_dev) + ", conjugate symmetry " + fmt("%.3g", sym_dev) + ";" + table +
                  " table in acceptance_convexity.csv"};
}

Verdict c10_decay() {
  const auto probes = pipeline::decay_window_probes();
  int ni = 0, nt = 0;
  double worst = 0.0;
  bool ok = true;
  for (const auto& p : probes) {
    (p.kind == "I" ? ni : nt)++;
    worst = std::max(worst, p.value);
    ok = ok && p.outside && p.value < 1e-8;
  }
  return {ok && ni >= 10 && nt >= 10, std::to_string(ni) + " I and " + std::to_string(nt) + " I~ probes, max " + fmt("%.3g", worst)};
}

Verdict c11_sieve() {
  const auto a = pipeline::quad_large_sieve_ratio(500, 500, 50, 42);
  const auto b = pipeline::quad_large_sieve_ratio(500, 500, 50, 42, pipeline::Exec::Serial);
  const bool same = a.ratios == b.ratios;
  return {a.within() && same && a.trials == 50,
          "max ratio " + fmt("%.4g", a.max_ratio) + " vs envelope " + fmt("%.4g", a.envelope) + (same ? ", reproducible" : ", NOT reproducible")};
}

}  // namespace

int main() {
  criterion(1, "character-sum lemmas", c1_charsums);
  criterion(2, "Salie evaluation", c2_salie);
  criterion(3, "first Poisson summation", c3_stage1);
  criterion(4, "second Poisson summation", c4_stage2);
  criterion(5, "reciprocity", c5_reciprocity);
  criterion(6, "Petersson formula", c6_petersson);
  criterion(7, "zero frequency", c7_zero_frequency);
  criterion(8, "symmetric-square identity and L-series factorisation", c8_series);
  criterion(9, "central values", c9_central_values);
  criterion(10, "decay windows", c10_decay);
  criterion(11, "quadratic large sieve", c11_sieve);
  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
