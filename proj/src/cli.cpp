#include "symsq/cli.hpp"

#include <chrono>
#include <cstdio>
#include <optional>

#include <omp.h>

#include <CLI11.hpp>

#include "symsq/cache.hpp"
#include "symsq/error.hpp"
#include "symsq/modform.hpp"
#include "symsq/pipeline.hpp"
#include "symsq/report.hpp"
#include "symsq/suites.hpp"

namespace symsq::cli {

namespace {

using i64 = std::int64_t;
using report::Json;
using pipeline::VerificationReport;

struct RunConfig {
  std::string command;
  std::vector<i64> qs = {3, 5, 7};
  i64 q = 3;
  int r = 0;
  double N = 10.0;
  i64 c = 16;
  i64 max_c = 64;
  i64 c1 = 1, delta = 1, u = 1, v = 1, n = 1, m = 1;
  double C = 40.0;
  i64 chi = 1;
  int stage = 0;
  int s_max = 6;
  int units = 25;
  int r_max = 4;
  int k = 12;
  i64 nmax = 6;
  i64 c_max = 5000;
  i64 series_nmax = 0;
  double moment_N = 50.0;
  i64 moment_c_max = 2000;
  double dual_cycles = 200.0;
  i64 D = 500, Nn = 500;
  int trials = 50;
  bool conjugation = false;
  double y_max = 1000.0;
  int precision = 30;
  std::optional<double> tolerance;
  std::uint64_t seed = 42;
  int jobs = 0;
  std::string json_path, csv_path, cache_dir;
  std::string cache_kind;
  i64 tau_limit = 10000;
};

std::filesystem::path cache_dir(const RunConfig& cfg) {
  return cfg.cache_dir.empty() ? modform::default_cache_dir() : std::filesystem::path(cfg.cache_dir);
}

Json common_config(const RunConfig& cfg) {
  Json j = Json::object();
  j["command"] = cfg.command;
  j["precision"] = cfg.precision;
  if (cfg.tolerance) j["tolerance"] = *cfg.tolerance;
  j["seed"] = cfg.seed;
  j["jobs"] = cfg.jobs;
  return j;
}

void add_common(CLI::App* app, RunConfig& cfg) {
  app->add_option("--json", cfg.json_path, "write the JSON report here instead of stdout");
  app->add_option("--csv", cfg.csv_path, "also write the cases as CSV");
  app->add_option("--tolerance", cfg.tolerance, "override the suite tolerance");
  app->add_option("--precision", cfg.precision, "decimal digits for the exact-mode fallback")->check(CLI::Range(15, 50));
  app->add_option("--seed", cfg.seed, "seed for randomised suites");
  app->add_option("--jobs", cfg.jobs, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  app->add_option("--cache-dir", cfg.cache_dir, "cache directory (default: SYMSQ_CACHE_DIR or ./.symsq_cache)");
}

modform::HeckeForm hecke(const RunConfig& cfg, i64 limit) { return modform::HeckeForm(limit, cache_dir(cfg)); }

struct Outcome {
  VerificationReport report;
  Json config;
};

int emit(const RunConfig& cfg, Outcome& o, double seconds, std::ostream& out, std::ostream& err) {
  if (cfg.tolerance) o.report.tolerance = *cfg.tolerance;
  const std::string json = report::emit_json(o.report, o.config);
  if (cfg.json_path.empty()) {
    out << json;
  } else {
    report::write_text(cfg.json_path, json);
  }
  if (!cfg.csv_path.empty()) report::write_text(cfg.csv_path, report::emit_csv(o.report));
  const bool pass = o.report.pass();
  char line[256];
  std::snprintf(line, sizeof line, "%s: %zu cases, max rel err %.3g, %s (%.2f s)\n", o.report.suite.c_str(),
                o.report.cases.size(), o.report.max_rel_err(), pass ? "PASS" : "FAIL", seconds);
  err << line;
  return pass ? kPass : kFail;
}

Outcome run_verify(const std::string& which, const RunConfig& cfg) {
  Outcome o;
  Json j = common_config(cfg);
  j["suite"] = which;
  if (which == "charsums") {
    j["q"] = cfg.qs;
    j["max_c"] = cfg.max_c;
    o.report = suites::charsum_lemmas(cfg.qs, cfg.max_c);
  } else if (which == "kloosterman") {
    j["q"] = cfg.qs;
    j["s_max"] = cfg.s_max;
    j["units"] = cfg.units;
    o.report = suites::kloosterman(cfg.qs, cfg.s_max, cfg.units);
  } else if (which == "besselsplit") {
    j["k"] = cfg.k;
    o.report = suites::besselsplit(cfg.k);
  } else if (which == "poisson") {
    j["stage"] = cfg.stage;
    j["q"] = cfg.q;
    j["r"] = cfg.r;
    j["N"] = cfg.N;
    j["dual_cycles"] = cfg.dual_cycles;
    if (cfg.stage == 1) {
      j["c"] = cfg.c;
      j["chi"] = cfg.chi;
      pipeline::Stage1Params p;
      p.q = cfg.q;
      p.r = cfg.r;
      p.c = cfg.c;
      p.N = cfg.N;
      p.dual_cycles = cfg.dual_cycles;
      o.report = pipeline::poisson_stage1_check(p, DirichletCharacter(cfg.q, 3, cfg.chi));
    } else {
      for (auto [k, v] : {std::pair<const char*, i64>{"c1", cfg.c1}, {"delta", cfg.delta}, {"u", cfg.u}, {"v", cfg.v}, {"n", cfg.n}, {"m", cfg.m}})
        j[k] = v;
      j["C"] = cfg.C;
      pipeline::Stage2Params p;
      p.q = cfg.q;
      p.r = cfg.r;
      p.c1 = cfg.c1;
      p.delta = cfg.delta;
      p.u = cfg.u;
      p.v = cfg.v;
      p.n = cfg.n;
      p.m = cfg.m;
      p.C = cfg.C;
      p.N = cfg.N;
      p.dual_cycles = cfg.dual_cycles;
      o.report = pipeline::poisson_stage2_check(p);
    }
  } else if (which == "petersson") {
    j["nmax"] = cfg.nmax;
    j["c_max"] = cfg.c_max;
    o.report = suites::petersson(hecke(cfg, std::max<i64>(1000, cfg.nmax * cfg.nmax)), cfg.nmax, cfg.c_max);
  } else if (which == "zero-frequency") {
    j["q"] = cfg.qs;
    j["r_max"] = cfg.r_max;
    for (auto [k, v] : {std::pair<const char*, i64>{"c1", cfg.c1}, {"delta", cfg.delta}, {"u", cfg.u}, {"v", cfg.v}}) j[k] = v;
    o.report = suites::zero_frequency(cfg.qs, cfg.r_max, cfg.c1, cfg.delta, cfg.u, cfg.v);
  } else if (which == "lseries-factorization") {
    j["q"] = cfg.qs;
    j["series_nmax"] = cfg.series_nmax;
    o.report = suites::sym2_identity(hecke(cfg, 100000), cfg.qs);
    const VerificationReport lf = suites::lseries_factorization(suites::lseries_grid(), cfg.series_nmax);
    o.report.append(lf);
    o.report.suite = "lseries-factorization";
  }
  o.config = std::move(j);
  return o;
}

Outcome run_experiment(const std::string& which, const RunConfig& cfg) {
  Outcome o;
  Json j = common_config(cfg);
  j["experiment"] = which;
  if (which == "sieve-ratio") {
    j["D"] = cfg.D;
    j["Nn"] = cfg.Nn;
    j["trials"] = cfg.trials;
    o.report = suites::sieve_ratio(pipeline::quad_large_sieve_ratio(cfg.D, cfg.Nn, cfg.trials, cfg.seed));
  } else if (which == "convexity") {
    j["q"] = cfg.qs;
    j["use_conjugation"] = cfg.conjugation;
    j["y_max"] = cfg.y_max;
    pipeline::ConvexityOptions opt;
    opt.use_conjugation = cfg.conjugation;
    opt.central.y_max = cfg.y_max;
    i64 limit = 1;
    for (i64 q : cfg.qs) limit = std::max(limit, pipeline::convexity_table_limit(q, opt.central));
    o.report = suites::convexity(pipeline::convexity_experiment(cfg.qs, hecke(cfg, limit), opt));
  } else if (which == "moment") {
    j["q"] = cfg.q;
    j["N"] = cfg.moment_N;
    j["c_max"] = cfg.moment_c_max;
    j["chi"] = cfg.chi;
    pipeline::MomentParams p;
    p.q = cfg.q;
    p.N = cfg.moment_N;
    p.c_max = cfg.moment_c_max;
    const DirichletCharacter chi(cfg.q, 3, cfg.chi);
    const i64 limit = std::max<i64>(10000, static_cast<i64>(4.0 * cfg.moment_N * cfg.moment_N) + 1);
    const auto m = pipeline::second_moment_kloosterman_side(p, chi, hecke(cfg, limit));
    std::vector<pipeline::RepresentativeTerm> terms;
    for (const auto& pt : suites::representative_grid()) terms.push_back(pipeline::representative_term(cfg.q, pt.r, pt.C, pt.N, chi));
    o.report = suites::moment(m, terms, suites::representative_grid());
  }
  o.config = std::move(j);
  return o;
}

int run_cache(const std::string& action, const RunConfig& cfg, std::ostream& out) {
  const cache::Kind kind = cfg.cache_kind == "tau" ? cache::Kind::Tau : cache::Kind::Characters;
  const auto dir = cache_dir(cfg);
  cache::Status st;
  if (action == "build") {
    st = cache::build(kind, dir, cfg.tau_limit);
  } else if (action == "verify") {
    st = cache::verify(kind, dir, 100, cfg.seed);
  } else {
    st = cache::clear(kind, dir);
  }
  out << (st.ok ? "ok: " : "error: ") << st.message;
  if (action == "verify") out << " (" << st.checked << " of " << st.entries << " entries checked)";
  if (!st.quarantined.empty()) out << "; quarantined to " << st.quarantined.string();
  out << '\n';
  return st.ok ? kPass : kFail;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Numerical verification of the symmetric-square second-moment identities", "symsq"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  std::string selected;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, const std::string& prefix) {
    auto* s = parent->add_subcommand(name, help);
    add_common(s, cfg);
    s->callback([&, name, prefix] {
      selected = name;
      cfg.command = prefix + " " + name;
    });
    return s;
  };

  auto* charsums = leaf(verify, "charsums", "character-sum lemmas against brute force", "verify");
  charsums->add_option("--q", cfg.qs, "odd primes")->delimiter(',');
  charsums->add_option("--max-c", cfg.max_c, "largest c")->check(CLI::Range(16, 4096));
  auto* kloost = leaf(verify, "kloosterman", "Salie evaluation and the twisted split", "verify");
  kloost->add_option("--q", cfg.qs, "odd primes")->delimiter(',');
  kloost->add_option("--s-max", cfg.s_max, "largest exponent s")->check(CLI::Range(2, 8));
  kloost->add_option("--units", cfg.units, "units a per (q, s)")->check(CLI::PositiveNumber);
  auto* bessel = leaf(verify, "besselsplit", "J_{k-1}(2 pi x) = 2 Re(e(x) W_k(x))", "verify");
  bessel->add_option("--k", cfg.k, "weight")->check(CLI::Range(2, 40));
  auto* poisson = leaf(verify, "poisson", "first or second Poisson summation", "verify");
  poisson->add_option("--stage", cfg.stage, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  poisson->add_option("--q", cfg.q, "odd prime");
  poisson->add_option("--r", cfg.r, "exponent r")->check(CLI::Range(0, 4));
  poisson->add_option("--N", cfg.N, "length N");
  poisson->add_option("--c", cfg.c, "stage 1 modulus c");
  poisson->add_option("--chi", cfg.chi, "character index mod q^3");
  poisson->add_option("--c1", cfg.c1, "stage 2 c1");
  poisson->add_option("--delta", cfg.delta, "stage 2 delta");
  poisson->add_option("--u", cfg.u, "stage 2 u");
  poisson->add_option("--v", cfg.v, "stage 2 v");
  poisson->add_option("--n", cfg.n, "stage 2 n");
  poisson->add_option("--m", cfg.m, "stage 2 m");
  poisson->add_option("--C", cfg.C, "stage 2 dyadic C");
  poisson->add_option("--dual-cycles", cfg.dual_cycles, "dual truncation beyond the phase")->check(CLI::PositiveNumber);
  auto* pet = leaf(verify, "petersson", "Petersson formula at level 1, weight 12", "verify");
  pet->add_option("--nmax", cfg.nmax, "largest n, m")->check(CLI::Range(1, 30));
  pet->add_option("--c-max", cfg.c_max, "c-sum truncation")->check(CLI::PositiveNumber);
  auto* zf = leaf(verify, "zero-frequency", "S_r(0, -c1bar q^r delta; q^2) table", "verify");
  zf->add_option("--q", cfg.qs, "odd primes")->delimiter(',');
  zf->add_option("--r-max", cfg.r_max, "largest r")->check(CLI::Range(0, 4));
  zf->add_option("--c1", cfg.c1, "c1");
  zf->add_option("--delta", cfg.delta, "delta");
  zf->add_option("--u", cfg.u, "u");
  zf->add_option("--v", cfg.v, "v");
  auto* lf = leaf(verify, "lseries-factorization", "symmetric-square identity and L-series factorisation", "verify");
  lf->add_option("--q", cfg.qs, "odd primes for the symmetric-square identity")->delimiter(',');
  lf->add_option("--series-nmax", cfg.series_nmax, "override the series truncation")->check(CLI::NonNegativeNumber);

  auto* experiment = app.add_subcommand("experiment", "run an experiment");
  experiment->require_subcommand(1);
  auto* sieve = leaf(experiment, "sieve-ratio", "quadratic large sieve ratio", "experiment");
  sieve->add_option("--D", cfg.D, "moduli bound")->check(CLI::PositiveNumber);
  sieve->add_option("--Nn", cfg.Nn, "length bound")->check(CLI::PositiveNumber);
  sieve->add_option("--trials", cfg.trials, "trials")->check(CLI::PositiveNumber);
  auto* convex = leaf(experiment, "convexity", "central values against the convexity bound", "experiment");
  convex->add_option("--q", cfg.qs, "odd primes")->delimiter(',');
  convex->add_flag("--use-conjugation", cfg.conjugation, "evaluate one character of each conjugate pair");
  convex->add_option("--y-max", cfg.y_max, "AFE cut n / sqrt(Q)")->check(CLI::PositiveNumber);
  auto* moment = leaf(experiment, "moment", "Kloosterman side of the second moment", "experiment");
  moment->add_option("--q", cfg.q, "odd prime");
  moment->add_option("--N", cfg.moment_N, "length N");
  moment->add_option("--c-max", cfg.moment_c_max, "c-sum truncation")->check(CLI::PositiveNumber);
  moment->add_option("--chi", cfg.chi, "character index mod q^3");

  auto* cachecmd = app.add_subcommand("cache", "manage the tau and character caches");
  cachecmd->require_subcommand(1);
  for (const char* name : {"build", "verify", "clear"}) {
    auto* s = cachecmd->add_subcommand(name, std::string(name) + " a cache");
    s->add_option("kind", cfg.cache_kind, "tau or characters")->required()->check(CLI::IsMember({"tau", "characters"}));
    s->add_option("--cache-dir", cfg.cache_dir, "cache directory");
    s->add_option("--seed", cfg.seed, "sampling seed for verify");
    if (std::string(name) == "build") s->add_option("--limit", cfg.tau_limit, "tau entries")->check(CLI::PositiveNumber);
    s->callback([&, name] {
      selected = name;
      cfg.command = std::string("cache ") + name;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  // The convexity default is q = 3; the other suites default to {3, 5, 7}.
  if (convex->parsed() && convex->count("--q") == 0) cfg.qs = {3};
  if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);

  try {
    if (cachecmd->parsed()) return run_cache(selected, cfg, out);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = verify->parsed() ? run_verify(selected, cfg) : run_experiment(selected, cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(cfg, o, secs, out, err);
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonInvertible& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kFail;
  }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"symsq"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace symsq::cli
