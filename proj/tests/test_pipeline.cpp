#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>

#include "symsq/cache.hpp"
#include "symsq/cli.hpp"
#include "symsq/pipeline.hpp"
#include "symsq/report.hpp"
#include "symsq/suites.hpp"

using namespace symsq;
using namespace symsq::pipeline;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  if (out_text) *out_text = out.str();
  return code;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("reciprocity") {
  CHECK(reciprocity_holds(7, 16, 5));
  CHECK(reciprocity_holds(81, 1000, 2 * 17 * 23));
  CHECK_THROWS_AS(reciprocity_holds(6, 9, 1), DomainError);
  CHECK(reciprocity_stage1(5, 100, 1).pass());
  CHECK(reciprocity_stage2(7, 100, 2).pass());
}

TEST_CASE("zero frequency magnitudes") {
  CHECK(zero_frequency_magnitude(5, 1) == doctest::Approx(std::pow(5.0, 1.5)));
  CHECK(zero_frequency_magnitude(5, 2) == 20.0);
  CHECK(zero_frequency_magnitude(5, 0) == 0.0);
  CHECK(zero_frequency_magnitude(7, 3) == 0.0);
  CHECK(zero_frequency_magnitude(7, 4) == 42.0);
  CHECK(suites::zero_frequency({3, 5}, 4, 1, 1, 1, 1).pass());
}

TEST_CASE("first Poisson step at the smallest point") {
  Stage1Params p;
  const DirichletCharacter chi(3, 3, 1);
  const auto serial = poisson_stage1(p, chi, Exec::Serial);
  const auto par = poisson_stage1(p, chi, Exec::Parallel);
  CHECK(std::abs(serial.lhs - serial.rhs) < 1e-6 * std::abs(serial.lhs));
  CHECK(std::abs(serial.rhs - par.rhs) < 1e-12 * std::abs(serial.rhs));
  p.c = 15;
  CHECK_THROWS_AS(poisson_stage1(p, chi), DomainError);
}

TEST_CASE("second Poisson step admissibility") {
  Stage2Params p;
  CHECK(stage2_admissible(p));
  p.n = 3;
  CHECK_FALSE(stage2_admissible(p));
  CHECK_THROWS_AS(poisson_stage2(p), DomainError);
}

TEST_CASE("large sieve is reproducible") {
  const auto a = quad_large_sieve_ratio(100, 100, 5, 7, Exec::Parallel);
  const auto b = quad_large_sieve_ratio(100, 100, 5, 7, Exec::Serial);
  CHECK(a.ratios == b.ratios);
  CHECK(a.within());
  const auto c = quad_large_sieve_ratio(100, 100, 5, 8);
  CHECK(c.ratios != a.ratios);
}

TEST_CASE("decay window edges") {
  CHECK(decay_lower_edge(3, 0, 16, 100) > 0.0);
  CHECK(decay_upper_edge(3, 0, 16, 100) > decay_lower_edge(3, 0, 16, 100));
  CHECK(decay_c2_edge(3, 0, 16, 100, 1, 1, 1, 1) > 0.0);
}

TEST_CASE("suites") {
  const auto cs = suites::charsum_lemmas({3}, 32);
  CHECK(cs.pass());
  CHECK(cs.extras.size() == suites::lemma_names().size());
  CHECK(suites::salie({3, 5}, 2, 3, 5).pass());
  CHECK(suites::besselsplit().pass());
  CHECK_THROWS_AS(suites::charsum_lemmas({4}, 64), DomainError);
}

TEST_CASE("report round trip") {
  VerificationReport empty;
  empty.suite = "empty";
  const auto e = report::parse_json(report::emit_json(empty, report::Json::object()));
  CHECK(e.pass);
  CHECK(e.max_rel_err == 0.0);
  CHECK(e.report.cases.empty());

  VerificationReport rep;
  rep.suite = "demo";
  rep.tolerance = 1e-6;
  rep.cases.push_back(make_case({{"q", 3}, {"x", 0.1}}, {1.0 / 3.0, -2.5e-300}, {1.0 / 3.0 + 1e-12, 0.0}));
  rep.cases.push_back(make_case({{"q", 5}}, {std::nan(""), 0.0}, {1.0, 0.0}, false));
  rep.extras.push_back({"c", 1.0 / 7.0});
  report::Json cfg = {{"command", "demo"}, {"seed", 42}};
  const std::string text = report::emit_json(rep, cfg);
  const auto doc = report::parse_json(text);
  CHECK(doc.config == cfg);
  CHECK_FALSE(doc.pass);
  REQUIRE(doc.report.cases.size() == 2);
  CHECK(doc.report.cases[0].lhs == rep.cases[0].lhs);
  CHECK(doc.report.cases[0].rhs == rep.cases[0].rhs);
  CHECK(doc.report.cases[0].rel_err == rep.cases[0].rel_err);
  CHECK(doc.report.cases[0].params == rep.cases[0].params);
  CHECK(std::isnan(doc.report.cases[1].lhs.real()));
  CHECK_FALSE(doc.report.cases[1].tail_certified);
  CHECK(doc.report.extras == rep.extras);
  CHECK(report::emit_json(doc.report, doc.config) == text);

  const std::string csv = report::emit_csv(rep);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  CHECK(csv.find("0.33333333333333331") != std::string::npos);
  CHECK(csv.rfind("suite,q,x,", 0) == 0);
  CHECK_THROWS_AS(report::parse_json("{\"suite\": 1}"), IoError);
  CHECK_THROWS_AS(report::parse_json("not json"), IoError);
}

TEST_CASE("command line") {
  CHECK(run({"verify", "poisson", "--stage", "3"}) == cli::kUsage);
  CHECK(run({"verify", "nothing"}) == cli::kUsage);
  CHECK(run({}) == cli::kUsage);
  CHECK(run({"verify", "charsums", "--precision", "80"}) == cli::kUsage);
  CHECK(run({"verify", "poisson", "--stage", "2", "--n", "3"}) == cli::kUsage);

  std::string a, b;
  CHECK(run({"verify", "charsums", "--q", "3", "--max-c", "32"}, &a) == cli::kPass);
  CHECK(run({"verify", "charsums", "--q", "3", "--max-c", "32"}, &b) == cli::kPass);
  CHECK(a == b);
  const auto doc = report::parse_json(a);
  CHECK(doc.config["max_c"] == 32);
  CHECK(doc.pass);

  CHECK(run({"verify", "besselsplit", "--tolerance", "1e-20"}) == cli::kFail);

  const auto dir = scratch("symsq_cli_reports");
  const auto json = (dir / "z.json").string(), csv = (dir / "z.csv").string();
  CHECK(run({"verify", "zero-frequency", "--q", "3,5", "--json", json, "--csv", csv}) == cli::kPass);
  const auto z = report::parse_json(report::read_text(json));
  const std::string rows = report::read_text(csv);
  CHECK(static_cast<std::size_t>(std::count(rows.begin(), rows.end(), '\n')) == z.report.cases.size() + 1);

  std::string s1, s2;
  CHECK(run({"experiment", "sieve-ratio", "--D", "200", "--Nn", "200", "--trials", "4", "--seed", "9"}, &s1) == cli::kPass);
  CHECK(run({"experiment", "sieve-ratio", "--D", "200", "--Nn", "200", "--trials", "4", "--seed", "9", "--jobs", "1"}, &s2) == cli::kPass);
  CHECK(report::parse_json(s1).report.cases.size() == 4);
  CHECK(report::parse_json(s1).report.extras == report::parse_json(s2).report.extras);
  std::filesystem::remove_all(dir);
}

TEST_CASE("caches") {
  const auto dir = scratch("symsq_cache_test");
  const std::string d = dir.string();
  CHECK(run({"cache", "build", "tau", "--limit", "2000", "--cache-dir", d}) == cli::kPass);
  CHECK(run({"cache", "verify", "tau", "--cache-dir", d}) == cli::kPass);
  CHECK(run({"cache", "build", "characters", "--cache-dir", d}) == cli::kPass);
  CHECK(run({"cache", "verify", "characters", "--cache-dir", d}) == cli::kPass);
  CHECK(run({"cache", "verify", "primes", "--cache-dir", d}) == cli::kUsage);

  // One altered tau value.
  {
    const auto path = dir / "tau.csv";
    std::string text = report::read_text(path);
    const auto pos = text.find("\n2,-24\n");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 7, "\n2,-25\n");
    report::write_text(path, text);
  }
  CHECK(run({"cache", "verify", "tau", "--cache-dir", d}) == cli::kFail);
  CHECK(std::filesystem::exists(dir / "quarantine" / "tau.csv"));
  CHECK_FALSE(std::filesystem::exists(dir / "tau.csv"));

  // A row whose conductor is wrong, with no digest to fall back on.
  {
    const auto path = dir / "characters.csv";
    std::filesystem::remove(path.string() + ".digest");
    std::ofstream out(path, std::ios::trunc);
    out << "q,ell,index,generator,conductor\n";
    for (const auto& chi : make_characters(3, 3)) {
      out << "3,3," << chi.index() << ',' << chi.generator() << ',' << chi.conductor() + (chi.index() == 4 ? 1 : 0) << '\n';
    }
  }
  CHECK(run({"cache", "verify", "characters", "--cache-dir", d}) == cli::kFail);

  CHECK(run({"cache", "clear", "characters", "--cache-dir", d}) == cli::kPass);
  CHECK(run({"cache", "verify", "characters", "--cache-dir", d}) == cli::kFail);
  const modform::HeckeForm rebuilt(500, dir);
  CHECK(rebuilt.tau(2) == -24);
  CHECK(cache::verify(cache::Kind::Tau, dir).ok);
  std::filesystem::remove_all(dir);
}
