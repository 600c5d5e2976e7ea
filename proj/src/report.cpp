#include "symsq/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "symsq/error.hpp"

namespace symsq::report {

namespace {

double number(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

Json pairs_to_object(const std::vector<std::pair<std::string, double>>& pairs) {
  Json o = Json::object();
  for (const auto& [k, v] : pairs) o[k] = v;
  return o;
}

std::vector<std::pair<std::string, double>> object_to_pairs(const Json& o) {
  std::vector<std::pair<std::string, double>> out;
  for (auto it = o.begin(); it != o.end(); ++it) out.emplace_back(it.key(), number(it.value()));
  return out;
}

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const VerificationReport& rep, const Json& config) {
  Json doc = Json::object();
  doc["suite"] = rep.suite;
  doc["config"] = config;
  Json cases = Json::array();
  for (const auto& c : rep.cases) {
    Json row = Json::object();
    row["params"] = pairs_to_object(c.params);
    row["lhs_re"] = c.lhs.real();
    row["lhs_im"] = c.lhs.imag();
    row["rhs_re"] = c.rhs.real();
    row["rhs_im"] = c.rhs.imag();
    row["abs_err"] = c.abs_err;
    row["rel_err"] = c.rel_err;
    row["tail_certified"] = c.tail_certified;
    cases.push_back(std::move(row));
  }
  doc["cases"] = std::move(cases);
  doc["max_rel_err"] = rep.max_rel_err();
  doc["pass"] = rep.pass();
  doc["tolerance"] = rep.tolerance;
  doc["extras"] = pairs_to_object(rep.extras);
  return doc;
}

ReportDocument from_json(const Json& doc) {
  ReportDocument out;
  try {
    out.report.suite = doc.at("suite").get<std::string>();
    out.config = doc.value("config", Json::object());
    out.report.tolerance = doc.contains("tolerance") ? number(doc["tolerance"]) : 1e-6;
    for (const auto& row : doc.at("cases")) {
      pipeline::CaseRecord c;
      c.params = object_to_pairs(row.at("params"));
      c.lhs = {number(row.at("lhs_re")), number(row.at("lhs_im"))};
      c.rhs = {number(row.at("rhs_re")), number(row.at("rhs_im"))};
      c.abs_err = number(row.at("abs_err"));
      c.rel_err = number(row.at("rel_err"));
      c.tail_certified = row.at("tail_certified").get<bool>();
      out.report.cases.push_back(std::move(c));
    }
    if (doc.contains("extras")) out.report.extras = object_to_pairs(doc["extras"]);
    out.max_rel_err = number(doc.at("max_rel_err"));
    out.pass = doc.at("pass").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed report: ") + e.what());
  }
  return out;
}

std::string emit_json(const VerificationReport& rep, const Json& config) { return to_json(rep, config).dump(2) + "\n"; }

ReportDocument parse_json(const std::string& text) {
  try {
    return from_json(Json::parse(text));
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(std::string("report is not JSON: ") + e.what());
  }
}

std::string emit_csv(const VerificationReport& rep) {
  std::vector<std::string> names;
  for (const auto& c : rep.cases) {
    for (const auto& p : c.params) {
      if (std::find(names.begin(), names.end(), p.first) == names.end()) names.push_back(p.first);
    }
  }
  std::ostringstream out;
  out << "suite";
  for (const auto& n : names) out << ',' << n;
  out << ",lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tail_certified\n";
  for (const auto& c : rep.cases) {
    out << rep.suite;
    for (const auto& n : names) {
      out << ',';
      auto it = std::find_if(c.params.begin(), c.params.end(), [&](const auto& p) { return p.first == n; });
      if (it != c.params.end()) out << format_double(it->second);
    }
    for (double v : {c.lhs.real(), c.lhs.imag(), c.rhs.real(), c.rhs.imag(), c.abs_err, c.rel_err}) out << ',' << format_double(v);
    out << ',' << (c.tail_certified ? "true" : "false") << '\n';
  }
  return out.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f << text;
  if (!f.flush()) throw IoError("write failed: " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path.string());
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace symsq::report
