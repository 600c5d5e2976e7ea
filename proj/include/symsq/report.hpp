#pragma once

// JSON and CSV serialisation of verification reports.

#include <filesystem>
#include <string>

#include <json.hpp>

#include "symsq/pipeline.hpp"

namespace symsq::report {

using Json = nlohmann::ordered_json;
using pipeline::VerificationReport;

/// A report with its resolved configuration, as read back from JSON.
struct ReportDocument {
  VerificationReport report;
  Json config = Json::object();
  double max_rel_err = 0.0;
  bool pass = true;
};

/// {suite, config, cases, max_rel_err, pass, tolerance, extras}; params keep their order.
Json to_json(const VerificationReport& rep, const Json& config);
ReportDocument from_json(const Json& doc);

/// Two-space indented JSON with a trailing newline.
std::string emit_json(const VerificationReport& rep, const Json& config);
ReportDocument parse_json(const std::string& text);

/// One row per case under a header; parameter columns are the union of names in first-seen order.
/// Numbers use 17 significant digits.
std::string emit_csv(const VerificationReport& rep);

/// Writes text with LF line endings, creating parent directories.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

/// printf("%.17g"), with nan and inf spelled out.
std::string format_double(double x);

}  // namespace symsq::report
