#pragma once

// Command layer behind the `torikit` executable. Every command turns a fan
// document into a ReportDocument; the executable prints it either as JSON
// (--json) or as one "key: value" line per field.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "torikit/fan_document.hpp"

namespace torikit::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInternalError = 1,
  kInputError = 2,         // parse / validation failures
  kPreconditionError = 3,  // mathematically inadmissible input
};

struct ReportDocument {
  nlohmann::ordered_json fields = nlohmann::ordered_json::object();

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

std::string to_json_text(const ReportDocument& report);
ReportDocument parse_report(std::string_view text);
std::string to_human_text(const ReportDocument& report);
// The value column of one human-readable line.
std::string human_value(const nlohmann::ordered_json& value);

ReportDocument cmd_analyze(const FanDocument& doc);
ReportDocument cmd_hilbert_basis(const FanDocument& doc);
// Roots for one ray (index into doc.rays) or, by default, every extremal
// ray of the support cone.
ReportDocument cmd_roots(const FanDocument& doc, std::optional<std::size_t> ray_index, long radius);
ReportDocument cmd_ga_actions(const FanDocument& doc);
ReportDocument cmd_decompose(const FanDocument& doc);

// Entry point of the executable; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torikit::cli
