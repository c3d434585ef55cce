#pragma once

// JSON / CSV serialization of reports. JSON numbers use the shortest
// representation that parses back to the identical double.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cyclosc/fock.hpp"
#include "cyclosc/spectrum.hpp"
#include "cyclosc/susy_model.hpp"

namespace cyclosc {

inline constexpr const char* kSchemaVersion = "1";

nlohmann::json to_json(const RelationReport& r);  // array sorted by name
RelationReport relation_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DegeneracyPattern& p);
DegeneracyPattern pattern_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpectrumReport& s);
SpectrumReport spectrum_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScanRow& row);
ScanRow scan_row_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GroundState& g);

struct ErrorInfo {
  std::string code;
  std::string message;
  bool operator==(const ErrorInfo&) const = default;
};

// Top-level document written by the CLI.
struct Report {
  std::string command;
  int lambda = 0;
  std::vector<double> alpha;
  nlohmann::json results = nlohmann::json::array();
  RelationReport residuals;
  std::optional<double> timing_ms;
  std::optional<ErrorInfo> error;
  bool operator==(const Report&) const = default;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

// Pretty-printed single document followed by a newline.
std::string emit_json(const Report& r);

// One compact JSON document per grid point, newline separated.
std::string emit_scan_jsonl(int lambda, const std::vector<ScanRow>& rows);

// Header `energy,k,mu,multiplicity`, one row per level, 17 significant digits.
std::string emit_spectrum_csv(const SpectrumReport& s);

// printf("%.17g")
std::string format_double(double v);

}  // namespace cyclosc
