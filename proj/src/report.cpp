#include "cyclosc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "cyclosc/errors.hpp"

namespace cyclosc {

using nlohmann::json;

namespace {

const char* expect_name(RelationEntry::Expect e) { return e == RelationEntry::Expect::Zero ? "zero" : "nonzero"; }

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const RelationReport& r) {
  auto entries = r.entries;
  std::stable_sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  json arr = json::array();
  for (const auto& e : entries) {
    arr.push_back({{"name", e.name}, {"value", e.value}, {"interior_dim", e.interior_dim}, {"expect", expect_name(e.expect)}});
  }
  return arr;
}

RelationReport relation_report_from_json(const json& j) {
  RelationReport r;
  for (const auto& e : j) {
    const auto expect = e.value("expect", std::string("zero")) == "nonzero" ? RelationEntry::Expect::NonZero
                                                                            : RelationEntry::Expect::Zero;
    r.add(e.at("name").get<std::string>(), e.at("value").get<double>(), e.at("interior_dim").get<std::size_t>(), expect);
  }
  return r;
}

json to_json(const DegeneracyPattern& p) {
  struct Visitor {
    json operator()(const Nondegenerate&) const { return {{"kind", "nondegenerate"}}; }
    json operator()(const FoldAbove& f) const {
      return {{"kind", "fold_above"}, {"multiplicity", f.multiplicity}, {"threshold", finite_or_null(f.threshold)}};
    }
    json operator()(const Mixed& m) const {
      return {{"kind", "mixed"}, {"description", m.description}, {"tail_multiplicities", m.tail_multiplicities}};
    }
  };
  return std::visit(Visitor{}, p);
}

DegeneracyPattern pattern_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "nondegenerate") return Nondegenerate{};
  if (kind == "fold_above") {
    const auto& t = j.at("threshold");
    return FoldAbove{j.at("multiplicity").get<int>(),
                     t.is_null() ? -std::numeric_limits<double>::infinity() : t.get<double>()};
  }
  if (kind == "mixed") {
    return Mixed{j.at("description").get<std::string>(), j.at("tail_multiplicities").get<std::vector<int>>()};
  }
  throw InvalidParams("unknown degeneracy pattern kind: " + kind);
}

json to_json(const SpectrumReport& s) {
  json levels = json::array();
  for (const auto& l : s.levels) levels.push_back({{"energy", l.energy}, {"k", l.k}, {"mu", l.mu}});
  json classes = json::array();
  for (const auto& c : s.classes) classes.push_back({{"energy", c.energy}, {"multiplicity", c.multiplicity}});
  return {{"levels", levels},
          {"classes", classes},
          {"last_class_complete", s.last_class_complete},
          {"pattern", to_json(s.pattern)}};
}

SpectrumReport spectrum_report_from_json(const json& j) {
  SpectrumReport s;
  for (const auto& l : j.at("levels")) {
    s.levels.push_back({l.at("energy").get<double>(), l.at("k").get<long>(), l.at("mu").get<int>()});
  }
  for (const auto& c : j.at("classes")) {
    s.classes.push_back({c.at("energy").get<double>(), c.at("multiplicity").get<int>()});
  }
  s.last_class_complete = j.at("last_class_complete").get<bool>();
  s.pattern = pattern_from_json(j.at("pattern"));
  return s;
}

json to_json(const ScanRow& row) {
  json j{{"alpha_head", row.alpha_head}};
  if (row.fock_violation) {
    j["status"] = "FockViolated";
    j["violated_mu"] = *row.fock_violation;
  } else {
    j["status"] = "ok";
    j["pattern"] = to_json(*row.pattern);
  }
  return j;
}

ScanRow scan_row_from_json(const json& j) {
  ScanRow row;
  row.alpha_head = j.at("alpha_head").get<std::vector<double>>();
  if (j.at("status") == "FockViolated") {
    row.fock_violation = j.at("violated_mu").get<int>();
  } else {
    row.pattern = pattern_from_json(j.at("pattern"));
  }
  return row;
}

json to_json(const GroundState& g) {
  return {{"degeneracy", g.degeneracy}, {"energy", g.energy}, {"sign", to_string(g.sign)}};
}

json to_json(const Report& r) {
  json j{{"schema_version", kSchemaVersion},
         {"command", r.command},
         {"algebra", {{"lambda", r.lambda}, {"alpha", r.alpha}}},
         {"results", r.results},
         {"residuals", to_json(r.residuals)},
         {"timing_ms", r.timing_ms ? json(*r.timing_ms) : json(nullptr)}};
  if (r.error) j["error"] = {{"code", r.error->code}, {"message", r.error->message}};
  return j;
}

Report report_from_json(const json& j) {
  if (j.at("schema_version") != kSchemaVersion) throw InvalidParams("unsupported report schema version");
  Report r;
  r.command = j.at("command").get<std::string>();
  r.lambda = j.at("algebra").at("lambda").get<int>();
  r.alpha = j.at("algebra").at("alpha").get<std::vector<double>>();
  r.results = j.at("results");
  r.residuals = relation_report_from_json(j.at("residuals"));
  if (!j.at("timing_ms").is_null()) r.timing_ms = j.at("timing_ms").get<double>();
  if (j.contains("error")) {
    r.error = ErrorInfo{j.at("error").at("code").get<std::string>(), j.at("error").at("message").get<std::string>()};
  }
  return r;
}

std::string emit_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string emit_scan_jsonl(int lambda, const std::vector<ScanRow>& rows) {
  std::string out;
  for (const auto& row : rows) {
    json j = to_json(row);
    j["schema_version"] = kSchemaVersion;
    j["command"] = "scan";
    j["lambda"] = lambda;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string emit_spectrum_csv(const SpectrumReport& s) {
  std::ostringstream out;
  out << "energy,k,mu,multiplicity\n";
  std::size_t level = 0;
  for (const auto& c : s.classes) {
    for (int i = 0; i < c.multiplicity; ++i, ++level) {
      const auto& l = s.levels.at(level);
      out << format_double(l.energy) << ',' << l.k << ',' << l.mu << ',' << c.multiplicity << '\n';
    }
  }
  return out.str();
}

}  // namespace cyclosc
