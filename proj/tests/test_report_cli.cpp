#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"

#include "cyclosc/cli.hpp"
#include "cyclosc/errors.hpp"
#include "cyclosc/report.hpp"
#include "test_support.hpp"

using namespace cyclosc;
using nlohmann::json;

namespace {

cli::RunConfig verify_config(const std::string& variant, int lambda, std::vector<double> alpha) {
  cli::RunConfig c;
  c.command = cli::Command::Verify;
  c.variant = variant;
  c.lambda = lambda;
  c.alpha = std::move(alpha);
  return c;
}

std::optional<cli::RunConfig> parse(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclosc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli::parse_command_line(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("relation report round trip and ordering") {
  RelationReport r;
  r.add("b", 0.1 + 0.2, 7);
  r.add("a", 1.0 / 3.0, 5, RelationEntry::Expect::NonZero);
  const json j = to_json(r);
  CHECK(j[0]["name"] == "a");
  const auto back = relation_report_from_json(json::parse(j.dump()));
  REQUIRE(back.entries.size() == 2);
  CHECK(back.find("b")->value == 0.1 + 0.2);
  CHECK(back.find("a")->expect == RelationEntry::Expect::NonZero);
  CHECK(back.find("a")->interior_dim == 5);
}

TEST_CASE("pattern and spectrum round trips") {
  for (const DegeneracyPattern& p :
       {DegeneracyPattern{Nondegenerate{}}, DegeneracyPattern{FoldAbove{3, 1.5}},
        DegeneracyPattern{FoldAbove{2, -std::numeric_limits<double>::infinity()}},
        DegeneracyPattern{Mixed{"mixed", {1, 2}}}}) {
    CHECK(pattern_from_json(json::parse(to_json(p).dump())) == p);
  }
  std::mt19937_64 rng(91);
  for (int lambda = 2; lambda <= 4; ++lambda) {
    const auto s = spectrum(testing::random_params(rng, lambda), 5 * static_cast<std::size_t>(lambda));
    CHECK(spectrum_report_from_json(json::parse(to_json(s).dump())) == s);
  }
  const std::vector<GridAxis> axes{{-1.0, 1.0, 0.5}, {-1.0, 1.0, 0.5}};
  for (const auto& row : scan_grid(3, axes, 18)) CHECK(scan_row_from_json(json::parse(to_json(row).dump())) == row);
}

TEST_CASE("full report round trip is lossless") {
  std::mt19937_64 rng(92);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  Report r;
  r.command = "verify";
  r.lambda = 3;
  r.alpha = {d(rng), d(rng), d(rng)};
  r.results = json::array({json{{"x", d(rng)}, {"y", std::nextafter(1.0, 2.0)}}});
  r.residuals.add("q", 1e-17 * d(rng), 3);
  r.timing_ms = 12.5;
  r.error = ErrorInfo{"Mu2Infeasible", "msg"};
  const std::string text = emit_json(r);
  CHECK(report_from_json(json::parse(text)) == r);
  const auto j = json::parse(text);
  CHECK(j["schema_version"] == "1");
  CHECK(j["algebra"]["lambda"] == 3);

  // Every double survives a print at 17 significant digits.
  for (double v : r.alpha) CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("csv layout") {
  const auto s = spectrum(new_params(3, std::vector<double>{0.0, 0.0}), 9);
  const std::string csv = emit_spectrum_csv(s);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "energy,k,mu,multiplicity");
  std::getline(in, line);
  CHECK(line == "0.5,0,0,1");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 8);
}

TEST_CASE("scan output is one JSON document per line") {
  const std::vector<GridAxis> axes{{-1.0, 1.0, 1.0}, {0.0, 1.0, 1.0}};
  const auto text = emit_scan_jsonl(3, scan_grid(3, axes, 18));
  std::istringstream in(text);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    const auto j = json::parse(line);
    CHECK(j["command"] == "scan");
    ++n;
  }
  CHECK(n == 6);
}

TEST_CASE("verify exit codes") {
  auto ok = verify_config("pssqm", 3, {1.0, -0.5});
  ok.p = 2;
  const auto r = cli::run(ok);
  CHECK(r.exit_code == cli::kExitOk);
  const auto j = json::parse(r.output);
  for (const auto& e : j["residuals"]) {
    if (e["expect"] == "zero") CHECK(e["value"].get<double>() < 1e-9);
  }

  auto infeasible = verify_config("ossqm", 3, {0.0, -1.0});
  infeasible.mu = 2;
  const auto bad = cli::run(infeasible);
  CHECK(bad.exit_code == cli::kExitFailed);
  CHECK(json::parse(bad.output)["error"]["code"] == "Mu2Infeasible");

  auto fock = verify_config("pssqm", 3, {-1.0, 0.0});
  const auto fr = cli::run(fock);
  CHECK(fr.exit_code == cli::kExitFailed);
  CHECK(json::parse(fr.output)["error"]["code"] == "FockConditionViolated");

  const auto cubic = cli::run(verify_config("bd-cubic", 3, {1.0, -0.5}));
  CHECK(cubic.exit_code == cli::kExitFailed);
  const auto cubic_ok = cli::run(verify_config("bd-cubic", 3, {1.0, 0.0}));
  CHECK(cubic_ok.exit_code == cli::kExitOk);

  auto wrong_p = verify_config("pssqm", 3, {1.0, -0.5});
  wrong_p.p = 3;
  CHECK(json::parse(cli::run(wrong_p).output)["error"]["code"] == "WrongLambda");
}

TEST_CASE("every verify variant runs") {
  for (const auto& [variant, lambda, alpha] :
       {std::tuple{"ssqm-unbroken", 2, std::vector<double>{0.5}}, std::tuple{"ssqm-broken", 2, std::vector<double>{0.5}},
        std::tuple{"pssqm", 4, std::vector<double>{0.2, -0.1, 0.3}}, std::tuple{"pseudo1", 3, std::vector<double>{1.0, -0.5}},
        std::tuple{"pseudo2", 3, std::vector<double>{1.0, -0.5}}, std::tuple{"ossqm", 3, std::vector<double>{0.5, -1.0}},
        std::tuple{"pssqm-search", 2, std::vector<double>{0.3}}}) {
    CAPTURE(variant);
    const auto r = cli::run(verify_config(variant, lambda, alpha));
    CHECK(r.exit_code == cli::kExitOk);
  }
}

TEST_CASE("usage errors") {
  auto both = verify_config("pssqm", 3, {1.0, -0.5});
  both.kappa = std::vector<cplx>{cplx(1.0), cplx(1.0)};
  auto r = cli::run(both);
  CHECK(r.exit_code == cli::kExitUsage);
  CHECK(r.output.find("--alpha") != std::string::npos);

  auto small = verify_config("pssqm", 3, {1.0, -0.5});
  small.blocks = 2;
  r = cli::run(small);
  CHECK(r.exit_code == cli::kExitUsage);
  CHECK(r.output.find("--blocks") != std::string::npos);

  auto unknown = verify_config("nope", 3, {1.0, -0.5});
  CHECK(cli::run(unknown).output.find("--variant") != std::string::npos);

  auto count = verify_config("pssqm", 3, {1.0});
  CHECK(cli::run(count).output.find("--alpha") != std::string::npos);

  CHECK_THROWS_AS(cli::parse_real_list("1,x", "--alpha"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_grid_axis("0:1"), cli::UsageError);
  CHECK_THROWS_AS(cli::parse_grid_axis("0:1:0"), cli::UsageError);
  CHECK_THROWS_AS(parse({"verify", "--lambda", "3"}), cli::UsageError);
  CHECK_THROWS_AS(parse({"frobnicate"}), cli::UsageError);
}

TEST_CASE("argument parsing") {
  CHECK(cli::parse_real_list("1,-0.5", "--alpha") == std::vector<double>{1.0, -0.5});
  CHECK(cli::parse_complex_list("0.5:1,2", "--kappa") == std::vector<cplx>{cplx(0.5, 1.0), cplx(2.0, 0.0)});
  const auto ax = cli::parse_grid_axis("-1:2:0.5");
  CHECK(ax.lo == -1.0);
  CHECK(ax.step == 0.5);

  const auto c = parse({"verify", "--variant", "pssqm", "--p", "2", "--mu", "0", "--lambda", "3", "--alpha", "1,-0.5",
                        "--blocks", "5"});
  REQUIRE(c.has_value());
  CHECK(c->command == cli::Command::Verify);
  CHECK(c->p == 2);
  CHECK(c->alpha == std::vector<double>{1.0, -0.5});

  const auto s = parse({"scan", "--lambda", "3", "--grid", "-1:1:0.5", "-1:1:0.5", "--degen-tol", "1e-8"});
  REQUIRE(s.has_value());
  CHECK(s->grid.size() == 2);
  CHECK(s->grid[0].lo == -1.0);
  CHECK(s->degen_tol == 1e-8);
  CHECK(cli::run(*s).exit_code == cli::kExitOk);

  const auto k = parse({"inspect", "--lambda", "3", "--kappa", "1:1,1:-1", "--rel-tol", "1e-9"});
  REQUIRE(k.has_value());
  CHECK(k->rel_tol == 1e-9);
  CHECK(cli::run(*k).exit_code == cli::kExitOk);
}

TEST_CASE("repeated runs are byte-identical") {
  std::vector<cli::RunConfig> configs;
  auto v = verify_config("pssqm", 3, {1.0, -0.5});
  configs.push_back(v);
  configs.push_back(verify_config("pssqm-search", 3, {1.0, -0.5}));
  cli::RunConfig spectrum_cfg;
  spectrum_cfg.command = cli::Command::Spectrum;
  spectrum_cfg.lambda = 3;
  spectrum_cfg.alpha = std::vector<double>{1.0, -0.5};
  configs.push_back(spectrum_cfg);
  spectrum_cfg.format = cli::Format::Json;
  configs.push_back(spectrum_cfg);
  cli::RunConfig scan;
  scan.command = cli::Command::Scan;
  scan.lambda = 3;
  scan.grid = {{-0.9, 2.0, 0.1}, {-1.5, 2.0, 0.1}};
  configs.push_back(scan);
  cli::RunConfig inspect;
  inspect.command = cli::Command::Inspect;
  inspect.lambda = 4;
  inspect.kappa = std::vector<cplx>{cplx(0.2, 0.1), cplx(0.3), cplx(0.2, -0.1)};
  configs.push_back(inspect);

  for (const auto& c : configs) {
    const auto a = cli::run(c), b = cli::run(c);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("output file") {
  auto c = verify_config("ssqm-unbroken", 2, {0.5});
  c.output = "cyclosc_test_output.json";
  const auto r = cli::run(c);
  std::ifstream in(c.output, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == r.output);
  std::remove(c.output.c_str());
}

TEST_CASE("timing is opt-in") {
  auto c = verify_config("ssqm-unbroken", 2, {0.5});
  CHECK(json::parse(cli::run(c).output)["timing_ms"].is_null());
  c.timing = true;
  CHECK(json::parse(cli::run(c).output)["timing_ms"].is_number());
}
