#pragma once

// Command-line front end: inspect, spectrum, scan, verify.
//
// Exit status: 0 when every requested residual is under tolerance and the
// parameters are feasible, 2 for a verification failure or infeasible
// parameters (a structured error object is written), 1 for usage errors.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "cyclosc/spectrum.hpp"

namespace cyclosc::cli {

enum class Command { Inspect, Spectrum, Scan, Verify };
enum class Format { Json, Csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;

struct RunConfig {
  Command command = Command::Inspect;
  int lambda = 2;
  std::optional<std::vector<double>> alpha;  // lambda - 1 free values, or all lambda
  std::optional<std::vector<std::complex<double>>> kappa;
  int blocks = 5;
  std::size_t levels = 0;  // 0: command default
  std::vector<GridAxis> grid;

  std::string variant;  // verify: ssqm-unbroken, ssqm-broken, pssqm, bd-cubic, pseudo1, pseudo2, ossqm, pssqm-search
  std::optional<int> p;
  int mu = 0;
  double c = 1.0;
  std::optional<double> eta;  // default sqrt(2)|c|
  double phi = 0.0;
  double r = 0.0;
  double xi = 1.0;

  std::string output;  // empty: stdout
  std::optional<Format> format;
  std::optional<double> rel_tol;
  double degen_tol = kDegeneracyTol;
  bool timing = false;
};

// Thrown for configuration problems; maps to exit status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws UsageError naming the offending flag.
void validate(const RunConfig& config);

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // report bytes
};

// Validates, executes, and serializes. Writes `output` to config.output when set.
RunResult run(const RunConfig& config);

// Parses argv into a config. Returns nullopt after printing help. Throws
// UsageError on malformed input.
std::optional<RunConfig> parse_command_line(int argc, const char* const* argv);

// Helpers exposed for tests.
std::vector<double> parse_real_list(const std::string& text, const std::string& flag);
std::vector<std::complex<double>> parse_complex_list(const std::string& text, const std::string& flag);
GridAxis parse_grid_axis(const std::string& text);

}  // namespace cyclosc::cli
