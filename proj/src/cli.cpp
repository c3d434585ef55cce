#include "cyclosc/cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cyclosc/errors.hpp"
#include "cyclosc/ossqm.hpp"
#include "cyclosc/pseudo.hpp"
#include "cyclosc/pssqm.hpp"
#include "cyclosc/report.hpp"
#include "cyclosc/ssqm.hpp"

namespace cyclosc::cli {

using nlohmann::json;

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::Inspect: return "inspect";
    case Command::Spectrum: return "spectrum";
    case Command::Scan: return "scan";
    case Command::Verify: return "verify";
  }
  return "?";
}

const std::vector<std::string>& known_variants() {
  static const std::vector<std::string> v{"ssqm-unbroken", "ssqm-broken", "pssqm",  "bd-cubic",
                                          "pseudo1",       "pseudo2",     "ossqm", "pssqm-search"};
  return v;
}

double parse_number(const std::string& token, const std::string& flag) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw UsageError(flag + ": cannot parse number '" + token + "'");
  }
  if (used != token.size() || !std::isfinite(v)) throw UsageError(flag + ": cannot parse number '" + token + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

AlgebraParams resolve_params(const RunConfig& cfg) {
  if (cfg.kappa) return kappa_to_alpha(KappaParams{cfg.lambda, *cfg.kappa});
  const auto& a = *cfg.alpha;
  if (a.size() == static_cast<std::size_t>(cfg.lambda)) return params_from_alpha(cfg.lambda, a);
  return new_params(cfg.lambda, a);
}

json classes_json(std::span<const DegeneracyClass> classes) {
  json arr = json::array();
  for (const auto& c : classes) arr.push_back({{"energy", c.energy}, {"multiplicity", c.multiplicity}});
  return arr;
}

json model_summary(const SusyModel& m, double degen_tol) {
  const auto spec = interior_spectrum(m, degen_tol);
  const auto gap = equal_spacing_gap(spec.classes);
  const auto excited = excited_multiplicity(spec.classes);
  return {{"variant", variant_name(m.variant)},
          {"dim", m.rep->dim},
          {"ground_state", to_json(ground_state_analysis(m, degen_tol))},
          {"classes", classes_json(spec.classes)},
          {"gap", gap ? json(*gap) : json(nullptr)},
          {"excited_multiplicity", excited ? json(*excited) : json(nullptr)}};
}

int run_inspect(const RunConfig& cfg, Report& report) {
  const auto params = resolve_params(cfg);
  report.alpha = params.alpha();
  const auto rep = build(params, cfg.blocks);
  report.residuals = check_defining_relations(rep);

  json kappa = json::array();
  for (const auto& k : alpha_to_kappa(params).kappa) kappa.push_back({k.real(), k.imag()});
  json f = json::array();
  for (long n = 0; n <= 2L * params.lambda(); ++n) f.push_back(structure_function(params, n));

  const CMatrix h = h0(rep);
  double h0_err = 0.0;
  for (std::size_t n = 0; n + params.lambda() < rep.dim; ++n) {
    const long k = static_cast<long>(n) / params.lambda();
    const int mu = static_cast<int>(n % params.lambda());
    h0_err = std::max(h0_err, std::abs(h(n, n).real() - energy(params, k, mu)));
  }
  report.residuals.add("diag H_0 = E_(k lambda + mu)", h0_err, rep.dim - params.lambda());

  report.results.push_back({{"alpha", params.alpha()},
                            {"beta", params.beta()},
                            {"gamma", params.gamma()},
                            {"kappa", kappa},
                            {"structure_function", f},
                            {"dim", rep.dim}});
  return report.residuals.passed(cfg.rel_tol.value_or(1e-10)) ? kExitOk : kExitFailed;
}

int run_verify(const RunConfig& cfg, Report& report) {
  const auto params = resolve_params(cfg);
  report.alpha = params.alpha();
  const auto rep = build(params, cfg.blocks);
  const std::string& v = cfg.variant;
  double tol = 1e-9;

  if (v == "pssqm-search") {
    tol = cfg.rel_tol.value_or(1e-8);
    for (const auto& s : search_ansatz(rep)) {
      json sigma = json::array();
      for (const auto& z : s.sigma) sigma.push_back({z.real(), z.imag()});
      const auto rep_sol = pssqm_representative(params, s.mu);
      double diff = 0.0;
      for (std::size_t nu = 0; nu < s.sigma.size(); ++nu) {
        diff = std::max(diff, std::abs(std::abs(s.sigma[nu]) - std::abs(rep_sol.sigma[nu])));
        diff = std::max(diff, std::abs(s.r[nu] - rep_sol.r[nu]));
      }
      report.results.push_back({{"mu", s.mu}, {"sigma", sigma}, {"r", s.r}, {"residual", s.residual}});
      report.residuals.add("family mu=" + std::to_string(s.mu) + " residual", s.residual, interior(rep, rep.lambda()));
      report.residuals.add("family mu=" + std::to_string(s.mu) + " vs representative", diff, interior(rep, rep.lambda()));
    }
    return report.residuals.passed(tol) ? kExitOk : kExitFailed;
  }

  SusyModel model;
  if (v == "ssqm-unbroken" || v == "ssqm-broken") {
    model = build_ssqm(rep, v == "ssqm-broken");
    report.residuals = verify_sqm2(model);
    tol = 1e-10;
  } else if (v == "pssqm" || v == "bd-cubic") {
    const int p = cfg.p.value_or(params.lambda() - 1);
    if (p + 1 != params.lambda()) throw WrongLambda(p + 1, params.lambda());
    model = build_pssqm(rep, cfg.mu);
    report.residuals = v == "pssqm" ? verify_pssqm(model, p) : verify_bd_cubic(model);
  } else if (v == "pseudo1" || v == "pseudo2") {
    const PseudoParams pp{cfg.mu, cfg.c, cfg.eta.value_or(std::sqrt(2.0) * std::abs(cfg.c)), cfg.phi, cfg.r};
    model = v == "pseudo1" ? build_pseudo_type1(rep, pp) : build_pseudo_type2(rep, pp);
    report.residuals = verify_pseudo(model, cfg.c);
  } else if (v == "ossqm") {
    model = build_ossqm(rep, OssqmParams{cfg.mu, cfg.xi, cfg.phi, cfg.p.value_or(2)});
    report.residuals = verify_ossqm(model);
  }
  tol = cfg.rel_tol.value_or(tol);
  report.residuals.add("H = H+", hermiticity_error(model.hamiltonian), model.hamiltonian.dim());
  report.results.push_back(model_summary(model, cfg.degen_tol));
  return report.residuals.passed(tol) ? kExitOk : kExitFailed;
}

void write_output(const RunConfig& cfg, const std::string& bytes) {
  if (cfg.output.empty()) return;
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw UsageError("--output: cannot open '" + cfg.output + "'");
  out << bytes;
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  for (const auto& tok : split(text, ',')) out.push_back(parse_number(tok, flag));
  return out;
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text, const std::string& flag) {
  std::vector<std::complex<double>> out;
  for (const auto& tok : split(text, ',')) {
    const auto parts = split(tok, ':');
    if (parts.size() == 1) {
      out.emplace_back(parse_number(parts[0], flag), 0.0);
    } else if (parts.size() == 2) {
      out.emplace_back(parse_number(parts[0], flag), parse_number(parts[1], flag));
    } else {
      throw UsageError(flag + ": expected re or re:im, got '" + tok + "'");
    }
  }
  return out;
}

GridAxis parse_grid_axis(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError("--grid: expected lo:hi:step, got '" + text + "'");
  GridAxis ax{parse_number(parts[0], "--grid"), parse_number(parts[1], "--grid"), parse_number(parts[2], "--grid")};
  if (!(ax.step > 0.0)) throw UsageError("--grid: step must be positive");
  return ax;
}

void validate(const RunConfig& cfg) {
  if (cfg.lambda < 2) throw UsageError("--lambda: must be >= 2");
  if (cfg.command == Command::Scan) {
    if (cfg.alpha || cfg.kappa) throw UsageError("--alpha/--kappa: scan takes its alpha values from --grid");
  } else if (cfg.alpha.has_value() == cfg.kappa.has_value()) {
    throw UsageError("--alpha/--kappa: give exactly one of them");
  }
  if (cfg.alpha) {
    const auto n = cfg.alpha->size();
    if (n != static_cast<std::size_t>(cfg.lambda) && n != static_cast<std::size_t>(cfg.lambda - 1)) {
      throw UsageError("--alpha: expected " + std::to_string(cfg.lambda - 1) + " (or " + std::to_string(cfg.lambda) +
                       ") values");
    }
  }
  if (cfg.kappa && cfg.kappa->size() != static_cast<std::size_t>(cfg.lambda - 1)) {
    throw UsageError("--kappa: expected " + std::to_string(cfg.lambda - 1) + " values");
  }
  if (cfg.blocks < 2) throw UsageError("--blocks: must be >= 2");
  if (cfg.rel_tol && !(*cfg.rel_tol > 0.0)) throw UsageError("--rel-tol: must be positive");
  if (!(cfg.degen_tol > 0.0)) throw UsageError("--degen-tol: must be positive");
  switch (cfg.command) {
    case Command::Verify:
      if (cfg.blocks < 3) throw UsageError("--blocks: verify needs at least 3 blocks");
      if (std::find(known_variants().begin(), known_variants().end(), cfg.variant) == known_variants().end()) {
        throw UsageError("--variant: unknown variant '" + cfg.variant + "'");
      }
      if (cfg.format == Format::Csv) throw UsageError("--format: verify writes json only");
      break;
    case Command::Scan:
      if (cfg.grid.size() != static_cast<std::size_t>(cfg.lambda - 1)) {
        throw UsageError("--grid: need one axis per free alpha (" + std::to_string(cfg.lambda - 1) + ")");
      }
      if (cfg.format == Format::Csv) throw UsageError("--format: scan writes json lines only");
      break;
    case Command::Inspect:
      if (cfg.format == Format::Csv) throw UsageError("--format: inspect writes json only");
      break;
    case Command::Spectrum:
      if (cfg.levels != 0 && cfg.levels < static_cast<std::size_t>(cfg.lambda)) {
        throw UsageError("--levels: need at least lambda levels");
      }
      break;
  }
}

RunResult run(const RunConfig& cfg) {
  try {
    validate(cfg);
  } catch (const UsageError& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n"};
  }
  const auto start = std::chrono::steady_clock::now();

  Report report;
  report.command = command_name(cfg.command);
  report.lambda = cfg.lambda;
  if (cfg.alpha) report.alpha = *cfg.alpha;

  RunResult result;
  try {
    switch (cfg.command) {
      case Command::Inspect:
        result.exit_code = run_inspect(cfg, report);
        break;
      case Command::Verify:
        result.exit_code = run_verify(cfg, report);
        break;
      case Command::Spectrum: {
        const auto params = resolve_params(cfg);
        report.alpha = params.alpha();
        const std::size_t levels = cfg.levels != 0 ? cfg.levels : 3 * static_cast<std::size_t>(cfg.lambda);
        const auto spec = spectrum(params, levels, cfg.degen_tol);
        if (cfg.format.value_or(Format::Csv) == Format::Csv) {
          result.output = emit_spectrum_csv(spec);
          write_output(cfg, result.output);
          return result;
        }
        report.results.push_back(to_json(spec));
        break;
      }
      case Command::Scan: {
        const std::size_t levels = cfg.levels != 0 ? cfg.levels : 6 * static_cast<std::size_t>(cfg.lambda);
        const auto rows = scan_grid(cfg.lambda, cfg.grid, levels, cfg.degen_tol);
        result.output = emit_scan_jsonl(cfg.lambda, rows);
        write_output(cfg, result.output);
        return result;
      }
    }
  } catch (const Error& e) {
    report.error = ErrorInfo{e.code(), e.what()};
    report.results = json::array();
    result.exit_code = kExitFailed;
  } catch (const UsageError& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n"};
  }

  std::sort(report.residuals.entries.begin(), report.residuals.entries.end(),
            [](const auto& a, const auto& b) { return a.name < b.name; });
  if (cfg.timing) {
    report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  result.output = emit_json(report);
  try {
    write_output(cfg, result.output);
  } catch (const UsageError& e) {
    return {kExitUsage, std::string("error: ") + e.what() + "\n"};
  }
  return result;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv) {
  CLI::App app{"Truncated Fock-space toolkit for C_lambda-extended oscillator algebras", "cyclosc"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string alpha, kappa, format;
  std::vector<std::string> grid;
  std::optional<double> rel_tol;
  std::optional<int> p;
  std::optional<double> eta;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--lambda", cfg.lambda, "Order of the cyclic group (>= 2)")->required();
    sub->add_option("--alpha", alpha, "Comma-separated alpha_0..alpha_{lambda-2} (or all lambda values)");
    sub->add_option("--kappa", kappa, "Comma-separated kappa_1..kappa_{lambda-1}, each re or re:im");
    sub->add_option("--blocks", cfg.blocks, "Truncation blocks K (dimension K*lambda)");
    sub->add_option("--output", cfg.output, "Write the report to this file instead of stdout");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--rel-tol", rel_tol, "Residual tolerance override");
    sub->add_option("--degen-tol", cfg.degen_tol, "Absolute energy tolerance for degeneracy classes");
    sub->add_flag("--timing", cfg.timing, "Record wall time in timing_ms (breaks byte-identical output)");
  };

  auto* inspect = app.add_subcommand("inspect", "Algebra parameters and defining-relation residuals");
  add_common(inspect);
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Lowest oscillator levels with degeneracy classes");
  add_common(spectrum_cmd);
  spectrum_cmd->add_option("--levels", cfg.levels, "Number of levels (default 3*lambda)");
  auto* scan = app.add_subcommand("scan", "Degeneracy pattern over a grid of free alpha values");
  add_common(scan);
  scan->add_option("--grid", grid, "lo:hi:step for each free alpha, in order")->take_all();
  scan->add_option("--levels", cfg.levels, "Levels per point (default 6*lambda)");
  auto* verify = app.add_subcommand("verify", "Build a bosonized model and check its algebra");
  add_common(verify);
  verify->add_option("--variant", cfg.variant, "ssqm-unbroken|ssqm-broken|pssqm|bd-cubic|pseudo1|pseudo2|ossqm|pssqm-search")
      ->required();
  verify->add_option("--p", p, "Order p (pssqm: lambda-1; ossqm: 2)");
  verify->add_option("--mu", cfg.mu, "Family index");
  verify->add_option("--c", cfg.c, "Pseudosupersymmetry constant c");
  verify->add_option("--eta", eta, "Type-1 eta (default sqrt(2)|c|)");
  verify->add_option("--phi", cfg.phi, "Phase phi in [0, 2 pi)");
  verify->add_option("--r", cfg.r, "Type-2 r_mu");
  verify->add_option("--xi", cfg.xi, "Orthosupersymmetric xi in (0, sqrt(2)]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (inspect->parsed()) cfg.command = Command::Inspect;
  if (spectrum_cmd->parsed()) cfg.command = Command::Spectrum;
  if (scan->parsed()) cfg.command = Command::Scan;
  if (verify->parsed()) cfg.command = Command::Verify;

  if (!alpha.empty()) cfg.alpha = parse_real_list(alpha, "--alpha");
  if (!kappa.empty()) cfg.kappa = parse_complex_list(kappa, "--kappa");
  for (const auto& g : grid) cfg.grid.push_back(parse_grid_axis(g));
  if (format == "json") cfg.format = Format::Json;
  if (format == "csv") cfg.format = Format::Csv;
  cfg.rel_tol = rel_tol;
  cfg.p = p;
  cfg.eta = eta;
  return cfg;
}

}  // namespace cyclosc::cli
