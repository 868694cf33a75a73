// Command-line front end: reproducible verification suites, codimension
// certification, and JSON reporting for shift-of-argument systems on sl_n.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "argshift/report.hpp"
#include "argshift/selfcheck.hpp"
#include "argshift/version.hpp"

namespace {

using namespace argshift;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

void print_config_echo(const RunConfig& config) {
  std::printf("argshift %s | %s: n=%d shift=%s samples=%d seed=%llu tol=%g threads=%d\n",
              ARGSHIFT_VERSION, config.command.c_str(), config.n,
              config.shift.describe().c_str(), config.samples,
              static_cast<unsigned long long>(config.seed), config.tol, config.threads);
}

std::int64_t elapsed_ms(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

bool parse_diag_list(const std::string& text, std::vector<double>* out) {
  out->clear();
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      out->push_back(std::stod(token, &used));
      if (used != token.size()) return false;
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out->empty();
}

struct CliOptions {
  int n = 3;
  std::string shift = "generic";
  std::string diag;
  int samples = 20;
  std::uint64_t seed = 1;
  double tol = kDefaultRankTol;
  int threads = 1;
  std::string json_path;
};

void add_common_options(CLI::App* cmd, CliOptions* opts, bool with_shift) {
  cmd->add_option("--n", opts->n, "rank parameter of sl_n");
  if (with_shift) {
    cmd->add_option("--shift", opts->shift,
                    "shift element: nilpotent | generic | \"d1,d2,...,dn\"");
    cmd->add_option("--diag", opts->diag, "explicit diagonal part \"d1,d2,...,dn\"");
    cmd->add_option("--samples", opts->samples, "sample budget per assertion family");
    cmd->add_option("--seed", opts->seed, "RNG seed; identical seeds give identical reports");
    cmd->add_option("--threads", opts->threads, "worker threads for sampling");
  } else {
    cmd->add_option("--seed", opts->seed, "RNG seed");
  }
  cmd->add_option("--tol", opts->tol, "relative rank cutoff (default 1e-8)");
  cmd->add_option("--json", opts->json_path, "write the JSON report to this path");
}

int build_config(const CliOptions& opts, const std::string& command, bool certified_range,
                 RunConfig* config) {
  config->command = command;
  config->n = opts.n;
  config->samples = opts.samples;
  config->seed = opts.seed;
  config->tol = opts.tol;
  config->threads = opts.threads;
  config->json_path = opts.json_path;

  if (opts.n < 2 || opts.n > 9) {
    std::fprintf(stderr, "error: --n must lie in 2..9\n");
    return kExitBadInput;
  }
  if (certified_range && opts.n > 4) {
    std::fprintf(stderr, "error: --n must lie in 2..4 for certified modes\n");
    return kExitBadInput;
  }
  if (opts.samples < 1) {
    std::fprintf(stderr, "error: --samples must be at least 1\n");
    return kExitBadInput;
  }
  if (!(opts.tol > 0.0 && opts.tol < 1.0)) {
    std::fprintf(stderr, "error: --tol must lie in (0, 1)\n");
    return kExitBadInput;
  }
  if (opts.threads < 1) {
    std::fprintf(stderr, "error: --threads must be at least 1\n");
    return kExitBadInput;
  }

  std::vector<double> diag;
  if (!opts.diag.empty()) {
    if (!parse_diag_list(opts.diag, &diag)) {
      std::fprintf(stderr, "error: --diag must be a comma-separated number list\n");
      return kExitBadInput;
    }
    config->shift = ShiftSpec{ShiftSpec::Mode::ExplicitDiag, diag};
  } else if (opts.shift == "nilpotent") {
    config->shift = ShiftSpec{ShiftSpec::Mode::Nilpotent, {}};
  } else if (opts.shift == "generic") {
    config->shift = ShiftSpec{ShiftSpec::Mode::Generic, {}};
  } else if (parse_diag_list(opts.shift, &diag)) {
    config->shift = ShiftSpec{ShiftSpec::Mode::ExplicitDiag, diag};
  } else {
    std::fprintf(stderr, "error: --shift must be nilpotent, generic, or a number list\n");
    return kExitBadInput;
  }
  if (config->shift.mode == ShiftSpec::Mode::ExplicitDiag &&
      static_cast<int>(config->shift.diag.size()) != opts.n) {
    std::fprintf(stderr, "error: explicit diagonal needs exactly n entries\n");
    return kExitBadInput;
  }
  return kExitOk;
}

void maybe_write_json(const RunConfig& config, const Json& j) {
  if (config.json_path.empty()) return;
  std::ofstream out(config.json_path);
  out << j.dump(2) << "\n";
}

int run_info(const CliOptions& opts) {
  RunConfig config;
  const int status = build_config(opts, "info", false, &config);
  if (status != kExitOk) return status;
  const Algebra alg(config.n);
  std::printf("algebra sl(%d): dim %d, rank %d, b %d, u %d\n", alg.n(), alg.dim(), alg.rank(),
              alg.b(), alg.u());
  std::string degrees;
  for (std::size_t k = 0; k < alg.degrees().size(); ++k) {
    if (k > 0) degrees += ",";
    degrees += std::to_string(alg.degrees()[k]);
  }
  std::printf("invariant degrees: %s\n", degrees.c_str());
  std::printf("generator labels (i, j):");
  for (int i = 1; i <= alg.rank(); ++i) {
    for (int j = 0; j < i + 1; ++j) std::printf(" (%d,%d)", i, j);
  }
  std::printf("\n");
  maybe_write_json(config, info_to_json(config, alg));
  return kExitOk;
}

int run_verify(const CliOptions& opts) {
  RunConfig config;
  const int status = build_config(opts, "verify", true, &config);
  if (status != kExitOk) return status;
  print_config_echo(config);
  const auto start = std::chrono::steady_clock::now();
  const VerificationReport report = verify_theorem(config.n, config.shift, config.samples,
                                                   config.seed, config.tol, config.threads);
  const std::int64_t ms = elapsed_ms(start);
  std::fputs(render_report(report).c_str(), stdout);
  std::printf("elapsed: %lld ms\n", static_cast<long long>(ms));
  maybe_write_json(config, report_to_json(config, report, ms));
  return report.all_pass ? kExitOk : kExitFailure;
}

int run_codim(const CliOptions& opts) {
  RunConfig config;
  const int status = build_config(opts, "codim", true, &config);
  if (status != kExitOk) return status;
  print_config_echo(config);
  const auto start = std::chrono::steady_clock::now();

  const Algebra alg(config.n);
  const Element shift = build_shift(alg, config.shift);
  const ShiftSystem sys(shift, config.tol);
  Rng rng(derive_seed(config.seed, {12}));
  VerificationReport report;
  report.n = config.n;
  report.shift_spec = config.shift;
  report.kind = sys.kind();
  report.shift_matrix = shift.matrix();
  report.certificate = certify_codim(sys, config.samples, rng, config.tol, config.threads);
  report.all_pass = report.certificate.verdict != CodimVerdict::Inconclusive;

  const std::int64_t ms = elapsed_ms(start);
  std::fputs(render_report(report).c_str(), stdout);
  std::printf("elapsed: %lld ms\n", static_cast<long long>(ms));
  maybe_write_json(config, report_to_json(config, report, ms));
  return report.all_pass ? kExitOk : kExitFailure;
}

int run_selfcheck(const CliOptions& opts) {
  RunConfig config;
  const int status = build_config(opts, "selfcheck", false, &config);
  if (status != kExitOk) return status;
  print_config_echo(config);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Assertion> checks = argshift::run_selfcheck(config.seed, config.tol);
  const std::int64_t ms = elapsed_ms(start);
  std::fputs(render_assertions(checks).c_str(), stdout);
  const bool all_pass =
      std::all_of(checks.begin(), checks.end(), [](const Assertion& a) { return a.pass; });
  std::printf("selfcheck: %s\n", all_pass ? "ok" : "FAILED");
  std::printf("elapsed: %lld ms\n", static_cast<long long>(ms));
  maybe_write_json(config, selfcheck_to_json(config, checks, ms));
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shift-of-argument systems on sl_n: construction, critical samples, "
               "and codimension certificates"};
  app.set_version_flag("--version", ARGSHIFT_VERSION);
  app.require_subcommand(1);

  CliOptions info_opts, verify_opts, codim_opts, selfcheck_opts;
  CLI::App* info = app.add_subcommand("info", "print the sl_n structure constants");
  add_common_options(info, &info_opts, false);
  CLI::App* verify = app.add_subcommand("verify", "run the full verification suite");
  add_common_options(verify, &verify_opts, true);
  CLI::App* codim = app.add_subcommand("codim", "emit a codimension certificate");
  add_common_options(codim, &codim_opts, true);
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "run the numeric oracle suite");
  add_common_options(selfcheck, &selfcheck_opts, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (info->parsed()) return run_info(info_opts);
    if (verify->parsed()) return run_verify(verify_opts);
    if (codim->parsed()) return run_codim(codim_opts);
    if (selfcheck->parsed()) return run_selfcheck(selfcheck_opts);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitFailure;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return kExitFailure;
  }
  return kExitBadInput;
}
