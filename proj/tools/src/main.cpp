#include <iostream>

#include <CLI11.hpp>

#include "e7lift/errors.hpp"
#include "e7lift_cli/commands.hpp"

using namespace e7lift::cli;

int main(int argc, char** argv) {
  CLI::App app{"e7lift: Fourier coefficients, local data and verification suites"};
  app.set_version_flag("--version", std::string(E7LIFT_VERSION));
  app.require_subcommand(1);

  std::string config_path;
  std::string newform;
  std::vector<std::string> siegel;
  long det_bound = 0;
  long trace_bound = 0;
  std::string out;
  std::uint64_t seed = 0;
  unsigned precision = 0;
  long trials = 0;

  auto* o_config = app.add_option("--config", config_path, "key=value config file")->check(CLI::ExistingFile);
  auto* o_newform = app.add_option("--newform", newform, "newform JSON record");
  auto* o_siegel = app.add_option("--siegel", siegel, "Siegel table file (repeatable)");
  auto* o_det = app.add_option("--det-bound", det_bound, "bound on det B");
  auto* o_trace = app.add_option("--trace-bound", trace_bound, "bound on tr B");
  auto* o_out = app.add_option("--out", out, "output path (default stdout)");
  auto* o_seed = app.add_option("--seed", seed, "RNG seed");
  auto* o_prec = app.add_option("--precision", precision, "working precision in bits");
  auto* o_trials = app.add_option("--trials", trials, "randomized checks in the jordan suite");
  app.fallthrough();

  auto* lift = app.add_subcommand("lift", "write the JSON-lines coefficient table");

  auto* verify = app.add_subcommand("verify", "run a property suite");
  std::string suite;
  auto* o_suite = verify->add_option("suite", suite, "jordan|coeffs|siegel|lfactor-std|lfactor-ad|cap|gaussian|lift|all");

  auto* lfactor = app.add_subcommand("lfactor", "print an Euler-factor exponent multiset");
  std::string which;
  std::string mode = "symbolic";
  std::uint64_t p = 0;
  std::string alpha;
  std::string s;
  lfactor->add_option("which", which, "std or ad")->required();
  lfactor->add_option("--mode", mode, "symbolic or numeric");
  lfactor->add_option("--p", p, "prime");
  lfactor->add_option("--alpha", alpha, "Satake value RE[,IM]; default from --newform at p");
  lfactor->add_option("--s", s, "evaluation point RE[,IM]");

  auto* coeffs = app.add_subcommand("coeffs", "CSV table of c_n with the bound check");
  std::uint64_t n_max = 1000;
  coeffs->add_option("--n-max", n_max, "largest n");

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg = config_path.empty() ? RunConfig{} : RunConfig::from_file(config_path);
    if (*o_newform) cfg.newform = newform;
    if (*o_siegel) cfg.siegel = siegel;
    if (*o_det) cfg.det_bound = det_bound;
    if (*o_trace) cfg.trace_bound = trace_bound;
    if (*o_out) cfg.out = out;
    if (*o_seed) cfg.seed = seed;
    if (*o_prec) cfg.apply("precision", std::to_string(precision));
    if (*o_trials) cfg.apply("trials", std::to_string(trials));
    if (*o_suite) cfg.suite = suite;
    (void)o_config;

    if (*lift) return cmd_lift(cfg, std::cerr);
    if (*verify) return cmd_verify(cfg, std::cerr);
    if (*lfactor) return cmd_lfactor(cfg, which, p, mode, alpha, s, std::cout, std::cerr);
    if (*coeffs) {
      Prepared prep = prepare(cfg, true);
      e7lift::PrecisionScope prec(cfg.precision);
      const e7lift::CoeffContext ctx(*prep.newform);
      std::cout << e7lift::coefficient_table_csv(ctx, std::min<std::uint64_t>(n_max, prep.newform->max_n()));
      return kOk;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  } catch (const e7lift::DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
