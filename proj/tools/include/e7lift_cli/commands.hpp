#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "e7lift/coefficients.hpp"
#include "e7lift/siegel.hpp"

namespace e7lift::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kPartial = 2, kVerifyFailed = 3 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string newform;
  std::vector<std::string> siegel;
  std::optional<long> det_bound;
  std::optional<long> trace_bound;
  std::string suite = "all";
  std::string out;  // empty: stdout
  std::uint64_t seed = 1729;
  unsigned precision = 256;
  long trials = 10000;

  /// key=value lines; '#' starts a comment; siegel may repeat.
  static RunConfig from_file(const std::string& path);
  void apply(const std::string& key, const std::string& value);
  /// Sorted key=value lines, the input to config_hash.
  std::string canonical() const;
};

/// FNV-1a 64 of the canonical config, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);
nlohmann::json provenance(const RunConfig& cfg);

/// Tables named in the config, else every *.tbl under $E7LIFT_SIEGEL_DIR.
std::vector<std::string> siegel_paths(const RunConfig& cfg);

/// Loads and validates every referenced file; throws ConfigError.
struct Prepared {
  std::optional<NewformRecord> newform;
  SiegelProvider provider;
};
Prepared prepare(const RunConfig& cfg, bool need_newform);

int cmd_lift(const RunConfig& cfg, std::ostream& log);

// --- verification suites ---------------------------------------------------

struct SuiteResult {
  std::string suite;
  nlohmann::json checks = nlohmann::json::array();
  bool passed = true;

  void add(nlohmann::json check);
};

SuiteResult suite_jordan(std::uint64_t seed, long trials);
SuiteResult suite_coeffs(const CoeffContext& ctx, std::uint64_t seed, std::uint64_t n_max = 10000,
                         std::uint64_t recon_max = 1000);
SuiteResult suite_siegel(const SiegelProvider& provider);
SuiteResult suite_lfactor(const std::string& which);
SuiteResult suite_cap();
SuiteResult suite_gaussian(std::uint64_t seed, long trials = 100);
/// Lift end-to-end: the B = E coefficient and randomized translation equivariance.
SuiteResult suite_lift(const CoeffContext& ctx, const SiegelProvider& provider, std::uint64_t seed, long trials = 100);

const std::vector<std::string>& suite_names();
int cmd_verify(const RunConfig& cfg, std::ostream& log);

int cmd_lfactor(const RunConfig& cfg, const std::string& which, std::uint64_t p, const std::string& mode,
                const std::string& alpha, const std::string& s, std::ostream& out, std::ostream& log);

}  // namespace e7lift::cli
