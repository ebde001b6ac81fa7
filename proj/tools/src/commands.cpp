#include <fstream>
#include <iostream>
#include <memory>
#include <set>

#include "e7lift/errors.hpp"
#include "e7lift/lie.hpp"
#include "e7lift/lift.hpp"
#include "e7lift_cli/commands.hpp"

namespace e7lift::cli {

namespace {

// Output stream for cfg.out, or stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw ConfigError("cannot write " + path);
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

Complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return Complex(Real(s));
    return {Real(s.substr(0, comma)), Real(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw ConfigError("bad complex number '" + s + "' (expected RE or RE,IM)");
  }
}

}  // namespace

int cmd_lift(const RunConfig& cfg, std::ostream& log) {
  if (!cfg.det_bound || !cfg.trace_bound) throw ConfigError("lift needs --det-bound and --trace-bound");
  Prepared prep = prepare(cfg, true);
  PrecisionScope prec(cfg.precision);
  const CoeffContext ctx(*prep.newform);
  Sink sink(cfg.out);

  const LiftTable table = lift_table(*cfg.det_bound, *cfg.trace_bound, ctx, prep.provider);
  auto& os = sink.get();
  os << nlohmann::json{{"provenance", provenance(cfg)}}.dump() << "\n";
  for (const auto& e : table.entries) os << e.to_json().dump() << "\n";
  os.flush();

  long failed = 0;
  for (const auto& e : table.entries) {
    if (e.coeff) continue;
    ++failed;
    log << "unavailable: B = " << e.B.to_string() << ": " << e.error << "\n";
  }
  for (const auto& k : table.missing_keys()) log << "missing siegel entry " << k << "\n";
  log << table.entries.size() << " coefficients, " << failed << " incomplete\n";
  return failed ? kPartial : kOk;
}

int cmd_lfactor(const RunConfig& cfg, const std::string& which, std::uint64_t p, const std::string& mode,
                const std::string& alpha, const std::string& s, std::ostream& out, std::ostream& log) {
  std::string rep;
  if (which == "std" || which == "standard") {
    rep = "standard";
  } else if (which == "ad" || which == "adjoint") {
    rep = "adjoint";
  } else {
    throw ConfigError("unsupported representation '" + which + "' (use std or ad)");
  }
  if (mode != "symbolic" && mode != "numeric") throw ConfigError("mode must be symbolic or numeric");
  PrecisionScope prec(cfg.precision);

  const auto weights = rep == "standard" ? weights_56() : weights_adjoint();
  const EulerFactorSpec spec = euler_factor(weights, satake_siegel());

  out << "# " << nlohmann::json{{"provenance", provenance(cfg)}}.dump() << "\n";
  out << "# " << rep << " Euler factor, " << spec.total() << " factors, alpha = p^{s_p}\n";
  if (mode == "symbolic") {
    for (const auto& line : spec.lines()) out << line << "\n";
    return kOk;
  }

  if (p < 2 || !is_prime(p)) throw ConfigError("numeric mode needs a prime --p");
  Complex a(Real(1));
  if (!alpha.empty()) {
    a = parse_complex(alpha);
  } else {
    Prepared prep = prepare(cfg, true);
    if (prep.newform->level % static_cast<long>(p) == 0) throw ConfigError("p divides the level; pass --alpha");
    a = satake(*prep.newform, p).alpha;
    log << "alpha taken from the newform Satake parameter at p = " << p << "\n";
  }
  if (s.empty()) throw ConfigError("numeric mode needs --s");
  const Complex sv = parse_complex(s);

  for (const auto& [k, m] : spec.mult) {
    EulerFactorSpec one;
    one.add(k.first, k.second, m);
    out << "(1 - alpha^" << k.first << " p^" << k.second << " p^-s)^" << m << " = "
        << format_complex(evaluate_euler_factor(one, a, p, sv), 25) << "\n";
  }
  out << "product = " << format_complex(evaluate_euler_factor(spec, a, p, sv), 30) << "\n";
  return kOk;
}

}  // namespace e7lift::cli
