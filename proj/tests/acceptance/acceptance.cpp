// Runs each acceptance criterion once and prints one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "e7lift/archimedean.hpp"
#include "e7lift/lie.hpp"
#include "e7lift/lift.hpp"
#include "e7lift_cli/commands.hpp"

using namespace e7lift;
using namespace e7lift::cli;

namespace {

const std::string kData = E7LIFT_TEST_DATA;
constexpr std::uint64_t kSeed = 1729;

struct Outcome {
  bool ok = false;
  std::string detail;
};

// Reports the first failed check of a suite, or a one-line summary.
Outcome from_suite(const SuiteResult& r) {
  for (const auto& c : r.checks) {
    if (c["status"] != "pass") return {false, c.dump()};
  }
  return {r.passed, std::to_string(r.checks.size()) + " checks"};
}

const NewformRecord& level11() {
  static const NewformRecord r = load_newform(kData + "/newforms/11a.json");
  return r;
}

Outcome criterion_1() { return from_suite(suite_jordan(kSeed, 10000)); }

Outcome criterion_2() {
  PrecisionScope prec(256);
  const CoeffContext ctx(level11());
  return from_suite(suite_coeffs(ctx, kSeed, 10000, 1000));
}

Outcome criterion_3() {
  const SuiteResult r = suite_lfactor("adjoint");
  Outcome o = from_suite(r);
  if (o.ok) o.detail = "133 pairs match";
  return o;
}

Outcome criterion_4() {
  const SuiteResult r = suite_lfactor("standard");
  Outcome o = from_suite(r);
  const auto& c = r.checks.at(1);
  if (c["pairs"] != 56 || c["central_shift"].is_null()) return {false, c.dump()};
  if (o.ok) o.detail = "56 pairs match, central shift " + c["central_shift"].get<std::string>();
  return o;
}

Outcome criterion_5() { return from_suite(suite_cap()); }

Outcome criterion_6() {
  const auto& rs = build_e7();
  const std::size_t orbit = weights_56().size();
  const std::size_t adj = weights_adjoint().size();
  std::ostringstream os;
  os << rs.positive.size() << " positive, " << rs.roots.size() << " roots, orbit " << orbit << ", adjoint " << adj;
  return {rs.positive.size() == 63 && rs.roots.size() == 126 && orbit == 56 && adj == 126 + 7, os.str()};
}

Hermitian2 random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4), pos(1, 8);
  Hermitian2 R;
  for (auto& c : R.c3.c) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  R.a = Rational(pos(rng), den(rng));
  R.a.canonicalize();
  Rational delta(pos(rng), den(rng));
  delta.canonicalize();
  R.b = (R.c3.norm() + delta) / R.a;
  return R;
}

Outcome criterion_7() {
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < 100; ++t) {
    const Hermitian2 R = random_positive(rng);
    if (gram_sigma_det(R) != pow(R.det(), 8)) return {false, "det R = " + R.det().get_str()};
  }
  return {true, "100 random R"};
}

Outcome criterion_8() {
  std::mt19937_64 rng(kSeed + 8);
  long flagged = 0;
  for (int t = 0; t < 100; ++t) {
    const Hermitian2 S = t % 10 == 0 ? Hermitian2::identity() : random_positive(rng);
    const long k = 2 * (1 + t % 10);
    const ConstantsReport r = constants_report(S, k);
    if (!r.identity_holds) return {false, "C3 != C1 det^{9/2}: " + r.to_json().dump()};
    if (r.c_r_discrepancy != (r.det != 1)) return {false, "discrepancy flag wrong: " + r.to_json().dump()};
    flagged += r.c_r_discrepancy;
  }
  return {true, "100 random S, discrepancy flagged " + std::to_string(flagged) + " times"};
}

Outcome criterion_9() {
  auto fails = [](const ValidationReport& r, const std::string& name) {
    const auto f = r.failed();
    return std::find(f.begin(), f.end(), name) != f.end();
  };
  const std::uint64_t p = 5;
  const bool one = validate({p, 0, {Rational(1)}}, 0).ok();
  const bool monic = fails(validate({p, 1, {Rational(1), Rational(2)}}, 1), "monic");
  const bool degree = fails(validate({p, 2, {Rational(1), Rational(0), Rational(1)}}, 1), "degree");
  const bool bound = fails(validate({p, 1, {pow(Rational(5), 11) + 1, Rational(1)}}, 1), "coefficient_bound");
  const bool edge = !fails(validate({p, 1, {pow(Rational(5), 11), Rational(1)}}, 1), "coefficient_bound");
  std::ostringstream os;
  os << "accept f=1: " << one << ", monic: " << monic << ", degree: " << degree << ", p^{11d}: " << bound
     << ", boundary accepted: " << edge;
  return {one && monic && degree && bound && edge, os.str()};
}

Outcome criterion_10() {
  RunConfig cfg;
  cfg.newform = kData + "/newforms/11a.json";
  cfg.det_bound = 1;
  cfg.trace_bound = 3;
  cfg.out = (std::filesystem::temp_directory_path() / "e7lift_acceptance_lift.jsonl").string();
  std::ostringstream log;
  if (cmd_lift(cfg, log) != kOk) return {false, "cmd_lift failed: " + log.str()};
  std::ifstream in(cfg.out);
  std::string head, row;
  std::getline(in, head);
  std::getline(in, row);
  const auto j = nlohmann::json::parse(row);
  if (JordanElement::from_json(j["B"]) != JordanElement::identity() || j["value"] != "1") {
    return {false, "B = E entry: " + row};
  }
  SiegelProvider provider;
  provider.load_file(kData + "/siegel/demo.tbl");
  PrecisionScope prec(256);
  const CoeffContext ctx(level11());
  Outcome o = from_suite(suite_lift(ctx, provider, kSeed, 100));
  if (o.ok) o.detail = "B = E gives 1; 100 translations equivariant";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* what;
    double limit;  // seconds, 0 for none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> all{
      {1, "jordan/octonion identities, 10^4 randomized checks", 60, criterion_1},
      {2, "coefficient bound, square classes, reconstruction on level 11", 30, criterion_2},
      {3, "degree-133 exponent multiset", 5, criterion_3},
      {4, "degree-56 exponent multiset up to central shift", 10, criterion_4},
      {5, "CAP dominant representatives", 10, criterion_5},
      {6, "root data counts", 0, criterion_6},
      {7, "Gram determinant identity", 10, criterion_7},
      {8, "archimedean constants", 0, criterion_8},
      {9, "Siegel validator", 0, criterion_9},
      {10, "end-to-end lift and equivariance", 0, criterion_10},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && secs > c.limit) {
      o.ok = false;
      o.detail += " [over time limit]";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.what << " (" << timing
              << (c.limit > 0 ? ", limit " + std::to_string(static_cast<int>(c.limit)) + " s" : std::string())
              << ") " << o.detail << "\n";
    failed += !o.ok;
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria passed\n";
  return failed;
}
