#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>

#include "e7lift/archimedean.hpp"
#include "e7lift/errors.hpp"
#include "e7lift/lie.hpp"
#include "e7lift/lift.hpp"
#include "e7lift_cli/commands.hpp"

namespace e7lift::cli {

using nlohmann::json;

void SuiteResult::add(json check) {
  if (check.value("status", "fail") != "pass") passed = false;
  checks.push_back(std::move(check));
}

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_rational(Rng& rng, long num = 5, long den = 3) {
  Rational q(uniform(rng, -num, num), uniform(rng, 1, den));
  q.canonicalize();
  return q;
}

Octonion random_octonion(Rng& rng) {
  Octonion x;
  for (auto& c : x.c) c = random_rational(rng);
  return x;
}

Octonion random_integral(Rng& rng, long r = 2) {
  std::array<long, 8> v{};
  for (auto& c : v) c = uniform(rng, -r, r);
  return OctonionOrder::maximal().from_coordinates(v);
}

JordanElement random_jordan(Rng& rng) {
  JordanElement B;
  B.a = random_rational(rng);
  B.b = random_rational(rng);
  B.c = random_rational(rng);
  B.c1 = random_octonion(rng);
  B.c2 = random_octonion(rng);
  B.c3 = random_octonion(rng);
  return B;
}

Hermitian2 random_positive_hermitian(Rng& rng) {
  Hermitian2 R;
  R.c3 = random_octonion(rng);
  R.a = Rational(uniform(rng, 1, 6), uniform(rng, 1, 3));
  R.a.canonicalize();
  Rational delta(uniform(rng, 1, 9), uniform(rng, 1, 4));
  delta.canonicalize();
  R.b = (R.c3.norm() + delta) / R.a;
  return R;
}

// Tallies a randomized property over n trials.
template <class F>
json property(const std::string& name, long n, F&& trial) {
  long failures = 0;
  std::string first;
  for (long i = 0; i < n; ++i) {
    std::string why;
    bool ok = false;
    try {
      ok = trial(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!ok && failures++ == 0) first = why;
  }
  json j{{"name", name}, {"trials", n}, {"failures", failures}, {"status", failures ? "fail" : "pass"}};
  if (failures) j["first_failure"] = first;
  return j;
}

json single(const std::string& name, bool ok, json detail = nullptr) {
  json j{{"name", name}, {"status", ok ? "pass" : "fail"}};
  if (!detail.is_null()) j["detail"] = std::move(detail);
  return j;
}

Value coefficient_value(const Coefficient& a) {
  return a.exact ? Value::from_rational(*a.exact) : Value::from_numeric(Complex(a.numeric));
}

}  // namespace

SuiteResult suite_jordan(std::uint64_t seed, long trials) {
  SuiteResult res{"jordan"};
  Rng rng(seed);
  const long each = (trials + 4) / 5;
  const auto& order = OctonionOrder::maximal();

  res.add(property("composition_law", each, [&](std::string& why) {
    const Octonion x = random_octonion(rng);
    const Octonion y = random_octonion(rng);
    if ((x * y).norm() == x.norm() * y.norm()) return true;
    why = "N(xy) != N(x)N(y) for x = " + x.to_string() + ", y = " + y.to_string();
    return false;
  }));
  res.add(property("order_closure", each, [&](std::string& why) {
    const Octonion x = random_integral(rng);
    const Octonion y = random_integral(rng);
    if (order.contains(x * y) && order.contains(x.conj())) return true;
    why = "product leaves the order: " + x.to_string() + " * " + y.to_string();
    return false;
  }));
  const auto units = order.units();
  res.add(single("unit_count", units.size() == 240, json{{"units", units.size()}}));
  res.add(property("adj_adj", each, [&](std::string& why) {
    const JordanElement B = random_jordan(rng);
    if (B.sharp().sharp() == B.det() * B) return true;
    why = "adj(adj B) != det(B) B for B = " + B.to_string();
    return false;
  }));
  res.add(property("trace_adj", each, [&](std::string& why) {
    const JordanElement B = random_jordan(rng);
    if (jordan_pair(B, B.sharp()) == 3 * B.det()) return true;
    why = "(B, adj B) != 3 det B for B = " + B.to_string();
    return false;
  }));
  res.add(property("translation_det", each, [&](std::string& why) {
    const Hermitian2 X{random_rational(rng), random_rational(rng), random_octonion(rng)};
    const Rational r = random_rational(rng);
    const OctPair x{random_octonion(rng), random_octonion(rng)};
    const JordanElement B = random_jordan(rng);
    if (act_translation_v1(x, X, r).det() == block(X, r).det() && translate_up(x, B).det() == B.det() &&
        translate_down(x, B).det() == B.det()) {
      return true;
    }
    why = "translation changed det for x = (" + x[0].to_string() + ", " + x[1].to_string() + ")";
    return false;
  }));
  return res;
}

SuiteResult suite_coeffs(const CoeffContext& ctx, std::uint64_t seed, std::uint64_t n_max, std::uint64_t recon_max) {
  SuiteResult res{"coeffs"};
  Rng rng(seed);
  const auto& rec = ctx.record();
  const AlphaField& field = ctx.field();
  const Real tol = pow(Real(10), -20);

  const Value c1 = c_value(ctx, std::uint64_t{1});
  res.add(single("c_1", c1.exact && c1.exact->is_rational() && c1.exact->rational_value() == 1,
                 json(c1.to_string())));

  n_max = std::min<std::uint64_t>(n_max, rec.max_n());
  long bound_fail = 0;
  long certified = 0;
  json first = nullptr;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const BoundCheck b = check_bound(ctx, n);
    certified += b.certified;
    if (!b.pass && bound_fail++ == 0) {
      first = {{"n", n}, {"c_n", b.c.to_string(25)}, {"bound", format_real(b.bound, 20)}};
    }
  }
  json bj{{"name", "prop_bound"}, {"n_max", n_max}, {"failures", bound_fail}, {"certified_exact", certified},
          {"status", bound_fail ? "fail" : "pass"}};
  if (bound_fail) bj["first_failure"] = first;
  res.add(bj);

  // c_{a^2 r} = mu_f(a)^{-1} c_r
  res.add(property("square_class", 200, [&](std::string& why) {
    const std::uint64_t r = uniform(rng, 1, 1000);
    const std::uint64_t a = uniform(rng, 1, 30);
    Value rhs = c_value(ctx, r);
    for (const auto& [p, e] : factorize(a)) {
      for (int i = 0; i < e; ++i) rhs = mul_reduce(rhs, ctx.mu_f_inverse(p), field);
    }
    const Value lhs = c_value(ctx, a * a * r);
    if (values_agree(lhs, rhs, field, tol)) return true;
    why = "a = " + std::to_string(a) + ", r = " + std::to_string(r) + ": " + lhs.to_string() + " vs " + rhs.to_string();
    return false;
  }));
  res.add(property("non_integral_zero", 50, [&](std::string& why) {
    const long v = std::vector<long>{2, 3, 5, 6, 7, 10}[uniform(rng, 0, 5)];
    long u = uniform(rng, 1, 200);
    while (std::gcd(u, v) != 1) ++u;
    const Rational q(u, v);
    const Value c = c_value(ctx, q);
    if (c.exact && c.exact->is_zero()) return true;
    why = "c_{" + q.get_str() + "} = " + c.to_string();
    return false;
  }));

  long recon_n = 0;
  long recon_exact = 0;
  long recon_fail = 0;
  json rfirst = nullptr;
  for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(recon_max, rec.max_n()); ++n) {
    if (!is_square_free(n) || std::gcd<std::uint64_t, std::uint64_t>(n, rec.level) != 1) continue;
    ++recon_n;
    const Value lhs = reconstruct_coefficient(ctx, n);
    const Value rhs = coefficient_value(rec.a(n));
    if (lhs.exact && rhs.exact) {
      ++recon_exact;
    }
    if (!values_agree(lhs, rhs, field, tol) && recon_fail++ == 0) {
      rfirst = {{"n", n}, {"reconstructed", lhs.to_string(25)}, {"a_n", rhs.to_string(25)}};
    }
  }
  json rj{{"name", "reconstruction"}, {"count", recon_n}, {"exact", recon_exact}, {"failures", recon_fail},
          {"status", recon_fail ? "fail" : "pass"}};
  if (recon_fail) rj["first_failure"] = rfirst;
  res.add(rj);
  return res;
}

SuiteResult suite_siegel(const SiegelProvider& provider) {
  SuiteResult res{"siegel"};
  auto expect = [&](const std::string& name, const SiegelPolynomial& f, long d, const std::string& failing) {
    const ValidationReport r = validate(f, d);
    const auto bad = r.failed();
    const bool ok = failing.empty() ? r.ok() : std::find(bad.begin(), bad.end(), failing) != bad.end();
    res.add(single(name, ok, json{{"report", r.to_string()}, {"expected_failure", failing}}));
  };
  const Rational p12 = pow(Rational(11), 12);
  expect("accept_one", {11, 0, {Rational(1)}}, 0, "");
  expect("reject_non_monic", {11, 1, {Rational(1), Rational(2)}}, 1, "monic");
  expect("reject_degree", {11, 1, {Rational(1), Rational(1)}}, 2, "degree");
  expect("reject_non_integral", {11, 1, {Rational(1, 2), Rational(1)}}, 1, "integral");
  expect("reject_coefficient_bound", {11, 1, {p12, Rational(1)}}, 1, "coefficient_bound");

  bool cancel = true;
  bool d0 = true;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    Rational prod = gamma_p(p).at(9);
    for (long i = 0; i <= 2; ++i) prod *= 1 - pow(Rational(static_cast<unsigned long>(p)), -(9 - 4 * i));
    cancel = cancel && prod == 1;
    d0 = d0 && siegel_series_b({p, 0, {Rational(1)}}) == gamma_p(p).inverse();
  }
  res.add(single("gamma_cancellation_at_9", cancel));
  res.add(single("b_equals_gamma_inverse_at_d0", d0));

  AlphaField empty;
  const Value w = whittaker_unramified(JordanElement::identity(), 2, Value::from_rational(Rational(1)), provider, empty);
  res.add(single("unramified_d0_is_one", w.exact && w.exact->is_rational() && w.exact->rational_value() == 1));
  res.add(single("tables_validated", true, json{{"entries", provider.size()}}));
  return res;
}

SuiteResult suite_lfactor(const std::string& which) {
  const bool std56 = which == "standard" || which == "std";
  SuiteResult res{std56 ? "lfactor-std" : "lfactor-ad"};
  const auto& rs = build_e7();
  const auto w56 = weights_56();
  const auto adj = weights_adjoint();
  res.add(single("root_counts",
                 rs.positive.size() == 63 && rs.roots.size() == 126 && w56.size() == 56 && adj.size() == 133,
                 json{{"positive", rs.positive.size()}, {"roots", rs.roots.size()}, {"orbit", w56.size()},
                      {"adjoint", adj.size()}}));
  const EulerFactorSpec spec = euler_factor(std56 ? w56 : adj, satake_siegel());
  const EulerFactorSpec expected = expected_spec(std56 ? "standard" : "adjoint");
  const CompareReport rep = std56 ? compare_with_central_shift(spec, expected) : compare(spec, expected);
  json j = rep.to_json(std56 ? "standard_56" : "adjoint_133");
  j["name"] = j["check"];
  j.erase("check");
  j["status"] = rep.equal ? "pass" : "fail";
  j["match"] = rep.equal ? "match" : "mismatch";
  j["pairs"] = spec.total();
  res.add(j);
  return res;
}

SuiteResult suite_cap() {
  SuiteResult res{"cap"};
  const SymbolicWeight lam = satake_siegel();
  const SymbolicWeight chi = cap_parameter();
  for (const Rational& s : {Rational(0), Rational(1, 3), Rational(7, 5)}) {
    const WeightVector a = dominant_representative(lam, s);
    const WeightVector b = dominant_representative(chi, s);
    res.add(single("dominant_s=" + s.get_str(), a == b, json{{"siegel", a.to_json()}, {"cap", b.to_json()}}));
  }
  return res;
}

SuiteResult suite_gaussian(std::uint64_t seed, long trials) {
  SuiteResult res{"gaussian"};
  Rng rng(seed);
  res.add(single("gram_identity_matrix", gram_sigma_det(Hermitian2::identity()) == 1));
  res.add(single("gram_diag_2_1", gram_sigma_det({Rational(2), Rational(1), Octonion{}}) == 256));
  res.add(property("gram_det_power_8", trials, [&](std::string& why) {
    const Hermitian2 R = random_positive_hermitian(rng);
    const Rational g = gram_sigma_det(R);
    if (g == pow(R.det(), 8)) return true;
    why = "det R = " + R.det().get_str() + ", gram det = " + g.get_str();
    return false;
  }));
  res.add(property("constants_identity", trials, [&](std::string& why) {
    const Hermitian2 S = uniform(rng, 0, 9) == 0 ? Hermitian2::identity() : random_positive_hermitian(rng);
    const long k = 2 * uniform(rng, 1, 10);
    const ConstantsReport r = constants_report(S, k);
    if (r.identity_holds && r.c_r_discrepancy == (r.det != 1)) return true;
    why = r.to_json().dump();
    return false;
  }));

  const double rel = 1e-12;
  auto close = [&](std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
  };
  const auto w0 = whittaker_numeric(JordanElement::identity(), 0, SL2{});
  res.add(single("whittaker_identity", close(w0, std::exp(-6 * std::numbers::pi))));

  std::uniform_real_distribution<double> real(-2, 2);
  auto random_sl2 = [&] {
    const double t = std::exp(real(rng) / 2);
    return SL2::n(real(rng)) * SL2::m(t) * SL2::k(real(rng));
  };
  const JordanElement B{Rational(2), Rational(1), Rational(3, 2), Octonion{}, Octonion{},
                        Octonion::real(Rational(1, 2))};
  res.add(property("whittaker_shift", 50, [&](std::string& why) {
    const SL2 h = random_sl2();
    const double b = real(rng);
    const int l = static_cast<int>(uniform(rng, 0, 20));
    const auto lhs = whittaker_numeric(B, l, h, b) / whittaker_numeric(B, l, h);
    const auto rhs = e_char(B.c.get_d() * b);
    if (close(lhs, rhs)) return true;
    why = "ratio mismatch at l = " + std::to_string(l);
    return false;
  }));
  res.add(property("whittaker_scaling", 50, [&](std::string& why) {
    const SL2 h = random_sl2();
    double a = std::exp(real(rng) / 2);
    if (uniform(rng, 0, 1)) a = -a;
    const double r = std::exp(real(rng) / 2);
    const int l = static_cast<int>(uniform(rng, 0, 20));
    const auto lhs = whittaker_sl2(r, l, SL2::m(a) * h);
    const auto rhs = (a < 0 && l % 2 ? -1.0 : 1.0) * whittaker_sl2(a * a * r, l, h);
    if (close(lhs, rhs)) return true;
    why = "scaling mismatch at a = " + std::to_string(a) + ", l = " + std::to_string(l);
    return false;
  }));
  res.add(property("whittaker_rotation", 50, [&](std::string& why) {
    const SL2 h = random_sl2();
    const SL2 k = SL2::k(real(rng));
    const int l = static_cast<int>(uniform(rng, 0, 20));
    const std::complex<double> i(0, 1);
    const auto lhs = whittaker_sl2(1.5, l, h * k);
    const auto rhs = whittaker_sl2(1.5, l, h) * std::pow(k.j(i), -l);
    if (close(lhs, rhs)) return true;
    why = "rotation mismatch at l = " + std::to_string(l);
    return false;
  }));
  res.add(property("whittaker_sl2_restriction", 50, [&](std::string& why) {
    const SL2 h = random_sl2();
    const int l = static_cast<int>(uniform(rng, 0, 20));
    const Hermitian2 S = upper_block(B);
    const double r = B.c.get_d();
    const std::complex<double> i(0, 1);
    const auto lhs = whittaker_numeric(B, l, h);
    const auto rhs = std::pow(S.det().get_d(), l / 2.0) * e_char(i * (S.a.get_d() + S.b.get_d())) * whittaker_sl2(r, l, h);
    if (close(lhs, rhs)) return true;
    why = "restriction mismatch at l = " + std::to_string(l);
    return false;
  }));
  return res;
}

SuiteResult suite_lift(const CoeffContext& ctx, const SiegelProvider& provider, std::uint64_t seed, long trials) {
  SuiteResult res{"lift"};
  Rng rng(seed);
  const auto& order = OctonionOrder::maximal();

  try {
    const LiftCoefficient e = lift_coefficient(JordanElement::identity(), ctx, provider);
    const bool one = e.value.exact && e.value.exact->is_rational() && e.value.exact->rational_value() == 1;
    res.add(single("identity_coefficient", one, json(e.value.to_string())));
  } catch (const std::exception& ex) {
    res.add(single("identity_coefficient", false, json(ex.what())));
  }

  std::vector<Octonion> norm1;
  std::vector<Octonion> norm2;
  for (const auto& x : order.elements_of_norm_at_most(Rational(2))) {
    if (x.norm() == 1) norm1.push_back(x);
    if (x.norm() == 2) norm2.push_back(x);
  }
  auto pick = [&](const std::vector<Octonion>& v) { return v[uniform(rng, 0, static_cast<long>(v.size()) - 1)]; };
  res.add(property("equivariance", trials, [&](std::string& why) {
    Hermitian2 X;
    switch (uniform(rng, 0, 4)) {
      case 0: X = Hermitian2::identity(); break;
      case 1: X = {Rational(1), Rational(2), pick(norm1)}; break;
      case 2: X = {Rational(2), Rational(1), Octonion{}}; break;
      case 3: X = {Rational(2), Rational(2), pick(norm1)}; break;
      default: X = {Rational(1), Rational(3), pick(norm2)}; break;
    }
    const Rational r(uniform(rng, 1, 3));
    const OctPair x{random_integral(rng, 1), random_integral(rng, 1)};
    const EquivarianceReport rep = equivariance_check(X, r, x, ctx, provider);
    if (!rep.equal) why = rep.detail;
    return rep.equal;
  }));
  return res;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"jordan", "coeffs", "siegel", "lfactor-std", "lfactor-ad",
                                              "cap",    "gaussian", "lift"};
  return names;
}

int cmd_verify(const RunConfig& cfg, std::ostream& log) {
  const auto& names = suite_names();
  std::vector<std::string> run;
  if (cfg.suite == "all") {
    run = names;
  } else if (std::find(names.begin(), names.end(), cfg.suite) != names.end()) {
    run = {cfg.suite};
  } else {
    throw ConfigError("unknown suite '" + cfg.suite + "'");
  }
  const bool need_newform = cfg.suite == "all" || cfg.suite == "coeffs" || cfg.suite == "lift";
  Prepared prep = prepare(cfg, need_newform);
  PrecisionScope prec(cfg.precision);
  std::optional<CoeffContext> ctx;
  if (prep.newform) ctx.emplace(*prep.newform);

  json report{{"provenance", provenance(cfg)}, {"suites", json::array()}};
  bool all = true;
  for (const auto& name : run) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r;
    if (name == "jordan") r = suite_jordan(cfg.seed, cfg.trials);
    if (name == "coeffs") r = suite_coeffs(*ctx, cfg.seed);
    if (name == "siegel") r = suite_siegel(prep.provider);
    if (name == "lfactor-std") r = suite_lfactor("standard");
    if (name == "lfactor-ad") r = suite_lfactor("adjoint");
    if (name == "cap") r = suite_cap();
    if (name == "gaussian") r = suite_gaussian(cfg.seed);
    if (name == "lift") r = suite_lift(*ctx, prep.provider, cfg.seed);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log << name << ": " << (r.passed ? "pass" : "FAIL") << " (" << secs << " s)\n";
    for (const auto& c : r.checks) {
      if (c["status"] != "pass") log << "  " << c["name"].get<std::string>() << ": " << c.dump() << "\n";
    }
    all = all && r.passed;
    report["suites"].push_back({{"suite", r.suite}, {"passed", r.passed}, {"checks", r.checks}});
  }
  report["passed"] = all;

  std::unique_ptr<std::ofstream> file;
  if (!cfg.out.empty()) {
    file = std::make_unique<std::ofstream>(cfg.out, std::ios::binary);
    if (!*file) throw ConfigError("cannot write " + cfg.out);
  }
  (file ? *file : std::cout) << report.dump(2) << "\n";
  return all ? kOk : kVerifyFailed;
}

}  // namespace e7lift::cli
