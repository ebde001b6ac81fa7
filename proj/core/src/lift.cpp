#include "e7lift/lift.hpp"

#include <algorithm>
#include <set>

#include "e7lift/errors.hpp"

namespace e7lift {

namespace {

nlohmann::json value_json(const Value& v) {
  nlohmann::json j{{"numeric", format_complex(v.numeric, 30)}};
  if (v.exact) j["exact"] = v.exact->to_string();
  return j;
}

Real agreement_tolerance() {
  return precision_epsilon(static_cast<unsigned>(Real::default_precision() * 3.3219));
}

}  // namespace

Value LiftCoefficient::breakdown_product(const AlphaField& field) const {
  Value acc = mul_reduce(c_det, power, field);
  for (const auto& f : local) acc = mul_reduce(acc, f.value, field);
  return acc;
}

nlohmann::json LiftCoefficient::to_json() const {
  nlohmann::json loc = nlohmann::json::array();
  for (const auto& f : local) {
    loc.push_back({{"p", f.p}, {"kind", f.kind}, {"value", value_json(f.value)}, {"source", f.source}});
  }
  return {{"B", B.to_json()},
          {"det", to_string(det)},
          {"value", value.to_string()},
          {"value_numeric", format_complex(value.numeric, 30)},
          {"breakdown", {{"c_det", value_json(c_det)}, {"power", value_json(power)}, {"local", loc}}}};
}

LiftCoefficient lift_coefficient(const JordanElement& B, const CoeffContext& ctx, const SiegelProvider& provider) {
  const RankInfo rk = is_positive_rank(B);
  if (!rk.positive_definite) throw DomainError("lift_coefficient: B must be positive definite");
  if (!B.is_integral()) throw DomainError("lift_coefficient: B must be integral");
  const AlphaField& field = ctx.field();
  LiftCoefficient out;
  out.B = B;
  out.det = B.det();
  const auto n = static_cast<std::uint64_t>(out.det.get_num().get_ui());
  out.c_det = c_value(ctx, n);

  const int k = ctx.weight();
  ExactValue pw(1);
  for (const auto& [p, e] : factorize(n)) pw *= ExactValue::prime_power_half(p, static_cast<long>(e) * (k + 8));
  out.power = Value::from_exact(pw, field);

  std::set<std::uint64_t> primes;
  for (const auto& [p, e] : factorize(n)) primes.insert(p);
  for (const auto& [p, e] : factorize(static_cast<std::uint64_t>(ctx.record().level))) primes.insert(p);
  for (std::uint64_t p : primes) {
    LocalFactor f;
    f.p = p;
    if (ctx.in_S(p)) {
      f.kind = "steinberg";
      f.value = whittaker_steinberg(B, p, provider, &f.source);
    } else {
      f.kind = "unramified";
      f.value = whittaker_unramified(B, p, ctx.mu_local(p), provider, field, &f.source);
    }
    out.local.push_back(std::move(f));
  }
  out.value = out.breakdown_product(field);
  return out;
}

nlohmann::json LiftTableEntry::to_json() const {
  if (coeff) return coeff->to_json();
  nlohmann::json j{{"B", B.to_json()}, {"det", to_string(B.det())}, {"error", error}};
  if (missing) j["missing"] = {{"p", missing->first}, {"key", missing->second}};
  return j;
}

bool LiftTable::partial() const {
  return std::any_of(entries.begin(), entries.end(), [](const LiftTableEntry& e) { return !e.coeff; });
}

std::vector<std::string> LiftTable::missing_keys() const {
  std::set<std::string> keys;
  for (const auto& e : entries) {
    if (e.missing) keys.insert("(" + std::to_string(e.missing->first) + ", " + e.missing->second + ")");
  }
  return {keys.begin(), keys.end()};
}

LiftTable lift_table(long det_bound, long trace_bound, const CoeffContext& ctx, const SiegelProvider& provider) {
  LiftTable t;
  for (auto& B : enumerate_positive(det_bound, trace_bound)) {
    LiftTableEntry e;
    e.B = B;
    try {
      e.coeff = lift_coefficient(B, ctx, provider);
    } catch (const SiegelUnavailable& ex) {
      e.error = ex.what();
      e.missing = std::make_pair(ex.prime(), ex.key());
    } catch (const std::exception& ex) {
      e.error = ex.what();
    }
    t.entries.push_back(std::move(e));
  }
  return t;
}

EquivarianceReport equivariance_check(const Hermitian2& X, const Rational& r, const OctPair& x,
                                      const CoeffContext& ctx, const SiegelProvider& provider) {
  EquivarianceReport rep;
  const LiftCoefficient base = lift_coefficient(block(X, r), ctx, provider);
  const LiftCoefficient moved = lift_coefficient(act_translation_v1(x, X, r), ctx, provider);
  const Real tol = agreement_tolerance();
  const AlphaField& field = ctx.field();
  if (base.det != moved.det) {
    rep.detail = "determinant changed: " + to_string(base.det) + " -> " + to_string(moved.det);
    return rep;
  }
  if (base.local.size() != moved.local.size()) {
    rep.detail = "local factor sets differ";
    return rep;
  }
  for (std::size_t i = 0; i < base.local.size(); ++i) {
    if (!values_agree(base.local[i].value, moved.local[i].value, field, tol)) {
      rep.detail = "local factor at p = " + std::to_string(base.local[i].p) + " differs: " +
                   base.local[i].value.to_string() + " vs " + moved.local[i].value.to_string();
      return rep;
    }
  }
  if (!values_agree(base.value, moved.value, field, tol)) {
    rep.detail = "values differ: " + base.value.to_string() + " vs " + moved.value.to_string();
    return rep;
  }
  rep.equal = true;
  rep.detail = "equal: " + base.value.to_string();
  return rep;
}

}  // namespace e7lift
