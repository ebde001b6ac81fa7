#include "e7lift/coefficients.hpp"

#include <sstream>

#include "e7lift/errors.hpp"

namespace e7lift {

namespace {

Rational rat(std::uint64_t p) { return Rational(static_cast<unsigned long>(p)); }

Real working_epsilon() {
  return precision_epsilon(static_cast<unsigned>(Real::default_precision() * 3.3219));
}

}  // namespace

CoeffContext::CoeffContext(NewformRecord rec) : rec_(std::move(rec)) {
  for (std::uint64_t p = 2; p <= rec_.max_n(); ++p) {
    if (!is_prime(p) || rec_.level % static_cast<long>(p) == 0) continue;
    UnramifiedPS s = satake(rec_, p);
    if (s.trace && s.chi) field_.add(p, {*s.trace, *s.chi, s.alpha});
    cache_.emplace(p, std::move(s));
  }
}

const LocalType& CoeffContext::local_type(std::uint64_t p) const {
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(p);
    if (it != cache_.end()) return it->second;
  }
  LocalType t = classify_local(rec_, p);
  std::unique_lock lock(mutex_);
  return cache_.emplace(p, std::move(t)).first->second;
}

bool CoeffContext::in_S(std::uint64_t p) const { return rec_.level % static_cast<long>(p) == 0; }

Value CoeffContext::mu_local(std::uint64_t p) const {
  const LocalType& t = local_type(p);
  if (const auto* u = std::get_if<UnramifiedPS>(&t)) {
    if (field_.contains(p)) {
      return Value::from_exact((ExactValue(*u->chi) * ExactValue::alpha(p, -2)).reduced(field_), field_);
    }
    return Value::from_numeric(u->beta / u->alpha);
  }
  if (std::holds_alternative<Steinberg>(t)) return Value::from_rational(rat(p));
  const auto& r = std::get<RamifiedPS>(t).data;
  return Value::from_numeric(r.beta / r.alpha);
}

Value CoeffContext::mu_f_inverse(std::uint64_t p) const {
  Value out;
  const LocalType& t = local_type(p);
  if (const auto* u = std::get_if<UnramifiedPS>(&t)) {
    if (field_.contains(p)) {
      out = Value::from_exact((ExactValue(Rational(1) / *u->chi) * ExactValue::alpha(p, 2)).reduced(field_), field_);
    } else {
      out = Value::from_numeric(u->alpha / u->beta);
    }
  } else if (std::holds_alternative<Steinberg>(t)) {
    out = Value::from_rational(Rational(1) / rat(p));
  } else {
    const auto& r = std::get<RamifiedPS>(t).data;
    out = Value::from_numeric(r.alpha / r.beta);
  }
  // ramified components elsewhere contribute their unit values
  for (const auto& [q, data] : rec_.ramified) {
    if (q == p) continue;
    auto it = data.mu_at.find(p);
    if (it == data.mu_at.end()) {
      throw UnsupportedInput("mu_" + std::to_string(q) + "(" + std::to_string(p) + ") not supplied by the record");
    }
    out = out * Value::from_numeric(Complex(Real(1)) / it->second);
  }
  return out;
}

Value c_prime(const CoeffContext& ctx, std::uint64_t p) {
  const int l = ctx.weight();
  const LocalType& t = ctx.local_type(p);
  const AlphaField& f = ctx.field();
  if (const auto* u = std::get_if<UnramifiedPS>(&t)) {
    if (f.contains(p)) return Value::from_exact(ExactValue::alpha(p, 1) * ExactValue::prime_power_half(p, -l), f);
    return Value::from_numeric(u->alpha * Complex(pow(Real(p), -Real(l) / 2)));
  }
  if (const auto* s = std::get_if<Steinberg>(&t)) {
    const ExactValue v = ExactValue(Rational(s->epsilon) * (1 - Rational(1) / rat(p))) *
                         ExactValue::prime_power_half(p, -(l - 1));
    return Value::from_exact(v, f);
  }
  const auto& r = std::get<RamifiedPS>(t).data;
  const Real pp(p);
  if (r.ramified == 2) {
    const Complex v = Complex(Real(1)) / r.beta *
                      Complex(pow(pp, -Real(l + 1) / 2) / (1 - 1 / pp) * r.ramified_sign);
    return Value::from_numeric(v);
  }
  return Value::from_numeric(r.beta * Complex(pow(pp, -Real(l) / 2)));
}

Value c_value(const CoeffContext& ctx, const Rational& n) {
  if (n <= 0) throw DomainError("c_value: n must be positive");
  if (!is_integer(n)) return Value::from_rational(Rational(0));
  if (!n.get_num().fits_ulong_p()) throw std::invalid_argument("c_value: n too large");
  return c_value(ctx, static_cast<std::uint64_t>(n.get_num().get_ui()));
}

Value c_value(const CoeffContext& ctx, std::uint64_t n) {
  if (n == 0) throw DomainError("c_value: n must be positive");
  Value c = Value::from_rational(Rational(1));
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2) c = c * c_prime(ctx, p);
    if (e / 2) {
      const Value mi = ctx.mu_f_inverse(p);
      for (int k = 0; k < e / 2; ++k) c = mul_reduce(c, mi, ctx.field());
    }
  }
  if (c.exact) c = Value::from_exact(c.exact->reduced(ctx.field()), ctx.field());
  return c;
}

Value sl2_whittaker_value(const CoeffContext& ctx, std::uint64_t p, LocalVector vec) {
  const LocalType& t = ctx.local_type(p);
  const auto* u = std::get_if<UnramifiedPS>(&t);
  if (!u) throw UnsupportedInput("sl2_whittaker_value: p = " + std::to_string(p) + " is not unramified");
  const AlphaField& f = ctx.field();
  const bool exact = f.contains(p);
  if (vec == LocalVector::newform) {
    if (exact) {
      const ExactValue beta = *u->trace - ExactValue::alpha(p, 1);
      const ExactValue v = ExactValue::prime_power_half(p, -1) * (ExactValue(1) + beta * ExactValue::alpha(p, -1));
      return Value::from_exact(v.reduced(f), f);
    }
    return Value::from_numeric(Complex(pow(Real(p), Real(-0.5))) * (Complex(Real(1)) + u->beta / u->alpha));
  }
  const Coefficient& ap = ctx.record().a(p);
  const bool vanishing = ap.exact ? *ap.exact == 0 : abs(ap.numeric) < working_epsilon();
  if (!vanishing) throw UnsupportedInput("stabilized vector value is only available when a_p = 0");
  if (exact) {
    const ExactValue beta = *u->trace - ExactValue::alpha(p, 1);
    return Value::from_exact((beta * beta * ExactValue::prime_power_half(p, -1)).reduced(f), f);
  }
  return Value::from_numeric(u->beta * u->beta * Complex(pow(Real(p), Real(-0.5))));
}

BoundCheck check_bound(const CoeffContext& ctx, std::uint64_t n) {
  BoundCheck r;
  r.n = n;
  r.c = c_value(ctx, n);
  const int l = ctx.weight();
  const auto fac = factorize(n);
  for (const auto& [p, e] : fac) {
    if (e % 2) r.m *= p;
  }
  r.bound = pow(Real(r.m), -Real(l - 1) / 2);

  // |alpha_p| = 1 is certified when chi(p) = 1 and a_p^2 <= 4 p^{l-1}
  bool certifiable = true;
  Rational abs2(1);
  for (const auto& [p, e] : fac) {
    const LocalType& t = ctx.local_type(p);
    if (const auto* u = std::get_if<UnramifiedPS>(&t)) {
      const Coefficient& ap = ctx.record().a(p);
      if (!ap.exact || !u->chi || *u->chi != 1 ||
          *ap.exact * *ap.exact > 4 * pow(rat(p), l - 1)) {
        certifiable = false;
        break;
      }
      if (e % 2) abs2 *= pow(rat(p), -l);
    } else if (std::holds_alternative<Steinberg>(t)) {
      if (e % 2) {
        const Rational q = 1 - Rational(1) / rat(p);
        abs2 *= pow(rat(p), -(l - 1)) * q * q;
      }
      abs2 *= pow(rat(p), -2 * (e / 2));
    } else {
      certifiable = false;
      break;
    }
  }
  if (certifiable && ctx.record().ramified.empty()) {
    r.certified = true;
    r.pass = abs2 <= pow(Rational(static_cast<unsigned long>(r.m)), -(l - 1));
  } else {
    r.pass = r.c.numeric.abs() <= r.bound * (1 + working_epsilon());
  }
  return r;
}

Value reconstruct_coefficient(const CoeffContext& ctx, std::uint64_t n) {
  if (!is_square_free(n)) throw DomainError("reconstruct_coefficient: n must be square-free");
  Value acc = Value::from_rational(pow(Rational(static_cast<unsigned long>(n)), ctx.weight()));
  acc = mul_reduce(acc, c_value(ctx, n), ctx.field());
  for (const auto& [p, e] : factorize(n)) {
    (void)e;
    if (ctx.in_S(p)) throw DomainError("reconstruct_coefficient: n must be coprime to the level");
    acc = mul_reduce(acc, sl2_whittaker_value(ctx, p), ctx.field());
  }
  return acc;
}

std::string coefficient_table_csv(const CoeffContext& ctx, std::uint64_t n_max) {
  std::ostringstream os;
  os << "n,c_n,bound,pass\n";
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const BoundCheck b = check_bound(ctx, n);
    os << n << ",\"" << b.c.to_string(25) << "\"," << format_real(b.bound, 20) << ","
       << (b.pass ? "pass" : "fail") << "\n";
  }
  return os.str();
}

}  // namespace e7lift
