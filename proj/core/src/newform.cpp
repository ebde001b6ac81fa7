#include "e7lift/newform.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "e7lift/errors.hpp"

namespace e7lift {

namespace {

std::pair<long, long> reduce_root(long num, long den) {
  if (den <= 0) throw std::invalid_argument("root of unity needs a positive denominator");
  num = ((num % den) + den) % den;
  const long g = std::gcd(num, den);
  return g == 0 ? std::make_pair(0L, 1L) : std::make_pair(num / g, den / g);
}

Complex parse_complex(const nlohmann::json& j) {
  auto real_of = [](const nlohmann::json& v) -> Real {
    if (v.is_number()) return Real(v.get<double>());
    const std::string s = v.get<std::string>();
    if (s.find_first_of(".eE") == std::string::npos) return to_real(parse_rational(s));
    return Real(s);
  };
  if (j.is_array() && j.size() == 2) return {real_of(j[0]), real_of(j[1])};
  return Complex(real_of(j));
}

nlohmann::json complex_json(const Complex& z) {
  return nlohmann::json::array({format_real(z.re, 40), format_real(z.im, 40)});
}

std::uint64_t parse_prime_key(const std::string& key) {
  const long v = std::stol(key);
  if (v < 2 || !is_prime(static_cast<std::uint64_t>(v))) throw std::invalid_argument("not a prime key: " + key);
  return static_cast<std::uint64_t>(v);
}

}  // namespace

std::optional<std::pair<long, long>> DirichletCharacter::at(long n) const {
  if (modulus == 1) return std::make_pair(0L, 1L);
  const long r = ((n % modulus) + modulus) % modulus;
  if (std::gcd(r, modulus) != 1) return std::nullopt;
  auto it = values.find(r);
  if (it == values.end()) throw DataError("character value missing for residue " + std::to_string(r));
  return it->second;
}

std::optional<Rational> DirichletCharacter::rational_at(long n) const {
  auto v = at(n);
  if (!v) return std::nullopt;
  if (v->first == 0) return Rational(1);
  if (v->second == 2) return Rational(-1);
  return std::nullopt;
}

Complex DirichletCharacter::complex_at(long n) const {
  auto v = at(n);
  if (!v) return Complex(Real(0));
  return Complex::root_of_unity(v->first, v->second);
}

nlohmann::json DirichletCharacter::to_json() const {
  if (is_trivial()) return "trivial";
  nlohmann::json vals = nlohmann::json::object();
  for (const auto& [r, v] : values) vals[std::to_string(r)] = {v.first, v.second};
  return {{"modulus", modulus}, {"values", vals}};
}

DirichletCharacter DirichletCharacter::from_json(const nlohmann::json& j) {
  DirichletCharacter chi;
  if (j.is_null() || (j.is_string() && j.get<std::string>() == "trivial")) return chi;
  if (!j.is_object()) throw DataError("character must be \"trivial\" or an object");
  chi.modulus = j.at("modulus").get<long>();
  if (chi.modulus < 1) throw DataError("character modulus must be positive");
  if (chi.modulus == 1) return chi;
  for (const auto& [key, val] : j.at("values").items()) {
    const long r = std::stol(key);
    std::pair<long, long> v;
    if (val.is_array()) {
      v = reduce_root(val.at(0).get<long>(), val.at(1).get<long>());
    } else {
      const std::string s = val.is_string() ? val.get<std::string>() : std::to_string(val.get<long>());
      if (s == "1") {
        v = {0, 1};
      } else if (s == "-1") {
        v = {1, 2};
      } else {
        throw DataError("character value must be 1, -1 or [num, den]: " + s);
      }
    }
    chi.values[((r % chi.modulus) + chi.modulus) % chi.modulus] = v;
  }
  for (long r = 1; r < chi.modulus; ++r) {
    if (std::gcd(r, chi.modulus) == 1 && !chi.values.count(r)) {
      throw DataError("character table incomplete: residue " + std::to_string(r));
    }
  }
  return chi;
}

const Coefficient& NewformRecord::a(std::size_t n) const {
  if (n < 1 || n > coefficients.size()) {
    throw std::out_of_range("a_" + std::to_string(n) + " not available (have " +
                            std::to_string(coefficients.size()) + ")");
  }
  return coefficients[n - 1];
}

bool NewformRecord::all_exact() const {
  for (const auto& c : coefficients) {
    if (!c.exact) return false;
  }
  return true;
}

bool NewformRecord::square_free_at(std::uint64_t p) const {
  return level % static_cast<long>(p * p) != 0;
}

nlohmann::json NewformRecord::to_json() const {
  nlohmann::json j;
  j["level"] = level;
  j["weight"] = weight;
  j["character"] = character.to_json();
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : coefficients) {
    coeffs.push_back(c.exact ? to_string(*c.exact) : format_real(c.numeric, 40));
  }
  j["coefficients"] = coeffs;
  if (precision_bits) j["precision_bits"] = *precision_bits;
  nlohmann::json al = nlohmann::json::object();
  for (const auto& [p, e] : atkin_lehner) al[std::to_string(p)] = e;
  j["atkin_lehner"] = al;
  if (!ramified.empty()) {
    nlohmann::json rj = nlohmann::json::object();
    for (const auto& [p, d] : ramified) {
      nlohmann::json e{{"ramified", d.ramified},
                       {"alpha", complex_json(d.alpha)},
                       {"beta", complex_json(d.beta)},
                       {"sign", d.ramified_sign}};
      nlohmann::json mu = nlohmann::json::object();
      for (const auto& [q, v] : d.mu_at) mu[std::to_string(q)] = complex_json(v);
      e["mu_at"] = mu;
      rj[std::to_string(p)] = e;
    }
    j["ramified"] = rj;
  }
  return j;
}

NewformRecord parse_newform(const nlohmann::json& j) {
  NewformRecord rec;
  std::vector<std::string> errors;
  try {
    rec.level = j.at("level").get<long>();
    rec.weight = j.at("weight").get<int>();
    rec.character = DirichletCharacter::from_json(j.contains("character") ? j.at("character") : nlohmann::json());
    if (j.contains("precision_bits")) rec.precision_bits = j.at("precision_bits").get<unsigned>();
    for (const auto& v : j.at("coefficients")) {
      Coefficient c;
      const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
      if (s.find_first_of(".eE") == std::string::npos) {
        c.exact = parse_rational(s);
        c.numeric = to_real(*c.exact);
      } else {
        if (!rec.precision_bits) throw DataError("decimal coefficient without precision_bits: " + s);
        c.numeric = Real(s);
      }
      rec.coefficients.push_back(std::move(c));
    }
    if (j.contains("atkin_lehner")) {
      for (const auto& [key, val] : j.at("atkin_lehner").items()) rec.atkin_lehner[parse_prime_key(key)] = val.get<int>();
    }
    if (j.contains("ramified")) {
      for (const auto& [key, val] : j.at("ramified").items()) {
        RamifiedData d;
        d.ramified = val.at("ramified").get<int>();
        d.alpha = parse_complex(val.at("alpha"));
        d.beta = parse_complex(val.at("beta"));
        d.ramified_sign = val.value("sign", 1);
        if (val.contains("mu_at")) {
          for (const auto& [q, z] : val.at("mu_at").items()) d.mu_at[parse_prime_key(q)] = parse_complex(z);
        }
        if (d.ramified != 1 && d.ramified != 2) errors.push_back("ramified must be 1 or 2 at p = " + key);
        rec.ramified[parse_prime_key(key)] = std::move(d);
      }
    }
  } catch (const DataError&) {
    throw;
  } catch (const std::exception& e) {
    throw DataError(std::string("malformed newform record: ") + e.what());
  }

  if (rec.level < 1) errors.push_back("level must be positive");
  if (rec.weight < 2) errors.push_back("weight must be at least 2");
  if (rec.coefficients.empty()) {
    errors.push_back("no coefficients");
  } else if (!rec.coefficients[0].exact || *rec.coefficients[0].exact != 1) {
    errors.push_back("a_1 must equal 1");
  }
  if (rec.level % rec.character.modulus != 0) errors.push_back("character modulus must divide the level");
  if (!rec.character.is_trivial()) {
    auto one = rec.character.at(1);
    if (!one || one->first != 0) errors.push_back("character must satisfy chi(1) = 1");
  }
  {
    auto minus = rec.character.rational_at(-1);
    const Rational want = rec.weight % 2 == 0 ? Rational(1) : Rational(-1);
    if (!minus || *minus != want) {
      errors.push_back("parity violation: chi(-1) != (-1)^weight for weight " + std::to_string(rec.weight));
    }
  }

  for (const auto& [p, e] : rec.atkin_lehner) {
    if (rec.level % static_cast<long>(p) != 0) errors.push_back("Atkin-Lehner sign at p = " + std::to_string(p) + " not dividing N");
    if (e != 1 && e != -1) errors.push_back("Atkin-Lehner sign must be +-1 at p = " + std::to_string(p));
  }

  if (rec.level >= 1) {
    for (const auto& [p, mult] : factorize(static_cast<std::uint64_t>(rec.level))) {
      const std::string ps = std::to_string(p);
      if (mult > 1) {
        rec.warnings.push_back("p = " + ps + " divides the level to order " + std::to_string(mult) +
                               "; local data there is unsupported");
        continue;
      }
      if (rec.character.ramified_at(p)) {
        if (!rec.ramified.count(p)) {
          rec.warnings.push_back("no ramified principal series data at p = " + ps);
        }
        continue;
      }
      auto it = rec.atkin_lehner.find(p);
      if (it == rec.atkin_lehner.end()) {
        errors.push_back("missing Atkin-Lehner sign at p = " + ps);
        continue;
      }
      if (p > rec.max_n()) continue;
      const Coefficient& ap = rec.coefficients[p - 1];
      if (rec.character.is_trivial() && rec.weight % 2 == 0) {
        const Rational want = -it->second * pow(Rational(static_cast<unsigned long>(p)), rec.weight / 2 - 1);
        if (!ap.exact || *ap.exact != want) {
          errors.push_back("a_p / epsilon_p mismatch at p = " + ps + ": expected a_p = " + to_string(want));
        }
      } else {
        const Real want = pow(Real(p), rec.weight - 2);
        const Real got = ap.numeric * ap.numeric;
        if (abs(got - want) > want * precision_epsilon(rec.precision_bits.value_or(128))) {
          errors.push_back("|a_p|^2 != p^(weight-2) at p = " + ps);
        }
      }
    }
  }

  // Ramanujan bound, reported only
  for (std::uint64_t p = 2; p <= rec.max_n(); ++p) {
    if (!is_prime(p) || rec.level % static_cast<long>(p) == 0) continue;
    const Coefficient& ap = rec.coefficients[p - 1];
    bool ok;
    if (ap.exact) {
      ok = *ap.exact * *ap.exact <= 4 * pow(Rational(static_cast<unsigned long>(p)), rec.weight - 1);
    } else {
      ok = ap.numeric * ap.numeric <= 4 * pow(Real(p), rec.weight - 1) * (1 + precision_epsilon(rec.precision_bits.value_or(128)));
    }
    if (!ok) rec.warnings.push_back("Ramanujan bound fails at p = " + std::to_string(p));
  }

  if (!errors.empty()) {
    std::ostringstream os;
    os << "newform record rejected:";
    for (const auto& e : errors) os << "\n  - " << e;
    throw DataError(os.str());
  }
  return rec;
}

NewformRecord load_newform(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open newform file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw DataError("malformed newform file " + path + ": " + e.what());
  }
  return parse_newform(j);
}

UnramifiedPS satake(const NewformRecord& rec, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("satake: " + std::to_string(p) + " is not prime");
  if (rec.level % static_cast<long>(p) == 0) {
    throw DomainError("satake: p = " + std::to_string(p) + " divides the level; use classify_local");
  }
  const Coefficient& ap = rec.a(p);
  UnramifiedPS out;
  const Real scale = pow(Real(p), -Real(rec.weight - 1) / 2);
  const Complex t(ap.numeric * scale);
  const Complex chi = rec.character.complex_at(static_cast<long>(p));
  const Complex disc = sqrt(t * t - Complex(Real(4)) * chi);
  Complex r1 = (t + disc) * Complex(Real(0.5));
  Complex r2 = (t - disc) * Complex(Real(0.5));
  const Real eps = precision_epsilon(static_cast<unsigned>(Real::default_precision() * 3.3219));
  auto lower_half = [&](const Complex& z) { return z.im < -eps * (1 + z.abs()); };
  const bool h1 = lower_half(r1);
  const bool h2 = lower_half(r2);
  if (h1 != h2 ? h1 : r1.re > r2.re) std::swap(r1, r2);
  out.alpha = r1;
  out.beta = r2;
  if (ap.exact) out.trace = ExactValue(*ap.exact) * ExactValue::prime_power_half(p, -(rec.weight - 1));
  out.chi = rec.character.rational_at(static_cast<long>(p));
  return out;
}

LocalType classify_local(const NewformRecord& rec, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("classify_local: " + std::to_string(p) + " is not prime");
  if (rec.level % static_cast<long>(p) != 0) return satake(rec, p);
  if (!rec.square_free_at(p)) {
    throw UnsupportedInput("p = " + std::to_string(p) + " divides the level " + std::to_string(rec.level) +
                           " to order > 1; only square-free levels are supported at ramified primes");
  }
  if (rec.character.ramified_at(p)) {
    auto it = rec.ramified.find(p);
    if (it == rec.ramified.end()) {
      throw UnsupportedInput("ramified principal series at p = " + std::to_string(p) + " needs explicit data");
    }
    return RamifiedPS{it->second};
  }
  return Steinberg{rec.atkin_lehner.at(p)};
}

std::string local_type_name(const LocalType& t) {
  if (std::holds_alternative<UnramifiedPS>(t)) return "unramified";
  if (std::holds_alternative<Steinberg>(t)) return "steinberg";
  return "ramified_ps";
}

}  // namespace e7lift
