#include "e7lift/siegel.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "e7lift/errors.hpp"

namespace e7lift {

namespace {

Rational rat(std::uint64_t p) { return Rational(static_cast<unsigned long>(p)); }

}  // namespace

Polynomial GammaFactor::inverse() const {
  Polynomial out = Polynomial::constant(Rational(1));
  for (int j = 0; j < 3; ++j) out *= Polynomial({Rational(1), -pow(rat(p), 4 * j)});
  return out;
}

Rational GammaFactor::at(long s) const {
  Rational g(1);
  for (int j = 0; j < 3; ++j) g /= 1 - pow(rat(p), 4 * j - s);
  return g;
}

std::string GammaFactor::to_string() const {
  std::ostringstream os;
  for (int j = 0; j < 3; ++j) os << "(1 - " << pow(rat(p), 4 * j).get_str() << "*t)^-1" << (j < 2 ? " " : "");
  os << "  [t = " << p << "^-s]";
  return os.str();
}

GammaFactor gamma_p(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("gamma_p: " + std::to_string(p) + " is not prime");
  return {p};
}

Polynomial siegel_series_b(const SiegelPolynomial& f) {
  return gamma_p(f.p).inverse() * f.poly().scale_argument(pow(rat(f.p), 9));
}

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::vector<std::string> ValidationReport::failed() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

ValidationReport validate(const SiegelPolynomial& poly, long detB_val) {
  ValidationReport r;
  const auto& a = poly.coeffs;
  const long deg = static_cast<long>(a.size()) - 1;
  {
    const bool ok = !a.empty() && a.back() == 1;
    r.checks.push_back({"monic", ok, ok ? "" : "leading coefficient " + (a.empty() ? std::string("missing") : a.back().get_str())});
  }
  {
    const bool ok = deg == detB_val && poly.d == detB_val;
    r.checks.push_back({"degree", ok,
                        ok ? "" : "degree " + std::to_string(deg) + ", expected " + std::to_string(detB_val)});
  }
  {
    std::string bad;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!is_integer(a[i])) bad += (bad.empty() ? "" : ", ") + ("a_" + std::to_string(i));
    }
    r.checks.push_back({"integral", bad.empty(), bad.empty() ? "" : "non-integral " + bad});
  }
  const long d = std::max(0L, detB_val);
  {
    const Rational lim = pow(rat(poly.p), 11 * d);
    std::string bad;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (abs(a[i]) > lim) bad += (bad.empty() ? "" : ", ") + ("a_" + std::to_string(i));
    }
    r.checks.push_back({"coefficient_bound", bad.empty(),
                        bad.empty() ? "" : bad + " exceed p^" + std::to_string(11 * d)});
  }
  {
    // p^{-9d/2} |f(p^{9-s})| <= p^{15d/2}  <=>  |f(p^{9-s})| <= p^{12d}
    const Polynomial f = poly.poly();
    const Rational lim = pow(rat(poly.p), 12 * d);
    std::string bad;
    for (long s : {10L, 12L, 15L, 20L}) {
      if (abs(f(pow(rat(poly.p), 9 - s))) > lim) bad += (bad.empty() ? "s=" : ",") + std::to_string(s);
    }
    r.checks.push_back({"value_bound", bad.empty(), bad.empty() ? "" : "bound exceeded at " + bad});
  }
  return r;
}

std::array<long, 3> valuation_triple(const JordanElement& B, std::uint64_t p, const OctonionOrder& order) {
  const Rational det = B.det();
  if (det == 0) throw DomainError("valuation_triple: det(B) = 0");
  auto min_val = [&](const JordanElement& X) {
    long v = -1;
    auto take = [&](const Rational& q) {
      if (q == 0) return;
      const long w = valuation(q, p);
      if (v < 0 || w < v) v = w;
    };
    take(X.a);
    take(X.b);
    take(X.c);
    for (const Octonion* x : {&X.c1, &X.c2, &X.c3}) {
      for (const auto& z : order.coordinates(*x)) take(Rational(z));
    }
    return v;
  };
  const long d = valuation(det, p);
  const long v1 = min_val(B);
  const long v2 = min_val(B.sharp());
  std::array<long, 3> t{v1, v2 - v1, d - v2};
  std::sort(t.begin(), t.end());
  return t;
}

std::string key_string(const SiegelProvider::Key& k) {
  if (const auto* d = std::get_if<long>(&k)) return "d=" + std::to_string(*d);
  const auto& t = std::get<std::array<long, 3>>(k);
  return "triple=" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

void SiegelProvider::add(std::uint64_t p, Key key, Entry e) {
  const long d = std::holds_alternative<long>(key)
                     ? std::get<long>(key)
                     : std::get<std::array<long, 3>>(key)[0] + std::get<std::array<long, 3>>(key)[1] +
                           std::get<std::array<long, 3>>(key)[2];
  e.poly.p = p;
  e.poly.d = d;
  const ValidationReport rep = validate(e.poly, d);
  if (!rep.ok()) {
    std::string names;
    for (const auto& n : rep.failed()) names += (names.empty() ? "" : ", ") + n;
    throw DataError(e.source + ": siegel entry (p=" + std::to_string(p) + ", " + key_string(key) +
                    ") rejected: " + names);
  }
  if (e.steinberg && d == 0 && *e.steinberg != 1) {
    throw DataError(e.source + ": steinberg value at d = 0 must be 1");
  }
  auto [it, inserted] = table_.emplace(std::make_pair(p, key), std::move(e));
  if (!inserted) {
    throw DataError(it->second.source + ": duplicate siegel key (p=" + std::to_string(p) + ", " + key_string(key) + ")");
  }
}

void SiegelProvider::load_text(const std::string& text, const std::string& name) {
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = name + ":" + std::to_string(lineno);
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    try {
      if (tok.size() < 6 || tok[0] != "p" || tok[2] != "key" || tok[4] != "coeffs") {
        throw DataError("expected `p <p> key <d|a,b,c> coeffs <...> [steinberg <value>]`");
      }
      const long pv = std::stol(tok[1]);
      if (pv < 2 || !is_prime(static_cast<std::uint64_t>(pv))) throw DataError("not a prime: " + tok[1]);
      Key key;
      if (tok[3].find(',') != std::string::npos) {
        std::array<long, 3> t{};
        std::istringstream ks(tok[3]);
        std::string part;
        int i = 0;
        while (std::getline(ks, part, ',')) {
          if (i >= 3) throw DataError("valuation triple needs 3 entries");
          t[i++] = std::stol(part);
        }
        if (i != 3) throw DataError("valuation triple needs 3 entries");
        if (!std::is_sorted(t.begin(), t.end()) || t[0] < 0) throw DataError("valuation triple must be ascending and non-negative");
        key = t;
      } else {
        key = std::stol(tok[3]);
      }
      Entry e;
      e.source = where;
      std::size_t i = 5;
      for (; i < tok.size() && tok[i] != "steinberg"; ++i) {
        if (tok[i].find('/') != std::string::npos) throw DataError("coefficients must be integers: " + tok[i]);
        e.poly.coeffs.push_back(parse_rational(tok[i]));
      }
      if (i < tok.size()) {
        if (i + 2 != tok.size()) throw DataError("steinberg takes exactly one value");
        e.steinberg = parse_rational(tok[i + 1]);
      }
      add(static_cast<std::uint64_t>(pv), key, std::move(e));
    } catch (const DataError& ex) {
      const std::string msg = ex.what();
      throw DataError(msg.rfind(where, 0) == 0 ? msg : where + ": " + msg);
    } catch (const std::exception& ex) {
      throw DataError(where + ": " + ex.what());
    }
  }
}

void SiegelProvider::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open siegel table: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  load_text(ss.str(), path);
}

SiegelProvider::Lookup SiegelProvider::lookup(const JordanElement& B, std::uint64_t p) const {
  const long d = valuation(B.det(), p);
  if (d == 0) return {nullptr, 0, "builtin"};
  const auto triple = valuation_triple(B, p);
  if (auto it = table_.find({p, Key{triple}}); it != table_.end()) return {&it->second, d, it->second.source};
  if (auto it = table_.find({p, Key{d}}); it != table_.end()) return {&it->second, d, it->second.source};
  throw SiegelUnavailable(p, "d=" + std::to_string(d),
                          "siegel polynomial unavailable for (p=" + std::to_string(p) + ", d=" + std::to_string(d) +
                              "; " + key_string(Key{triple}) + ")");
}

Value whittaker_unramified(const JordanElement& B, std::uint64_t p, const Value& mu, const SiegelProvider& provider,
                           const AlphaField& field, std::string* source) {
  const auto lk = provider.lookup(B, p);
  if (source) *source = lk.source;
  if (!lk.entry) return Value::from_rational(Rational(1));
  const auto& a = lk.entry->poly.coeffs;
  Value out;
  if (mu.exact) {
    ExactValue acc;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = (acc * *mu.exact + ExactValue(*it)).reduced(field);
    acc = (acc * ExactValue::prime_power_half(p, -9 * lk.d)).reduced(field);
    out = Value::from_exact(acc, field);
  } else {
    out = Value::from_numeric(lk.entry->poly.poly()(mu.numeric) * Complex(pow(Real(p), -Real(9 * lk.d) / 2)));
  }
  return out;
}

Value whittaker_steinberg(const JordanElement& B, std::uint64_t p, const SiegelProvider& provider, std::string* source) {
  const auto lk = provider.lookup(B, p);
  if (source) *source = lk.source;
  if (!lk.entry) return Value::from_rational(Rational(1));
  if (!lk.entry->steinberg) {
    throw SiegelUnavailable(p, "d=" + std::to_string(lk.d),
                            "steinberg value unavailable for (p=" + std::to_string(p) + ", d=" + std::to_string(lk.d) + ")");
  }
  return Value::from_rational(*lk.entry->steinberg);
}

}  // namespace e7lift
