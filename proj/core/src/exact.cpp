#include "e7lift/exact.hpp"

#include <sstream>
#include <stdexcept>

namespace e7lift {

namespace {

ExactValue::Monomial merge(const ExactValue::Monomial& a, const ExactValue::Monomial& b) {
  ExactValue::Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].p < b[j].p)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].p < a[i].p) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].p, a[i].root + b[j].root, a[i].alpha + b[j].alpha});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ExactValue::ExactValue(const Rational& q) {
  if (q != 0) terms_.emplace(Monomial{}, q);
}

ExactValue ExactValue::prime_power_half(std::uint64_t p, long k) {
  ExactValue v;
  v.add_term({{p, static_cast<int>(k % 2), 0}}, pow(Rational(static_cast<unsigned long>(p)), k / 2));
  return v;
}

ExactValue ExactValue::alpha(std::uint64_t p, long e) {
  ExactValue v;
  v.add_term({{p, 0, e}}, Rational(1));
  return v;
}

void ExactValue::add_term(Monomial m, Rational c) {
  Monomial clean;
  clean.reserve(m.size());
  for (auto f : m) {
    // sqrt(p)^{2q+r} = p^q sqrt(p)^r with r in {0,1}
    int r = ((f.root % 2) + 2) % 2;
    int q = (f.root - r) / 2;
    if (q != 0) c *= pow(Rational(static_cast<unsigned long>(f.p)), q);
    f.root = r;
    if (f.root != 0 || f.alpha != 0) clean.push_back(f);
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(clean), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool ExactValue::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ExactValue::rational_value() const {
  if (!is_rational()) throw std::logic_error("ExactValue is not rational: " + to_string());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

bool ExactValue::has_alpha() const {
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m) {
      if (f.alpha != 0) return true;
    }
  }
  return false;
}

ExactValue& ExactValue::operator+=(const ExactValue& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExactValue& ExactValue::operator-=(const ExactValue& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExactValue& ExactValue::operator*=(const ExactValue& o) {
  ExactValue out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) out.add_term(merge(ma, mb), ca * cb);
  }
  *this = std::move(out);
  return *this;
}

ExactValue ExactValue::operator-() const {
  ExactValue out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

ExactValue ExactValue::reduced(const AlphaField& field) const {
  // alpha_p^e = A + B alpha_p, built by stepping e from 0
  std::map<std::pair<std::uint64_t, long>, ExactValue> cache;
  auto power = [&](std::uint64_t p, long e) -> const ExactValue& {
    auto key = std::make_pair(p, e);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const auto& rel = field.at(p);
    const ExactValue chi(rel.chi);
    const ExactValue chi_inv(Rational(1) / rel.chi);
    ExactValue a(1);
    ExactValue b;
    if (e > 0) {
      for (long k = 0; k < e; ++k) {
        ExactValue na = -(chi * b);
        ExactValue nb = a + rel.trace * b;
        a = std::move(na);
        b = std::move(nb);
      }
    } else {
      for (long k = 0; k > e; --k) {
        ExactValue na = chi_inv * rel.trace * a + b;
        ExactValue nb = -(chi_inv * a);
        a = std::move(na);
        b = std::move(nb);
      }
    }
    return cache.emplace(key, a + b * ExactValue::alpha(p, 1)).first->second;
  };

  ExactValue out;
  for (const auto& [m, c] : terms_) {
    ExactValue term(c);
    Monomial plain;
    for (const auto& f : m) {
      if (f.alpha == 0 || f.alpha == 1) {
        plain.push_back(f);
        continue;
      }
      plain.push_back({f.p, f.root, 0});
      term *= power(f.p, f.alpha);
    }
    ExactValue mono;
    mono.add_term(plain, Rational(1));
    term *= mono;
    // a product of alpha_p (exponent 1) with a reduced power can produce alpha_p^2
    bool again = false;
    for (const auto& [m2, c2] : term.terms_) {
      for (const auto& f : m2) again = again || (f.alpha != 0 && f.alpha != 1);
    }
    out += again ? term.reduced(field) : term;
  }
  return out;
}

Complex ExactValue::evaluate(const AlphaField& field) const {
  Complex sum(Real(0));
  for (const auto& [m, c] : terms_) {
    Complex t(to_real(c));
    for (const auto& f : m) {
      if (f.root) t *= Complex(boost::multiprecision::sqrt(Real(f.p)));
      if (f.alpha) t *= pow(field.at(f.p).root, f.alpha);
    }
    sum += t;
  }
  return sum;
}

std::string ExactValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (m.empty() || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (const auto& f : m) {
      if (f.root) {
        os << (need_star ? "*" : "") << "sqrt(" << f.p << ")";
        need_star = true;
      }
      if (f.alpha) {
        os << (need_star ? "*" : "") << "alpha" << f.p;
        if (f.alpha != 1) os << "^" << f.alpha;
        need_star = true;
      }
    }
  }
  return os.str();
}

void AlphaField::add(std::uint64_t p, Relation rel) {
  if (rel.trace.has_alpha()) throw std::invalid_argument("alpha relation trace must be alpha-free");
  if (rel.chi == 0) throw std::invalid_argument("alpha relation with chi = 0");
  rel_[p] = std::move(rel);
}

const AlphaField::Relation& AlphaField::at(std::uint64_t p) const {
  auto it = rel_.find(p);
  if (it == rel_.end()) throw std::out_of_range("no Satake relation registered for p = " + std::to_string(p));
  return it->second;
}

Value Value::from_rational(const Rational& q) {
  Value v;
  v.exact = ExactValue(q);
  v.numeric = Complex(to_real(q));
  return v;
}

Value Value::from_exact(const ExactValue& x, const AlphaField& field) {
  Value v;
  v.exact = x;
  v.numeric = x.evaluate(field);
  return v;
}

Value Value::from_numeric(const Complex& z) {
  Value v;
  v.numeric = z;
  return v;
}

std::string Value::to_string(int digits) const {
  if (exact) return exact->to_string();
  return format_complex(numeric, digits);
}

Value operator*(const Value& a, const Value& b) {
  Value v;
  if (a.exact && b.exact) v.exact = *a.exact * *b.exact;
  v.numeric = a.numeric * b.numeric;
  return v;
}

Value operator+(const Value& a, const Value& b) {
  Value v;
  if (a.exact && b.exact) v.exact = *a.exact + *b.exact;
  v.numeric = a.numeric + b.numeric;
  return v;
}

Value operator-(const Value& a, const Value& b) {
  Value v;
  if (a.exact && b.exact) v.exact = *a.exact - *b.exact;
  v.numeric = a.numeric - b.numeric;
  return v;
}

Value mul_reduce(const Value& a, const Value& b, const AlphaField& field) {
  Value v = a * b;
  if (v.exact) v.exact = v.exact->reduced(field);
  return v;
}

bool values_agree(const Value& a, const Value& b, const AlphaField& field, const Real& tol) {
  if (a.exact && b.exact) {
    const ExactValue diff = (*a.exact - *b.exact).reduced(field);
    if (diff.is_zero()) return true;
    // distinct square roots of primes are linearly independent over Q
    if (!diff.has_alpha()) return false;
  }
  const Real scale = std::max(a.numeric.abs(), b.numeric.abs());
  if (scale < tol) return true;
  return (a.numeric - b.numeric).abs() / scale <= tol;
}

}  // namespace e7lift
