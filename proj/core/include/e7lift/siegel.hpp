#pragma once

// Local Siegel series data: f_B with f_B(p^{9-s}) = gamma(s) b(B, s), gamma(s) = prod_{j<3} (1 - p^{4j-s})^{-1}.
// Closed forms of f_B are not built in; they come from validated table files.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "e7lift/exact.hpp"
#include "e7lift/jordan.hpp"
#include "e7lift/polynomial.hpp"

namespace e7lift {

struct SiegelPolynomial {
  std::uint64_t p = 2;
  long d = 0;
  std::vector<Rational> coeffs;  // ascending, a_0 .. a_d

  Polynomial poly() const { return Polynomial(coeffs); }
};

/// gamma(s) in t = p^{-s}
struct GammaFactor {
  std::uint64_t p;
  /// prod_j (1 - p^{4j} t), i.e. gamma^{-1}
  Polynomial inverse() const;
  /// gamma at an integer s > 8
  Rational at(long s) const;
  std::string to_string() const;
};
GammaFactor gamma_p(std::uint64_t p);

/// b(B, s) as a polynomial in t = p^{-s}: gamma^{-1}(t) f(p^9 t)
Polynomial siegel_series_b(const SiegelPolynomial& f);

struct ValidationReport {
  struct Check {
    std::string name;
    bool passed;
    std::string detail;
  };
  std::vector<Check> checks;
  bool ok() const;
  std::vector<std::string> failed() const;
  std::string to_string() const;
};

/// Checks monic, degree, integral, coefficient_bound (|a_i| <= p^{11d}) and
/// value_bound (p^{-9d/2} |f(p^{9-s})| <= p^{15d/2} at s = 10, 12, 15, 20).
ValidationReport validate(const SiegelPolynomial& poly, long detB_val);

/// Local invariant of B at p: (v1, v2 - v1, d - v2) sorted, v1 / v2 the minimal
/// valuations of the entries of B / B#.
std::array<long, 3> valuation_triple(const JordanElement& B, std::uint64_t p,
                                     const OctonionOrder& order = OctonionOrder::maximal());

class SiegelProvider {
 public:
  using Key = std::variant<long, std::array<long, 3>>;
  struct Entry {
    SiegelPolynomial poly;
    std::optional<Rational> steinberg;
    std::string source;  // "file:line"
  };
  struct Lookup {
    const Entry* entry = nullptr;  // null for the built-in d = 0 rule
    long d = 0;
    std::string source;
  };

  SiegelProvider() = default;
  /// Parses a table file; every entry must pass validate or DataError is thrown.
  void load_file(const std::string& path);
  void load_text(const std::string& text, const std::string& name);
  void add(std::uint64_t p, Key key, Entry e);

  std::size_t size() const { return table_.size(); }
  /// Valuation-triple entries take precedence over degree entries.
  Lookup lookup(const JordanElement& B, std::uint64_t p) const;

 private:
  std::map<std::pair<std::uint64_t, Key>, Entry> table_;
};

std::string key_string(const SiegelProvider::Key& k);

/// |det B|_p^{9/2} f_{B,p}(mu)
Value whittaker_unramified(const JordanElement& B, std::uint64_t p, const Value& mu, const SiegelProvider& provider,
                           const AlphaField& field, std::string* source = nullptr);
Value whittaker_steinberg(const JordanElement& B, std::uint64_t p, const SiegelProvider& provider,
                          std::string* source = nullptr);

}  // namespace e7lift
