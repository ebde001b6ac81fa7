#pragma once

// Fourier coefficients of the lift:
//   a(B) = c_{det B} det(B)^{k/2+4} prod_{p | det B, p not in S} w_p(B) prod_{p in S} w^St_p(B).
// Steinberg primes not dividing det B contribute 1.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "e7lift/coefficients.hpp"
#include "e7lift/jordan.hpp"
#include "e7lift/siegel.hpp"

namespace e7lift {

struct LocalFactor {
  std::uint64_t p = 0;
  std::string kind;    // "unramified" or "steinberg"
  Value value;
  std::string source;  // "builtin" or table file:line
};

struct LiftCoefficient {
  JordanElement B;
  Rational det;
  Value value;
  Value c_det;
  Value power;  // det(B)^{k/2+4}
  std::vector<LocalFactor> local;

  /// Recomputes the product of the breakdown.
  Value breakdown_product(const AlphaField& field) const;
  nlohmann::json to_json() const;
};

LiftCoefficient lift_coefficient(const JordanElement& B, const CoeffContext& ctx, const SiegelProvider& provider);

struct LiftTableEntry {
  JordanElement B;
  std::optional<LiftCoefficient> coeff;
  std::string error;
  std::optional<std::pair<std::uint64_t, std::string>> missing;  // (p, key) when a table entry was absent

  nlohmann::json to_json() const;
};

struct LiftTable {
  std::vector<LiftTableEntry> entries;
  bool partial() const;
  /// Sorted, de-duplicated "(p, key)" strings of absent table entries.
  std::vector<std::string> missing_keys() const;
};

LiftTable lift_table(long det_bound, long trace_bound, const CoeffContext& ctx, const SiegelProvider& provider);

struct EquivarianceReport {
  bool equal = false;
  std::string detail;
};

/// Compares the coefficient at X (+) r with the one at its translate R_{r,x}.
EquivarianceReport equivariance_check(const Hermitian2& X, const Rational& r, const OctPair& x,
                                      const CoeffContext& ctx, const SiegelProvider& provider);

}  // namespace e7lift
