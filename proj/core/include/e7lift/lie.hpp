#pragma once

// E7 root data in 8 coordinates modulo the all-ones vector, with
// alpha_i = e_i - e_{i+1} (i <= 6), alpha_7 = e_5 + e_6 + e_7 + e_8.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "e7lift/numeric.hpp"

namespace e7lift {

class WeightVector {
 public:
  WeightVector() = default;
  /// Canonicalizes by subtracting the coordinate mean.
  explicit WeightVector(const std::array<Rational, 8>& raw);
  static WeightVector e(int i);  // 1-based
  static WeightVector zero() { return WeightVector(); }

  const std::array<Rational, 8>& coords() const { return c_; }
  /// Pairing with Gram (e_i, e_i) = 7/8, (e_i, e_j) = -1/8.
  Rational pair(const WeightVector& o) const;
  bool is_zero() const;

  WeightVector& operator+=(const WeightVector& o);
  WeightVector& operator-=(const WeightVector& o);
  friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
  friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
  friend WeightVector operator*(const Rational& s, WeightVector a);
  WeightVector operator-() const;
  bool operator==(const WeightVector& o) const { return c_ == o.c_; }
  bool operator<(const WeightVector& o) const;
  std::string to_string() const;
  nlohmann::json to_json() const;

 private:
  std::array<Rational, 8> c_{};
};

/// constant + s * linear
struct SymbolicWeight {
  WeightVector constant;
  WeightVector linear;
  WeightVector at(const Rational& s) const { return constant + s * linear; }
};

struct RootSystem {
  std::array<WeightVector, 7> simple;
  std::vector<WeightVector> positive;
  std::vector<WeightVector> roots;
  std::array<std::array<int, 7>, 7> cartan{};
  /// bourbaki[i] = index (0-based) of the simple root playing the role of
  /// Bourbaki's beta_{i+1}; chain 1-3-4-5-6-7 with 2 attached to 4
  std::array<int, 7> bourbaki{};
  std::array<WeightVector, 7> fundamental;  // dual to simple
  WeightVector beta(int i) const { return simple[bourbaki[i - 1]]; }  // 1-based
};

const RootSystem& build_e7();

WeightVector reflect(const WeightVector& v, const WeightVector& root);
/// Weyl orbit of sum_j labels_j omega_j, via integer Dynkin labels.
std::vector<WeightVector> weyl_orbit(const std::array<long, 7>& dynkin_labels);
std::size_t weyl_orbit_size(const std::array<long, 7>& dynkin_labels);

std::vector<WeightVector> weights_adjoint();
std::vector<WeightVector> weights_56();

SymbolicWeight satake_siegel();
SymbolicWeight cap_parameter();

/// Multiset of (a, c) encoding prod (1 - alpha^a p^c p^{-s}).
struct EulerFactorSpec {
  std::map<std::pair<long, long>, long> mult;
  long total() const;
  void add(long a, long c, long m = 1) { mult[{a, c}] += m; }
  EulerFactorSpec negated() const;
  bool operator==(const EulerFactorSpec& o) const { return mult == o.mult; }
  std::vector<std::string> lines() const;
};

class LieError : public std::runtime_error {
 public:
  LieError(const std::string& what, WeightVector w) : std::runtime_error(what), weight_(std::move(w)) {}
  const WeightVector& weight() const { return weight_; }

 private:
  WeightVector weight_;
};

/// Pairs <lambda, w> = a s + c; throws LieError if a or c is not an integer.
EulerFactorSpec euler_factor(const std::vector<WeightVector>& weights, const SymbolicWeight& lambda);
EulerFactorSpec expected_spec(const std::string& which);

struct CompareReport {
  bool equal = false;
  struct Diff {
    long a, c;
    long computed, expected;
  };
  std::vector<Diff> diff;
  std::optional<Rational> central_shift;
  nlohmann::json to_json(const std::string& check) const;
};

CompareReport compare(const EulerFactorSpec& computed, const EulerFactorSpec& expected);
/// Shifts c by the unique rational making the computed multiset symmetric under
/// (a, c) -> (-a, -c), then compares; the shift is reported.
CompareReport compare_with_central_shift(const EulerFactorSpec& computed, const EulerFactorSpec& expected);

WeightVector dominant_representative(const WeightVector& v);
WeightVector dominant_representative(const SymbolicWeight& v, const Rational& s);
bool weyl_orbit_equal(const SymbolicWeight& v1, const SymbolicWeight& v2, const std::vector<Rational>& samples);

/// Numeric Euler factor prod (1 - alpha^a p^{c-s}) at given alpha, p, s.
Complex evaluate_euler_factor(const EulerFactorSpec& spec, const Complex& alpha, std::uint64_t p, const Complex& s);

}  // namespace e7lift
