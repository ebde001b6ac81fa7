#pragma once

// Elliptic newform records and their local data at each prime.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "e7lift/exact.hpp"

namespace e7lift {

/// A finite-order Dirichlet character given by its values on (Z/m)^x as
/// roots of unity exp(2 pi i num/den).
struct DirichletCharacter {
  long modulus = 1;
  std::map<long, std::pair<long, long>> values;  // residue -> (num, den), reduced

  bool is_trivial() const { return modulus == 1; }
  /// chi(n) as a root of unity (num, den); nullopt when gcd(n, m) > 1
  std::optional<std::pair<long, long>> at(long n) const;
  /// chi(n) when it is +-1, nullopt for non-real values or gcd(n, m) > 1
  std::optional<Rational> rational_at(long n) const;
  Complex complex_at(long n) const;  // 0 when gcd(n, m) > 1
  bool ramified_at(std::uint64_t p) const { return modulus % static_cast<long>(p) == 0; }
  nlohmann::json to_json() const;
  static DirichletCharacter from_json(const nlohmann::json& j);
};

struct Coefficient {
  std::optional<Rational> exact;
  Real numeric;
};

/// User-supplied data for a ramified principal series pi(mu1, mu2) with one
/// unramified and one ramified character.
struct RamifiedData {
  int ramified = 2;              // which of mu1, mu2 is ramified
  Complex alpha;                 // mu1(p^-1)
  Complex beta;                  // mu2(p^-1)
  int ramified_sign = 1;         // mu_{ramified}(-1)
  std::map<std::uint64_t, Complex> mu_at;  // mu_p(q) for primes q != p
};

struct NewformRecord {
  long level = 1;
  int weight = 2;
  DirichletCharacter character;
  std::vector<Coefficient> coefficients;  // a_1 .. a_M at index n-1
  std::optional<unsigned> precision_bits;
  std::map<std::uint64_t, int> atkin_lehner;
  std::map<std::uint64_t, RamifiedData> ramified;
  std::vector<std::string> warnings;  // non-fatal findings (Ramanujan bound reports)

  std::size_t max_n() const { return coefficients.size(); }
  const Coefficient& a(std::size_t n) const;  // throws std::out_of_range
  bool all_exact() const;
  bool square_free_at(std::uint64_t p) const;
  nlohmann::json to_json() const;
};

/// Parses and validates; all invariant violations are collected into one DataError.
NewformRecord load_newform(const std::string& path);
NewformRecord parse_newform(const nlohmann::json& j);

struct UnramifiedPS {
  Complex alpha;
  Complex beta;
  std::optional<ExactValue> trace;  // alpha + beta = a_p p^{-(l-1)/2}
  std::optional<Rational> chi;      // alpha beta
};
struct Steinberg {
  int epsilon = -1;
};
struct RamifiedPS {
  RamifiedData data;
};
using LocalType = std::variant<UnramifiedPS, Steinberg, RamifiedPS>;

/// Roots of X^2 - a_p p^{-(l-1)/2} X + chi(p), imaginary part >= 0 first, then by real part.
UnramifiedPS satake(const NewformRecord& rec, std::uint64_t p);
LocalType classify_local(const NewformRecord& rec, std::uint64_t p);
std::string local_type_name(const LocalType& t);

}  // namespace e7lift
