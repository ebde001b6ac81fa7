#pragma once

// The local constants c_n(f): c_p from the local type at p, extended to all
// positive rationals by c_{a^2 r} = mu_f(a)^{-1} c_r and c_n = 0 off Z_{>0}.
//
// Unramified c_p uses alpha p^{-l/2}; a positive exponent also appears in the
// literature for this case but contradicts the bound |c_p| <= p^{-(l-1)/2}.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "e7lift/exact.hpp"
#include "e7lift/newform.hpp"

namespace e7lift {

class CoeffContext {
 public:
  explicit CoeffContext(NewformRecord rec);

  const NewformRecord& record() const { return rec_; }
  int weight() const { return rec_.weight; }
  const AlphaField& field() const { return field_; }
  /// Cached, safe for concurrent readers.
  const LocalType& local_type(std::uint64_t p) const;
  /// True when p is a Steinberg or ramified principal series prime.
  bool in_S(std::uint64_t p) const;

  /// mu_p(p) = beta / alpha for unramified p.
  Value mu_local(std::uint64_t p) const;
  /// mu_f(p)^{-1} = prod_q mu_q(p)^{-1}
  Value mu_f_inverse(std::uint64_t p) const;

 private:
  NewformRecord rec_;
  AlphaField field_;
  mutable std::shared_mutex mutex_;
  mutable std::map<std::uint64_t, LocalType> cache_;
};

Value c_prime(const CoeffContext& ctx, std::uint64_t p);
Value c_value(const CoeffContext& ctx, const Rational& n);
Value c_value(const CoeffContext& ctx, std::uint64_t n);

enum class LocalVector { newform, stabilized };
/// Local Whittaker value of the SL_2 vector at p.
Value sl2_whittaker_value(const CoeffContext& ctx, std::uint64_t p, LocalVector v = LocalVector::newform);

struct BoundCheck {
  std::uint64_t n = 0;
  Value c;
  std::uint64_t m = 1;       // product of primes with odd exponent in n
  Real bound;                // m^{-(l-1)/2}
  bool pass = false;
  bool certified = false;    // decided by exact rational comparison of |c|^2
};
BoundCheck check_bound(const CoeffContext& ctx, std::uint64_t n);

/// n^l c_n prod_{p | n} w_p for square-free n coprime to the level.
Value reconstruct_coefficient(const CoeffContext& ctx, std::uint64_t n);

/// CSV with columns n, c_n, bound, pass.
std::string coefficient_table_csv(const CoeffContext& ctx, std::uint64_t n_max);

}  // namespace e7lift
