#pragma once

// Exact rational linear algebra and Fincke-Pohst enumeration of short vectors.

#include <functional>
#include <vector>

#include "e7lift/numeric.hpp"

namespace e7lift {

using RationalMatrix = std::vector<std::vector<Rational>>;

Rational determinant(RationalMatrix m);
/// Throws std::domain_error on singular input.
RationalMatrix inverse(RationalMatrix m);

/// Calls visit(v, q(v)) for every integer vector v with v^T G v <= bound, G
/// positive definite. Visiting order is deterministic (last coordinate outermost,
/// each coordinate ascending).
void for_each_short_vector(const RationalMatrix& gram, const Rational& bound,
                           const std::function<void(const std::vector<long>&, const Rational&)>& visit);

std::vector<std::vector<long>> short_vectors(const RationalMatrix& gram, const Rational& bound);

}  // namespace e7lift
