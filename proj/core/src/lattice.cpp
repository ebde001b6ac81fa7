#include "e7lift/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace e7lift {

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
    }
  }
  return det;
}

RationalMatrix inverse(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular matrix");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = m[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      m[col][k] /= d;
      inv[col][k] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[col][k];
        inv[r][k] -= f * inv[col][k];
      }
    }
  }
  return inv;
}

namespace {

struct Enumerator {
  std::size_t n;
  std::vector<Rational> d;                 // diagonal of the LDL^T form
  std::vector<std::vector<Rational>> mu;   // mu[j][i], j > i
  const std::function<void(const std::vector<long>&, const Rational&)>* visit;
  Rational bound;
  std::vector<long> x;

  // q(x) = sum_i d_i (x_i + sum_{j>i} mu[j][i] x_j)^2
  void recurse(std::size_t level, const Rational& used) {
    const std::size_t i = level - 1;
    Rational shift(0);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (x[j] != 0) shift += mu[j][i] * x[j];
    }
    const Rational rem = bound - used;
    const double center = -shift.get_d();
    const double radius = std::sqrt(std::max(0.0, Rational(rem / d[i]).get_d()));
    // double bounds widened by a margin; every candidate is re-checked exactly
    const double margin = 1e-9 * (1.0 + std::fabs(center) + radius);
    const long lo = static_cast<long>(std::ceil(center - radius - margin));
    const long hi = static_cast<long>(std::floor(center + radius + margin));
    for (long v = lo; v <= hi; ++v) {
      Rational t = shift + v;
      Rational contrib = d[i] * t * t;
      if (contrib > rem) continue;
      x[i] = v;
      Rational total = used + contrib;
      if (i == 0) {
        (*visit)(x, total);
      } else {
        recurse(i, total);
      }
    }
    x[i] = 0;
  }
};

}  // namespace

void for_each_short_vector(const RationalMatrix& gram, const Rational& bound,
                           const std::function<void(const std::vector<long>&, const Rational&)>& visit) {
  const std::size_t n = gram.size();
  if (bound < 0) return;
  if (n == 0) {
    visit({}, Rational(0));
    return;
  }
  Enumerator e;
  e.n = n;
  e.d.assign(n, Rational(0));
  e.mu.assign(n, std::vector<Rational>(n, Rational(0)));
  // LDL^T with L unit upper in the index order used by the recursion
  RationalMatrix a = gram;
  for (std::size_t i = 0; i < n; ++i) {
    e.d[i] = a[i][i];
    if (e.d[i] <= 0) throw std::domain_error("Gram matrix is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) e.mu[j][i] = a[i][j] / e.d[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = i + 1; k < n; ++k) a[j][k] -= e.mu[j][i] * a[i][k];
    }
  }
  // q(x) = sum_i d_i (x_i + sum_{j>i} mu[j][i] x_j)^2 holds for this elimination order
  e.visit = &visit;
  e.bound = bound;
  e.x.assign(n, 0);
  e.recurse(n, Rational(0));
}

std::vector<std::vector<long>> short_vectors(const RationalMatrix& gram, const Rational& bound) {
  std::vector<std::vector<long>> out;
  for_each_short_vector(gram, bound, [&](const std::vector<long>& v, const Rational&) { out.push_back(v); });
  return out;
}

}  // namespace e7lift
