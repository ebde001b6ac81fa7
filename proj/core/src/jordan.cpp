#include "e7lift/jordan.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "e7lift/errors.hpp"
#include "e7lift/lattice.hpp"

namespace e7lift {

JordanElement JordanElement::identity() { return diag(Rational(1), Rational(1), Rational(1)); }

JordanElement JordanElement::diag(const Rational& a, const Rational& b, const Rational& c) {
  JordanElement B;
  B.a = a;
  B.b = b;
  B.c = c;
  return B;
}

Rational JordanElement::det() const {
  return a * b * c - a * c1.norm() - b * c2.norm() - c * c3.norm() + trace3(c1, c2, c3);
}

JordanElement JordanElement::sharp() const {
  JordanElement S;
  S.a = b * c - c1.norm();
  S.b = c * a - c2.norm();
  S.c = a * b - c3.norm();
  S.c1 = (c2 * c3).conj() - a * c1;
  S.c2 = (c3 * c1).conj() - b * c2;
  S.c3 = (c1 * c2).conj() - c * c3;
  return S;
}

bool JordanElement::is_zero() const { return a == 0 && b == 0 && c == 0 && c1.is_zero() && c2.is_zero() && c3.is_zero(); }

bool JordanElement::is_integral(const OctonionOrder& order) const {
  return is_integer(a) && is_integer(b) && is_integer(c) && order.contains(c1) && order.contains(c2) &&
         order.contains(c3);
}

JordanElement& JordanElement::operator+=(const JordanElement& o) {
  a += o.a;
  b += o.b;
  c += o.c;
  c1 += o.c1;
  c2 += o.c2;
  c3 += o.c3;
  return *this;
}

JordanElement& JordanElement::operator-=(const JordanElement& o) {
  a -= o.a;
  b -= o.b;
  c -= o.c;
  c1 -= o.c1;
  c2 -= o.c2;
  c3 -= o.c3;
  return *this;
}

JordanElement& JordanElement::operator*=(const Rational& s) {
  a *= s;
  b *= s;
  c *= s;
  c1 *= s;
  c2 *= s;
  c3 *= s;
  return *this;
}

nlohmann::json JordanElement::to_json() const {
  return {{"diag", {e7lift::to_string(a), e7lift::to_string(b), e7lift::to_string(c)}},
          {"c1", c1.to_strings()},
          {"c2", c2.to_strings()},
          {"c3", c3.to_strings()}};
}

JordanElement JordanElement::from_json(const nlohmann::json& j) {
  auto scalar = [](const nlohmann::json& v) {
    return v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long>());
  };
  auto oct = [&](const char* key) {
    if (!j.contains(key)) return Octonion{};
    const auto& arr = j.at(key);
    if (!arr.is_array() || arr.size() != 8) throw std::invalid_argument(std::string("bad octonion field ") + key);
    Octonion x;
    for (int i = 0; i < 8; ++i) x.c[i] = scalar(arr[i]);
    return x;
  };
  const auto& d = j.at("diag");
  if (!d.is_array() || d.size() != 3) throw std::invalid_argument("diag must hold 3 entries");
  JordanElement B;
  B.a = scalar(d[0]);
  B.b = scalar(d[1]);
  B.c = scalar(d[2]);
  B.c1 = oct("c1");
  B.c2 = oct("c2");
  B.c3 = oct("c3");
  return B;
}

std::string JordanElement::to_string() const { return to_json().dump(); }

Rational jordan_det(const JordanElement& B) { return B.det(); }

Rational jordan_pair(const JordanElement& X, const JordanElement& Y) {
  return X.a * Y.a + X.b * Y.b + X.c * Y.c + (X.c1 * Y.c1.conj()).trace() + (X.c2 * Y.c2.conj()).trace() +
         (X.c3 * Y.c3.conj()).trace();
}

JordanElement jordan_cross(const JordanElement& X, const JordanElement& Y) {
  JordanElement s = (X + Y).sharp() - X.sharp() - Y.sharp();
  s *= Rational(1, 2);
  return s;
}

RankInfo is_positive_rank(const JordanElement& B) {
  RankInfo r;
  if (B.is_zero()) return r;
  const Rational d = B.det();
  if (B.sharp().is_zero()) {
    r.rank = 1;
  } else if (d == 0) {
    r.rank = 2;
  } else {
    r.rank = 3;
  }
  r.positive_definite = B.a > 0 && B.a * B.b - B.c3.norm() > 0 && d > 0;
  return r;
}

// --- slices --------------------------------------------------------------------

Rational pair2(const Hermitian2& S, const Hermitian2& T) {
  return S.a * T.a + S.b * T.b + (S.c3 * T.c3.conj()).trace();
}

Hermitian2 sigma(const OctPair& x, const OctPair& y) {
  Hermitian2 m;
  m.a = (x[0] * y[0].conj()).trace();
  m.b = (x[1] * y[1].conj()).trace();
  m.c3 = x[0] * y[1].conj() + y[0] * x[1].conj();
  return m;
}

Rational sigma_S(const Hermitian2& S, const OctPair& x, const OctPair& y) {
  return pair2(S, sigma(x, y)) / 2;
}

JordanElement block(const Hermitian2& X, const Rational& r) {
  JordanElement B;
  B.a = X.a;
  B.b = X.b;
  B.c = r;
  B.c3 = X.c3;
  return B;
}

Hermitian2 upper_block(const JordanElement& B) { return {B.a, B.b, B.c3}; }

JordanElement act_translation_v1(const OctPair& x, const Hermitian2& X, const Rational& r) {
  const Octonion v1 = X.a * x[0] + X.c3 * x[1];
  const Octonion v2 = X.c3.conj() * x[0] + X.b * x[1];
  JordanElement B = block(X, r + sigma_S(X, x, x));
  B.c1 = v2;
  B.c2 = v1.conj();
  return B;
}

JordanElement translate_up(const OctPair& x, const JordanElement& B) {
  const Octonion v1 = B.c2.conj();
  const Octonion v2 = B.c1;
  const Octonion n1 = B.a * x[0] + B.c3 * x[1] + v1;
  const Octonion n2 = B.c3.conj() * x[0] + B.b * x[1] + v2;
  JordanElement out = B;
  out.c = B.c + sigma_S(upper_block(B), x, x) + (x[0].conj() * v1).trace() + (x[1].conj() * v2).trace();
  out.c1 = n2;
  out.c2 = n1.conj();
  return out;
}

JordanElement translate_down(const OctPair& x, const JordanElement& B) {
  const Octonion v1 = B.c2.conj();
  const Octonion v2 = B.c1;
  JordanElement out = B;
  out.a = B.a + (x[0] * v1.conj()).trace() + B.c * x[0].norm();
  out.b = B.b + (x[1] * v2.conj()).trace() + B.c * x[1].norm();
  out.c3 = B.c3 + x[0] * v2.conj() + v1 * x[1].conj() + B.c * (x[0] * x[1].conj());
  out.c1 = v2 + B.c * x[1];
  out.c2 = (v1 + B.c * x[0]).conj();
  return out;
}

// --- Freudenthal ---------------------------------------------------------------

FreudenthalQuadruple& FreudenthalQuadruple::operator+=(const FreudenthalQuadruple& o) {
  X += o.X;
  xi += o.xi;
  Xp += o.Xp;
  xip += o.xip;
  return *this;
}

FreudenthalQuadruple& FreudenthalQuadruple::operator*=(const Rational& s) {
  X *= s;
  xi *= s;
  Xp *= s;
  xip *= s;
  return *this;
}

FreudenthalQuadruple act_h(const Rational& a, const FreudenthalQuadruple& q) {
  if (a == 0) throw DomainError("act_h: a must be non-zero");
  const JordanElement e3 = JordanElement::diag(Rational(0), Rational(0), Rational(1));
  const Rational inv = Rational(1) / a;
  FreudenthalQuadruple out;
  out.X = q.X + Rational(4) * (inv - 1) * jordan_cross(e3, jordan_cross(e3, q.X)) +
          (a - 1) * jordan_pair(e3, q.X) * e3;
  out.xi = a * q.xi;
  out.Xp = q.Xp + (inv - 1) * jordan_pair(e3, q.Xp) * e3 +
           Rational(4) * (a - 1) * jordan_cross(e3, jordan_cross(e3, q.Xp));
  out.xip = inv * q.xip;
  return out;
}

// --- enumeration ---------------------------------------------------------------

std::vector<JordanElement> enumerate_positive(long det_bound, long trace_bound, const OctonionOrder& order) {
  std::vector<JordanElement> out;
  if (det_bound < 1 || trace_bound < 3) return out;
  const long max_ab = ((trace_bound - 1) / 2) * ((trace_bound - 1) - (trace_bound - 1) / 2);
  const std::vector<Octonion> small = order.elements_of_norm_at_most(Rational(max_ab - 1));

  std::array<OctPair, 16> basis16;
  for (int k = 0; k < 8; ++k) {
    basis16[k] = {order.basis()[k], Octonion{}};
    basis16[8 + k] = {Octonion{}, order.basis()[k]};
  }

  for (long a = 1; a <= trace_bound - 2; ++a) {
    for (long b = 1; a + b <= trace_bound - 1; ++b) {
      const long cmax = trace_bound - a - b;
      for (const auto& c3 : small) {
        const Rational n3 = c3.norm();
        if (n3 >= a * b) continue;
        const Hermitian2 X{Rational(a), Rational(b), c3};
        const Rational dX = X.det();
        // q(v) = sigma_X(x, x) with X x = v
        auto solve = [&](const OctPair& v) -> OctPair {
          return {(X.b * v[0] - c3 * v[1]) * (Rational(1) / dX), (X.a * v[1] - c3.conj() * v[0]) * (Rational(1) / dX)};
        };
        auto q = [&](const OctPair& v) { return sigma_S(X, solve(v), solve(v)); };
        RationalMatrix gram(16, std::vector<Rational>(16));
        for (int i = 0; i < 16; ++i) gram[i][i] = q(basis16[i]);
        for (int i = 0; i < 16; ++i) {
          for (int j = i + 1; j < 16; ++j) {
            const OctPair s{basis16[i][0] + basis16[j][0], basis16[i][1] + basis16[j][1]};
            gram[i][j] = gram[j][i] = (q(s) - gram[i][i] - gram[j][j]) / 2;
          }
        }
        const Rational bound = Rational(cmax) - Rational(1) / dX;
        for_each_short_vector(gram, bound, [&](const std::vector<long>& v, const Rational& qv) {
          // det B = dX (c - q(v)) in [1, det_bound]
          const Rational lo = qv + Rational(1) / dX;
          const Rational hi = qv + Rational(det_bound) / dX;
          mpz_class cl;
          mpz_cdiv_q(cl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
          mpz_class ch;
          mpz_fdiv_q(ch.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
          if (ch > cmax) ch = cmax;
          if (cl > ch) return;
          OctPair w;
          for (int i = 0; i < 16; ++i) {
            if (v[i] != 0) w[i / 8] += basis16[i][i / 8] * Rational(v[i]);
          }
          for (mpz_class c = cl; c <= ch; ++c) {
            JordanElement B;
            B.a = a;
            B.b = b;
            B.c = Rational(c);
            B.c3 = c3;
            B.c1 = w[1];
            B.c2 = w[0].conj();
            out.push_back(std::move(B));
          }
        });
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace e7lift
