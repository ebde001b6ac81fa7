#include "e7lift/octonion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "e7lift/lattice.hpp"

namespace e7lift {

namespace {

struct Table {
  int sign[8][8]{};
  int index[8][8]{};
  Table() {
    for (int i = 0; i < 8; ++i) {
      sign[0][i] = sign[i][0] = 1;
      index[0][i] = index[i][0] = i;
    }
    for (int i = 1; i < 8; ++i) {
      sign[i][i] = -1;
      index[i][i] = 0;
    }
    for (int i = 1; i <= 7; ++i) {
      const int a = i;
      const int b = i % 7 + 1;
      const int c = (i + 2) % 7 + 1;
      const int cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
      for (const auto& t : cyc) {
        sign[t[0]][t[1]] = 1;
        index[t[0]][t[1]] = t[2];
        sign[t[1]][t[0]] = -1;
        index[t[1]][t[0]] = t[2];
      }
    }
  }
};

const Table& table() {
  static const Table t;
  return t;
}

}  // namespace

Octonion Octonion::real(const Rational& r) {
  Octonion x;
  x.c[0] = r;
  return x;
}

Octonion Octonion::unit(int i) {
  if (i < 0 || i > 7) throw std::out_of_range("octonion unit index");
  Octonion x;
  x.c[i] = 1;
  return x;
}

Octonion Octonion::conj() const {
  Octonion x = *this;
  for (int i = 1; i < 8; ++i) x.c[i] = -x.c[i];
  return x;
}

Rational Octonion::norm() const {
  Rational s(0);
  for (const auto& v : c) s += v * v;
  return s;
}

bool Octonion::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; });
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (int i = 0; i < 8; ++i) c[i] += o.c[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (int i = 0; i < 8; ++i) c[i] -= o.c[i];
  return *this;
}

Octonion& Octonion::operator*=(const Rational& s) {
  for (auto& v : c) v *= s;
  return *this;
}

Octonion Octonion::operator-() const {
  Octonion x = *this;
  for (auto& v : x.c) v = -v;
  return x;
}

Octonion operator*(const Octonion& a, const Octonion& b) {
  const Table& t = table();
  Octonion r;
  for (int i = 0; i < 8; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.c[j] == 0) continue;
      if (t.sign[i][j] > 0) {
        r.c[t.index[i][j]] += a.c[i] * b.c[j];
      } else {
        r.c[t.index[i][j]] -= a.c[i] * b.c[j];
      }
    }
  }
  return r;
}

Octonion oct_mul(const Octonion& x, const Octonion& y) { return x * y; }

Rational trace3(const Octonion& x, const Octonion& y, const Octonion& z) { return ((x * y) * z).trace(); }

std::vector<std::string> Octonion::to_strings() const {
  std::vector<std::string> out;
  out.reserve(8);
  for (const auto& v : c) out.push_back(e7lift::to_string(v));
  return out;
}

Octonion Octonion::from_strings(const std::vector<std::string>& s) {
  if (s.size() != 8) throw std::invalid_argument("octonion needs 8 coordinates");
  Octonion x;
  for (int i = 0; i < 8; ++i) x.c[i] = parse_rational(s[i]);
  return x;
}

std::string Octonion::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 8; ++i) os << (i ? ", " : "") << c[i].get_str();
  os << ")";
  return os.str();
}

// --- order -------------------------------------------------------------------

OctonionOrder::OctonionOrder(const std::array<Octonion, 8>& basis) : basis_(basis) {
  RationalMatrix m(8, std::vector<Rational>(8));
  for (int k = 0; k < 8; ++k) {
    for (int j = 0; j < 8; ++j) m[k][j] = basis_[j].c[k];
  }
  const Rational det = determinant(m);
  if (det == 0) throw std::invalid_argument("order basis is singular");
  const RationalMatrix inv = inverse(m);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) inverse_[i][j] = inv[i][j];
  }
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      Rational s(0);
      for (int k = 0; k < 8; ++k) s += basis_[i].c[k] * basis_[j].c[k];
      gram_[i][j] = s;
    }
  }
  if (!contains(Octonion::real(Rational(1)))) throw std::invalid_argument("order does not contain 1");
  for (const auto& x : basis_) {
    if (!contains(x.conj())) throw std::invalid_argument("order not closed under conjugation");
    for (const auto& y : basis_) {
      if (!contains(x * y)) {
        throw std::invalid_argument("order not closed under multiplication: " + x.to_string() + " * " +
                                    y.to_string());
      }
    }
  }
  // trace form 2 x.y has Gram determinant 2^8 det^2
  if (det * det * 256 != 1) throw std::invalid_argument("order lattice is not unimodular for the trace form");
}

bool OctonionOrder::contains(const Octonion& x) const {
  for (int i = 0; i < 8; ++i) {
    Rational s(0);
    for (int j = 0; j < 8; ++j) {
      if (x.c[j] != 0) s += inverse_[i][j] * x.c[j];
    }
    if (!is_integer(s)) return false;
  }
  return true;
}

std::array<Integer, 8> OctonionOrder::coordinates(const Octonion& x) const {
  std::array<Integer, 8> out;
  for (int i = 0; i < 8; ++i) {
    Rational s(0);
    for (int j = 0; j < 8; ++j) s += inverse_[i][j] * x.c[j];
    if (!is_integer(s)) throw std::invalid_argument("octonion not in order: " + x.to_string());
    out[i] = s.get_num();
  }
  return out;
}

Octonion OctonionOrder::from_coordinates(const std::array<long, 8>& v) const {
  Octonion x;
  for (int i = 0; i < 8; ++i) {
    if (v[i] != 0) x += basis_[i] * Rational(v[i]);
  }
  return x;
}

std::vector<Octonion> OctonionOrder::elements_of_norm_at_most(const Rational& n) const {
  RationalMatrix g(8, std::vector<Rational>(8));
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) g[i][j] = gram_[i][j];
  }
  std::vector<Octonion> out;
  for_each_short_vector(g, n, [&](const std::vector<long>& v, const Rational&) {
    std::array<long, 8> a{};
    std::copy(v.begin(), v.end(), a.begin());
    out.push_back(from_coordinates(a));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Octonion> OctonionOrder::units() const {
  std::vector<Octonion> out;
  for (auto& x : elements_of_norm_at_most(Rational(1))) {
    if (x.norm() == 1) out.push_back(std::move(x));
  }
  return out;
}

namespace {

using Word = unsigned;  // bitmask over coordinates 0..7

std::vector<int> word_support(Word w) {
  std::vector<int> s;
  for (int i = 0; i < 8; ++i) {
    if (w >> i & 1U) s.push_back(i);
  }
  return s;
}

bool in_code_lattice(const Octonion& x, const std::vector<Word>& code) {
  Word odd = 0;
  for (int i = 0; i < 8; ++i) {
    const Rational d = 2 * x.c[i];
    if (!is_integer(d)) return false;
    if (mpz_odd_p(d.get_num_mpz_t())) odd |= 1U << i;
  }
  return std::find(code.begin(), code.end(), odd) != code.end();
}

Octonion half_word(Word w) {
  Octonion x;
  for (int i = 0; i < 8; ++i) {
    if (w >> i & 1U) x.c[i] = Rational(1, 2);
  }
  return x;
}

std::array<Octonion, 8> basis_from_code(const std::vector<Word>& code) {
  // reduced row echelon generators over GF(2)
  std::vector<Word> rows;
  for (Word w : code) {
    Word r = w;
    for (Word b : rows) {
      const int piv = __builtin_ctz(b);
      if (r >> piv & 1U) r ^= b;
    }
    if (r == 0) continue;
    const int piv = __builtin_ctz(r);
    for (auto& b : rows) {
      if (b >> piv & 1U) b ^= r;
    }
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end(), [](Word a, Word b) { return __builtin_ctz(a) < __builtin_ctz(b); });
  Word pivots = 0;
  for (Word b : rows) pivots |= 1U << __builtin_ctz(b);
  std::array<Octonion, 8> basis;
  std::size_t k = 0;
  for (Word b : rows) basis[k++] = half_word(b);
  for (int j = 0; j < 8; ++j) {
    if (!(pivots >> j & 1U)) basis[k++] = Octonion::unit(j);
  }
  return basis;
}

OctonionOrder build_maximal() {
  std::vector<Word> weight4;
  for (Word w = 0; w < 256; ++w) {
    if (__builtin_popcount(w) == 4) weight4.push_back(w);
  }
  std::vector<std::vector<std::vector<int>>> keys;
  std::vector<std::vector<Word>> codes;
  for (std::size_t i = 0; i < weight4.size(); ++i) {
    for (std::size_t j = i + 1; j < weight4.size(); ++j) {
      for (std::size_t k = j + 1; k < weight4.size(); ++k) {
        std::vector<Word> span{0};
        for (Word g : {Word{255}, weight4[i], weight4[j], weight4[k]}) {
          const std::size_t m = span.size();
          for (std::size_t t = 0; t < m; ++t) {
            const Word s = span[t] ^ g;
            if (std::find(span.begin(), span.end(), s) == span.end()) span.push_back(s);
          }
        }
        if (span.size() != 16) continue;
        if (!std::all_of(span.begin(), span.end(), [](Word w) { return __builtin_popcount(w) % 4 == 0; })) {
          continue;
        }
        std::sort(span.begin(), span.end());
        if (std::find(codes.begin(), codes.end(), span) != codes.end()) continue;
        std::vector<std::vector<int>> key;
        for (Word w : span) key.push_back(word_support(w));
        std::sort(key.begin(), key.end());
        codes.push_back(span);
        keys.push_back(std::move(key));
      }
    }
  }
  std::vector<std::size_t> order(codes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  for (std::size_t idx : order) {
    const auto& code = codes[idx];
    std::vector<Octonion> gens;
    for (int i = 0; i < 8; ++i) gens.push_back(Octonion::unit(i));
    for (Word w : code) {
      if (__builtin_popcount(w) == 4) gens.push_back(half_word(w));
    }
    bool closed = true;
    for (const auto& x : gens) {
      for (const auto& y : gens) {
        if (!in_code_lattice(x * y, code)) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) return OctonionOrder(basis_from_code(code));
  }
  throw std::logic_error("no multiplicatively closed Hamming code found");
}

}  // namespace

const OctonionOrder& OctonionOrder::maximal() {
  static const OctonionOrder order = build_maximal();
  return order;
}

}  // namespace e7lift
