#pragma once

// Independent reference arithmetic for tests: octonions with half-integer
// coordinates stored doubled in int64, the multiplication table rebuilt from
// e_i e_{i+1} = e_{i+3} (indices mod 7), and membership in the maximal order
// read off from its parity code.

#include <array>
#include <cstdint>
#include <vector>

namespace oracle {

using I = std::int64_t;

struct Oct {
  std::array<I, 8> d{};  // 2 * coordinate
};

struct Table {
  int idx[8][8];
  int sgn[8][8];
  Table() {
    for (int i = 0; i < 8; ++i) {
      idx[0][i] = idx[i][0] = i;
      sgn[0][i] = sgn[i][0] = 1;
    }
    for (int i = 1; i < 8; ++i) {
      idx[i][i] = 0;
      sgn[i][i] = -1;
    }
    for (int i = 1; i <= 7; ++i) {
      const int a = i;
      const int b = (i % 7) + 1;
      const int c = ((i + 2) % 7) + 1;
      // (a, b, c) is a quaternion triple: ab = c, bc = a, ca = b
      const int t[3] = {a, b, c};
      for (int k = 0; k < 3; ++k) {
        const int x = t[k], y = t[(k + 1) % 3], z = t[(k + 2) % 3];
        idx[x][y] = z;
        sgn[x][y] = 1;
        idx[y][x] = z;
        sgn[y][x] = -1;
      }
    }
  }
};

inline const Table& table() {
  static const Table t;
  return t;
}

inline Oct mul(const Oct& x, const Oct& y) {
  const auto& t = table();
  std::array<I, 8> acc{};
  for (int i = 0; i < 8; ++i) {
    if (!x.d[i]) continue;
    for (int j = 0; j < 8; ++j) acc[t.idx[i][j]] += t.sgn[i][j] * x.d[i] * y.d[j];
  }
  Oct out;
  for (int k = 0; k < 8; ++k) out.d[k] = acc[k] / 2;  // (2x)(2y) = 4xy, keep 2xy
  return out;
}

inline Oct conj(Oct x) {
  for (int i = 1; i < 8; ++i) x.d[i] = -x.d[i];
  return x;
}

/// 4 N(x)
inline I norm4(const Oct& x) {
  I s = 0;
  for (I v : x.d) s += v * v;
  return s;
}

/// 2 T(x)
inline I trace2(const Oct& x) { return 2 * x.d[0]; }

/// The parity code of the order: span of the half-integer basis supports.
inline bool in_order(const Oct& x) {
  static const std::vector<unsigned> code = [] {
    const unsigned gens[4] = {0b10101001u, 0b11001010u, 0b01101100u, 0b11110000u};
    std::vector<unsigned> c;
    for (unsigned m = 0; m < 16; ++m) {
      unsigned w = 0;
      for (int g = 0; g < 4; ++g) {
        if (m >> g & 1U) w ^= gens[g];
      }
      c.push_back(w);
    }
    return c;
  }();
  unsigned w = 0;
  for (int i = 0; i < 8; ++i) {
    if (x.d[i] & 1) w |= 1U << i;
  }
  for (unsigned c : code) {
    if (c == w) return true;
  }
  return false;
}

/// Box scan: every element with 4N <= 4n.
inline std::vector<Oct> elements_of_norm_at_most(I n) {
  std::vector<Oct> out;
  I r = 0;
  while ((r + 1) * (r + 1) <= 4 * n) ++r;
  Oct x;
  const auto rec = [&](auto&& self, int i, I used) -> void {
    if (i == 8) {
      if (in_order(x)) out.push_back(x);
      return;
    }
    for (I v = -r; v <= r; ++v) {
      if (used + v * v > 4 * n) continue;
      x.d[i] = v;
      self(self, i + 1, used + v * v);
    }
  };
  rec(rec, 0, 0);
  return out;
}

/// Counts positive definite integral B with det <= D and trace <= T by brute force
/// over diagonals and norm-bounded off-diagonal entries.
inline long count_positive(I D, I T) {
  long count = 0;
  std::vector<std::vector<Oct>> by_bound(T * T + 1);
  auto below = [&](I bound) -> const std::vector<Oct>& {  // N < bound
    if (by_bound[bound].empty()) by_bound[bound] = elements_of_norm_at_most(bound - 1);
    return by_bound[bound];
  };
  for (I a = 1; a <= T; ++a) {
    for (I b = 1; a + b <= T; ++b) {
      for (I c = 1; a + b + c <= T; ++c) {
        for (const Oct& c3 : below(a * b)) {
          for (const Oct& c2 : below(c * a)) {
            for (const Oct& c1 : below(b * c)) {
              // 4 det = 4abc - a 4N1 - b 4N2 - c 4N3 + 2 * 2T((c1 c2) c3)
              const Oct p = mul(mul(c1, c2), c3);
              const I det4 = 4 * a * b * c - a * norm4(c1) - b * norm4(c2) - c * norm4(c3) + 2 * trace2(p);
              if (det4 > 0 && det4 <= 4 * D) ++count;
            }
          }
        }
      }
    }
  }
  return count;
}

}  // namespace oracle
