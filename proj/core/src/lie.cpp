#include "e7lift/lie.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "e7lift/lattice.hpp"

namespace e7lift {

WeightVector::WeightVector(const std::array<Rational, 8>& raw) : c_(raw) {
  Rational mean(0);
  for (const auto& x : c_) mean += x;
  mean /= 8;
  for (auto& x : c_) x -= mean;
}

WeightVector WeightVector::e(int i) {
  if (i < 1 || i > 8) throw std::out_of_range("e_i needs 1 <= i <= 8");
  std::array<Rational, 8> raw{};
  raw[i - 1] = 1;
  return WeightVector(raw);
}

Rational WeightVector::pair(const WeightVector& o) const {
  Rational s(0);
  for (int i = 0; i < 8; ++i) s += c_[i] * o.c_[i];
  return s;
}

bool WeightVector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

WeightVector& WeightVector::operator+=(const WeightVector& o) {
  for (int i = 0; i < 8; ++i) c_[i] += o.c_[i];
  return *this;
}

WeightVector& WeightVector::operator-=(const WeightVector& o) {
  for (int i = 0; i < 8; ++i) c_[i] -= o.c_[i];
  return *this;
}

WeightVector operator*(const Rational& s, WeightVector a) {
  for (auto& x : a.c_) x *= s;
  return a;
}

WeightVector WeightVector::operator-() const { return Rational(-1) * *this; }

bool WeightVector::operator<(const WeightVector& o) const {
  for (int i = 0; i < 8; ++i) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

std::string WeightVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < 8; ++i) os << (i ? ", " : "") << c_[i].get_str();
  os << ")";
  return os.str();
}

nlohmann::json WeightVector::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : c_) j.push_back(x.get_str());
  return j;
}

WeightVector reflect(const WeightVector& v, const WeightVector& root) {
  const Rational k = 2 * v.pair(root) / root.pair(root);
  return v - k * root;
}

namespace {

RootSystem make_e7() {
  RootSystem rs;
  auto e = [](int i) { return WeightVector::e(i); };
  for (int i = 1; i <= 6; ++i) rs.simple[i - 1] = e(i) - e(i + 1);
  rs.simple[6] = e(5) + e(6) + e(7) + e(8);

  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) rs.positive.push_back(e(i) - e(j));
  }
  for (int i = 1; i <= 7; ++i) rs.positive.push_back(e(8) - e(i));
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      for (int k = j + 1; k <= 7; ++k) rs.positive.push_back(e(i) + e(j) + e(k) + e(8));
    }
  }
  for (const auto& r : rs.positive) rs.roots.push_back(r);
  for (const auto& r : rs.positive) rs.roots.push_back(-r);

  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) {
      const Rational v = 2 * rs.simple[i].pair(rs.simple[j]) / rs.simple[j].pair(rs.simple[j]);
      if (!is_integer(v)) throw std::logic_error("non-integral Cartan entry");
      rs.cartan[i][j] = static_cast<int>(v.get_num().get_si());
    }
  }

  // Bourbaki E7: 1-3-4-5-6-7, 2-4
  std::array<std::array<int, 7>, 7> bour{};
  for (int i = 0; i < 7; ++i) bour[i][i] = 2;
  for (auto [a, b] : {std::pair{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}}) {
    bour[a - 1][b - 1] = bour[b - 1][a - 1] = -1;
  }
  std::array<int, 7> perm{0, 1, 2, 3, 4, 5, 6};
  int found = 0;
  do {
    bool ok = true;
    for (int i = 0; i < 7 && ok; ++i) {
      for (int j = 0; j < 7 && ok; ++j) ok = rs.cartan[perm[i]][perm[j]] == bour[i][j];
    }
    if (ok) {
      rs.bourbaki = perm;
      ++found;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (found != 1) throw std::logic_error("Bourbaki matching is not unique: " + std::to_string(found));

  RationalMatrix c(7, std::vector<Rational>(7));
  for (int i = 0; i < 7; ++i) {
    for (int j = 0; j < 7; ++j) c[i][j] = rs.cartan[i][j];
  }
  const RationalMatrix ci = inverse(c);
  for (int j = 0; j < 7; ++j) {
    WeightVector w;
    for (int k = 0; k < 7; ++k) w += ci[j][k] * rs.simple[k];
    rs.fundamental[j] = w;
  }
  return rs;
}

std::set<std::array<long, 7>> label_orbit(const std::array<long, 7>& start) {
  const auto& rs = build_e7();
  std::set<std::array<long, 7>> seen{start};
  std::vector<std::array<long, 7>> stack{start};
  while (!stack.empty()) {
    const auto x = stack.back();
    stack.pop_back();
    for (int i = 0; i < 7; ++i) {
      if (x[i] == 0) continue;
      auto y = x;
      for (int j = 0; j < 7; ++j) y[j] -= x[i] * rs.cartan[i][j];
      if (seen.insert(y).second) stack.push_back(y);
    }
  }
  return seen;
}

}  // namespace

const RootSystem& build_e7() {
  static const RootSystem rs = make_e7();
  return rs;
}

std::vector<WeightVector> weyl_orbit(const std::array<long, 7>& dynkin_labels) {
  const auto& rs = build_e7();
  std::vector<WeightVector> out;
  for (const auto& lab : label_orbit(dynkin_labels)) {
    WeightVector w;
    for (int j = 0; j < 7; ++j) {
      if (lab[j]) w += Rational(lab[j]) * rs.fundamental[j];
    }
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t weyl_orbit_size(const std::array<long, 7>& dynkin_labels) { return label_orbit(dynkin_labels).size(); }

std::vector<WeightVector> weights_adjoint() {
  const auto& rs = build_e7();
  std::vector<WeightVector> out = rs.roots;
  for (int i = 0; i < 7; ++i) out.push_back(WeightVector::zero());
  return out;
}

std::vector<WeightVector> weights_56() {
  std::optional<std::array<long, 7>> pick;
  for (int j = 0; j < 7; ++j) {
    std::array<long, 7> lab{};
    lab[j] = 1;
    if (weyl_orbit_size(lab) == 56) {
      if (pick) throw std::logic_error("more than one fundamental orbit of size 56");
      pick = lab;
    }
  }
  if (!pick) throw std::logic_error("no fundamental orbit of size 56");
  return weyl_orbit(*pick);
}

SymbolicWeight satake_siegel() {
  auto e = [](int i) { return WeightVector::e(i); };
  SymbolicWeight w;
  w.linear = Rational(2) * (e(1) + e(8));
  w.constant = Rational(8) * e(2) + Rational(7) * e(3) + Rational(6) * e(4) + Rational(5) * e(5) +
               Rational(4) * e(6) + Rational(3) * e(7) + Rational(11) * e(8);
  return w;
}

SymbolicWeight cap_parameter() {
  const auto& rs = build_e7();
  SymbolicWeight w;
  w.linear = rs.beta(2) + rs.beta(5) + rs.beta(7);
  const std::array<long, 7> lam0{10, 11, 19, 26, 22, 15, 8};
  for (int i = 0; i < 7; ++i) w.constant += Rational(lam0[i]) * rs.beta(i + 1);
  return w;
}

long EulerFactorSpec::total() const {
  long t = 0;
  for (const auto& [k, m] : mult) t += m;
  return t;
}

EulerFactorSpec EulerFactorSpec::negated() const {
  EulerFactorSpec out;
  for (const auto& [k, m] : mult) out.add(-k.first, -k.second, m);
  return out;
}

std::vector<std::string> EulerFactorSpec::lines() const {
  std::vector<std::string> out;
  for (const auto& [k, m] : mult) {
    std::ostringstream os;
    os << "(1 - alpha^" << k.first << " p^" << k.second << " p^-s)";
    for (long i = 0; i < m; ++i) out.push_back(os.str());
  }
  return out;
}

EulerFactorSpec euler_factor(const std::vector<WeightVector>& weights, const SymbolicWeight& lambda) {
  EulerFactorSpec spec;
  for (const auto& w : weights) {
    const Rational a = lambda.linear.pair(w);
    const Rational c = lambda.constant.pair(w);
    if (!is_integer(a) || !is_integer(c)) {
      throw LieError("non-integral exponent pairing (" + a.get_str() + ", " + c.get_str() + ") at weight " +
                         w.to_string(),
                     w);
    }
    spec.add(a.get_num().get_si(), c.get_num().get_si());
  }
  return spec;
}

EulerFactorSpec expected_spec(const std::string& which) {
  EulerFactorSpec s;
  if (which == "standard" || which == "std") {
    for (long a : {3L, 1L, -1L, -3L}) s.add(a, 0);
    for (long a : {1L, -1L}) s.add(a, 0, 2);
    for (long i = 1; i <= 8; ++i) {
      for (long a : {1L, -1L}) {
        for (long c : {i, -i}) s.add(a, c, i <= 4 ? 2 : 1);
      }
    }
    return s;
  }
  if (which == "adjoint" || which == "ad") {
    // zeta(s)^4 zeta(s+-1)^4 zeta(s+-2)^2 zeta(s+-3)^4 zeta(s+-4)^3 zeta(s+-5)^3
    // zeta(s+-6)^2 zeta(s+-7)^2 zeta(s+-8) ... zeta(s+-11)
    const std::map<long, long> zeta{{0, 4}, {1, 4}, {2, 2}, {3, 4}, {4, 3},  {5, 3},
                                    {6, 2}, {7, 2}, {8, 1}, {9, 1}, {10, 1}, {11, 1}};
    for (const auto& [j, m] : zeta) {
      s.add(0, j, m);
      if (j) s.add(0, -j, m);
    }
    // Sym^2 at shifts j: multiplicity 3 at 0, 2 for |j| <= 4, 1 for |j| <= 8
    for (long j = -8; j <= 8; ++j) {
      const long m = j == 0 ? 3 : (std::abs(j) <= 4 ? 2 : 1);
      for (long a : {2L, 0L, -2L}) s.add(a, j, m);
    }
    return s;
  }
  throw std::invalid_argument("expected_spec: unknown representation '" + which + "'");
}

CompareReport compare(const EulerFactorSpec& computed, const EulerFactorSpec& expected) {
  CompareReport r;
  std::set<std::pair<long, long>> keys;
  for (const auto& [k, m] : computed.mult) keys.insert(k);
  for (const auto& [k, m] : expected.mult) keys.insert(k);
  for (const auto& k : keys) {
    auto get = [&](const EulerFactorSpec& s) {
      auto it = s.mult.find(k);
      return it == s.mult.end() ? 0L : it->second;
    };
    const long a = get(computed);
    const long b = get(expected);
    if (a != b) r.diff.push_back({k.first, k.second, a, b});
  }
  r.equal = r.diff.empty();
  return r;
}

CompareReport compare_with_central_shift(const EulerFactorSpec& computed, const EulerFactorSpec& expected) {
  Rational sum(0);
  for (const auto& [k, m] : computed.mult) sum += Rational(k.second * m);
  const Rational shift = computed.total() ? sum / computed.total() : Rational(0);
  if (!is_integer(shift)) {
    CompareReport r = compare(computed, expected);
    r.equal = false;
    r.central_shift = shift;
    return r;
  }
  EulerFactorSpec shifted;
  const long sh = shift.get_num().get_si();
  for (const auto& [k, m] : computed.mult) shifted.add(k.first, k.second - sh, m);
  CompareReport r = compare(shifted, expected);
  if (!(shifted == shifted.negated())) r.equal = false;
  r.central_shift = shift;
  return r;
}

nlohmann::json CompareReport::to_json(const std::string& check) const {
  nlohmann::json d = nlohmann::json::array();
  for (const auto& x : diff) {
    d.push_back({{"a", x.a}, {"c", x.c}, {"computed", x.computed}, {"expected", x.expected}});
  }
  return {{"check", check},
          {"status", equal ? "match" : "mismatch"},
          {"diff", d},
          {"central_shift", central_shift ? nlohmann::json(central_shift->get_str()) : nlohmann::json(nullptr)}};
}

WeightVector dominant_representative(const WeightVector& v) {
  const auto& rs = build_e7();
  WeightVector w = v;
  for (;;) {
    bool moved = false;
    for (const auto& a : rs.simple) {
      if (w.pair(a) < 0) {
        w = reflect(w, a);
        moved = true;
        break;
      }
    }
    if (!moved) return w;
  }
}

WeightVector dominant_representative(const SymbolicWeight& v, const Rational& s) {
  return dominant_representative(v.at(s));
}

bool weyl_orbit_equal(const SymbolicWeight& v1, const SymbolicWeight& v2, const std::vector<Rational>& samples) {
  if (samples.empty()) throw std::invalid_argument("weyl_orbit_equal needs at least one sample");
  return std::all_of(samples.begin(), samples.end(), [&](const Rational& s) {
    return dominant_representative(v1, s) == dominant_representative(v2, s);
  });
}

Complex evaluate_euler_factor(const EulerFactorSpec& spec, const Complex& alpha, std::uint64_t p, const Complex& s) {
  Complex out(Real(1));
  const Real logp = log(Real(p));
  for (const auto& [k, m] : spec.mult) {
    // p^{c - s} = exp((c - s) log p)
    const Complex ex = Complex(Real(k.second)) - s;
    const Real mag = exp(ex.re * logp);
    const Complex ps(mag * cos(ex.im * logp), mag * sin(ex.im * logp));
    const Complex f = Complex(Real(1)) - pow(alpha, k.first) * ps;
    for (long i = 0; i < m; ++i) out *= f;
  }
  return out;
}

}  // namespace e7lift
