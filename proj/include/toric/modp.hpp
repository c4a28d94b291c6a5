#pragma once
// Dense univariate polynomial arithmetic over a word-sized prime field,
// enough to run bivariate resultant eliminations and find rational roots.

#include <cstdint>
#include <random>
#include <vector>

#include "core.hpp"

namespace toric::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }

  u64 from_int(const Int& v) const {
    Int m = v % Int(p);
    if (m < 0) m += Int(p);
    return m.convert_to<u64>();
  }
  // Reduction of a rational; fails (returns false) if the denominator
  // vanishes mod p.
  bool from_rat(const Rat& v, u64& out) const {
    u64 den = from_int(denominator(v));
    if (den == 0) return false;
    out = mul(from_int(numerator(v)), inv(den));
    return true;
  }
};

// Coefficient of x^i at index i; no trailing zeros.
using Poly = std::vector<u64>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }

inline Poly add(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = F.add(x, y);
  }
  trim(r);
  return r;
}

inline Poly sub(const Field& F, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = F.sub(x, y);
  }
  trim(r);
  return r;
}

inline Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

inline Poly scale(const Field& F, const Poly& a, u64 c) {
  Poly r = a;
  for (auto& v : r) v = F.mul(v, c);
  trim(r);
  return r;
}

inline Poly rem(const Field& F, Poly a, const Poly& b) {
  if (b.empty()) throw std::invalid_argument("modp::rem: division by zero polynomial");
  u64 invlead = F.inv(b.back());
  while (deg(a) >= deg(b)) {
    u64 c = F.mul(a.back(), invlead);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  return a;
}

inline Poly monic(const Field& F, Poly a) {
  trim(a);
  if (a.empty()) return a;
  return scale(F, a, F.inv(a.back()));
}

inline Poly gcd(const Field& F, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(F, a);
}

inline u64 eval(const Field& F, const Poly& f, u64 x) {
  u64 r = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) r = F.add(F.mul(r, x), *it);
  return r;
}

inline Poly derivative(const Field& F, const Poly& f) {
  Poly r;
  for (std::size_t i = 1; i < f.size(); ++i) r.push_back(F.mul(f[i], i % F.p));
  trim(r);
  return r;
}

// x^e modulo f, by repeated squaring on polynomials.
inline Poly powmod_x(const Field& F, u64 e, const Poly& f) {
  Poly base = rem(F, Poly{0, 1}, f);
  Poly acc = rem(F, Poly{1}, f);
  while (e) {
    if (e & 1) acc = rem(F, mul(F, acc, base), f);
    base = rem(F, mul(F, base, base), f);
    e >>= 1;
  }
  return acc;
}

inline Poly powmod(const Field& F, Poly b, u64 e, const Poly& f) {
  Poly acc = rem(F, Poly{1}, f);
  b = rem(F, std::move(b), f);
  while (e) {
    if (e & 1) acc = rem(F, mul(F, acc, b), f);
    b = rem(F, mul(F, b, b), f);
    e >>= 1;
  }
  return acc;
}

namespace detail {

inline void split_linear(const Field& F, const Poly& f, std::mt19937_64& rng,
                         std::vector<u64>& roots) {
  if (deg(f) <= 0) return;
  if (deg(f) == 1) {
    // monic: x + f[0]
    roots.push_back(F.neg(f[0]));
    return;
  }
  // Cantor-Zassenhaus equal-degree splitting for a product of distinct
  // linear factors.
  while (true) {
    u64 a = rng() % F.p;
    Poly shifted{a, 1};
    Poly h = powmod(F, shifted, (F.p - 1) / 2, f);
    if (h.empty()) continue;
    h = sub(F, h, Poly{1});
    Poly g = gcd(F, h, f);
    if (deg(g) <= 0 || deg(g) == deg(f)) continue;
    // quotient f / g (g is monic after gcd)
    Poly quotient(f.size(), 0), num = f;
    while (deg(num) >= deg(g)) {
      u64 c = num.back();
      std::size_t shift = num.size() - g.size();
      quotient[shift] = c;
      for (std::size_t i = 0; i < g.size(); ++i)
        num[shift + i] = F.sub(num[shift + i], F.mul(c, g[i]));
      trim(num);
    }
    trim(quotient);
    split_linear(F, g, rng, roots);
    split_linear(F, quotient, rng, roots);
    return;
  }
}

}  // namespace detail

// All roots of f in F_p (with multiplicity collapsed).
inline std::vector<u64> roots(const Field& F, Poly f, std::mt19937_64& rng) {
  trim(f);
  std::vector<u64> out;
  if (deg(f) <= 0) return out;
  f = monic(F, f);
  Poly xp = powmod_x(F, F.p, f);
  Poly lin = gcd(F, sub(F, xp, Poly{0, 1}), f);
  if (deg(lin) >= 1 && lin[0] == 0) {
    out.push_back(0);
    // strip the root at zero
    Poly shifted(lin.begin() + 1, lin.end());
    lin = monic(F, shifted);
  }
  detail::split_linear(F, lin, rng, out);
  return out;
}

// Bivariate polynomial in v with coefficients in F_p[u].
using BiPoly = std::vector<Poly>;

inline void trim_bi(BiPoly& f) {
  while (!f.empty() && f.back().empty()) f.pop_back();
}

inline Poly eval_u(const Field& F, const BiPoly& f, u64 u0) {
  Poly r(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = eval(F, f[i], u0);
  trim(r);
  return r;
}

inline u64 det_mod(const Field& F, std::vector<std::vector<u64>> m) {
  const std::size_t n = m.size();
  u64 det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = F.neg(det);
    }
    det = F.mul(det, m[col][col]);
    u64 inv = F.inv(m[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      u64 factor = F.mul(m[r][col], inv);
      for (std::size_t c = col; c < n; ++c)
        m[r][c] = F.sub(m[r][c], F.mul(factor, m[col][c]));
    }
  }
  return det;
}

// Res_v(f, g) as a polynomial in u, computed from the Sylvester determinant
// by evaluation at enough points and Lagrange interpolation.  The formal
// v-degrees of f and g are fixed across evaluations, so this is the honest
// resultant of the bivariate polynomials.
inline Poly resultant_v(const Field& F, const BiPoly& f, const BiPoly& g) {
  const int m = static_cast<int>(f.size()) - 1;
  const int n = static_cast<int>(g.size()) - 1;
  if (m < 0 || n < 0) return {};
  if (m == 0 && n == 0) return {1};
  int du = 0;
  for (const auto& c : f) du = std::max(du, deg(c));
  int dg = 0;
  for (const auto& c : g) dg = std::max(dg, deg(c));
  // Degree of the resultant in u is at most n*du + m*dg.
  const int bound = n * du + m * dg;
  if (static_cast<u64>(bound) + 1 >= F.p)
    throw std::runtime_error("resultant_v: prime too small for degree bound");
  std::vector<u64> xs, ys;
  for (int t = 0; t <= bound; ++t) {
    u64 u0 = static_cast<u64>(t);
    std::vector<std::vector<u64>> syl(static_cast<std::size_t>(m + n),
                                      std::vector<u64>(static_cast<std::size_t>(m + n), 0));
    // n rows of f-coefficients, m rows of g-coefficients (descending powers).
    for (int r = 0; r < n; ++r)
      for (int k = 0; k <= m; ++k)
        syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
            eval(F, f[static_cast<std::size_t>(m - k)], u0);
    for (int r = 0; r < m; ++r)
      for (int k = 0; k <= n; ++k)
        syl[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] =
            eval(F, g[static_cast<std::size_t>(n - k)], u0);
    xs.push_back(u0);
    ys.push_back(det_mod(F, std::move(syl)));
  }
  // Lagrange interpolation through (xs, ys).
  Poly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis{1};
    u64 denom = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      basis = mul(F, basis, Poly{F.neg(xs[j]), 1});
      denom = F.mul(denom, F.sub(xs[i], xs[j]));
    }
    acc = add(F, acc, scale(F, basis, F.mul(ys[i], F.inv(denom))));
  }
  trim(acc);
  return acc;
}

}  // namespace toric::modp
