#pragma once
// Exact arithmetic primitives: arbitrary-precision integers and rationals,
// plus lattice vectors of dimension 2 or 3 with the small set of exact
// linear-algebra operations everything else is built on.

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;

inline Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::invalid_argument("floor_div: division by zero");
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// Returns g = gcd(a, b) together with (s, t) such that s*a + t*b = g.
inline std::array<Int, 3> ext_gcd(Int a, Int b) {
  Int s0 = 1, t0 = 0, s1 = 0, t1 = 1;
  while (b != 0) {
    Int q = a / b;
    std::swap(a -= q * b, b);
    std::swap(s0 -= q * s1, s1);
    std::swap(t0 -= q * t1, t1);
  }
  if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
  return {a, s0, t0};
}

class LatticeVector {
 public:
  LatticeVector() : dim_(3) {}
  LatticeVector(Int a, Int b) : dim_(2), c_{std::move(a), std::move(b), 0} {}
  LatticeVector(Int a, Int b, Int c)
      : dim_(3), c_{std::move(a), std::move(b), std::move(c)} {}

  static LatticeVector zero(int dim) {
    if (dim == 2) return {0, 0};
    if (dim == 3) return {0, 0, 0};
    throw std::invalid_argument("LatticeVector: dimension must be 2 or 3");
  }

  int dim() const { return dim_; }

  const Int& operator[](int i) const {
    if (i < 0 || i >= dim_) throw std::out_of_range("LatticeVector index");
    return c_[static_cast<std::size_t>(i)];
  }
  Int& operator[](int i) {
    if (i < 0 || i >= dim_) throw std::out_of_range("LatticeVector index");
    return c_[static_cast<std::size_t>(i)];
  }

  bool is_zero() const {
    for (int i = 0; i < dim_; ++i) if (c_[static_cast<std::size_t>(i)] != 0) return false;
    return true;
  }
  bool all_nonnegative() const {
    for (int i = 0; i < dim_; ++i) if (c_[static_cast<std::size_t>(i)] < 0) return false;
    return true;
  }
  bool all_positive() const {
    for (int i = 0; i < dim_; ++i) if (c_[static_cast<std::size_t>(i)] <= 0) return false;
    return true;
  }

  Int sum() const {
    Int s = 0;
    for (int i = 0; i < dim_; ++i) s += c_[static_cast<std::size_t>(i)];
    return s;
  }

  // gcd of absolute values of the entries; 0 for the zero vector.
  Int content() const {
    Int g = 0;
    for (int i = 0; i < dim_; ++i) g = gcd(g, c_[static_cast<std::size_t>(i)]);
    return g;
  }

  LatticeVector operator+(const LatticeVector& o) const {
    check_dim(o);
    LatticeVector r = *this;
    for (int i = 0; i < dim_; ++i) r.c_[static_cast<std::size_t>(i)] += o.c_[static_cast<std::size_t>(i)];
    return r;
  }
  LatticeVector operator-(const LatticeVector& o) const {
    check_dim(o);
    LatticeVector r = *this;
    for (int i = 0; i < dim_; ++i) r.c_[static_cast<std::size_t>(i)] -= o.c_[static_cast<std::size_t>(i)];
    return r;
  }
  LatticeVector operator-() const {
    LatticeVector r = *this;
    for (int i = 0; i < dim_; ++i) r.c_[static_cast<std::size_t>(i)] = -r.c_[static_cast<std::size_t>(i)];
    return r;
  }
  friend LatticeVector operator*(const Int& k, const LatticeVector& v) {
    LatticeVector r = v;
    for (int i = 0; i < v.dim_; ++i) r.c_[static_cast<std::size_t>(i)] *= k;
    return r;
  }

  bool operator==(const LatticeVector& o) const {
    return dim_ == o.dim_ && c_ == o.c_;
  }
  bool operator!=(const LatticeVector& o) const { return !(*this == o); }
  // Lexicographic; vectors of smaller dimension sort first.
  bool operator<(const LatticeVector& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    return c_ < o.c_;
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < dim_; ++i) {
      if (i) os << ", ";
      os << c_[static_cast<std::size_t>(i)];
    }
    os << ')';
    return os.str();
  }
  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    return os << v.str();
  }

 private:
  void check_dim(const LatticeVector& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("LatticeVector: dimension mismatch");
  }

  int dim_;
  std::array<Int, 3> c_{};
};

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (int i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

inline Int det2(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != 2 || b.dim() != 2) throw std::invalid_argument("det2 expects dimension 2");
  return a[0] * b[1] - a[1] * b[0];
}

inline LatticeVector cross(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != 3 || b.dim() != 3) throw std::invalid_argument("cross expects dimension 3");
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Int det3(const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
  return dot(cross(a, b), c);
}

inline LatticeVector primitive(const LatticeVector& v) {
  Int g = v.content();
  if (g == 0) throw std::invalid_argument("primitive: zero vector");
  LatticeVector r = v;
  for (int i = 0; i < r.dim(); ++i) r[i] /= g;
  return r;
}

inline bool proportional(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("proportional: dimension mismatch");
  if (a.dim() == 2) return det2(a, b) == 0;
  return cross(a, b).is_zero();
}

// Rank of a family of integer vectors of equal dimension (fraction-free).
inline int rank_of(std::vector<LatticeVector> rows) {
  if (rows.empty()) return 0;
  const int d = rows[0].dim();
  int rank = 0;
  for (int col = 0; col < d && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<std::size_t>(r)][col] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    const LatticeVector& p = rows[static_cast<std::size_t>(rank)];
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      LatticeVector& w = rows[static_cast<std::size_t>(r)];
      if (w[col] == 0) continue;
      Int g = gcd(p[col], w[col]);
      Int mp = w[col] / g, mw = p[col] / g;
      for (int j = 0; j < d; ++j) w[j] = mw * w[j] - mp * p[j];
    }
    ++rank;
  }
  return rank;
}

// Solves a*x + b*y = t exactly over the rationals (2x2 Cramer).
inline std::optional<std::pair<Rat, Rat>> solve2(const LatticeVector& a,
                                                 const LatticeVector& b,
                                                 const LatticeVector& t) {
  Int d = det2(a, b);
  if (d == 0) return std::nullopt;
  Rat x = Rat(det2(t, b)) / d;
  Rat y = Rat(det2(a, t)) / d;
  return std::make_pair(x, y);
}

// Barycentric coordinates of x in the simplicial cone spanned by r1,r2,r3.
inline std::optional<std::array<Rat, 3>> barycentric3(const LatticeVector& r1,
                                                      const LatticeVector& r2,
                                                      const LatticeVector& r3,
                                                      const LatticeVector& x) {
  Int d = det3(r1, r2, r3);
  if (d == 0) return std::nullopt;
  return std::array<Rat, 3>{Rat(det3(x, r2, r3)) / d, Rat(det3(r1, x, r3)) / d,
                            Rat(det3(r1, r2, x)) / d};
}

// Coefficients (a, b) with a*b1 + b*b2 = t for independent b1, b2 in Z^3,
// or nullopt if t lies outside their rational span.
inline std::optional<std::pair<Rat, Rat>> solve_in_plane(const LatticeVector& b1,
                                                         const LatticeVector& b2,
                                                         const LatticeVector& t) {
  if (b1.dim() != 3 || b2.dim() != 3 || t.dim() != 3)
    throw std::invalid_argument("solve_in_plane expects dimension 3");
  LatticeVector n = cross(b1, b2);
  if (n.is_zero()) throw std::invalid_argument("solve_in_plane: dependent basis");
  if (dot(n, t) != 0) return std::nullopt;
  // Pick two coordinate rows with an invertible 2x2 minor.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Int d = b1[i] * b2[j] - b1[j] * b2[i];
      if (d == 0) continue;
      Rat a = Rat(t[i] * b2[j] - t[j] * b2[i]) / d;
      Rat b = Rat(b1[i] * t[j] - b1[j] * t[i]) / d;
      return std::make_pair(a, b);
    }
  return std::nullopt;
}

inline std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << '/' << denominator(r);
  return os.str();
}

}  // namespace toric
