#pragma once
// Rational polyhedral cones in Z^2 / Z^3 and their semigroup data: saturated
// plane lattices, Hilbert bases, regularity tests and Hirzebruch-Jung
// continued fractions.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "core.hpp"

namespace toric {

// Salient cone given by its extremal primitive generators.  Generators are
// normalized to primitive vectors; zero, repeated/proportional or
// non-extremal generators are constructor errors.
class Cone {
 public:
  explicit Cone(std::vector<LatticeVector> rays) : rays_(std::move(rays)) {
    if (rays_.empty()) throw std::invalid_argument("Cone: no generators");
    ambient_ = rays_[0].dim();
    for (auto& r : rays_) {
      if (r.dim() != ambient_) throw std::invalid_argument("Cone: mixed dimensions");
      if (r.is_zero()) throw std::invalid_argument("Cone: zero generator");
      r = primitive(r);
    }
    for (std::size_t i = 0; i < rays_.size(); ++i)
      for (std::size_t j = i + 1; j < rays_.size(); ++j)
        if (proportional(rays_[i], rays_[j]))
          throw std::invalid_argument("Cone: proportional generators " + rays_[i].str() +
                                      " and " + rays_[j].str());
    intrinsic_ = rank_of(rays_);
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      std::vector<LatticeVector> others;
      for (std::size_t j = 0; j < rays_.size(); ++j)
        if (j != i) others.push_back(rays_[j]);
      if (!others.empty() && in_hull(others, rays_[i]))
        throw std::invalid_argument("Cone: generator " + rays_[i].str() + " is not extremal");
    }
  }

  int ambient_dim() const { return ambient_; }
  int dim() const { return intrinsic_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }

 private:
  // Conic-hull membership via Caratheodory: x lies in cone(gens) iff it is a
  // nonnegative combination of some linearly independent subset.
  static bool in_hull(const std::vector<LatticeVector>& gens, const LatticeVector& x) {
    const int d = x.dim();
    const int n = static_cast<int>(gens.size());
    for (int i = 0; i < n; ++i) {
      if (proportional(gens[static_cast<std::size_t>(i)], x) &&
          dot(gens[static_cast<std::size_t>(i)], x) > 0)
        return true;
    }
    if (d == 2) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          auto s = solve2(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)], x);
          if (s && s->first >= 0 && s->second >= 0) return true;
        }
      return false;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        // Rank-2 subsets: x must lie in their plane.
        auto s = solve_in_plane(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)], x);
        if (s && s->first >= 0 && s->second >= 0) return true;
        for (int k = j + 1; k < n; ++k) {
          auto b = barycentric3(gens[static_cast<std::size_t>(i)], gens[static_cast<std::size_t>(j)],
                                gens[static_cast<std::size_t>(k)], x);
          if (b && (*b)[0] >= 0 && (*b)[1] >= 0 && (*b)[2] >= 0) return true;
        }
      }
    return false;
  }

  std::vector<LatticeVector> rays_;
  int ambient_ = 0;
  int intrinsic_ = 0;
};

struct PlaneBasis {
  LatticeVector b1, b2;                       // basis of the saturated plane lattice
  std::vector<std::pair<Int, Int>> coords;    // generator coordinates in that basis
};

namespace detail {

// Basis of the saturated lattice ker(n) in Z^3 for primitive n: column
// operations carry n to (1, 0, 0); the transformed unit columns 2 and 3 span
// the kernel.  Canonicalized afterwards by row Hermite normal form.
inline std::pair<LatticeVector, LatticeVector> kernel_basis(const LatticeVector& n) {
  std::array<LatticeVector, 3> v = {LatticeVector{1, 0, 0}, LatticeVector{0, 1, 0},
                                    LatticeVector{0, 0, 1}};
  std::array<Int, 3> w = {n[0], n[1], n[2]};
  // Gcd elimination of w[1] and w[2] into w[0].
  for (int j = 1; j < 3; ++j) {
    while (w[static_cast<std::size_t>(j)] != 0) {
      if (w[0] == 0 || abs(w[static_cast<std::size_t>(j)]) < abs(w[0])) {
        std::swap(w[0], w[static_cast<std::size_t>(j)]);
        std::swap(v[0], v[static_cast<std::size_t>(j)]);
      }
      Int q = w[static_cast<std::size_t>(j)] / w[0];
      w[static_cast<std::size_t>(j)] -= q * w[0];
      v[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(j)] - (q * v[0]);
    }
  }
  if (w[0] < 0) { w[0] = -w[0]; v[0] = -v[0]; }
  if (w[0] != 1) throw std::logic_error("kernel_basis: normal not primitive");
  return {v[1], v[2]};
}

// Row HNF of a rank-2 pair in Z^3: pivots positive, entries above a pivot
// reduced to [0, pivot).
inline void hnf_pair(LatticeVector& r1, LatticeVector& r2) {
  std::array<LatticeVector*, 2> rows = {&r1, &r2};
  int row = 0;
  for (int col = 0; col < 3 && row < 2; ++col) {
    // Clear the column below `row` with gcd steps.
    for (int r = row + 1; r < 2; ++r) {
      while ((*rows[static_cast<std::size_t>(r)])[col] != 0) {
        if ((*rows[static_cast<std::size_t>(row)])[col] == 0 ||
            abs((*rows[static_cast<std::size_t>(r)])[col]) <
                abs((*rows[static_cast<std::size_t>(row)])[col]))
          std::swap(rows[static_cast<std::size_t>(row)], rows[static_cast<std::size_t>(r)]);
        Int q = (*rows[static_cast<std::size_t>(r)])[col] / (*rows[static_cast<std::size_t>(row)])[col];
        *rows[static_cast<std::size_t>(r)] =
            *rows[static_cast<std::size_t>(r)] - (q * *rows[static_cast<std::size_t>(row)]);
      }
    }
    if ((*rows[static_cast<std::size_t>(row)])[col] == 0) continue;
    if ((*rows[static_cast<std::size_t>(row)])[col] < 0)
      *rows[static_cast<std::size_t>(row)] = -*rows[static_cast<std::size_t>(row)];
    for (int r = 0; r < row; ++r) {
      Int q = floor_div((*rows[static_cast<std::size_t>(r)])[col],
                        (*rows[static_cast<std::size_t>(row)])[col]);
      *rows[static_cast<std::size_t>(r)] =
          *rows[static_cast<std::size_t>(r)] - (q * *rows[static_cast<std::size_t>(row)]);
    }
    ++row;
  }
  if (row != 2) throw std::logic_error("hnf_pair: rank defect");
  LatticeVector a = *rows[0], b = *rows[1];
  r1 = a;
  r2 = b;
}

}  // namespace detail

// Saturated lattice of the plane spanned by a two-dimensional cone in Z^3,
// with the generators expressed in the returned basis.  The basis is the row
// Hermite normal form of the kernel of the primitive plane normal, so it
// depends only on the plane.
inline PlaneBasis plane_lattice_basis(const Cone& c) {
  if (c.ambient_dim() != 3 || c.dim() != 2 || c.rays().size() != 2)
    throw std::invalid_argument("plane_lattice_basis expects a 2-dimensional cone in Z^3");
  LatticeVector n = primitive(cross(c.rays()[0], c.rays()[1]));
  auto [k1, k2] = detail::kernel_basis(n);
  detail::hnf_pair(k1, k2);
  PlaneBasis pb{k1, k2, {}};
  for (const auto& r : c.rays()) {
    auto s = solve_in_plane(k1, k2, r);
    if (!s || denominator(s->first) != 1 || denominator(s->second) != 1)
      throw std::logic_error("plane_lattice_basis: generator outside saturated lattice");
    pb.coords.emplace_back(numerator(s->first), numerator(s->second));
  }
  return pb;
}

namespace detail {

// Hilbert basis of a 2D cone in Z^2 as the chain of lattice points on the
// boundary of conv((cone \cap Z^2) \ {0}), walked from a to b.  Consecutive
// chain members (u, v) always satisfy |det(u, v)| = 1.
inline std::vector<LatticeVector> chain2(const LatticeVector& a, const LatticeVector& b) {
  Int orient = det2(a, b);
  if (orient == 0) throw std::invalid_argument("chain2: proportional generators");
  if (orient < 0) {
    auto rev = chain2(b, a);
    std::reverse(rev.begin(), rev.end());
    return rev;
  }
  std::vector<LatticeVector> out = {a};
  LatticeVector cur = a;
  while (true) {
    Int d = det2(cur, b);
    if (d == 0) break;
    // v0 with det(cur, v0) = 1, shifted into the cone as far as possible:
    // the next chain vertex is v0 + t*cur with t minimal s.t. det stays >= 0.
    auto [g, s, t] = ext_gcd(cur[0], cur[1]);
    if (g != 1) throw std::logic_error("chain2: non-primitive chain member");
    LatticeVector v0{-t, s};
    Int shift = ceil_div(-det2(v0, b), d);
    LatticeVector v = v0 + (shift * cur);
    if (det2(v, b) >= d) throw std::logic_error("chain2: no progress");
    out.push_back(v);
    cur = v;
  }
  if (!(cur == b)) throw std::logic_error("chain2: endpoint mismatch");
  return out;
}

}  // namespace detail

// Hilbert basis of a two-dimensional cone, ordered as the chain from the
// first generator to the second.
inline std::vector<LatticeVector> hilbert_basis_2d(const Cone& c) {
  if (c.dim() != 2 || c.rays().size() != 2)
    throw std::invalid_argument("hilbert_basis_2d expects a 2-dimensional cone");
  if (c.ambient_dim() == 2) return detail::chain2(c.rays()[0], c.rays()[1]);
  PlaneBasis pb = plane_lattice_basis(c);
  LatticeVector a{pb.coords[0].first, pb.coords[0].second};
  LatticeVector b{pb.coords[1].first, pb.coords[1].second};
  std::vector<LatticeVector> out;
  for (const auto& p : detail::chain2(a, b))
    out.push_back(p[0] * pb.b1 + p[1] * pb.b2);
  return out;
}

// Multipliers m_i >= 2 of the chain relations u_{i-1} + u_{i+1} = m_i u_i for
// the interior members of a 2D Hilbert chain.
inline std::vector<Int> chain_multipliers(const std::vector<LatticeVector>& chain) {
  std::vector<Int> ms;
  for (std::size_t i = 1; i + 1 < chain.size(); ++i) {
    LatticeVector s = chain[i - 1] + chain[i + 1];
    // s is a multiple of chain[i]; recover the factor from any nonzero entry.
    Int m = 0;
    for (int j = 0; j < s.dim(); ++j)
      if (chain[i][j] != 0) { m = s[j] / chain[i][j]; break; }
    if (m * chain[i] != s || m < 2) throw std::logic_error("chain relation violated");
    ms.push_back(m);
  }
  return ms;
}

namespace detail {

inline bool simplicial_member(const LatticeVector& r1, const LatticeVector& r2,
                              const LatticeVector& r3, const LatticeVector& x) {
  auto b = barycentric3(r1, r2, r3, x);
  return b && (*b)[0] >= 0 && (*b)[1] >= 0 && (*b)[2] >= 0;
}

// Lattice points of the half-open parallelepiped {a r1 + b r2 + c r3 :
// a, b, c in [0, 1)}, the origin excluded.
inline std::vector<LatticeVector> parallelepiped_points(const LatticeVector& r1,
                                                        const LatticeVector& r2,
                                                        const LatticeVector& r3) {
  Int d = det3(r1, r2, r3);
  if (d == 0) throw std::invalid_argument("parallelepiped_points: degenerate cone");
  std::array<Int, 3> lo{0, 0, 0}, hi{0, 0, 0};
  for (int mask = 0; mask < 8; ++mask) {
    LatticeVector corner{0, 0, 0};
    if (mask & 1) corner = corner + r1;
    if (mask & 2) corner = corner + r2;
    if (mask & 4) corner = corner + r3;
    for (int j = 0; j < 3; ++j) {
      lo[static_cast<std::size_t>(j)] = std::min(lo[static_cast<std::size_t>(j)], corner[j]);
      hi[static_cast<std::size_t>(j)] = std::max(hi[static_cast<std::size_t>(j)], corner[j]);
    }
  }
  // integer membership test: p = (n1 r1 + n2 r2 + n3 r3)/d lies in the
  // half-open box iff every Cramer numerator n_i satisfies 0 <= n_i/d < 1
  const Int ad = abs(d);
  const int sg = d > 0 ? 1 : -1;
  std::vector<LatticeVector> pts;
  for (Int x = lo[0]; x <= hi[0]; ++x)
    for (Int y = lo[1]; y <= hi[1]; ++y)
      for (Int z = lo[2]; z <= hi[2]; ++z) {
        LatticeVector p{x, y, z};
        if (p.is_zero()) continue;
        Int n1 = det3(p, r2, r3) * sg;
        if (n1 < 0 || n1 >= ad) continue;
        Int n2 = det3(r1, p, r3) * sg;
        if (n2 < 0 || n2 >= ad) continue;
        Int n3 = det3(r1, r2, p) * sg;
        if (n3 < 0 || n3 >= ad) continue;
        pts.push_back(p);
      }
  return pts;
}

}  // namespace detail

// Hilbert basis of a full-dimensional simplicial cone in Z^3: candidates are
// the generators plus the lattice points of the fundamental parallelepiped;
// reducible candidates are removed.  Sorted lexicographically.
inline std::vector<LatticeVector> hilbert_basis_3d(const Cone& c) {
  if (c.ambient_dim() != 3 || c.dim() != 3 || c.rays().size() != 3)
    throw std::invalid_argument("hilbert_basis_3d expects a simplicial cone in Z^3");
  const auto& r = c.rays();
  std::set<LatticeVector> cand;
  cand.insert(r[0]);
  cand.insert(r[1]);
  cand.insert(r[2]);
  for (const auto& p : detail::parallelepiped_points(r[0], r[1], r[2])) cand.insert(p);
  std::vector<LatticeVector> out;
  for (const auto& z : cand) {
    bool reducible = false;
    for (const auto& w : cand) {
      if (w == z) continue;
      LatticeVector diff = z - w;
      if (diff.is_zero()) continue;
      if (detail::simplicial_member(r[0], r[1], r[2], diff)) { reducible = true; break; }
    }
    if (!reducible) out.push_back(z);
  }
  return out;  // std::set iteration is already lexicographic
}

inline bool is_regular(const Cone& c) {
  if (c.dim() == 1) return true;
  if (c.dim() == 2) {
    if (c.rays().size() != 2) return false;
    if (c.ambient_dim() == 2) return abs(det2(c.rays()[0], c.rays()[1])) == 1;
    PlaneBasis pb = plane_lattice_basis(c);
    LatticeVector a{pb.coords[0].first, pb.coords[0].second};
    LatticeVector b{pb.coords[1].first, pb.coords[1].second};
    return abs(det2(a, b)) == 1;
  }
  if (c.rays().size() != 3) return false;  // non-simplicial cones are never regular
  return abs(det3(c.rays()[0], c.rays()[1], c.rays()[2])) == 1;
}

struct ContinuedFraction {
  std::vector<Int> entries;  // all >= 2
  Rat value;                 // p/q with p > q >= 1, gcd(p, q) = 1
};

// Hirzebruch-Jung expansion p/q = m_1 - 1/(m_2 - 1/(...)).
inline ContinuedFraction hj_expand(Int p, Int q) {
  if (q < 1 || p <= q || gcd(p, q) != 1)
    throw std::invalid_argument("hj_expand requires coprime p > q >= 1");
  ContinuedFraction cf;
  cf.value = Rat(p) / q;
  Int a = p, b = q;
  while (true) {
    if (b == 1) { cf.entries.push_back(a); break; }
    Int m = ceil_div(a, b);
    cf.entries.push_back(m);
    Int next = m * b - a;
    a = b;
    b = next;
  }
  return cf;
}

inline Rat hj_eval(const std::vector<Int>& entries) {
  if (entries.empty()) throw std::invalid_argument("hj_eval: empty expansion");
  Rat v = entries.back();
  for (auto it = std::next(entries.rbegin()); it != entries.rend(); ++it) {
    if (v == 0) throw std::invalid_argument("hj_eval: division by zero");
    v = Rat(*it) - 1 / v;
  }
  return v;
}

// ---- full-dimensional cones in the positive octant ----
//
// Rays of such cones have positive coordinate sum, so the cross-section with
// the plane x + y + z = 1 is a bounded convex polygon; it is used for cyclic
// ordering, triangulation and exact area bookkeeping.

namespace detail {

struct Section {
  Rat u, v;  // first two coordinates of ray / sum(ray)
};

inline Section section_of(const LatticeVector& r) {
  Int s = r.sum();
  if (s <= 0) throw std::invalid_argument("cross-section: ray outside the positive octant");
  return {Rat(r[0]) / s, Rat(r[1]) / s};
}

inline Rat section_cross(const Section& o, const Section& a, const Section& b) {
  return (a.u - o.u) * (b.v - o.v) - (a.v - o.v) * (b.u - o.u);
}

}  // namespace detail

// Indices of the rays of a salient full-dimensional cone in boundary order
// (counterclockwise in the cross-section), starting from the lexicographically
// smallest ray.
inline std::vector<int> cyclic_order(const std::vector<LatticeVector>& rays) {
  const int n = static_cast<int>(rays.size());
  if (n < 3) throw std::invalid_argument("cyclic_order needs at least 3 rays");
  std::vector<detail::Section> pts;
  pts.reserve(rays.size());
  for (const auto& r : rays) pts.push_back(detail::section_of(r));
  detail::Section c{0, 0};
  for (const auto& p : pts) { c.u += p.u; c.v += p.v; }
  c.u /= n;
  c.v /= n;
  std::vector<int> idx(rays.size());
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  auto half = [&](const detail::Section& p) {
    if (p.v != c.v) return p.v > c.v ? 0 : 1;
    return p.u > c.u ? 0 : 1;
  };
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    const auto& pa = pts[static_cast<std::size_t>(a)];
    const auto& pb = pts[static_cast<std::size_t>(b)];
    int ha = half(pa), hb = half(pb);
    if (ha != hb) return ha < hb;
    Rat cr = detail::section_cross(c, pa, pb);
    if (cr != 0) return cr > 0;
    return rays[static_cast<std::size_t>(a)] < rays[static_cast<std::size_t>(b)];
  });
  // Rotate so the lexicographically smallest ray comes first.
  int best = 0;
  for (int i = 1; i < n; ++i)
    if (rays[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] <
        rays[static_cast<std::size_t>(idx[static_cast<std::size_t>(best)])])
      best = i;
  std::rotate(idx.begin(), idx.begin() + best, idx.end());
  return idx;
}

// Membership in the cone spanned by the extremal rays of a salient
// full-dimensional cone (any number of generators; triangulated internally).
inline bool cone3_contains(const std::vector<LatticeVector>& rays, const LatticeVector& x) {
  if (rays.size() == 3)
    return detail::simplicial_member(rays[0], rays[1], rays[2], x);
  auto order = cyclic_order(rays);
  for (std::size_t k = 1; k + 1 < order.size(); ++k)
    if (detail::simplicial_member(rays[static_cast<std::size_t>(order[0])],
                                  rays[static_cast<std::size_t>(order[k])],
                                  rays[static_cast<std::size_t>(order[k + 1])], x))
      return true;
  return false;
}

// Strict interior membership: inside and off every bounding plane.
inline bool cone3_contains_strict(const std::vector<LatticeVector>& rays,
                                  const LatticeVector& x) {
  if (!cone3_contains(rays, x)) return false;
  auto order = cyclic_order(rays);
  const std::size_t n = order.size();
  for (std::size_t k = 0; k < n; ++k) {
    const LatticeVector& a = rays[static_cast<std::size_t>(order[k])];
    const LatticeVector& b = rays[static_cast<std::size_t>(order[(k + 1) % n])];
    if (dot(cross(a, b), x) == 0) return false;
  }
  return true;
}

// Exact area of the cross-section polygon of a full-dimensional cone in the
// plane x + y + z = 1, projected to the first two coordinates.
inline Rat section_area(const std::vector<LatticeVector>& rays) {
  auto order = cyclic_order(rays);
  std::vector<detail::Section> pts;
  for (int i : order) pts.push_back(detail::section_of(rays[static_cast<std::size_t>(i)]));
  Rat twice = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const auto& a = pts[k];
    const auto& b = pts[(k + 1) % pts.size()];
    twice += a.u * b.v - a.v * b.u;
  }
  if (twice < 0) twice = -twice;
  return twice / 2;
}

}  // namespace toric
