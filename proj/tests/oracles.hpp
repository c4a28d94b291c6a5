#pragma once
// Brute-force reference computations used only by the tests.  These favour
// transparent enumeration over speed so that the library proper can be
// checked against something independent.

#include <toric/lattice.hpp>

#include <vector>

namespace oracle {

using toric::Cone;
using toric::Int;
using toric::LatticeVector;
using toric::Rat;

// Every irreducible element of a 2D cone semigroup has both cone coordinates
// in [0, 1]; enumerate a slightly larger box and filter to the irreducibles.
inline std::vector<LatticeVector> hilbert_2d(const LatticeVector& c1, const LatticeVector& c2) {
  if (toric::det2(c1, c2) == 0) throw std::invalid_argument("oracle: degenerate 2D cone");
  auto member = [&](const LatticeVector& x) {
    auto s = toric::solve2(c1, c2, x);
    return s && s->first >= 0 && s->second >= 0;
  };
  Int lo0 = 0, hi0 = 0, lo1 = 0, hi1 = 0;
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      LatticeVector corner = (Int(i) * c1) + (Int(j) * c2);
      lo0 = std::min(lo0, corner[0]);
      hi0 = std::max(hi0, corner[0]);
      lo1 = std::min(lo1, corner[1]);
      hi1 = std::max(hi1, corner[1]);
    }
  std::vector<LatticeVector> cand;
  for (Int x = lo0; x <= hi0; ++x)
    for (Int y = lo1; y <= hi1; ++y) {
      LatticeVector p{x, y};
      if (p.is_zero() || !member(p)) continue;
      auto s = toric::solve2(c1, c2, p);
      if (s->first <= 2 && s->second <= 2) cand.push_back(p);
    }
  std::vector<LatticeVector> out;
  for (const auto& z : cand) {
    bool reducible = false;
    for (const auto& w : cand) {
      if (w == z) continue;
      LatticeVector d = z - w;
      if (!d.is_zero() && member(d)) { reducible = true; break; }
    }
    if (!reducible) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// 2D cones sitting inside Z^3: run the planar oracle in the saturated
// lattice of the wall plane and map back.
inline std::vector<LatticeVector> hilbert_wall(const Cone& wall) {
  toric::PlaneBasis pb = toric::plane_lattice_basis(wall);
  LatticeVector a{pb.coords[0].first, pb.coords[0].second};
  LatticeVector b{pb.coords[1].first, pb.coords[1].second};
  std::vector<LatticeVector> out;
  for (const auto& p : hilbert_2d(a, b)) out.push_back(p[0] * pb.b1 + p[1] * pb.b2);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<LatticeVector> hilbert_3d(const Cone& c) {
  const auto& r = c.rays();
  if (r.size() != 3) throw std::invalid_argument("oracle: simplicial 3D cones only");
  auto member = [&](const LatticeVector& x) {
    auto b = toric::barycentric3(r[0], r[1], r[2], x);
    return b && (*b)[0] >= 0 && (*b)[1] >= 0 && (*b)[2] >= 0;
  };
  std::array<Int, 3> lo{0, 0, 0}, hi{0, 0, 0};
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j)
      for (int k = 0; k <= 1; ++k) {
        LatticeVector corner = (Int(i) * r[0]) + (Int(j) * r[1]) + (Int(k) * r[2]);
        for (int t = 0; t < 3; ++t) {
          lo[static_cast<std::size_t>(t)] = std::min(lo[static_cast<std::size_t>(t)], corner[t]);
          hi[static_cast<std::size_t>(t)] = std::max(hi[static_cast<std::size_t>(t)], corner[t]);
        }
      }
  std::vector<LatticeVector> cand;
  for (Int x = lo[0]; x <= hi[0]; ++x)
    for (Int y = lo[1]; y <= hi[1]; ++y)
      for (Int z = lo[2]; z <= hi[2]; ++z) {
        LatticeVector p{x, y, z};
        if (p.is_zero() || !member(p)) continue;
        auto bc = toric::barycentric3(r[0], r[1], r[2], p);
        if ((*bc)[0] <= 1 && (*bc)[1] <= 1 && (*bc)[2] <= 1) cand.push_back(p);
      }
  std::vector<LatticeVector> out;
  for (const auto& z : cand) {
    bool reducible = false;
    for (const auto& w : cand) {
      if (w == z) continue;
      LatticeVector d = z - w;
      if (!d.is_zero() && member(d)) { reducible = true; break; }
    }
    if (!reducible) out.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// All lattice points on the lower boundary of the hull of the nonzero
// lattice points of cone((0,1), mu), from (0,1) to mu: Andrew's monotone
// chain for the strict corners, then gcd steps to fill each edge.
inline std::vector<LatticeVector> gamma_boundary(const LatticeVector& mu) {
  std::vector<LatticeVector> pts;
  for (Int u = 0; u <= mu[0]; ++u)
    for (Int v = 1; v <= mu[1]; ++v)
      if (mu[0] * v - mu[1] * u >= 0) pts.push_back({u, v});
  std::sort(pts.begin(), pts.end());
  std::vector<LatticeVector> hull;
  auto cross = [](const LatticeVector& a, const LatticeVector& b, const LatticeVector& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  };
  for (const auto& p : pts) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    LatticeVector d = hull[i + 1] - hull[i];
    Int g = d.content();
    LatticeVector step{d[0] / g, d[1] / g};
    for (Int k = 0; k < g; ++k) out.push_back(hull[i] + k * step);
  }
  out.push_back(hull.back());
  return out;
}

// Exhaustive minimization of m(u, v) = p v - q u over the nonzero lattice
// points of cone((0,1), mu) with coordinates <= bound.
struct GammaMinBrute {
  Int value;
  std::vector<LatticeVector> argmins;  // lex order
};
inline GammaMinBrute gamma_min_brute(Int p, Int q, const LatticeVector& mu, Int bound) {
  GammaMinBrute out{0, {}};
  bool first = true;
  for (Int u = 0; u <= bound; ++u)
    for (Int v = 1; v <= bound; ++v) {
      if (mu[0] * v - mu[1] * u < 0) continue;
      Int m = p * v - q * u;
      if (first || m < out.value) {
        out.value = m;
        out.argmins.clear();
        first = false;
      }
      if (m == out.value) out.argmins.push_back({u, v});
    }
  return out;
}

}  // namespace oracle
