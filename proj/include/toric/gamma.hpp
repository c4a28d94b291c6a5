#pragma once
// The plane hulls Gamma_{(mu_x, mu_z)}: for a weight pair (p, q) the hull of
// the lattice points of the cone spanned by (0, 1) and an admissible anchor
// (mu_x, mu_z).  Provides the boundary vertices, the minimizer of
// m(u, v) = p v - q u, membership tests, and the order-gap ceilings per
// surface family.

#include <vector>

#include "resolution.hpp"

namespace toric {

struct GammaHull {
  Int p, q;
  LatticeVector anchor;                 // (mu_x, mu_z)
  std::vector<LatticeVector> vertices;  // boundary lattice points, (0,1) first
};

// The admissible anchors are exactly the positive boundary points of the
// cone spanned by (0,1) and (p,q); the hull vertices are the boundary points
// of the subcone cut at the anchor.
inline GammaHull gamma_hull(const LatticeVector& mu, const std::pair<Int, Int>& pq) {
  const Int p = pq.first, q = pq.second;
  if (q < 3 || p <= q || gcd(p, q) != 1)
    throw std::invalid_argument("gamma_hull requires coprime p > q >= 3");
  if (mu.dim() != 2 || !mu.all_positive())
    throw std::invalid_argument("gamma_hull: the anchor must be a positive pair");

  std::vector<LatticeVector> full =
      hilbert_basis_2d(Cone({LatticeVector{0, 1}, LatticeVector{p, q}}));
  if (std::find(full.begin(), full.end(), mu) == full.end())
    throw std::invalid_argument("gamma_hull: " + mu.str() + " is not a mu-candidate pair");

  GammaHull h;
  h.p = p;
  h.q = q;
  h.anchor = mu;
  h.vertices = hilbert_basis_2d(Cone({LatticeVector{0, 1}, mu}));

  // boundary sanity: abscissae strictly increase and every face has slope in
  // [0, q/p)
  for (std::size_t i = 0; i + 1 < h.vertices.size(); ++i) {
    Int du = h.vertices[i + 1][0] - h.vertices[i][0];
    Int dv = h.vertices[i + 1][1] - h.vertices[i][1];
    if (du <= 0 || dv < 0 || dv * p >= du * q)
      throw std::logic_error("gamma_hull: boundary violates the slope bounds");
  }
  return h;
}

struct GammaMin {
  LatticeVector point;
  Int value;    // p*v - q*u at the minimizer
  bool on_ray;  // minimum attained along the whole (p,q) ray
};

// m(u,v) = p v - q u strictly decreases along every compact face toward the
// anchor, so the anchor is the minimizer; it degenerates to the full (p,q)
// ray exactly when the anchor is (p,q) itself.
inline GammaMin gamma_min(const GammaHull& h) {
  Int value = h.p * h.anchor[1] - h.q * h.anchor[0];
  bool ray = h.anchor[0] == h.p && h.anchor[1] == h.q;
  return {h.anchor, value, ray};
}

// membership in the unbounded hull: inside the cone of (0,1) and the anchor,
// and on or above every compact face
inline bool gamma_member(const LatticeVector& pt, const GammaHull& h) {
  if (pt.dim() != 2) throw std::invalid_argument("gamma_member expects a plane point");
  if (pt[0] < 0) return false;
  if (h.anchor[0] * pt[1] - h.anchor[1] * pt[0] < 0) return false;
  for (std::size_t i = 0; i + 1 < h.vertices.size(); ++i) {
    const LatticeVector& a = h.vertices[i];
    const LatticeVector& b = h.vertices[i + 1];
    // inward normal of the face a -> b
    Int nu = a[1] - b[1], nv = b[0] - a[0];
    if (nu * pt[0] + nv * pt[1] < nu * a[0] + nv * a[1]) return false;
  }
  return pt[1] >= 1;
}

struct OrderGapBounds {
  LatticeVector gaps;     // mu - eta componentwise
  LatticeVector ceiling;  // admissible ceiling for the family
  bool within;
};

inline OrderGapBounds order_gap_bounds(const SurfaceSpec& s, const LatticeVector& mu,
                                       const LatticeVector& eta) {
  if (mu_candidates(s).count(mu) == 0)
    throw std::invalid_argument("order_gap_bounds: " + mu.str() +
                                " is not a mu-candidate of " + s.name());
  if (eta.dim() != 3 || !eta.all_positive())
    throw std::invalid_argument("order_gap_bounds: eta must be strictly positive");
  for (int j = 0; j < 3; ++j)
    if (eta[j] > mu[j]) throw std::invalid_argument("order_gap_bounds: eta exceeds mu");

  OrderGapBounds out;
  out.gaps = mu - eta;
  switch (s.family()) {
    case Family::Bpq:
      out.ceiling = {s.p() - 1, s.p() - 1, s.q() - 1};
      break;
    case Family::E6:
      out.ceiling = {4, 2, 2};
      break;
    case Family::E7:
      out.ceiling = {6, 4, 3};
      break;
    case Family::Dn:
      out.ceiling = {s.n() - 2, s.n() - 3, 1};
      break;
    case Family::Custom:
      throw std::invalid_argument("order_gap_bounds: custom surfaces are not supported");
  }
  out.within = true;
  for (int j = 0; j < 3; ++j)
    if (out.gaps[j] > out.ceiling[j]) out.within = false;
  return out;
}

}  // namespace toric
