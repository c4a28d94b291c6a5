#pragma once
// Newton polyhedron of a polynomial in three variables, its normal fan
// restricted to the positive octant, and the nondegeneracy test for the
// compact faces.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "modp.hpp"
#include "poly.hpp"

namespace toric {

struct NPEdge {
  int a = 0, b = 0;     // vertex indices, a < b
  Int lattice_length;   // number of lattice segments on the edge
};

struct NPFacet {
  LatticeVector normal;       // primitive, strictly positive
  Int value;                  // min of normal over the support
  std::vector<int> vertices;  // incident vertex indices, ascending
};

// Vertices, compact edges and compact facets of the Newton polyhedron.
class NewtonPolyhedron {
 public:
  std::vector<LatticeVector> vertices;  // lexicographically sorted
  std::vector<NPEdge> edges;            // sorted by (a, b)
  std::vector<NPFacet> facets;          // sorted by normal
};

// Normal fan of the Newton polyhedron.  Its support is the whole positive
// octant; maximal cones are dual to polyhedron vertices and need not be
// simplicial.
class Fan {
 public:
  Fan() = default;
  Fan(std::vector<LatticeVector> rays, std::vector<std::vector<int>> max_cones,
      std::vector<std::array<int, 2>> walls)
      : rays_(std::move(rays)), max_cones_(std::move(max_cones)), walls_(std::move(walls)) {
    validate();
  }

  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<std::vector<int>>& max_cones() const { return max_cones_; }
  const std::vector<std::array<int, 2>>& walls() const { return walls_; }

  std::vector<LatticeVector> max_cone_rays(int k) const {
    std::vector<LatticeVector> out;
    for (int i : max_cones_.at(static_cast<std::size_t>(k)))
      out.push_back(rays_.at(static_cast<std::size_t>(i)));
    return out;
  }

  Cone wall_cone(int k) const {
    const auto& w = walls_.at(static_cast<std::size_t>(k));
    return Cone({rays_.at(static_cast<std::size_t>(w[0])), rays_.at(static_cast<std::size_t>(w[1]))});
  }

  int ray_index(const LatticeVector& r) const {
    auto it = std::lower_bound(rays_.begin(), rays_.end(), r);
    if (it == rays_.end() || !(*it == r)) return -1;
    return static_cast<int>(it - rays_.begin());
  }

  bool operator==(const Fan& o) const {
    return rays_ == o.rays_ && max_cones_ == o.max_cones_ && walls_ == o.walls_;
  }

 private:
  void validate() const {
    for (const auto& r : rays_) {
      if (r.dim() != 3 || r.is_zero() || !r.all_nonnegative())
        throw std::invalid_argument("Fan: rays must be nonzero and nonnegative");
      if (!(primitive(r) == r)) throw std::invalid_argument("Fan: rays must be primitive");
    }
    if (!std::is_sorted(rays_.begin(), rays_.end()))
      throw std::invalid_argument("Fan: rays must be sorted");
    for (std::size_t i = 1; i < rays_.size(); ++i)
      if (rays_[i] == rays_[i - 1]) throw std::invalid_argument("Fan: duplicate ray");
    auto check_index = [&](int i) {
      if (i < 0 || i >= static_cast<int>(rays_.size()))
        throw std::invalid_argument("Fan: ray index out of range");
    };
    for (const auto& mc : max_cones_) {
      if (mc.size() < 3) throw std::invalid_argument("Fan: maximal cone with fewer than 3 rays");
      for (int i : mc) check_index(i);
      if (!std::is_sorted(mc.begin(), mc.end()))
        throw std::invalid_argument("Fan: maximal cone indices must be sorted");
    }
    for (const auto& w : walls_) {
      check_index(w[0]);
      check_index(w[1]);
      if (w[0] >= w[1]) throw std::invalid_argument("Fan: wall indices must be increasing");
    }
  }

  std::vector<LatticeVector> rays_;
  std::vector<std::vector<int>> max_cones_;
  std::vector<std::array<int, 2>> walls_;
};

namespace detail {

inline std::vector<LatticeVector> support_points(const SupportPoly& g) {
  std::vector<LatticeVector> pts;
  for (const auto& [e, c] : g.terms()) pts.push_back(e);
  return pts;
}

inline std::vector<int> argmin_indices(const std::vector<LatticeVector>& pts,
                                       const LatticeVector& w) {
  Int best = 0;
  bool have = false;
  std::vector<int> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Int v = dot(w, pts[i]);
    if (!have || v < best) {
      best = v;
      have = true;
      out.assign(1, static_cast<int>(i));
    } else if (v == best) {
      out.push_back(static_cast<int>(i));
    }
  }
  return out;
}

// Dimension of the face supported by w: affine dimension of the argmin set
// together with the coordinate directions on which w vanishes.
inline int face_dim(const std::vector<LatticeVector>& pts, const std::vector<int>& argmin,
                    const LatticeVector& w) {
  std::vector<LatticeVector> span;
  const LatticeVector& base = pts[static_cast<std::size_t>(argmin[0])];
  for (std::size_t k = 1; k < argmin.size(); ++k)
    span.push_back(pts[static_cast<std::size_t>(argmin[k])] - base);
  for (int j = 0; j < 3; ++j)
    if (w[j] == 0) {
      LatticeVector unit{0, 0, 0};
      unit[j] = 1;
      span.push_back(unit);
    }
  return rank_of(span);
}

struct NewtonData {
  NewtonPolyhedron poly;
  Fan fan;
  std::vector<LatticeVector> support;
};

inline NewtonData build_newton(const SupportPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("newton_polyhedron: zero polynomial");
  NewtonData nd;
  nd.support = support_points(g);
  const auto& E = nd.support;

  // Candidate inner facet normals: coordinate directions, cross products of
  // support differences with coordinate directions, and cross products of
  // pairs of support differences.  Every facet normal arises this way.
  std::set<LatticeVector> cand;
  auto offer = [&cand](const LatticeVector& n) {
    if (n.is_zero()) return;
    LatticeVector p = primitive(n);
    if (p.all_nonnegative()) cand.insert(p);
    LatticeVector m = -p;
    if (m.all_nonnegative()) cand.insert(m);
  };
  offer({1, 0, 0});
  offer({0, 1, 0});
  offer({0, 0, 1});
  for (std::size_t i = 0; i < E.size(); ++i)
    for (std::size_t j = i + 1; j < E.size(); ++j) {
      LatticeVector d = E[j] - E[i];
      for (int k = 0; k < 3; ++k) {
        LatticeVector unit{0, 0, 0};
        unit[k] = 1;
        offer(cross(d, unit));
      }
      for (std::size_t k = j + 1; k < E.size(); ++k)
        offer(cross(d, E[k] - E[i]));
    }

  struct FacetData {
    LatticeVector normal;
    Int value;
    std::vector<int> argmin;
  };
  std::vector<FacetData> facets;
  for (const auto& n : cand) {
    auto am = argmin_indices(E, n);
    if (face_dim(E, am, n) == 2) {
      Int v = dot(n, E[static_cast<std::size_t>(am[0])]);
      facets.push_back({n, v, am});
    }
  }

  // Vertices: support points whose active facet normals span rank 3.
  std::vector<LatticeVector> vertices;
  std::vector<std::vector<int>> active_facets_of_vertex;
  for (std::size_t i = 0; i < E.size(); ++i) {
    std::vector<LatticeVector> active;
    for (const auto& f : facets)
      if (dot(f.normal, E[i]) == f.value) active.push_back(f.normal);
    if (rank_of(active) == 3) vertices.push_back(E[i]);
  }
  std::sort(vertices.begin(), vertices.end());
  nd.poly.vertices = vertices;

  // Compact edges: vertex pairs whose common active normals span rank 2.
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      std::vector<LatticeVector> common;
      for (const auto& f : facets)
        if (dot(f.normal, vertices[i]) == f.value && dot(f.normal, vertices[j]) == f.value)
          common.push_back(f.normal);
      if (rank_of(common) == 2) {
        NPEdge e;
        e.a = static_cast<int>(i);
        e.b = static_cast<int>(j);
        e.lattice_length = (vertices[j] - vertices[i]).content();
        nd.poly.edges.push_back(e);
      }
    }

  // Compact facets have strictly positive normals.
  for (const auto& f : facets) {
    if (!f.normal.all_positive()) continue;
    NPFacet pf;
    pf.normal = f.normal;
    pf.value = f.value;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (dot(f.normal, vertices[i]) == f.value) pf.vertices.push_back(static_cast<int>(i));
    nd.poly.facets.push_back(pf);
  }
  std::sort(nd.poly.facets.begin(), nd.poly.facets.end(),
            [](const NPFacet& a, const NPFacet& b) { return a.normal < b.normal; });

  // Fan rays: all facet normals, sorted.
  std::vector<LatticeVector> rays;
  for (const auto& f : facets) rays.push_back(f.normal);
  std::sort(rays.begin(), rays.end());

  // Maximal cones are the normal cones of the vertices.
  std::vector<std::vector<int>> max_cones;
  for (const auto& v : vertices) {
    std::vector<int> mc;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      auto am = argmin_indices(E, rays[r]);
      Int c = dot(rays[r], E[static_cast<std::size_t>(am[0])]);
      if (dot(rays[r], v) == c) mc.push_back(static_cast<int>(r));
    }
    max_cones.push_back(mc);
  }
  std::sort(max_cones.begin(), max_cones.end());

  // Walls: ray pairs inside a common maximal cone supporting a face of
  // dimension one.
  std::set<std::array<int, 2>> wallset;
  for (const auto& mc : max_cones)
    for (std::size_t a = 0; a < mc.size(); ++a)
      for (std::size_t b = a + 1; b < mc.size(); ++b) {
        const LatticeVector& r1 = rays[static_cast<std::size_t>(mc[a])];
        const LatticeVector& r2 = rays[static_cast<std::size_t>(mc[b])];
        auto am = argmin_indices(E, r1 + r2);
        if (face_dim(E, am, r1 + r2) == 1) wallset.insert({mc[a], mc[b]});
      }
  std::vector<std::array<int, 2>> walls(wallset.begin(), wallset.end());

  nd.fan = Fan(std::move(rays), std::move(max_cones), std::move(walls));
  return nd;
}

}  // namespace detail

inline NewtonPolyhedron newton_polyhedron(const SupportPoly& g) {
  return detail::build_newton(g).poly;
}

inline Fan newton_fan(const SupportPoly& g) { return detail::build_newton(g).fan; }

// All two-dimensional cones of the fan, in wall order.
inline std::vector<Cone> two_skeleton(const Fan& f) {
  std::vector<Cone> out;
  for (std::size_t k = 0; k < f.walls().size(); ++k)
    out.push_back(f.wall_cone(static_cast<int>(k)));
  return out;
}

// Restriction of g to the face of its Newton polyhedron selected by the
// weight w (all terms of minimal w-value).
inline SupportPoly face_poly(const SupportPoly& g, const LatticeVector& w) {
  if (g.is_zero()) throw std::invalid_argument("face_poly: zero polynomial");
  if (w.dim() != 3 || w.is_zero() || !w.all_nonnegative())
    throw std::invalid_argument("face_poly: weight must be nonzero and nonnegative");
  Int best = 0;
  bool have = false;
  for (const auto& [e, c] : g.terms()) {
    Int v = dot(w, e);
    if (!have || v < best) { best = v; have = true; }
  }
  SupportPoly out;
  for (const auto& [e, c] : g.terms())
    if (dot(w, e) == best) out.add_term(e, c);
  return out;
}

enum class Verdict { Yes, No, Unknown };
enum class NondegMode { Exact, Probabilistic };

struct NondegResult {
  Verdict verdict = Verdict::Yes;
  std::string detail;
  std::vector<LatticeVector> face;  // support of the offending or undecided face
};

namespace detail {

// Exact squarefreeness test (away from zero) for a face supported on a
// segment: the face restricts to a univariate polynomial H with H(0) != 0;
// the face is degenerate iff H has a repeated root.
inline bool segment_face_degenerate(const std::vector<LatticeVector>& pts,
                                    const std::vector<Rat>& coeffs) {
  const LatticeVector dir = primitive(pts.back() - pts.front());
  // H coefficients indexed by the integer position along the segment.
  std::map<Int, Rat> H;
  Int maxdeg = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    LatticeVector d = pts[i] - pts.front();
    Int t = 0;
    for (int j = 0; j < 3; ++j)
      if (dir[j] != 0) { t = d[j] / dir[j]; break; }
    if (!(t * dir == d) || t < 0) throw std::logic_error("segment face: point off the segment");
    H[t] += coeffs[i];
    maxdeg = std::max(maxdeg, t);
  }
  std::vector<Rat> h(static_cast<std::size_t>(maxdeg.convert_to<long long>()) + 1, Rat(0));
  for (const auto& [t, c] : H) h[static_cast<std::size_t>(t.convert_to<long long>())] = c;
  auto degree = [](const std::vector<Rat>& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[static_cast<std::size_t>(d)] == 0) --d;
    return d;
  };
  auto remainder = [&](std::vector<Rat> a, const std::vector<Rat>& b) {
    int db = degree(b);
    while (degree(a) >= db && db >= 0) {
      int da = degree(a);
      Rat c = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
      for (int i = 0; i <= db; ++i)
        a[static_cast<std::size_t>(da - db + i)] -= c * b[static_cast<std::size_t>(i)];
      a[static_cast<std::size_t>(da)] = 0;
    }
    return a;
  };
  std::vector<Rat> a = h, b;
  for (std::size_t i = 1; i < h.size(); ++i) b.push_back(Rat(Int(i)) * h[i]);
  while (degree(b) >= 0) {
    auto r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  // gcd = a; H(0) != 0 forces every root of the gcd to be nonzero.
  return degree(a) >= 1;
}

struct FaceClass {
  std::vector<LatticeVector> pts;
  std::vector<Rat> coeffs;
};

// Probabilistic critical-point search for a two-dimensional face with at
// least four support points, run modulo a large prime.
inline Verdict planar_face_probabilistic(const FaceClass& fc, std::string& detail) {
  // Coordinates in the saturated lattice of the face plane.
  std::vector<LatticeVector> diffs;
  for (std::size_t i = 1; i < fc.pts.size(); ++i) diffs.push_back(fc.pts[i] - fc.pts[0]);
  LatticeVector normal{0, 0, 0};
  for (std::size_t i = 0; i < diffs.size() && normal.is_zero(); ++i)
    for (std::size_t j = i + 1; j < diffs.size() && normal.is_zero(); ++j)
      normal = cross(diffs[i], diffs[j]);
  if (normal.is_zero()) throw std::logic_error("planar face: support is not planar");
  auto [b1, b2] = kernel_basis(primitive(normal));
  std::vector<std::pair<Int, Int>> uv;
  Int minu = 0, minv = 0;
  for (const auto& d : diffs) {
    auto s = solve_in_plane(b1, b2, d);
    if (!s || denominator(s->first) != 1 || denominator(s->second) != 1)
      throw std::logic_error("planar face: point outside saturated lattice");
    uv.emplace_back(numerator(s->first), numerator(s->second));
  }
  uv.emplace_back(0, 0);  // the base point itself
  for (const auto& [u, v] : uv) {
    minu = std::min(minu, u);
    minv = std::min(minv, v);
  }

  const std::array<modp::u64, 3> primes = {1000000007ULL, 998244353ULL, 754974721ULL};
  std::mt19937_64 rng(0x746f726963ULL);
  bool all_trivial = true;
  for (modp::u64 pr : primes) {
    modp::Field F{pr};
    // Laurent shift to nonnegative exponents.
    long long maxu = 0, maxv = 0;
    std::vector<std::array<long long, 2>> ee;
    for (const auto& [u, v] : uv) {
      long long uu = (u - minu).convert_to<long long>();
      long long vv = (v - minv).convert_to<long long>();
      ee.push_back({uu, vv});
      maxu = std::max(maxu, uu);
      maxv = std::max(maxv, vv);
    }
    modp::BiPoly G(static_cast<std::size_t>(maxv) + 1);
    for (auto& row : G) row.assign(static_cast<std::size_t>(maxu) + 1, 0);
    bool ok = true;
    // uv was built from the diffs first and the base point last; align the
    // coefficients the same way.
    std::vector<Rat> aligned;
    for (std::size_t i = 1; i < fc.pts.size(); ++i) aligned.push_back(fc.coeffs[i]);
    aligned.push_back(fc.coeffs[0]);
    for (std::size_t i = 0; i < ee.size(); ++i) {
      modp::u64 c;
      if (!F.from_rat(aligned[i], c)) { ok = false; break; }
      auto [uu, vv] = ee[i];
      auto su = static_cast<std::size_t>(uu);
      auto sv = static_cast<std::size_t>(vv);
      G[sv][su] = F.add(G[sv][su], c);
    }
    if (!ok) continue;
    for (auto& row : G) modp::trim(row);
    modp::trim_bi(G);
    // Shifting the Laurent support by a monomial does not change the
    // critical locus on the torus, so the log-derivatives of the shifted G
    // carry the same information.
    auto deriv_u = [&](const modp::BiPoly& f) {
      modp::BiPoly r = f;
      for (auto& row : r) {
        for (std::size_t i = 0; i < row.size(); ++i)
          row[i] = F.mul(row[i], static_cast<modp::u64>(i % pr));
        modp::trim(row);
      }
      modp::trim_bi(r);
      return r;
    };
    auto deriv_v = [&](const modp::BiPoly& f) {
      modp::BiPoly r = f;
      for (std::size_t j = 0; j < r.size(); ++j) {
        for (auto& cc : r[j]) cc = F.mul(cc, static_cast<modp::u64>(j % pr));
        modp::trim(r[j]);
      }
      modp::trim_bi(r);
      return r;
    };
    modp::BiPoly A = deriv_u(G), B = deriv_v(G);
    auto univariate_or_resultant = [&](const modp::BiPoly& X) -> modp::Poly {
      if (X.size() <= 1) return X.empty() ? modp::Poly{} : X[0];
      return modp::resultant_v(F, G, X);
    };
    modp::Poly r1 = univariate_or_resultant(A);
    modp::Poly r2 = univariate_or_resultant(B);
    modp::Poly r = modp::gcd(F, r1, r2);
    // Strip roots at u = 0; only torus points matter.
    while (!r.empty() && r[0] == 0) r.erase(r.begin());
    if (modp::deg(r) <= 0) continue;  // no torus-critical u over this prime
    all_trivial = false;
    for (modp::u64 u0 : modp::roots(F, r, rng)) {
      if (u0 == 0) continue;
      modp::Poly gu = modp::eval_u(F, G, u0);
      modp::Poly au = modp::eval_u(F, A, u0);
      modp::Poly bu = modp::eval_u(F, B, u0);
      modp::Poly t = modp::gcd(F, modp::gcd(F, gu, au), bu);
      for (modp::u64 v0 : modp::roots(F, t, rng)) {
        if (v0 == 0) continue;
        if (modp::eval(F, gu, v0) == 0 && modp::eval(F, au, v0) == 0 &&
            modp::eval(F, bu, v0) == 0) {
          detail = "critical point of a face polynomial modulo p=" + std::to_string(pr) +
                   " at (u, v) = (" + std::to_string(u0) + ", " + std::to_string(v0) +
                   ") in face-lattice coordinates";
          return Verdict::No;
        }
      }
    }
  }
  if (all_trivial) return Verdict::Yes;
  detail = "face has four or more coplanar support points; no rational critical point found";
  return Verdict::Unknown;
}

inline Verdict analyze_face(const FaceClass& fc, NondegMode mode, std::string& detail) {
  const std::size_t m = fc.pts.size();
  if (m == 1) return Verdict::Yes;
  // A variable occurring in exactly one term makes that partial derivative a
  // single monomial, which cannot vanish on the torus.
  for (int j = 0; j < 3; ++j) {
    int count = 0;
    for (const auto& e : fc.pts)
      if (e[j] > 0) ++count;
    if (count == 1) return Verdict::Yes;
  }
  std::vector<LatticeVector> diffs;
  for (std::size_t i = 1; i < m; ++i) diffs.push_back(fc.pts[i] - fc.pts[0]);
  int arank = rank_of(diffs);
  if (arank == 1) {
    if (segment_face_degenerate(fc.pts, fc.coeffs)) {
      detail = "face polynomial on a segment has a repeated factor off the coordinate axes";
      return Verdict::No;
    }
    return Verdict::Yes;
  }
  if (m == 3) return Verdict::Yes;  // affinely independent triangle
  if (mode == NondegMode::Exact) {
    detail = "face has four or more coplanar support points; exact criteria are inconclusive";
    return Verdict::Unknown;
  }
  return planar_face_probabilistic(fc, detail);
}

}  // namespace detail

// Kouchnirenko nondegeneracy of g along the compact faces of its Newton
// polyhedron.  Exact criteria settle monomial, segment and triangle faces;
// larger planar faces fall back to a prime-field critical-point search in
// probabilistic mode and are reported as unknown in exact mode.
inline NondegResult is_nondegenerate(const SupportPoly& g,
                                     NondegMode mode = NondegMode::Probabilistic) {
  detail::NewtonData nd = detail::build_newton(g);
  const auto& V = nd.poly.vertices;

  std::vector<detail::FaceClass> faces;
  // Compact edges.
  for (const auto& e : nd.poly.edges) {
    const LatticeVector& a = V[static_cast<std::size_t>(e.a)];
    const LatticeVector& b = V[static_cast<std::size_t>(e.b)];
    detail::FaceClass fc;
    LatticeVector d = b - a;
    for (const auto& [pt, c] : g.terms()) {
      LatticeVector q = pt - a;
      if (!cross(q, d).is_zero()) continue;
      // q = (num/den) * d must hold exactly with 0 <= num/den <= 1.
      Int num = dot(q, d), den = dot(d, d);
      if (num < 0 || num > den) continue;
      bool on_segment = true;
      for (int j = 0; j < 3; ++j)
        if (num * d[j] != den * q[j]) { on_segment = false; break; }
      if (!on_segment) continue;
      fc.pts.push_back(pt);
      fc.coeffs.push_back(c);
    }
    faces.push_back(std::move(fc));
  }
  // Compact facets.
  for (const auto& f : nd.poly.facets) {
    detail::FaceClass fc;
    for (const auto& [pt, c] : g.terms())
      if (dot(f.normal, pt) == f.value) {
        fc.pts.push_back(pt);
        fc.coeffs.push_back(c);
      }
    faces.push_back(std::move(fc));
  }

  NondegResult res;
  bool saw_unknown = false;
  NondegResult unknown_res;
  for (const auto& fc : faces) {
    std::string detail_msg;
    Verdict v = detail::analyze_face(fc, mode, detail_msg);
    if (v == Verdict::No) {
      res.verdict = Verdict::No;
      res.detail = detail_msg;
      res.face = fc.pts;
      return res;
    }
    if (v == Verdict::Unknown && !saw_unknown) {
      saw_unknown = true;
      unknown_res.verdict = Verdict::Unknown;
      unknown_res.detail = detail_msg;
      unknown_res.face = fc.pts;
    }
  }
  if (saw_unknown) return unknown_res;
  res.verdict = Verdict::Yes;
  res.detail = "all compact faces pass";
  return res;
}

}  // namespace toric
