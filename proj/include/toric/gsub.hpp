#pragma once
// G-regular subdivision of a Newton fan: every wall is refined by its Hilbert
// chain, the maximal cones are triangulated and then stellarly subdivided at
// Hilbert-basis points of their ambient cone until all cones are regular.
// Every refined ray therefore belongs to the Hilbert basis of the smallest
// original cone containing it.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "newton.hpp"

namespace toric {

struct RayHome {
  int dim = 0;                 // dimension of the smallest original cone containing the ray
  std::vector<int> orig_rays;  // generator indices of that cone in the original fan

  bool operator==(const RayHome& o) const { return dim == o.dim && orig_rays == o.orig_rays; }
};

class GSubdivision {
 public:
  GSubdivision(Fan original, Fan refined, std::vector<RayHome> homes)
      : original_(std::move(original)), refined_(std::move(refined)), homes_(std::move(homes)) {
    if (homes_.size() != refined_.rays().size())
      throw std::invalid_argument("GSubdivision: one home per refined ray required");
  }

  const Fan& original() const { return original_; }
  const Fan& refined() const { return refined_; }
  const std::vector<RayHome>& ray_homes() const { return homes_; }

 private:
  Fan original_, refined_;
  std::vector<RayHome> homes_;
};

// Refinement of a single two-dimensional cone into the regular subcones
// spanned by consecutive Hilbert chain members.
inline std::vector<Cone> subdivide_wall(const Cone& w) {
  auto chain = hilbert_basis_2d(w);
  std::vector<Cone> out;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    out.push_back(Cone({chain[i], chain[i + 1]}));
  return out;
}

namespace detail {

// Hilbert basis of a full-dimensional cone given by its extremal rays;
// non-simplicial cones are triangulated and the parallelepiped candidates
// pooled before the global minimality filter.
inline std::vector<LatticeVector> hilbert_basis_cone3(const std::vector<LatticeVector>& rays) {
  if (rays.size() == 3) return hilbert_basis_3d(Cone({rays[0], rays[1], rays[2]}));
  auto order = cyclic_order(rays);
  std::set<LatticeVector> cand(rays.begin(), rays.end());
  for (std::size_t k = 1; k + 1 < order.size(); ++k) {
    const auto& a = rays[static_cast<std::size_t>(order[0])];
    const auto& b = rays[static_cast<std::size_t>(order[k])];
    const auto& c = rays[static_cast<std::size_t>(order[k + 1])];
    for (const auto& p : parallelepiped_points(a, b, c)) cand.insert(p);
  }
  auto member = [&](const LatticeVector& x) { return cone3_contains(rays, x); };
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
  return out;
}

}  // namespace detail

// Error carrying the cone that could not be split any further.
class SubdivisionError : public std::runtime_error {
 public:
  explicit SubdivisionError(const std::string& what) : std::runtime_error(what) {}
};

inline GSubdivision g_subdivide(const Fan& fan) {
  // Global registry of refined rays, in deterministic construction order.
  std::map<LatticeVector, int> index_of;
  std::vector<LatticeVector> rvec;
  std::vector<RayHome> homes;
  auto add_ray = [&](const LatticeVector& v, const RayHome& h) {
    auto it = index_of.find(v);
    if (it != index_of.end()) return it->second;
    int id = static_cast<int>(rvec.size());
    index_of.emplace(v, id);
    rvec.push_back(v);
    homes.push_back(h);
    return id;
  };
  for (std::size_t i = 0; i < fan.rays().size(); ++i)
    add_ray(fan.rays()[i], {1, {static_cast<int>(i)}});

  // Chains along every wall, shared by the adjacent maximal cones.
  std::map<std::array<int, 2>, std::vector<int>> wall_chain;
  for (const auto& w : fan.walls()) {
    auto chain = hilbert_basis_2d(Cone({fan.rays()[static_cast<std::size_t>(w[0])],
                                        fan.rays()[static_cast<std::size_t>(w[1])]}));
    std::vector<int> ids;
    for (const auto& p : chain) ids.push_back(add_ray(p, {2, {w[0], w[1]}}));
    wall_chain.emplace(w, std::move(ids));
  }

  std::vector<std::array<int, 3>> final_cones;
  for (const auto& mc : fan.max_cones()) {
    std::vector<LatticeVector> crays;
    for (int i : mc) crays.push_back(fan.rays()[static_cast<std::size_t>(i)]);
    auto order = cyclic_order(crays);

    // Boundary cycle of the cross-section polygon, refined along the walls.
    std::vector<int> cycle;
    for (std::size_t k = 0; k < order.size(); ++k) {
      int a = mc[static_cast<std::size_t>(order[k])];
      int b = mc[static_cast<std::size_t>(order[(k + 1) % order.size()])];
      std::array<int, 2> key{std::min(a, b), std::max(a, b)};
      auto it = wall_chain.find(key);
      if (it == wall_chain.end())
        throw std::logic_error("g_subdivide: consecutive rays of a maximal cone span no wall");
      std::vector<int> seq = it->second;
      if (seq.front() != a) std::reverse(seq.begin(), seq.end());
      for (std::size_t t = 0; t + 1 < seq.size(); ++t) cycle.push_back(seq[t]);
    }

    // Ear-clip the convex cycle into simplicial cones (zero-volume triples
    // are collinear runs on a wall and are skipped).
    std::set<std::array<int, 3>> cones;
    auto det_of = [&](int i, int j, int k) {
      return det3(rvec[static_cast<std::size_t>(i)], rvec[static_cast<std::size_t>(j)],
                  rvec[static_cast<std::size_t>(k)]);
    };
    auto add_cone = [&](int i, int j, int k) {
      std::array<int, 3> t{i, j, k};
      std::sort(t.begin(), t.end());
      cones.insert(t);
    };
    {
      std::vector<int> poly = cycle;
      while (poly.size() > 3) {
        bool clipped = false;
        for (std::size_t k = 0; k < poly.size() && !clipped; ++k) {
          std::size_t prev = (k + poly.size() - 1) % poly.size();
          std::size_t next = (k + 1) % poly.size();
          if (det_of(poly[prev], poly[k], poly[next]) == 0) continue;
          // clipping must not flatten the remainder onto one line; a safe
          // ear always exists since at most one corner of a convex cycle
          // has every other vertex on its chord
          bool remainder_flat = true;
          for (std::size_t j = 0; j < poly.size() && remainder_flat; ++j)
            if (j != k && det_of(poly[prev], poly[next], poly[j]) != 0) remainder_flat = false;
          if (remainder_flat) continue;
          add_cone(poly[prev], poly[k], poly[next]);
          poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(k));
          clipped = true;
        }
        if (!clipped) throw std::logic_error("g_subdivide: degenerate boundary cycle");
      }
      if (det_of(poly[0], poly[1], poly[2]) == 0)
        throw std::logic_error("g_subdivide: degenerate final triangle");
      add_cone(poly[0], poly[1], poly[2]);
    }

    // Hilbert basis of the ambient maximal cone; every pivot comes from it.
    std::vector<LatticeVector> hb = detail::hilbert_basis_cone3(crays);
    std::sort(hb.begin(), hb.end());

    auto bary_in = [&](const std::array<int, 3>& t, const LatticeVector& x) {
      return barycentric3(rvec[static_cast<std::size_t>(t[0])], rvec[static_cast<std::size_t>(t[1])],
                          rvec[static_cast<std::size_t>(t[2])], x);
    };
    auto contains = [&](const std::array<int, 3>& t, const LatticeVector& x) {
      auto b = bary_in(t, x);
      return b && (*b)[0] >= 0 && (*b)[1] >= 0 && (*b)[2] >= 0;
    };
    auto is_ray_of = [&](const std::array<int, 3>& t, const LatticeVector& x) {
      for (int i : t)
        if (rvec[static_cast<std::size_t>(i)] == x) return true;
      return false;
    };

    while (true) {
      // First non-regular cone in index order.
      const std::array<int, 3>* worst_cone = nullptr;
      for (const auto& t : cones)
        if (abs(det_of(t[0], t[1], t[2])) != 1) { worst_cone = &t; break; }
      if (!worst_cone) break;
      const std::array<int, 3> sigma = *worst_cone;

      // Candidate pivots: Hilbert basis members of the ambient cone lying in
      // sigma but not among its rays.
      std::vector<LatticeVector> candidates;
      for (const auto& h : hb)
        if (!is_ray_of(sigma, h) && contains(sigma, h)) candidates.push_back(h);
      if (candidates.empty()) {
        std::string msg = "no Hilbert-basis point splits the non-regular cone {";
        for (int i : sigma) msg += rvec[static_cast<std::size_t>(i)].str() + " ";
        msg.back() = '}';
        throw SubdivisionError(msg);
      }

      // Pick the pivot minimizing the largest determinant among all pieces
      // it creates (across every cone containing it); ties go to the
      // lexicographically smallest pivot.
      const LatticeVector* best = nullptr;
      Int best_metric = 0;
      for (const auto& h : candidates) {
        Int metric = 0;
        for (const auto& t : cones) {
          if (is_ray_of(t, h) || !contains(t, h)) continue;
          auto b = *bary_in(t, h);
          Int dt = abs(det_of(t[0], t[1], t[2]));
          for (int j = 0; j < 3; ++j) {
            if (b[static_cast<std::size_t>(j)] == 0) continue;
            // |det| of the piece with vertex j replaced by h
            Rat scaled = b[static_cast<std::size_t>(j)] * dt;
            if (denominator(scaled) != 1)
              throw std::logic_error("g_subdivide: non-integral piece determinant");
            metric = std::max(metric, Int(numerator(scaled)));
          }
        }
        if (!best || metric < best_metric) {
          best = &h;
          best_metric = metric;
        }
      }
      const LatticeVector pivot = *best;
      int pid = add_ray(pivot, {3, mc});

      std::vector<std::array<int, 3>> to_remove;
      std::vector<std::array<int, 3>> to_add;
      for (const auto& t : cones) {
        if (is_ray_of(t, pivot) || !contains(t, pivot)) continue;
        auto b = *bary_in(t, pivot);
        to_remove.push_back(t);
        for (int j = 0; j < 3; ++j) {
          if (b[static_cast<std::size_t>(j)] == 0) continue;
          std::array<int, 3> piece = t;
          piece[static_cast<std::size_t>(j)] = pid;
          std::sort(piece.begin(), piece.end());
          to_add.push_back(piece);
        }
      }
      for (const auto& t : to_remove) cones.erase(t);
      for (const auto& t : to_add) cones.insert(t);
    }

    for (const auto& t : cones) final_cones.push_back(t);
  }

  // Re-index rays lexicographically for the refined fan.
  std::vector<int> perm(rvec.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return rvec[static_cast<std::size_t>(a)] < rvec[static_cast<std::size_t>(b)]; });
  std::vector<int> where(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    where[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  std::vector<LatticeVector> sorted_rays;
  std::vector<RayHome> sorted_homes;
  for (int old : perm) {
    sorted_rays.push_back(rvec[static_cast<std::size_t>(old)]);
    sorted_homes.push_back(homes[static_cast<std::size_t>(old)]);
  }
  std::vector<std::vector<int>> mcs;
  std::set<std::array<int, 2>> wallset;
  for (const auto& t : final_cones) {
    std::vector<int> mc = {where[static_cast<std::size_t>(t[0])],
                           where[static_cast<std::size_t>(t[1])],
                           where[static_cast<std::size_t>(t[2])]};
    std::sort(mc.begin(), mc.end());
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b) wallset.insert({mc[static_cast<std::size_t>(a)], mc[static_cast<std::size_t>(b)]});
    mcs.push_back(std::move(mc));
  }
  std::sort(mcs.begin(), mcs.end());
  std::vector<std::array<int, 2>> walls(wallset.begin(), wallset.end());
  return GSubdivision(fan, Fan(std::move(sorted_rays), std::move(mcs), std::move(walls)),
                      std::move(sorted_homes));
}

struct GsubReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Independent audit of a subdivision: regular simplicial cones, containment
// in the original fan, exact cross-section area bookkeeping and the
// G-property (each refined ray lies in the Hilbert basis of the smallest
// original cone containing it).
inline GsubReport verify_g_property(const GSubdivision& s) {
  GsubReport rep;
  auto complain = [&rep](const std::string& msg) {
    rep.ok = false;
    rep.violations.push_back(msg);
  };
  const Fan& orig = s.original();
  const Fan& fine = s.refined();

  std::vector<std::vector<LatticeVector>> orig_cone_rays;
  for (std::size_t k = 0; k < orig.max_cones().size(); ++k)
    orig_cone_rays.push_back(orig.max_cone_rays(static_cast<int>(k)));

  // 1. regular simplicial cones, each inside some original maximal cone
  std::vector<Rat> area(orig.max_cones().size(), Rat(0));
  for (const auto& mc : fine.max_cones()) {
    if (mc.size() != 3) {
      complain("refined cone is not simplicial");
      continue;
    }
    const LatticeVector& a = fine.rays()[static_cast<std::size_t>(mc[0])];
    const LatticeVector& b = fine.rays()[static_cast<std::size_t>(mc[1])];
    const LatticeVector& c = fine.rays()[static_cast<std::size_t>(mc[2])];
    if (abs(det3(a, b, c)) != 1)
      complain("refined cone {" + a.str() + ", " + b.str() + ", " + c.str() + "} is not regular");
    bool placed = false;
    for (std::size_t k = 0; k < orig_cone_rays.size() && !placed; ++k) {
      if (cone3_contains(orig_cone_rays[k], a) && cone3_contains(orig_cone_rays[k], b) &&
          cone3_contains(orig_cone_rays[k], c)) {
        placed = true;
        area[k] += section_area({a, b, c});
      }
    }
    if (!placed)
      complain("refined cone {" + a.str() + ", " + b.str() + ", " + c.str() +
               "} lies in no original maximal cone");
  }

  // 2. exact area audit per original maximal cone
  for (std::size_t k = 0; k < orig_cone_rays.size(); ++k) {
    Rat want = section_area(orig_cone_rays[k]);
    if (area[k] != want)
      complain("cross-section area mismatch on original cone #" + std::to_string(k));
  }

  // 3. the G-property for every refined ray
  for (std::size_t i = 0; i < fine.rays().size(); ++i) {
    const LatticeVector& r = fine.rays()[i];
    const RayHome& home = s.ray_homes()[i];

    // smallest original cone containing r, recomputed from scratch
    int as_ray = orig.ray_index(r);
    if (as_ray >= 0) {
      if (home.dim != 1 || home.orig_rays != std::vector<int>{as_ray})
        complain("ray " + r.str() + " should have its own ray as home");
      continue;
    }
    std::vector<std::array<int, 2>> in_walls;
    for (const auto& w : orig.walls()) {
      const LatticeVector& a = orig.rays()[static_cast<std::size_t>(w[0])];
      const LatticeVector& b = orig.rays()[static_cast<std::size_t>(w[1])];
      auto sp = solve_in_plane(a, b, r);
      if (sp && sp->first >= 0 && sp->second >= 0) in_walls.push_back(w);
    }
    if (in_walls.size() > 1) {
      complain("ray " + r.str() + " lies on more than one original wall");
      continue;
    }
    if (in_walls.size() == 1) {
      const auto& w = in_walls[0];
      if (home.dim != 2 || home.orig_rays != std::vector<int>{w[0], w[1]})
        complain("ray " + r.str() + " has wrong stored home");
      auto chain = hilbert_basis_2d(Cone({orig.rays()[static_cast<std::size_t>(w[0])],
                                          orig.rays()[static_cast<std::size_t>(w[1])]}));
      if (std::find(chain.begin(), chain.end(), r) == chain.end())
        complain("ray " + r.str() + " is not in the Hilbert basis of its wall");
      continue;
    }
    bool found = false;
    for (std::size_t k = 0; k < orig_cone_rays.size(); ++k) {
      if (!cone3_contains(orig_cone_rays[k], r)) continue;
      found = true;
      if (home.dim != 3) complain("ray " + r.str() + " has wrong stored home dimension");
      auto hb = detail::hilbert_basis_cone3(orig_cone_rays[k]);
      if (std::find(hb.begin(), hb.end(), r) == hb.end())
        complain("ray " + r.str() + " is not in the Hilbert basis of its maximal cone");
      break;
    }
    if (!found) complain("ray " + r.str() + " lies in no original cone");
  }
  return rep;
}

}  // namespace toric
