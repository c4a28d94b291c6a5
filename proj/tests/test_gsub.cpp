#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "toric/gsub.hpp"
#include "oracles.hpp"

using namespace toric;

namespace {

Fan fan_of(const std::string& poly) { return newton_fan(parse_poly(poly)); }

bool all_regular(const Fan& f) {
  for (std::size_t k = 0; k < f.max_cones().size(); ++k) {
    auto rays = f.max_cone_rays(static_cast<int>(k));
    if (rays.size() != 3) return false;
    if (abs(det3(rays[0], rays[1], rays[2])) != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("subdivide_wall splits a wall along its Hilbert chain") {
  Cone tau3({LatticeVector{0, 0, 1}, LatticeVector{5, 5, 3}});
  auto pieces = subdivide_wall(tau3);
  REQUIRE(pieces.size() == 3);
  CHECK(pieces[0].rays() == std::vector<LatticeVector>{{0, 0, 1}, {1, 1, 1}});
  CHECK(pieces[1].rays() == std::vector<LatticeVector>{{1, 1, 1}, {3, 3, 2}});
  CHECK(pieces[2].rays() == std::vector<LatticeVector>{{3, 3, 2}, {5, 5, 3}});
  for (const auto& c : pieces) CHECK(is_regular(c));

  Cone reg({LatticeVector{1, 0, 0}, LatticeVector{5, 5, 3}});
  CHECK(subdivide_wall(reg).size() == 1);
}

TEST_CASE("g_subdivide refines the fan of z^5 + x^3 + y^3") {
  Fan f = fan_of("z^5 + x^3 + y^3");
  GSubdivision s = g_subdivide(f);
  CHECK(s.original() == f);
  CHECK(all_regular(s.refined()));

  auto rep = verify_g_property(s);
  CAPTURE(rep.violations);
  CHECK(rep.ok);

  // the central wall chain must reappear among the refined rays
  const auto& rays = s.refined().rays();
  auto has = [&](const LatticeVector& v) {
    return std::find(rays.begin(), rays.end(), v) != rays.end();
  };
  CHECK(has({1, 1, 1}));
  CHECK(has({3, 3, 2}));

  // (1,1,1) and (3,3,2) live on the wall spanned by ray 0 and ray 3
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i] == LatticeVector{1, 1, 1} || rays[i] == LatticeVector{3, 3, 2}) {
      CHECK(s.ray_homes()[i].dim == 2);
      CHECK(s.ray_homes()[i].orig_rays == std::vector<int>{0, 3});
    }
  }
}

TEST_CASE("g_subdivide is the identity on a regular fan") {
  Fan octant = fan_of("x^2*y^3*z");
  GSubdivision s = g_subdivide(octant);
  CHECK(s.refined() == octant);
  for (const auto& h : s.ray_homes()) CHECK(h.dim == 1);

  Fan cone111 = fan_of("x^3 + y^3 + z^3");
  GSubdivision t = g_subdivide(cone111);
  CHECK(t.refined().rays() == cone111.rays());
  CHECK(all_regular(t.refined()));
  CHECK(verify_g_property(t).ok);
}

TEST_CASE("g_subdivide handles the quadrilateral cone of x^2 + y^3 + y*z^3") {
  Fan f = fan_of("x^2 + y^3 + y*z^3");
  GSubdivision s = g_subdivide(f);
  CHECK(all_regular(s.refined()));
  auto rep = verify_g_property(s);
  CAPTURE(rep.violations);
  CHECK(rep.ok);

  const auto& rays = s.refined().rays();
  auto home_of = [&](const LatticeVector& v) -> RayHome {
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (rays[i] == v) return s.ray_homes()[i];
    FAIL("missing refined ray " + v.str());
    return {};
  };
  // original rays sorted: (0,0,1) (0,1,0) (1,0,0) (1,2,0) (9,6,4)
  CHECK(home_of({5, 3, 2}) == RayHome{2, {2, 4}});
  CHECK(home_of({3, 3, 1}) == RayHome{2, {3, 4}});
  CHECK(home_of({5, 4, 2}) == RayHome{2, {3, 4}});
  CHECK(home_of({7, 5, 3}) == RayHome{2, {3, 4}});
  CHECK(home_of({3, 2, 2}) == RayHome{2, {0, 4}});
  CHECK(home_of({6, 4, 3}) == RayHome{2, {0, 4}});

  // determinism: a second run reproduces the subdivision exactly
  GSubdivision s2 = g_subdivide(f);
  CHECK(s2.refined() == s.refined());
  for (std::size_t i = 0; i < rays.size(); ++i) CHECK(s2.ray_homes()[i] == s.ray_homes()[i]);
}

TEST_CASE("g_subdivide handles the quadrilateral cone of x^2 + z*y^2 + z^3") {
  Fan f = fan_of("x^2 + z*y^2 + z^3");
  GSubdivision s = g_subdivide(f);
  CHECK(all_regular(s.refined()));
  auto rep = verify_g_property(s);
  CAPTURE(rep.violations);
  CHECK(rep.ok);

  // interior point of the wall spanned by (1,0,0) and (3,2,2)
  const auto& rays = s.refined().rays();
  bool found = false;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (rays[i] == LatticeVector{2, 1, 1}) {
      found = true;
      CHECK(s.ray_homes()[i] == RayHome{2, {2, 4}});
    }
  }
  CHECK(found);
}

TEST_CASE("g_subdivide resolves fans with larger determinants") {
  for (const char* poly : {"x^2 + y^3 + z^7", "z^7 + x^4 + y^4", "x^2 + y^3 + y*z^4",
                           "x^2 + y^5 + z^11", "x^2 + z*y^2 + z^4", "z^11 + x^7 + y^7"}) {
    CAPTURE(poly);
    GSubdivision s = g_subdivide(fan_of(poly));
    CHECK(all_regular(s.refined()));
    auto rep = verify_g_property(s);
    CAPTURE(rep.violations);
    CHECK(rep.ok);
  }
}

TEST_CASE("g_subdivide reports inputs the greedy cannot split") {
  // the fan of this polynomial reaches a determinant-2 cone whose only
  // lattice points besides its rays are reducible in the ambient cone
  Fan f = fan_of("z^9 + x^5*y + x*y^5");
  CHECK_THROWS_MATCHES(g_subdivide(f), SubdivisionError,
                       Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                           "no Hilbert-basis point splits the non-regular cone")));
}

TEST_CASE("refined fans tile their original cones") {
  Fan f = fan_of("x^2 + y^3 + y*z^3");
  GSubdivision s = g_subdivide(f);
  const Fan& fine = s.refined();

  std::mt19937_64 rng(20260814);
  std::uniform_int_distribution<long long> coord(0, 40);
  for (int trial = 0; trial < 400; ++trial) {
    LatticeVector x{Int(coord(rng)), Int(coord(rng)), Int(coord(rng))};
    if (x.is_zero()) continue;
    int strict = 0, weak = 0;
    for (std::size_t k = 0; k < fine.max_cones().size(); ++k) {
      auto rays = fine.max_cone_rays(static_cast<int>(k));
      if (cone3_contains(rays, x)) ++weak;
      if (cone3_contains_strict(rays, x)) ++strict;
    }
    CAPTURE(x.str());
    CHECK(weak >= 1);
    CHECK(strict <= 1);
  }
}

TEST_CASE("stellar pivots stay inside their home cones") {
  // every refined ray of dim-3 home must lie strictly inside that cone's span
  for (const char* poly : {"z^7 + x^4 + y^4", "x^2 + y^3 + z^7"}) {
    CAPTURE(poly);
    GSubdivision s = g_subdivide(fan_of(poly));
    const auto& rays = s.refined().rays();
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const RayHome& h = s.ray_homes()[i];
      if (h.dim != 3) continue;
      std::vector<LatticeVector> orig;
      for (int j : h.orig_rays) orig.push_back(s.original().rays()[static_cast<std::size_t>(j)]);
      CHECK(cone3_contains(orig, rays[i]));
      auto hb = detail::hilbert_basis_cone3(orig);
      CHECK(std::find(hb.begin(), hb.end(), rays[i]) != hb.end());
    }
  }
}
