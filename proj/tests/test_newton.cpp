#include <catch2/catch_amalgamated.hpp>

#include <toric/newton.hpp>

#include <random>

using namespace toric;

namespace {

LatticeVector lv(int a, int b, int c) { return {a, b, c}; }

}  // namespace

TEST_CASE("polynomial parser") {
  SupportPoly g = parse_poly("z^5 + x^3 + y^3");
  CHECK(g.size() == 3);
  CHECK(g.coeff(lv(0, 0, 5)) == 1);
  CHECK(g.coeff(lv(3, 0, 0)) == 1);

  CHECK(parse_poly("x^2+z*y^2+z^3") == parse_poly("x^2 + z y^2 + z^3"));
  CHECK(parse_poly("2x y^2") == parse_poly("2*x*y^2"));
  CHECK(parse_poly("x - x + y") == parse_poly("y"));
  CHECK(parse_poly("x*x*y^2") == parse_poly("x^2*y^2"));
  CHECK(parse_poly("-x + 3").coeff(lv(1, 0, 0)) == -1);
  CHECK(parse_poly("7").coeff(lv(0, 0, 0)) == 7);

  CHECK_THROWS_AS(parse_poly("w + x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("2**x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x 2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("x + "), std::invalid_argument);
  try {
    parse_poly("x + q");
    FAIL("expected parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position 4") != std::string::npos);
  }
}

TEST_CASE("printer round trip") {
  for (const char* s : {"z^5 + x^3 + y^3", "x^2 + z*y^2 + z^3", "x^2 - 2*x*y + y^2 + z^3",
                        "x^3 + y^3 + z^3 - 3*x*y*z"}) {
    SupportPoly g = parse_poly(s);
    CHECK(parse_poly(g.str()) == g);
  }
}

TEST_CASE("Newton polyhedron of z^5 + x^3 + y^3") {
  NewtonPolyhedron np = newton_polyhedron(parse_poly("z^5 + x^3 + y^3"));
  REQUIRE(np.vertices.size() == 3);
  CHECK(np.vertices[0] == lv(0, 0, 5));
  CHECK(np.vertices[1] == lv(0, 3, 0));
  CHECK(np.vertices[2] == lv(3, 0, 0));
  REQUIRE(np.edges.size() == 3);
  // edge between (0,3,0) and (3,0,0) has lattice length 3, the others 1
  for (const auto& e : np.edges) {
    if (np.vertices[static_cast<std::size_t>(e.a)][2] == 0 &&
        np.vertices[static_cast<std::size_t>(e.b)][2] == 0)
      CHECK(e.lattice_length == 3);
    else
      CHECK(e.lattice_length == 1);
  }
  REQUIRE(np.facets.size() == 1);
  CHECK(np.facets[0].normal == lv(5, 5, 3));
  CHECK(np.facets[0].value == 15);
  CHECK(np.facets[0].vertices == std::vector<int>{0, 1, 2});
}

TEST_CASE("fan of z^5 + x^3 + y^3") {
  Fan f = newton_fan(parse_poly("z^5 + x^3 + y^3"));
  std::vector<LatticeVector> rays = {lv(0, 0, 1), lv(0, 1, 0), lv(1, 0, 0), lv(5, 5, 3)};
  CHECK(f.rays() == rays);
  std::vector<std::vector<int>> mcs = {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  CHECK(f.max_cones() == mcs);
  std::vector<std::array<int, 2>> walls = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(f.walls() == walls);
  CHECK(two_skeleton(f).size() == 6);
}

TEST_CASE("fan of a single monomial is the octant") {
  Fan f = newton_fan(parse_poly("x^2*y^3*z"));
  CHECK(f.rays() == std::vector<LatticeVector>{lv(0, 0, 1), lv(0, 1, 0), lv(1, 0, 0)});
  CHECK(f.max_cones() == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(f.walls() == std::vector<std::array<int, 2>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("fan of the E7 equation has a quadrilateral cone") {
  Fan f = newton_fan(parse_poly("x^2 + y^3 + y*z^3"));
  std::vector<LatticeVector> rays = {lv(0, 0, 1), lv(0, 1, 0), lv(1, 0, 0), lv(1, 2, 0),
                                     lv(9, 6, 4)};
  CHECK(f.rays() == rays);
  std::vector<std::vector<int>> mcs = {{0, 1, 3, 4}, {0, 2, 4}, {2, 3, 4}};
  CHECK(f.max_cones() == mcs);
  std::vector<std::array<int, 2>> walls = {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {2, 3}, {2, 4}, {3, 4}};
  CHECK(f.walls() == walls);
}

TEST_CASE("fan of the D4 equation") {
  Fan f = newton_fan(parse_poly("x^2 + z*y^2 + z^3"));
  std::vector<LatticeVector> rays = {lv(0, 0, 1), lv(0, 1, 0), lv(1, 0, 0), lv(1, 0, 2),
                                     lv(3, 2, 2)};
  CHECK(f.rays() == rays);
  std::vector<std::vector<int>> mcs = {{0, 1, 3, 4}, {1, 2, 4}, {2, 3, 4}};
  CHECK(f.max_cones() == mcs);
  std::vector<std::array<int, 2>> walls = {{0, 1}, {0, 3}, {1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  CHECK(f.walls() == walls);
}

TEST_CASE("fan max cones cover the octant") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> coord(0, 30);
  for (const char* eq : {"z^5 + x^3 + y^3", "x^2 + y^3 + y*z^3", "x^2 + z*y^2 + z^5"}) {
    Fan f = newton_fan(parse_poly(eq));
    for (int trial = 0; trial < 400; ++trial) {
      LatticeVector p{coord(rng), coord(rng), coord(rng)};
      if (p.is_zero()) continue;
      int count = 0, strict = 0;
      for (std::size_t k = 0; k < f.max_cones().size(); ++k) {
        auto rays = f.max_cone_rays(static_cast<int>(k));
        if (cone3_contains(rays, p)) ++count;
        if (cone3_contains_strict(rays, p)) ++strict;
      }
      CHECK(count >= 1);
      if (strict > 0) CHECK(count == 1);
    }
    // cross-section areas of the maximal cones add up to the full octant
    Rat total = 0;
    for (std::size_t k = 0; k < f.max_cones().size(); ++k)
      total += section_area(f.max_cone_rays(static_cast<int>(k)));
    CHECK(total == Rat(1) / 2);
  }
}

TEST_CASE("face polynomials") {
  SupportPoly g = parse_poly("z^5 + x^3 + y^3");
  CHECK(face_poly(g, lv(5, 5, 3)) == g);
  CHECK(face_poly(g, lv(0, 0, 1)) == parse_poly("x^3 + y^3"));
  CHECK(face_poly(g, lv(1, 1, 1)) == parse_poly("x^3 + y^3"));
  CHECK_THROWS_AS(face_poly(g, lv(0, 0, 0)), std::invalid_argument);
  CHECK_THROWS_AS(face_poly(SupportPoly{}, lv(1, 1, 1)), std::invalid_argument);
}

TEST_CASE("nondegeneracy: exact criteria") {
  CHECK(is_nondegenerate(parse_poly("x^2 + y^3 + z^4")).verdict == Verdict::Yes);
  CHECK(is_nondegenerate(parse_poly("z^5 + x^3 + y^3")).verdict == Verdict::Yes);
  CHECK(is_nondegenerate(parse_poly("x^2 + z*y^2 + z^3")).verdict == Verdict::Yes);

  // (x+y)^2 + z^3 is degenerate along the edge x^2 + 2xy + y^2
  NondegResult r = is_nondegenerate(parse_poly("x^2 + 2*x*y + y^2 + z^3"), NondegMode::Exact);
  CHECK(r.verdict == Verdict::No);
  CHECK(r.face.size() == 3);
}

TEST_CASE("nondegeneracy: probabilistic criteria") {
  // x^3 + y^3 + z^3 - 3xyz vanishes doubly at x = y = z
  NondegResult bad = is_nondegenerate(parse_poly("x^3 + y^3 + z^3 - 3*x*y*z"));
  CHECK(bad.verdict == Verdict::No);
  CHECK(bad.face.size() == 4);

  // the same face is undecided in exact mode
  NondegResult ex = is_nondegenerate(parse_poly("x^3 + y^3 + z^3 - 3*x*y*z"), NondegMode::Exact);
  CHECK(ex.verdict == Verdict::Unknown);

  // flipping the mixed coefficient makes the face smooth on the torus
  NondegResult good = is_nondegenerate(parse_poly("x^3 + y^3 + z^3 + x*y*z"));
  CHECK(good.verdict == Verdict::Yes);
}
