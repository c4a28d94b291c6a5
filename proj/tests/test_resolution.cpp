#include <catch2/catch_amalgamated.hpp>

#include "toric/resolution.hpp"

using namespace toric;

namespace {

std::vector<Int> branch_weights_center_out(const ResolutionGraph& g, int first_branch_node) {
  // follow the chain from a center-adjacent node outward
  std::vector<Int> ws;
  int cur = first_branch_node;
  int prev = 0;
  while (true) {
    REQUIRE(g.nodes[static_cast<std::size_t>(cur)].weight.has_value());
    ws.push_back(*g.nodes[static_cast<std::size_t>(cur)].weight);
    int next = -1;
    for (const auto& e : g.edges) {
      int other = e[0] == cur ? e[1] : e[1] == cur ? e[0] : -1;
      if (other >= 0 && other != prev) next = other;
    }
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  return ws;
}

std::vector<int> center_neighbours(const ResolutionGraph& g) {
  std::vector<int> out;
  for (const auto& e : g.edges) {
    if (e[0] == 0) out.push_back(e[1]);
    if (e[1] == 0) out.push_back(e[0]);
  }
  return out;
}

bool connected(const ResolutionGraph& g) {
  std::vector<char> seen(g.nodes.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : g.edges) {
      int other = e[0] == v ? e[1] : e[1] == v ? e[0] : -1;
      if (other >= 0 && !seen[static_cast<std::size_t>(other)]) {
        seen[static_cast<std::size_t>(other)] = 1;
        stack.push_back(other);
      }
    }
  }
  for (char c : seen)
    if (!c) return false;
  return true;
}

}  // namespace

TEST_CASE("SurfaceSpec validates its defining data") {
  CHECK(SurfaceSpec::bpq(5, 3).equation() == parse_poly("z^5 + x^3 + y^3"));
  CHECK(SurfaceSpec::e6().equation() == parse_poly("x^2 + y^3 + z^4"));
  CHECK(SurfaceSpec::e7().equation() == parse_poly("x^2 + y^3 + y*z^3"));
  CHECK(SurfaceSpec::dn(4).equation() == parse_poly("x^2 + z*y^2 + z^3"));
  CHECK(SurfaceSpec::dn(7).equation() == parse_poly("x^2 + z*y^2 + z^6"));
  CHECK(SurfaceSpec::bpq(5, 3).name() == "B_{5,3}");
  CHECK(SurfaceSpec::dn(5).name() == "D_5");

  CHECK_THROWS_AS(SurfaceSpec::bpq(6, 3), std::invalid_argument);   // not coprime
  CHECK_THROWS_AS(SurfaceSpec::bpq(1, 2), std::invalid_argument);   // p too small
  CHECK_THROWS_AS(SurfaceSpec::dn(3), std::invalid_argument);       // n too small
  CHECK_THROWS_AS(SurfaceSpec::bpq(5, 2, {1, 2}), std::invalid_argument);  // wrong length
  CHECK_THROWS_AS(SurfaceSpec::bpq(5, 2, {0, 1, 1}), std::invalid_argument);  // y | h
  CHECK_THROWS_AS(SurfaceSpec::bpq(5, 2, {1, 1, 0}), std::invalid_argument);  // x | h
  CHECK_THROWS_AS(SurfaceSpec::bpq(5, 2, {1, 2, 1}), std::invalid_argument);  // (x+y)^2
  CHECK_NOTHROW(SurfaceSpec::bpq(5, 3, {1, 1, 1, 1}));  // (x+y)(x^2+y^2) is squarefree
}

TEST_CASE("exceptional rays of the reference surfaces") {
  using ER = std::vector<ExceptionalRay>;
  CHECK(exceptional_rays(SurfaceSpec::bpq(5, 3)) ==
        ER{{{1, 1, 1}, 3}, {{3, 3, 2}, 3}, {{5, 5, 3}, 1}});
  CHECK(exceptional_rays(SurfaceSpec::e6()) ==
        ER{{{2, 2, 1}, 2}, {{3, 2, 2}, 1}, {{4, 3, 2}, 2}, {{6, 4, 3}, 1}});
  CHECK(exceptional_rays(SurfaceSpec::e7()) ==
        ER{{{3, 2, 2}, 1},
           {{3, 3, 1}, 1},
           {{5, 3, 2}, 1},
           {{5, 4, 2}, 1},
           {{6, 4, 3}, 1},
           {{7, 5, 3}, 1},
           {{9, 6, 4}, 1}});
  CHECK(exceptional_rays(SurfaceSpec::dn(4)) ==
        ER{{{2, 1, 1}, 2}, {{2, 1, 2}, 1}, {{3, 2, 2}, 1}});
  CHECK(exceptional_rays(SurfaceSpec::dn(5)) ==
        ER{{{2, 1, 2}, 1}, {{2, 2, 1}, 2}, {{3, 2, 2}, 1}, {{4, 3, 2}, 1}});

  // total curve counts: 6 for E6, 7 for E7, n for D_n
  for (Int n = 4; n <= 9; ++n) {
    Int total = 0;
    for (const auto& er : exceptional_rays(SurfaceSpec::dn(n))) total += er.copies;
    CHECK(total == n);
  }
}

TEST_CASE("dual graph of B_{7,3} is the star of the corollary") {
  ResolutionGraph g = dual_graph(SurfaceSpec::bpq(7, 3));
  REQUIRE(g.nodes.size() == 7);  // nq + 1 with n = 2
  CHECK(g.nodes[0].ray == LatticeVector{7, 7, 3});
  CHECK(g.nodes[0].label == "E0");
  CHECK(g.nodes[0].weight == Int(-1));
  CHECK(g.nodes[0].copies == 1);
  CHECK(connected(g));

  auto nb = center_neighbours(g);
  REQUIRE(nb.size() == 3);  // q identical branches
  for (int b : nb) {
    auto ws = branch_weights_center_out(g, b);
    CHECK(ws == std::vector<Int>{-4, -2});  // 7/4 = [2, 4], reversed outward
    CHECK(g.nodes[static_cast<std::size_t>(b)].ray == LatticeVector{2, 2, 1});
  }

  // essential everywhere except the central -1 node
  ResolutionGraph e = essential_divisors(SurfaceSpec::bpq(7, 3));
  CHECK_FALSE(e.nodes[0].essential);
  for (std::size_t i = 1; i < e.nodes.size(); ++i) CHECK(e.nodes[i].essential);
}

TEST_CASE("dual graph of B_{5,3}") {
  ResolutionGraph g = dual_graph(SurfaceSpec::bpq(5, 3));
  REQUIRE(g.nodes.size() == 7);
  CHECK(g.nodes[0].weight == std::nullopt);  // 5 != 1 mod 3: not determined
  CHECK(g.nodes[0].essential);               // minimal resolution
  auto nb = center_neighbours(g);
  REQUIRE(nb.size() == 3);
  for (int b : nb) CHECK(branch_weights_center_out(g, b) == std::vector<Int>{-2, -3});
  for (std::size_t i = 1; i < g.nodes.size(); ++i) CHECK(g.nodes[i].essential);
}

TEST_CASE("dual graphs of the ADE families have all weights -2") {
  SECTION("E6: branch lengths 1, 2, 2") {
    ResolutionGraph g = dual_graph(SurfaceSpec::e6());
    REQUIRE(g.nodes.size() == 6);
    std::multiset<std::size_t> lengths;
    for (int b : center_neighbours(g)) lengths.insert(branch_weights_center_out(g, b).size());
    CHECK(lengths == std::multiset<std::size_t>{1, 2, 2});
    for (const auto& nd : g.nodes) CHECK(nd.weight == Int(-2));
    for (const auto& nd : g.nodes) CHECK(nd.essential);
    CHECK(connected(g));
  }
  SECTION("E7: branch lengths 1, 2, 3") {
    ResolutionGraph g = dual_graph(SurfaceSpec::e7());
    REQUIRE(g.nodes.size() == 7);
    std::multiset<std::size_t> lengths;
    for (int b : center_neighbours(g)) lengths.insert(branch_weights_center_out(g, b).size());
    CHECK(lengths == std::multiset<std::size_t>{1, 2, 3});
    for (const auto& nd : g.nodes) CHECK(nd.weight == Int(-2));
  }
  SECTION("D_4: central node with three -2 neighbours") {
    ResolutionGraph g = dual_graph(SurfaceSpec::dn(4));
    REQUIRE(g.nodes.size() == 4);
    CHECK(g.nodes[0].ray == LatticeVector{3, 2, 2});
    CHECK(center_neighbours(g).size() == 3);
    for (const auto& nd : g.nodes) CHECK(nd.weight == Int(-2));
  }
  SECTION("D_n: n nodes, all -2, D-shape") {
    for (Int n = 5; n <= 10; ++n) {
      ResolutionGraph g = dual_graph(SurfaceSpec::dn(n));
      CHECK(g.nodes.size() == static_cast<std::size_t>(n.convert_to<long long>()));
      for (const auto& nd : g.nodes) CHECK(nd.weight == Int(-2));
      CHECK(connected(g));
      for (const auto& nd : g.nodes) CHECK(nd.essential);
    }
  }
}

TEST_CASE("branch weights agree with the continued fraction of p/(p-q)") {
  for (Int p = 4; p <= 14; ++p) {
    for (Int q = 2; q < p; ++q) {
      if (gcd(p, q) != 1) continue;
      CAPTURE(p.str(), q.str());
      ResolutionGraph g = dual_graph(SurfaceSpec::bpq(p, q));
      auto nb = center_neighbours(g);
      REQUIRE(nb.size() == static_cast<std::size_t>(q.convert_to<long long>()));
      auto expect = hj_expand(p, p - q).entries;  // far-to-center multipliers
      for (int b : nb) {
        auto ws = branch_weights_center_out(g, b);
        std::vector<Int> ms;
        for (auto it = ws.rbegin(); it != ws.rend(); ++it) ms.push_back(-*it);
        CHECK(ms == expect);
        for (const auto& m : ms) CHECK(m >= 2);
      }
      // star shape: every non-center node has degree <= 2
      std::map<int, int> deg;
      for (const auto& e : g.edges) {
        ++deg[e[0]];
        ++deg[e[1]];
      }
      for (const auto& [id, d] : deg)
        if (id != 0) CHECK(d <= 2);
    }
  }
}

TEST_CASE("dual graph rejects non-star custom input") {
  SurfaceSpec s = SurfaceSpec::custom(parse_poly("x^5 + y^5 + z^5 + x*y*z"));
  CHECK_THROWS_WITH(dual_graph(s), "star-shaped inputs only");
}

TEST_CASE("dual graph of a custom star works like the families") {
  // combinatorially B_{5,3} with a different squarefree cubic
  SurfaceSpec s = SurfaceSpec::bpq(5, 3, {1, 1, 1, 1});
  ResolutionGraph g = dual_graph(s);
  ResolutionGraph ref = dual_graph(SurfaceSpec::bpq(5, 3));
  REQUIRE(g.nodes.size() == ref.nodes.size());
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    CHECK(g.nodes[i].ray == ref.nodes[i].ray);
    CHECK(g.nodes[i].weight == ref.nodes[i].weight);
  }
  CHECK(g.edges == ref.edges);
}

TEST_CASE("mu-candidate sets") {
  using S = std::set<LatticeVector>;
  CHECK(mu_candidates(SurfaceSpec::e6()) == S{{2, 2, 1}, {3, 2, 2}, {4, 3, 2}, {6, 4, 3}});
  CHECK(mu_candidates(SurfaceSpec::e7()) == S{{3, 2, 2},
                                              {3, 3, 1},
                                              {5, 3, 2},
                                              {5, 4, 2},
                                              {6, 4, 3},
                                              {7, 5, 3},
                                              {9, 6, 4}});
  CHECK(mu_candidates(SurfaceSpec::bpq(5, 3)) == S{{1, 1, 1}, {3, 3, 2}, {5, 5, 3}});
  CHECK(mu_candidates(SurfaceSpec::dn(4)) == S{{2, 1, 1}, {2, 1, 2}, {3, 2, 2}});
  CHECK(mu_candidates(SurfaceSpec::dn(5)) == S{{2, 1, 2}, {2, 2, 1}, {3, 2, 2}, {4, 3, 2}});
  CHECK(mu_candidates(SurfaceSpec::dn(6)) ==
        S{{2, 1, 2}, {3, 2, 1}, {3, 2, 2}, {4, 3, 2}, {5, 4, 2}});
  CHECK_THROWS_AS(mu_candidates(SurfaceSpec::custom(parse_poly("x^2 + y^2 + z^2"))),
                  std::invalid_argument);
}

TEST_CASE("mu-candidates sit among the exceptional rays") {
  std::vector<SurfaceSpec> specs{SurfaceSpec::bpq(8, 5), SurfaceSpec::bpq(7, 3),
                                 SurfaceSpec::e6(),      SurfaceSpec::e7(),
                                 SurfaceSpec::dn(4),     SurfaceSpec::dn(7)};
  for (const auto& s : specs) {
    CAPTURE(s.name());
    std::set<LatticeVector> rays;
    for (const auto& er : exceptional_rays(s)) rays.insert(er.ray);
    for (const auto& mu : mu_candidates(s)) {
      CHECK(mu.all_positive());
      CHECK(rays.count(mu) == 1);
    }
  }
}

TEST_CASE("strict transform in the third chart") {
  CHECK(strict_transform_chart3(parse_poly("z^5 + x^3 + y^3")) == parse_poly("z^2 + x^3 + y^3"));
  CHECK(strict_transform_chart3(strict_transform_chart3(parse_poly("z^7 + x^3 + y^3"))) ==
        parse_poly("z + x^3 + y^3"));
  CHECK(strict_transform_chart3(parse_poly("x")) == parse_poly("x"));

  // the chart recursion drives B_{p,q} to B_{p-q,q}
  SupportPoly g = SurfaceSpec::bpq(17, 5).equation();
  for (int step = 0; step < 3; ++step) g = strict_transform_chart3(g);
  CHECK(g == SurfaceSpec::bpq(2, 5).equation());
}

TEST_CASE("constellation codes") {
  ConstellationCode c = constellation(7, 3);
  CHECK(c.n == 2);
  CHECK(c.r == 1);
  CHECK(c.terminal());
  CHECK(c.fiber_curves() == 6);
  CHECK(c.chain_length() == 1);
  CHECK(c.code == "Q_0, Q_0(3)");
  CHECK_FALSE(c.residual().has_value());

  ConstellationCode d = constellation(8, 3);
  CHECK(d.n == 2);
  CHECK(d.r == 2);
  CHECK_FALSE(d.terminal());
  REQUIRE(d.residual().has_value());
  CHECK(d.residual()->first == 2);
  CHECK(d.residual()->second == 3);

  ConstellationCode e = constellation(5, 3);
  CHECK(e.n == 1);
  CHECK(e.r == 2);
  CHECK(e.code == "Q_0");

  CHECK(constellation(17, 5).code == "Q_0, Q_0(3), Q_0(3^2)");

  CHECK_THROWS_AS(constellation(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(constellation(7, 2), std::invalid_argument);
  CHECK_THROWS_AS(constellation(9, 3), std::invalid_argument);
}
