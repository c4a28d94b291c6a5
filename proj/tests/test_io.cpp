#include <catch2/catch_amalgamated.hpp>

#include "toric/io.hpp"

using namespace toric;

namespace {

Fan fan_of(const std::string& text) { return newton_fan(parse_poly(text)); }

}  // namespace

TEST_CASE("fan JSON round-trips and is deterministic") {
  Fan e7 = fan_of("x^2 + y^3 + y*z^3");
  json j = fan_to_json(e7);

  CHECK(j.contains("rays"));
  CHECK(j.contains("max_cones"));
  CHECK(j.contains("walls"));
  CHECK(j["rays"].size() == 5);
  CHECK(fan_from_json(j) == e7);

  // byte-identical across independent recomputations
  CHECK(json_text(fan_to_json(fan_of("x^2 + y^3 + y*z^3"))) == json_text(j));

  json broken = j;
  broken.erase("walls");
  CHECK_THROWS_AS(fan_from_json(broken), std::invalid_argument);
}

TEST_CASE("graph JSON matches the documented shape and round-trips") {
  SurfaceSpec b73 = SurfaceSpec::bpq(7, 3);
  ResolutionGraph g = dual_graph(b73);
  json j = graph_to_json(g);

  const json& center = j["nodes"][0];
  CHECK(center["id"] == 0);
  CHECK(center["ray"] == json::array({7, 7, 3}));
  CHECK(center["copies"] == 1);
  CHECK(center["weight"] == -1);
  CHECK(center["essential"] == false);
  CHECK(center["label"] == "E0");

  CHECK(graph_from_json(j) == g);

  // a null weight survives the round trip
  ResolutionGraph g53 = dual_graph(SurfaceSpec::bpq(5, 3));
  REQUIRE_FALSE(g53.nodes[0].weight.has_value());
  json j53 = graph_to_json(g53);
  CHECK(j53["nodes"][0]["weight"].is_null());
  CHECK(graph_from_json(j53) == g53);

  json bad = j;
  bad["edges"].push_back(json::array({0, 99}));
  CHECK_THROWS_AS(graph_from_json(bad), std::invalid_argument);
  json renumbered = j;
  renumbered["nodes"][1]["id"] = 7;
  CHECK_THROWS_AS(graph_from_json(renumbered), std::invalid_argument);
}

TEST_CASE("gsub JSON carries the refined fan plus the ray homes") {
  GSubdivision s = g_subdivide(fan_of("z^5 + x^3 + y^3"));
  json j = gsub_to_json(s);

  CHECK(fan_from_json(j) == s.refined());
  REQUIRE(j.contains("ray_home"));
  CHECK(j["ray_home"].size() == s.refined().rays().size());

  int idx = s.refined().ray_index({1, 1, 1});
  REQUIRE(idx >= 0);
  const json& home = j["ray_home"][std::to_string(idx)];
  CHECK(home["dim"] == 2);
  CHECK(home["orig_rays"] == json::array({0, 3}));
}

TEST_CASE("wedge JSON parses the documented format") {
  json j = json::parse(R"({
    "x": [[1,3,"-3/2"],[2,3,"-3/2"],[3,3,"-1/2"]],
    "y": [[0,3,"1"],[1,3,"3/2"],[2,3,"3/2"],[3,3,"1/2"]],
    "z": [[0,2,"1"],[1,2,"1"]],
    "trunc": null
  })");
  Wedge w = wedge_from_json(j);
  CHECK(wedge_orders(w) == LatticeVector{3, 3, 2});
  CHECK(w.x().exact());
  CHECK(check_relation(parse_poly("z^3 + x^2 - y^2"), w).status == RelationStatus::Zero);

  // emit/parse round trip on the components
  Wedge back = wedge_from_json(wedge_to_json(w));
  CHECK(back.x() == w.x());
  CHECK(back.y() == w.y());
  CHECK(back.z() == w.z());

  json jt = j;
  jt["trunc"] = 8;
  Wedge wt = wedge_from_json(jt);
  CHECK(*wt.x().trunc() == 8);
  CHECK(check_relation(parse_poly("z^3 + x^2 - y^2"), wt).status ==
        RelationStatus::ZeroToTruncation);

  SECTION("malformed inputs are rejected") {
    json bad = j;
    bad.erase("y");
    CHECK_THROWS_AS(wedge_from_json(bad), std::invalid_argument);
    bad = j;
    bad["x"][0][2] = "1/0";
    CHECK_THROWS_AS(wedge_from_json(bad), std::invalid_argument);
    bad = j;
    bad["trunc"] = 3;  // declared terms now sit above the frontier
    CHECK_THROWS_AS(wedge_from_json(bad), std::invalid_argument);
    bad = j;
    bad["x"] = json::array();  // zero component
    CHECK_THROWS_AS(wedge_from_json(bad), std::invalid_argument);
  }
}

TEST_CASE("DOT output renders weights, unknowns and essential styling") {
  std::string dot = emit_dot(dual_graph(SurfaceSpec::bpq(7, 3)));
  CHECK(dot.find("graph resolution {") == 0);
  CHECK(dot.find("n0 [label=\"E0 (-1)\", style=dashed];") != std::string::npos);
  CHECK(dot.find("n1 [label=\"E1 (-4)\"];") != std::string::npos);
  CHECK(dot.find("n0 -- n1;") != std::string::npos);

  std::string e6 = emit_dot(dual_graph(SurfaceSpec::e6()));
  CHECK(e6.find("style=dashed") == std::string::npos);
  std::size_t count = 0;
  for (std::size_t at = e6.find("(-2)"); at != std::string::npos; at = e6.find("(-2)", at + 1))
    ++count;
  CHECK(count == 6);

  // unknown central weight renders as "?"
  std::string g53 = emit_dot(dual_graph(SurfaceSpec::bpq(5, 3)));
  CHECK(g53.find("n0 [label=\"E0 (?)\"];") != std::string::npos);

  ResolutionGraph single;
  single.nodes.push_back({0, LatticeVector{1, 1, 1}, 1, Int(-2), true, "E0"});
  std::string sd = emit_dot(single);
  CHECK(sd.find("n0 [label=\"E0 (-2)\"];") != std::string::npos);
  CHECK(sd.find("--") == std::string::npos);

  // determinism
  CHECK(emit_dot(dual_graph(SurfaceSpec::bpq(7, 3))) == dot);
}

TEST_CASE("text renderings are stable and readable") {
  Fan f = fan_of("z^5 + x^3 + y^3");
  std::string ft = fan_text(f);
  CHECK(ft.find("rays\n") == 0);
  CHECK(ft.find("(5, 5, 3)") != std::string::npos);
  CHECK(ft.find("max cones") != std::string::npos);

  GSubdivision s = g_subdivide(f);
  std::string st = gsub_text(s);
  CHECK(st.find("original\n") == 0);
  CHECK(st.find("ray homes") != std::string::npos);

  std::string gt = graph_text(dual_graph(SurfaceSpec::bpq(7, 3)));
  CHECK(gt.find("nodes\n") == 0);
  CHECK(gt.find("weight -1") != std::string::npos);
  CHECK(gt.find("non-essential") != std::string::npos);
  CHECK(gt.find("0 -- 1") != std::string::npos);
}
