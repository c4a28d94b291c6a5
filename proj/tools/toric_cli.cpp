// Command line front end: Newton fans, G-regular subdivisions, dual
// resolution graphs, wall Hilbert bases, continued fractions, gamma hulls,
// wedge relation checks, and the replayable verification suites.
#include <cctype>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <toric/io.hpp>
#include <toric/verify.hpp>

namespace {

using toric::Int;
using toric::LatticeVector;
using toric::Rat;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

Int parse_int(const std::string& tok) {
  try {
    if (tok.empty()) throw std::invalid_argument("empty");
    return Int(tok);
  } catch (const std::exception&) {
    throw CLI::ValidationError("expected an integer, got '" + tok + "'");
  }
}

Rat parse_rat(const std::string& tok) {
  try {
    return toric::detail::rat_from_string(tok);
  } catch (const std::exception&) {
    throw CLI::ValidationError("malformed rational '" + tok + "'");
  }
}

LatticeVector parse_vec(const std::string& s) {
  std::vector<Int> c;
  for (const auto& tok : split(s, ',')) c.push_back(parse_int(tok));
  if (c.size() == 2) return {c[0], c[1]};
  if (c.size() == 3) return {c[0], c[1], c[2]};
  throw CLI::ValidationError("expected 2 or 3 comma-separated integers, got '" + s + "'");
}

struct SurfaceOpts {
  std::string surface = "bpq";
  long long p = 0, q = 0, n = 0;
  std::string h, poly;
};

void add_surface_opts(CLI::App* sub, SurfaceOpts& o) {
  // frees the short -h flag so --h can carry the coefficient list
  sub->set_help_flag("--help", "print this help message and exit");
  sub->add_option("--surface", o.surface, "surface family: bpq, e6, e7, dn or custom")
      ->check(CLI::IsMember({"bpq", "e6", "e7", "dn", "custom"}));
  sub->add_option("--p", o.p, "exponent p of z^p + h(x,y) (bpq)");
  sub->add_option("--q", o.q, "degree q of h (bpq)");
  sub->add_option("--n", o.n, "index n of the D family");
  sub->add_option("--h", o.h,
                  "q+1 comma-separated coefficients of h, from x^q down to y^q");
  sub->add_option("--poly", o.poly, "custom equation, e.g. \"z^5 + x^3 + y^3\"");
}

toric::SurfaceSpec build_spec(const SurfaceOpts& o) {
  if (o.surface == "bpq") {
    if (o.p <= 0 || o.q <= 0)
      throw CLI::ValidationError("--surface bpq requires --p and --q");
    if (o.h.empty()) return toric::SurfaceSpec::bpq(o.p, o.q);
    std::vector<Rat> h;
    for (const auto& tok : split(o.h, ',')) h.push_back(parse_rat(tok));
    return toric::SurfaceSpec::bpq(o.p, o.q, std::move(h));
  }
  if (o.surface == "e6") return toric::SurfaceSpec::e6();
  if (o.surface == "e7") return toric::SurfaceSpec::e7();
  if (o.surface == "dn") {
    if (o.n <= 0) throw CLI::ValidationError("--surface dn requires --n");
    return toric::SurfaceSpec::dn(o.n);
  }
  if (o.poly.empty()) throw CLI::ValidationError("--surface custom requires --poly");
  return toric::SurfaceSpec::custom(toric::parse_poly(o.poly));
}

struct Emit {
  std::string format = "text";
  std::string out;
};

void add_output_opts(CLI::App* sub, Emit& e, bool dot_allowed) {
  std::vector<std::string> formats{"json", "text"};
  if (dot_allowed) formats.insert(formats.begin() + 1, "dot");
  sub->add_option("--format", e.format, "output format")->check(CLI::IsMember(formats));
  sub->add_option("--out", e.out, "write the output to a file instead of stdout");
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
}

const char* status_name(toric::RelationStatus s) {
  switch (s) {
    case toric::RelationStatus::Zero: return "zero";
    case toric::RelationStatus::ZeroToTruncation: return "zero_to_truncation";
    case toric::RelationStatus::Nonzero: return "nonzero";
    default: return "inconclusive";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric resolutions of quasi-rational surface singularities"};
  app.require_subcommand(1);
  int rc = 0;

  SurfaceOpts fan_s, gsub_s, resolve_s;
  Emit fan_e, gsub_e, resolve_e, hilbert_e, contfrac_e, gamma_e, wedge_e, verify_e;

  auto* fan = app.add_subcommand("fan", "Newton fan of a surface equation");
  add_surface_opts(fan, fan_s);
  add_output_opts(fan, fan_e, false);
  fan->callback([&]() {
    toric::Fan f = toric::newton_fan(build_spec(fan_s).equation());
    write_out(fan_e.format == "json" ? toric::json_text(toric::fan_to_json(f))
                                     : toric::fan_text(f),
              fan_e.out);
  });

  auto* gsub = app.add_subcommand("gsub", "G-regular subdivision of the Newton fan");
  add_surface_opts(gsub, gsub_s);
  add_output_opts(gsub, gsub_e, false);
  gsub->callback([&]() {
    toric::GSubdivision s = toric::g_subdivide(toric::newton_fan(build_spec(gsub_s).equation()));
    write_out(gsub_e.format == "json" ? toric::json_text(toric::gsub_to_json(s))
                                      : toric::gsub_text(s),
              gsub_e.out);
  });

  auto* resolve = app.add_subcommand("resolve", "weighted dual graph of the resolution");
  add_surface_opts(resolve, resolve_s);
  add_output_opts(resolve, resolve_e, true);
  resolve->callback([&]() {
    toric::ResolutionGraph g = toric::dual_graph(build_spec(resolve_s));
    std::string text = resolve_e.format == "json" ? toric::json_text(toric::graph_to_json(g))
                       : resolve_e.format == "dot" ? toric::emit_dot(g)
                                                   : toric::graph_text(g);
    write_out(text, resolve_e.out);
  });

  std::string hilbert_rays;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of a cone");
  hilbert->add_option("--rays", hilbert_rays, "semicolon-separated generators, e.g. \"0,0,1;5,5,3\"")
      ->required();
  add_output_opts(hilbert, hilbert_e, false);
  hilbert->callback([&]() {
    std::vector<LatticeVector> rays;
    for (const auto& tok : split(hilbert_rays, ';')) rays.push_back(parse_vec(tok));
    toric::Cone c(rays);
    std::vector<LatticeVector> basis =
        rays.size() == 2 ? toric::hilbert_basis_2d(c) : toric::hilbert_basis_3d(c);
    std::vector<Int> ms;
    if (rays.size() == 2 && basis.size() >= 3) ms = toric::chain_multipliers(basis);
    if (hilbert_e.format == "json") {
      toric::json j;
      j["basis"] = toric::json::array();
      for (const auto& v : basis) j["basis"].push_back(toric::detail::vec_json(v));
      j["multipliers"] = toric::json::array();
      for (const auto& m : ms) j["multipliers"].push_back(toric::detail::to_i64(m));
      write_out(toric::json_text(j), hilbert_e.out);
    } else {
      std::string text = "basis\n";
      for (const auto& v : basis) text += "  " + v.str() + "\n";
      if (!ms.empty()) {
        text += "multipliers\n ";
        for (const auto& m : ms) text += " " + m.str();
        text += "\n";
      }
      write_out(text, hilbert_e.out);
    }
  });

  long long cf_p = 0, cf_q = 0;
  auto* contfrac = app.add_subcommand("contfrac", "Hirzebruch-Jung continued fraction of p/q");
  contfrac->add_option("p", cf_p, "numerator")->required();
  contfrac->add_option("q", cf_q, "denominator")->required();
  add_output_opts(contfrac, contfrac_e, false);
  contfrac->callback([&]() {
    toric::ContinuedFraction cf = toric::hj_expand(cf_p, cf_q);
    if (contfrac_e.format == "json") {
      toric::json j;
      j["entries"] = toric::json::array();
      for (const auto& m : cf.entries) j["entries"].push_back(toric::detail::to_i64(m));
      j["value"] = toric::rat_str(cf.value);
      write_out(toric::json_text(j), contfrac_e.out);
    } else {
      std::string text = "[";
      for (std::size_t i = 0; i < cf.entries.size(); ++i)
        text += (i ? ", " : "") + cf.entries[i].str();
      write_out(text + "]\n", contfrac_e.out);
    }
  });

  std::string gamma_mu, gamma_pq;
  auto* gamma = app.add_subcommand("gamma", "gamma hull and its minimizer for a mu pair");
  gamma->add_option("--mu", gamma_mu, "mu pair \"a,c\"")->required();
  gamma->add_option("--pq", gamma_pq, "family exponents \"p,q\"")->required();
  add_output_opts(gamma, gamma_e, false);
  gamma->callback([&]() {
    LatticeVector mu = parse_vec(gamma_mu);
    LatticeVector pq = parse_vec(gamma_pq);
    if (mu.dim() != 2 || pq.dim() != 2)
      throw CLI::ValidationError("--mu and --pq each take two integers");
    toric::GammaHull h = toric::gamma_hull(mu, {pq[0], pq[1]});
    toric::GammaMin m = toric::gamma_min(h);
    if (gamma_e.format == "json") {
      toric::json j;
      j["p"] = toric::detail::to_i64(h.p);
      j["q"] = toric::detail::to_i64(h.q);
      j["anchor"] = toric::detail::vec_json(h.anchor);
      j["boundary"] = toric::json::array();
      for (const auto& v : h.vertices) j["boundary"].push_back(toric::detail::vec_json(v));
      j["min"] = {{"point", toric::detail::vec_json(m.point)},
                  {"value", toric::detail::to_i64(m.value)},
                  {"on_ray", m.on_ray}};
      write_out(toric::json_text(j), gamma_e.out);
    } else {
      std::string text = "anchor " + h.anchor.str() + "\nboundary\n";
      for (const auto& v : h.vertices) text += "  " + v.str() + "\n";
      text += "minimum " + m.value.str() + " at " + m.point.str() +
              (m.on_ray ? " (entire ray)" : "") + "\n";
      write_out(text, gamma_e.out);
    }
  });

  std::string wc_poly, wc_file;
  long long wc_depth = 0;
  auto* wedge = app.add_subcommand("wedge-check", "evaluate an equation along a wedge");
  wedge->add_option("--poly", wc_poly, "surface equation")->required();
  wedge->add_option("--wedge", wc_file, "JSON file with x, y, z components and trunc")
      ->required();
  wedge->add_option("--depth", wc_depth, "require decisiveness up to this total degree")
      ->check(CLI::NonNegativeNumber);
  add_output_opts(wedge, wedge_e, false);
  wedge->callback([&]() {
    std::ifstream in(wc_file);
    if (!in) throw std::runtime_error("cannot open '" + wc_file + "'");
    toric::Wedge w = toric::wedge_from_json(toric::json::parse(in));
    toric::RelationCheck chk = toric::check_relation(toric::parse_poly(wc_poly), w, wc_depth);
    if (wedge_e.format == "json") {
      toric::json j;
      j["status"] = status_name(chk.status);
      j["orders"] = toric::detail::vec_json(toric::wedge_orders(w));
      j["leading"] = nullptr;
      if (chk.leading)
        j["leading"] = {{"exponent", toric::detail::vec_json(chk.leading->first)},
                        {"coefficient", toric::rat_str(chk.leading->second)}};
      j["depth"] = nullptr;
      if (chk.depth) j["depth"] = toric::detail::to_i64(*chk.depth);
      j["detail"] = chk.detail;
      write_out(toric::json_text(j), wedge_e.out);
    } else {
      std::string text = "status " + std::string(status_name(chk.status)) + "\norders " +
                         toric::wedge_orders(w).str() + "\n";
      if (chk.leading)
        text += "leading " + chk.leading->first.str() + " coefficient " +
                toric::rat_str(chk.leading->second) + "\n";
      if (chk.depth) text += "depth " + chk.depth->str() + "\n";
      if (!chk.detail.empty()) text += chk.detail + "\n";
      write_out(text, wedge_e.out);
    }
  });

  std::string suite = "all";
  long long vp_pmax = 0, vp_qmax = 0, vp_nmax = 0;
  auto* verify = app.add_subcommand("verify-paper", "replay the verification claims");
  verify->add_option("--suite", suite, "claim suite to run")
      ->check(CLI::IsMember({"all", "fans", "graphs", "gamma", "wedges"}));
  verify->add_option("--pmax", vp_pmax, "cap the p sweep");
  verify->add_option("--qmax", vp_qmax, "cap the q sweep");
  verify->add_option("--nmax", vp_nmax, "cap the D-family sweep");
  add_output_opts(verify, verify_e, false);
  verify->callback([&]() {
    toric::VerifyOptions vo;
    if (vp_pmax > 0) vo.pmax = vp_pmax;
    if (vp_qmax > 0) vo.qmax = vp_qmax;
    if (vp_nmax > 0) vo.nmax = vp_nmax;
    toric::VerificationReport rep = toric::run_suite(suite, vo);
    if (verify_e.format == "json") {
      toric::json j;
      j["claims"] = toric::json::array();
      for (const auto& c : rep.claims)
        j["claims"].push_back({{"id", c.id},
                               {"description", c.description},
                               {"pass", c.pass},
                               {"checks", toric::detail::to_i64(c.checks)},
                               {"detail", c.detail}});
      j["all_pass"] = rep.all_pass();
      write_out(toric::json_text(j), verify_e.out);
    } else {
      std::string text;
      std::size_t passed = 0;
      for (const auto& c : rep.claims) {
        text += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.id + " " + c.description +
                " (" + c.checks.str() + " checks)" + (c.detail.empty() ? "" : " -- " + c.detail) +
                "\n";
        if (c.pass) ++passed;
      }
      text += std::to_string(passed) + "/" + std::to_string(rep.claims.size()) +
              " claims passed\n";
      write_out(text, verify_e.out);
    }
    if (!rep.all_pass()) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
