#pragma once
// Resolution combinatorics for nondegenerate surface germs: the families
// B_{p,q}: z^p + h_q(x,y), E6: x^2+y^3+z^4, E7: x^2+y^3+yz^3 and
// D_n: x^2+zy^2+z^{n-1}, plus custom equations with star-shaped Newton data.
// Computes exceptional rays with component multiplicities, the weighted dual
// graph, essential-divisor marking, mu-candidate sets and the chart-3
// recursion of the constellation picture.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gsub.hpp"
#include "poly.hpp"

namespace toric {

enum class Family { Bpq, E6, E7, Dn, Custom };

namespace detail {

// squarefreeness of H(t) = sum c_i t^i over Q, via gcd(H, H')
inline bool squarefree(const std::vector<Rat>& c) {
  auto degree = [](const std::vector<Rat>& f) {
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[static_cast<std::size_t>(d)] == 0) --d;
    return d;
  };
  auto remainder = [&](std::vector<Rat> a, const std::vector<Rat>& b) {
    int db = degree(b);
    while (degree(a) >= db && db >= 0) {
      int da = degree(a);
      Rat f = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
      for (int i = 0; i <= db; ++i)
        a[static_cast<std::size_t>(da - db + i)] -= f * b[static_cast<std::size_t>(i)];
      a[static_cast<std::size_t>(da)] = 0;
    }
    return a;
  };
  std::vector<Rat> a = c, b;
  for (std::size_t i = 1; i < c.size(); ++i) b.push_back(Rat(Int(i)) * c[i]);
  while (degree(b) >= 0) {
    auto r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return degree(a) < 1;
}

}  // namespace detail

class SurfaceSpec {
 public:
  static SurfaceSpec bpq(Int p, Int q, std::vector<Rat> h) {
    if (p < 2 || q < 2 || gcd(p, q) != 1)
      throw std::invalid_argument("SurfaceSpec: B_{p,q} requires coprime p, q >= 2");
    if (h.size() != static_cast<std::size_t>(q.convert_to<long long>()) + 1)
      throw std::invalid_argument("SurfaceSpec: h needs q+1 coefficients");
    if (h.front() == 0 || h.back() == 0)
      throw std::invalid_argument("SurfaceSpec: x and y must not divide h");
    if (!detail::squarefree(h))
      throw std::invalid_argument("SurfaceSpec: h must be squarefree");
    SurfaceSpec s;
    s.family_ = Family::Bpq;
    s.p_ = p;
    s.q_ = q;
    s.h_ = std::move(h);
    s.eq_.add_term({0, 0, p}, 1);
    for (Int i = 0; i <= q; ++i) {
      const Rat& c = s.h_[static_cast<std::size_t>(i.convert_to<long long>())];
      if (c != 0) s.eq_.add_term({q - i, i, 0}, c);
    }
    return s;
  }

  // default h = x^q + y^q
  static SurfaceSpec bpq(Int p, Int q) {
    if (q < 2) throw std::invalid_argument("SurfaceSpec: B_{p,q} requires q >= 2");
    std::vector<Rat> h(static_cast<std::size_t>(q.convert_to<long long>()) + 1, Rat(0));
    h.front() = 1;
    h.back() = 1;
    return bpq(p, q, std::move(h));
  }

  static SurfaceSpec e6() {
    SurfaceSpec s;
    s.family_ = Family::E6;
    s.eq_ = parse_poly("x^2 + y^3 + z^4");
    return s;
  }

  static SurfaceSpec e7() {
    SurfaceSpec s;
    s.family_ = Family::E7;
    s.eq_ = parse_poly("x^2 + y^3 + y*z^3");
    return s;
  }

  static SurfaceSpec dn(Int n) {
    if (n < 4) throw std::invalid_argument("SurfaceSpec: D_n requires n >= 4");
    SurfaceSpec s;
    s.family_ = Family::Dn;
    s.n_ = n;
    s.eq_.add_term({2, 0, 0}, 1);
    s.eq_.add_term({0, 2, 1}, 1);
    s.eq_.add_term({0, 0, n - 1}, 1);
    return s;
  }

  static SurfaceSpec custom(SupportPoly g) {
    if (g.is_zero()) throw std::invalid_argument("SurfaceSpec: zero equation");
    SurfaceSpec s;
    s.family_ = Family::Custom;
    s.eq_ = std::move(g);
    return s;
  }

  Family family() const { return family_; }
  Int p() const { return p_; }
  Int q() const { return q_; }
  Int n() const { return n_; }
  const std::vector<Rat>& h_coeffs() const { return h_; }
  const SupportPoly& equation() const { return eq_; }

  std::string name() const {
    switch (family_) {
      case Family::Bpq: return "B_{" + p_.str() + "," + q_.str() + "}";
      case Family::E6: return "E6";
      case Family::E7: return "E7";
      case Family::Dn: return "D_" + n_.str();
      case Family::Custom: return "custom";
    }
    return "custom";
  }

 private:
  SurfaceSpec() = default;
  Family family_ = Family::Custom;
  Int p_ = 0, q_ = 0, n_ = 0;
  std::vector<Rat> h_;
  SupportPoly eq_;
};

struct ExceptionalRay {
  LatticeVector ray;
  Int copies = 1;

  bool operator==(const ExceptionalRay& o) const { return ray == o.ray && copies == o.copies; }
  bool operator<(const ExceptionalRay& o) const { return ray < o.ray; }
};

namespace detail {

// lattice length of the Newton-polyhedron edge on which rho attains its
// minimum; rho must sit in the relative interior of a wall of the fan
inline Int dual_edge_length(const SupportPoly& g, const LatticeVector& rho) {
  std::optional<Int> best;
  std::vector<LatticeVector> face;
  for (const auto& [e, c] : g.terms()) {
    Int v = dot(rho, e);
    if (!best || v < *best) {
      best = v;
      face.assign(1, e);
    } else if (v == *best) {
      face.push_back(e);
    }
  }
  if (face.size() < 2) throw std::logic_error("dual_edge_length: dual face is not an edge");
  LatticeVector a = *std::min_element(face.begin(), face.end());
  LatticeVector b = *std::max_element(face.begin(), face.end());
  LatticeVector d = b - a;
  for (const auto& e : face)
    if (!(e == a) && !proportional(e - a, d))
      throw std::logic_error("dual_edge_length: dual face is not an edge");
  return d.content();
}

}  // namespace detail

// Rays of the exceptional divisors: the strictly positive rays of the
// G-subdivision lying on the 2-skeleton of the Newton fan, with component
// multiplicities (lattice length of the dual edge for wall rays, 1 for the
// compact-facet normals).
inline std::vector<ExceptionalRay> exceptional_rays(const SurfaceSpec& s) {
  const SupportPoly& g = s.equation();
  if (s.family() == Family::Custom && is_nondegenerate(g).verdict == Verdict::No)
    throw std::invalid_argument("exceptional_rays: degenerate equation");
  Fan fan = newton_fan(g);
  std::vector<ExceptionalRay> out;
  for (const auto& r : fan.rays())
    if (r.all_positive()) out.push_back({r, 1});
  for (const auto& w : fan.walls()) {
    auto chain = hilbert_basis_2d(Cone({fan.rays()[static_cast<std::size_t>(w[0])],
                                        fan.rays()[static_cast<std::size_t>(w[1])]}));
    for (std::size_t i = 1; i + 1 < chain.size(); ++i)
      if (chain[i].all_positive()) out.push_back({chain[i], detail::dual_edge_length(g, chain[i])});
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct GraphNode {
  int id = 0;
  LatticeVector ray;
  Int copies = 1;
  std::optional<Int> weight;
  bool essential = true;
  std::string label;

  bool operator==(const GraphNode& o) const {
    return id == o.id && ray == o.ray && copies == o.copies && weight == o.weight &&
           essential == o.essential && label == o.label;
  }
};

struct ResolutionGraph {
  std::vector<GraphNode> nodes;
  std::vector<std::array<int, 2>> edges;

  bool operator==(const ResolutionGraph& o) const {
    return nodes == o.nodes && edges == o.edges;
  }
};

// Weighted dual graph of the resolution: one node per exceptional curve
// (wall rays expanded by their multiplicity), chains weighted -m_i from the
// relation u_{i-1} + u_{i+1} = m_i u_i, every chain attached to the central
// node.  Central self-intersection is only populated where the family
// determines it: -1 for B_{p,q} with p = 1 mod q, -2 for the minimal
// resolutions E6/E7/D_n, null otherwise.
inline ResolutionGraph dual_graph(const SurfaceSpec& s) {
  const SupportPoly& g = s.equation();
  Fan fan = newton_fan(g);

  int center = -1;
  for (std::size_t i = 0; i < fan.rays().size(); ++i) {
    if (!fan.rays()[i].all_positive()) continue;
    if (center >= 0) throw std::invalid_argument("star-shaped inputs only");
    center = static_cast<int>(i);
  }
  if (center < 0) throw std::invalid_argument("star-shaped inputs only");

  struct Branch {
    LatticeVector far;
    std::vector<LatticeVector> nodes;  // center-adjacent first
    std::vector<Int> weights;
    Int copies = 1;
  };
  std::vector<Branch> branches;
  for (const auto& w : fan.walls()) {
    auto chain = hilbert_basis_2d(Cone({fan.rays()[static_cast<std::size_t>(w[0])],
                                        fan.rays()[static_cast<std::size_t>(w[1])]}));
    if (w[0] != center && w[1] != center) {
      for (std::size_t i = 1; i + 1 < chain.size(); ++i)
        if (chain[i].all_positive()) throw std::invalid_argument("star-shaped inputs only");
      continue;
    }
    if (chain.size() == 2) continue;  // regular wall, no divisors on it
    if (w[0] == center) std::reverse(chain.begin(), chain.end());  // far -> center
    auto ms = chain_multipliers(chain);
    Branch b;
    b.far = chain.front();
    for (std::size_t i = chain.size() - 2; i >= 1; --i) {
      b.nodes.push_back(chain[i]);
      b.weights.push_back(-ms[i - 1]);
    }
    b.copies = detail::dual_edge_length(g, chain[1]);
    branches.push_back(std::move(b));
  }
  std::sort(branches.begin(), branches.end(),
            [](const Branch& a, const Branch& b) { return a.far < b.far; });

  std::optional<Int> central_weight;
  bool central_essential = true;
  switch (s.family()) {
    case Family::Bpq:
      if ((s.p() - 1) % s.q() == 0) {
        central_weight = -1;
        central_essential = false;
      }
      break;
    case Family::E6:
    case Family::E7:
    case Family::Dn:
      central_weight = -2;
      break;
    case Family::Custom:
      break;
  }

  ResolutionGraph graph;
  graph.nodes.push_back(
      {0, fan.rays()[static_cast<std::size_t>(center)], 1, central_weight, central_essential, "E0"});
  for (const auto& b : branches) {
    for (Int copy = 0; copy < b.copies; ++copy) {
      int prev = 0;
      for (std::size_t i = 0; i < b.nodes.size(); ++i) {
        int id = static_cast<int>(graph.nodes.size());
        graph.nodes.push_back(
            {id, b.nodes[i], 1, b.weights[i], true, "E" + std::to_string(id)});
        graph.edges.push_back({prev, id});
        prev = id;
      }
    }
  }
  return graph;
}

// Same graph with the essential flags as its point: every divisor is
// essential except the central one of B_{p,q} with p = 1 mod q (the one
// -1-curve of the non-minimal star).
inline ResolutionGraph essential_divisors(const SurfaceSpec& s) { return dual_graph(s); }

// Admissible order vectors at generic points of the exceptional components:
// the strictly positive Hilbert-basis members of the designated walls.
inline std::set<LatticeVector> mu_candidates(const SurfaceSpec& s) {
  std::vector<Cone> walls;
  switch (s.family()) {
    case Family::Bpq:
      walls.push_back(Cone({{0, 0, 1}, {s.p(), s.p(), s.q()}}));
      break;
    case Family::E6:
      walls.push_back(Cone({{0, 1, 0}, {6, 4, 3}}));
      walls.push_back(Cone({{0, 0, 1}, {6, 4, 3}}));
      break;
    case Family::E7:
      walls.push_back(Cone({{1, 0, 0}, {9, 6, 4}}));
      walls.push_back(Cone({{1, 2, 0}, {9, 6, 4}}));
      walls.push_back(Cone({{0, 0, 1}, {9, 6, 4}}));
      break;
    case Family::Dn: {
      LatticeVector c{s.n() - 1, s.n() - 2, 2};
      if (s.n() % 2 == 0)
        walls.push_back(Cone({{1, 0, 0}, c}));
      else
        walls.push_back(Cone({{0, 1, 0}, c}));
      walls.push_back(Cone({{1, 0, 2}, c}));
      break;
    }
    case Family::Custom:
      throw std::invalid_argument("mu_candidates: custom surfaces are not supported");
  }
  std::set<LatticeVector> mu;
  for (const auto& w : walls)
    for (const auto& v : hilbert_basis_2d(w))
      if (v.all_positive()) mu.insert(v);
  return mu;
}

// Strict transform in the third chart of the blow-up of the origin:
// substitute (x,y,z) <- (zx, zy, z) and strip the exceptional z-power.
inline SupportPoly strict_transform_chart3(const SupportPoly& g) {
  if (g.is_zero()) return g;
  std::optional<Int> minz;
  for (const auto& [e, c] : g.terms()) {
    Int t = e.sum();
    if (!minz || t < *minz) minz = t;
  }
  SupportPoly out;
  for (const auto& [e, c] : g.terms()) out.add_term({e[0], e[1], e.sum() - *minz}, c);
  return out;
}

struct ConstellationCode {
  Int p, q, n, r;    // p = n q + r with 1 <= r < q
  std::string code;  // point codes "Q_0, Q_0(3), Q_0(3^2), ..."

  Int chain_length() const { return n - 1; }
  Int fiber_curves() const { return n * q; }
  bool terminal() const { return r == 1; }
  std::optional<std::pair<Int, Int>> residual() const {
    if (r == 1) return std::nullopt;
    return std::make_pair(r, q);  // a B_{r,q} germ remains
  }
};

inline ConstellationCode constellation(Int p, Int q) {
  if (q < 3 || p <= q || gcd(p, q) != 1)
    throw std::invalid_argument("constellation requires coprime p > q >= 3");
  ConstellationCode c{p, q, p / q, p % q, "Q_0"};
  for (Int j = 1; j < c.n; ++j)
    c.code += j == 1 ? ", Q_0(3)" : ", Q_0(3^" + j.str() + ")";
  return c;
}

}  // namespace toric
