#pragma once
// Truncated bivariate formal series over Q in the variables s, t.  A series
// carries an optional total-degree truncation N: coefficients of total
// degree >= N are unknown, never silently zero.  Every order computation
// certifies its answer against that frontier or fails loudly.  On top of the
// arithmetic live weighted orders and principal parts, wedges (triples of
// series with positive t-order) and the residual check of a defining
// equation along a wedge.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "newton.hpp"
#include "poly.hpp"

namespace toric {

class TruncSeries2 {
 public:
  using TermMap = std::map<LatticeVector, Rat>;  // dim-2 exponents (s, t), lex order

  TruncSeries2() = default;  // exact zero
  explicit TruncSeries2(std::optional<Int> trunc) : trunc_(std::move(trunc)) {
    if (trunc_ && *trunc_ < 0) throw std::invalid_argument("TruncSeries2: negative truncation");
  }

  // records a known coefficient; the exponent must lie below the frontier
  void add_term(const LatticeVector& e, const Rat& c) {
    if (e.dim() != 2 || e[0] < 0 || e[1] < 0)
      throw std::invalid_argument("TruncSeries2: exponents live in Z^2_{>=0}");
    if (trunc_ && e[0] + e[1] >= *trunc_)
      throw std::invalid_argument("TruncSeries2: term at or above the truncation");
    accumulate(e, c);
  }

  const TermMap& terms() const { return terms_; }
  const std::optional<Int>& trunc() const { return trunc_; }
  bool exact() const { return !trunc_.has_value(); }
  bool zero_to_truncation() const { return terms_.empty(); }

  // minimal total degree among the known terms
  std::optional<Int> order_total() const {
    std::optional<Int> o;
    for (const auto& [e, c] : terms_) {
      Int t = e[0] + e[1];
      if (!o || t < *o) o = t;
    }
    return o;
  }

  bool operator==(const TruncSeries2& o) const {
    return trunc_ == o.trunc_ && terms_ == o.terms_;
  }

  std::string str() const {
    std::string out;
    for (const auto& [e, c] : terms_) {
      Rat a = c;
      if (out.empty()) {
        if (a < 0) { out += "-"; a = -a; }
      } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
      }
      std::string mono = monomial_str(e);
      if (a != 1 || mono.empty()) {
        out += rat_str(a);
        if (!mono.empty()) out += "*";
      }
      out += mono;
    }
    if (out.empty()) out = "0";
    if (trunc_) out += " + O(deg " + trunc_->str() + ")";
    return out;
  }

 private:
  friend TruncSeries2 add(const TruncSeries2&, const TruncSeries2&);
  friend TruncSeries2 scale(const Rat&, const TruncSeries2&);
  friend TruncSeries2 mul(const TruncSeries2&, const TruncSeries2&);

  void accumulate(const LatticeVector& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static std::string monomial_str(const LatticeVector& e) {
    static const char* names[2] = {"s", "t"};
    std::string out;
    for (int j = 0; j < 2; ++j) {
      if (e[j] == 0) continue;
      if (!out.empty()) out += "*";
      out += names[j];
      if (e[j] != 1) out += "^" + e[j].str();
    }
    return out;
  }

  TermMap terms_;
  std::optional<Int> trunc_;
};

inline TruncSeries2 add(const TruncSeries2& a, const TruncSeries2& b) {
  std::optional<Int> tr;
  if (a.trunc() && b.trunc())
    tr = std::min(*a.trunc(), *b.trunc());
  else if (a.trunc())
    tr = a.trunc();
  else
    tr = b.trunc();
  TruncSeries2 r(tr);
  for (const auto& [e, c] : a.terms())
    if (!tr || e[0] + e[1] < *tr) r.accumulate(e, c);
  for (const auto& [e, c] : b.terms())
    if (!tr || e[0] + e[1] < *tr) r.accumulate(e, c);
  return r;
}

inline TruncSeries2 scale(const Rat& c, const TruncSeries2& a) {
  if (c == 0) return TruncSeries2();  // exactly zero, all coefficients known
  TruncSeries2 r(a.trunc());
  for (const auto& [e, k] : a.terms()) r.accumulate(e, c * k);
  return r;
}

// product truncation: a term of the result is known only when every way of
// reaching its degree uses known factors, so trunc = min(trunc_a + ord(b),
// trunc_b + ord(a)); a factor that is zero to its truncation contributes its
// truncation as the order
inline TruncSeries2 mul(const TruncSeries2& a, const TruncSeries2& b) {
  auto ord = [](const TruncSeries2& s) -> std::optional<Int> {
    auto o = s.order_total();
    if (o) return o;
    return s.trunc();  // exact zero -> infinite order
  };
  std::optional<Int> tr;
  auto feed = [&tr](const std::optional<Int>& t, const std::optional<Int>& o) {
    if (!t || !o) return;  // exact factor or exactly-zero partner
    Int v = *t + *o;
    if (!tr || v < *tr) tr = v;
  };
  feed(a.trunc(), ord(b));
  feed(b.trunc(), ord(a));
  TruncSeries2 r(tr);
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      LatticeVector e = ea + eb;
      if (tr && e[0] + e[1] >= *tr) continue;
      r.accumulate(e, ca * cb);
    }
  return r;
}

inline TruncSeries2 pow(const TruncSeries2& a, Int k) {
  if (k < 0) throw std::invalid_argument("pow: negative exponent");
  TruncSeries2 r;
  r.add_term({0, 0}, 1);
  for (Int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

inline TruncSeries2 operator+(const TruncSeries2& a, const TruncSeries2& b) { return add(a, b); }
inline TruncSeries2 operator-(const TruncSeries2& a, const TruncSeries2& b) {
  return add(a, scale(-1, b));
}
inline TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b) { return mul(a, b); }

// nu_v = min of v.e over the support, certified strictly below the frontier:
// every unknown exponent satisfies v.e >= trunc * min(v), so the candidate
// must beat that bound
inline Rat v_order(const TruncSeries2& a, const std::pair<Rat, Rat>& v) {
  if (v.first <= 0 || v.second <= 0)
    throw std::invalid_argument("v_order: the weight must be positive");
  if (a.terms().empty()) {
    if (a.exact()) throw std::invalid_argument("v_order of the zero series");
    throw std::runtime_error("order not determined at this truncation");
  }
  std::optional<Rat> best;
  for (const auto& [e, c] : a.terms()) {
    Rat w = v.first * e[0] + v.second * e[1];
    if (!best || w < *best) best = w;
  }
  if (!a.exact()) {
    Rat frontier = Rat(*a.trunc()) * std::min(v.first, v.second);
    if (!(*best < frontier)) throw std::runtime_error("order not determined at this truncation");
  }
  return *best;
}

// the v-principal part, an exact polynomial
inline TruncSeries2 v_part(const TruncSeries2& a, const std::pair<Rat, Rat>& v) {
  Rat o = v_order(a, v);
  TruncSeries2 out;
  for (const auto& [e, c] : a.terms())
    if (v.first * e[0] + v.second * e[1] == o) out.add_term(e, c);
  return out;
}

// the explicit "large enough" weight in v = (u, 1): one more than any
// t-degree seen below the truncation
inline Int large_weight_u(const TruncSeries2& a) {
  if (a.terms().empty())
    throw std::invalid_argument("large_weight_u needs at least one known term");
  Int m = 0;
  for (const auto& [e, c] : a.terms()) m = std::max(m, e[1]);
  return m + 1;
}

// A wedge: three series components for x, y, z with positive t-order.  The
// order triple eta is read off the declared terms (minimal t-exponent).
class Wedge {
 public:
  Wedge(TruncSeries2 wx, TruncSeries2 wy, TruncSeries2 wz)
      : c_{std::move(wx), std::move(wy), std::move(wz)} {
    static const char* names[3] = {"x", "y", "z"};
    for (int i = 0; i < 3; ++i) {
      const auto& s = c_[static_cast<std::size_t>(i)];
      if (s.terms().empty())
        throw std::invalid_argument(std::string("wedge component ") + names[i] +
                                    " is zero to truncation");
      std::optional<Int> m;
      for (const auto& [e, k] : s.terms())
        if (!m || e[1] < *m) m = e[1];
      if (*m < 1)
        throw std::invalid_argument(std::string("wedge component ") + names[i] +
                                    " must have positive t-order");
      eta_[static_cast<std::size_t>(i)] = *m;
    }
  }

  const TruncSeries2& x() const { return c_[0]; }
  const TruncSeries2& y() const { return c_[1]; }
  const TruncSeries2& z() const { return c_[2]; }
  LatticeVector eta() const { return {eta_[0], eta_[1], eta_[2]}; }

 private:
  std::array<TruncSeries2, 3> c_;
  std::array<Int, 3> eta_;
};

inline LatticeVector wedge_orders(const Wedge& w) { return w.eta(); }

// f(wx, wy, wz) with full truncation bookkeeping
inline TruncSeries2 pullback(const SupportPoly& f, const Wedge& w) {
  TruncSeries2 r;
  for (const auto& [e, c] : f.terms()) {
    TruncSeries2 m = pow(w.x(), e[0]);
    m = mul(m, pow(w.y(), e[1]));
    m = mul(m, pow(w.z(), e[2]));
    r = add(r, scale(c, m));
  }
  return r;
}

enum class RelationStatus { Zero, ZeroToTruncation, Nonzero, Inconclusive };

struct RelationCheck {
  RelationStatus status = RelationStatus::Inconclusive;
  std::optional<std::pair<LatticeVector, Rat>> leading;  // lex-least residual term
  std::optional<Int> depth;                              // certified vanishing depth
  std::string detail;
};

// Substitutes the wedge into f.  A known nonzero term settles the matter at
// any truncation; otherwise the verdict is only as strong as the residual's
// frontier, and depths below min_depth are reported as inconclusive.
inline RelationCheck check_relation(const SupportPoly& f, const Wedge& w, Int min_depth = 0) {
  TruncSeries2 r = pullback(f, w);
  if (!r.terms().empty()) {
    auto it = r.terms().begin();
    return {RelationStatus::Nonzero, std::make_pair(it->first, it->second), std::nullopt,
            "residual has the nonzero term at exponent " + it->first.str()};
  }
  if (r.exact()) return {RelationStatus::Zero, std::nullopt, std::nullopt, "residual is identically zero"};
  if (*r.trunc() >= min_depth)
    return {RelationStatus::ZeroToTruncation, std::nullopt, r.trunc(),
            "residual vanishes below total degree " + r.trunc()->str()};
  return {RelationStatus::Inconclusive, std::nullopt, r.trunc(),
          "inconclusive at depth " + r.trunc()->str()};
}

struct SkeletonCheck {
  bool on_skeleton = false;
  std::optional<Cone> wall;
};

// whether eta lies on a two-dimensional cone of the Newton fan of f
inline SkeletonCheck eta_skeleton_check(const SupportPoly& f, const LatticeVector& eta) {
  if (eta.dim() != 3 || !eta.all_positive())
    throw std::invalid_argument("eta_skeleton_check: eta must be strictly positive");
  Fan fan = newton_fan(f);
  for (const auto& w : fan.walls()) {
    const LatticeVector& a = fan.rays()[static_cast<std::size_t>(w[0])];
    const LatticeVector& b = fan.rays()[static_cast<std::size_t>(w[1])];
    auto sp = solve_in_plane(a, b, eta);
    if (sp && sp->first >= 0 && sp->second >= 0) return {true, Cone({a, b})};
  }
  return {false, std::nullopt};
}

}  // namespace toric
