#pragma once
// Polynomials in x, y, z kept as exponent -> coefficient maps, plus a small
// text parser for equations like "z^5 + x^3 + 2*x*y^2".

#include <cctype>
#include <map>
#include <string>

#include "core.hpp"

namespace toric {

class SupportPoly {
 public:
  using TermMap = std::map<LatticeVector, Rat>;

  SupportPoly() = default;

  void add_term(const LatticeVector& e, const Rat& c) {
    if (e.dim() != 3) throw std::invalid_argument("SupportPoly: exponent dimension must be 3");
    if (!e.all_nonnegative()) throw std::invalid_argument("SupportPoly: negative exponent");
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rat coeff(const LatticeVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  bool operator==(const SupportPoly& o) const { return terms_ == o.terms_; }

  // Renders terms in lexicographically descending exponent order, e.g.
  // "x^2*y - 3*z^4".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      bool neg = c < 0;
      Rat a = neg ? Rat(-c) : c;
      if (out.empty()) {
        if (neg) out += '-';
      } else {
        out += neg ? " - " : " + ";
      }
      std::string mono = monomial_str(e);
      if (mono.empty()) {
        out += rat_str(a);
      } else {
        if (a != 1) { out += rat_str(a); out += '*'; }
        out += mono;
      }
    }
    return out;
  }

 private:
  static std::string monomial_str(const LatticeVector& e) {
    static const char* names[3] = {"x", "y", "z"};
    std::string s;
    for (int i = 0; i < 3; ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += '*';
      s += names[i];
      if (e[i] != 1) { s += '^'; s += e[i].str(); }
    }
    return s;
  }

  TermMap terms_;
};

// Recursive-descent parser for integer-coefficient polynomials in x, y, z.
// Grammar: poly := [+-] term ([+-] term)* ; term := coeff? ('*'? factor)* ;
// factor := (x|y|z) ('^' uint)?.  Whitespace is insignificant.
inline SupportPoly parse_poly(const std::string& text) {
  SupportPoly p;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what);
  };
  auto parse_uint = [&]() -> Int {
    std::size_t start = i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail("expected a number");
    return Int(text.substr(start, i - start));
  };

  skip_ws();
  if (i == n) fail("empty polynomial");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == n) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-' between terms");
    }
    first = false;

    Rat coeff = sign;
    LatticeVector expo{0, 0, 0};
    bool saw_factor = false;
    if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff *= Rat(parse_uint());
      saw_factor = true;
    }
    while (true) {
      skip_ws();
      bool starred = false;
      if (i < n && text[i] == '*') {
        starred = true;
        ++i;
        skip_ws();
        if (i == n) fail("trailing '*'");
      }
      if (i >= n) break;
      char ch = text[i];
      int var;
      if (ch == 'x') var = 0;
      else if (ch == 'y') var = 1;
      else if (ch == 'z') var = 2;
      else if (ch == '+' || ch == '-') {
        if (starred) fail("expected a factor after '*'");
        break;
      }
      else if (std::isalpha(static_cast<unsigned char>(ch)))
        fail(std::string("unknown variable '") + ch + "'");
      else if (std::isdigit(static_cast<unsigned char>(ch)))
        fail("unexpected number; coefficients go in front of a term");
      else
        fail(std::string("unexpected character '") + ch + "'");
      ++i;
      Int e = 1;
      skip_ws();
      if (i < n && text[i] == '^') {
        ++i;
        skip_ws();
        e = parse_uint();
      }
      expo[var] += e;
      saw_factor = true;
    }
    if (!saw_factor) fail("empty term");
    p.add_term(expo, coeff);
  }
  return p;
}

}  // namespace toric
