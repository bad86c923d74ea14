#ifndef TFORGE_POLY_TEXT_HPP
#define TFORGE_POLY_TEXT_HPP

#include <cctype>
#include <string>
#include <vector>

#include "tforge/multipoly.hpp"

namespace tforge {

// Text grammar (binding strength increasing):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := primary ['^' natural]
//   primary:= integer | name | '(' expr ')'
// Implicit multiplication is rejected. '/' requires a constant divisor and an
// exact division in the coefficient domain, so rational coefficients such as
// 3/2 round-trip over QQ while "1/2" over ZZ reports a coefficient error.
// A name is either a declared variable or, over an extension field, the
// field's generator symbol.

inline std::vector<std::string> numbered_vars(const std::string& stem, int n) {
  std::vector<std::string> v;
  v.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

namespace detail {

template <class D>
concept HasGenerator = requires(const D& d) {
  d.generator_symbol();
  d.generator();
};

template <class D>
concept SignedDomain = requires(const D& d, const typename D::Elem& e) {
  d.is_neg(e);
  d.abs(e);
};

template <class D>
class PolyParser {
 public:
  PolyParser(const std::string& text, const D& dom, const std::vector<std::string>& vars)
      : text_(text), dom_(dom), vars_(vars) {}

  MultiPoly<D> run() {
    MultiPoly<D> r = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return r;
  }

 private:
  using Poly = MultiPoly<D>;

  int nvars() const { return static_cast<int>(vars_.size()); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly parse_expr() {
    bool neg = eat('-');
    Poly acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc = acc + parse_term();
      } else if (eat('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  Poly parse_term() {
    Poly acc = parse_factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * parse_factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        Poly d = parse_factor();
        if (!d.is_constant()) throw ParseError("divisor must be a constant", at);
        acc = divide_by_constant(acc, d.constant_value(), at);
      } else {
        return acc;
      }
    }
  }

  Poly divide_by_constant(const Poly& p, const typename D::Elem& c, std::size_t at) {
    if (dom_.is_zero(c)) throw ParseError("division by zero", at);
    std::vector<typename Poly::Term> ts;
    ts.reserve(p.num_terms());
    for (const auto& t : p.terms()) {
      typename D::Elem q = dom_.zero();
      if (!dom_.try_div(q, t.coef, c)) throw ParseError("coefficient not in domain", at);
      ts.push_back({t.mono, std::move(q)});
    }
    return Poly::adopt_sorted(dom_, nvars(), std::move(ts));
  }

  Poly parse_factor() {
    Poly base = parse_primary();
    if (eat('^')) {
      skip_ws();
      std::size_t at = pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("exponent must be a natural number", at);
      unsigned long e = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
        if (e > Monomial::kMaxExponent) throw ParseError("exponent too large", at);
        ++pos_;
      }
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = parse_expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        digits += text_[pos_++];
      return Poly::from_int(dom_, nvars(), Int(digits));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
        name += text_[pos_++];
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return Poly::variable(dom_, nvars(), static_cast<int>(i));
      }
      if constexpr (HasGenerator<D>) {
        if (dom_.generator_symbol() == name)
          return Poly::constant(dom_, nvars(), dom_.generator());
      }
      throw ParseError("unknown variable '" + name + "'", at);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  const std::string& text_;
  const D& dom_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

inline bool plain_unsigned_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Coefficients bind through '*' and '^' on their own; only sums need parens.
inline bool needs_parens(const std::string& s) {
  return s.find('+') != std::string::npos || s.find('-') != std::string::npos;
}

}  // namespace detail

template <class D>
MultiPoly<D> parse_poly(const std::string& text, const D& dom,
                        const std::vector<std::string>& var_names) {
  if (static_cast<int>(var_names.size()) > Monomial::kMaxVars)
    throw Error("too many variables");
  return detail::PolyParser<D>(text, dom, var_names).run();
}

template <class D>
std::string format_poly(const MultiPoly<D>& p, const std::vector<std::string>& var_names) {
  if (static_cast<int>(var_names.size()) < p.nvars()) throw Error("missing variable names");
  if (p.is_zero()) return "0";
  const D& dom = p.domain();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    typename D::Elem c = t.coef;
    bool negative = false;
    if constexpr (detail::SignedDomain<D>) {
      if (dom.is_neg(c)) {
        negative = true;
        c = dom.abs(c);
      }
    }
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    for (int v = 0; v < p.nvars(); ++v) {
      unsigned e = t.mono.exponent(v);
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += var_names[static_cast<std::size_t>(v)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    std::string cs = dom.str(c);
    bool coef_is_one = dom.equal(c, dom.one());
    if (mono.empty()) {
      out += detail::needs_parens(cs) ? "(" + cs + ")" : cs;
    } else if (coef_is_one) {
      out += mono;
    } else {
      out += (detail::needs_parens(cs) ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

}  // namespace tforge

#endif
