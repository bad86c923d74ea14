#ifndef TFORGE_UNIPOLY_HPP
#define TFORGE_UNIPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "tforge/domain.hpp"
#include "tforge/error.hpp"
#include "tforge/poly_text.hpp"

namespace tforge {

// Dense univariate polynomial, coefficients low to high, trailing zeros
// trimmed. Used for the polynomials f and their transforms, resultants and
// irreducibility work; the sparse MultiPoly handles everything multivariate.
template <class D>
class UniPoly {
 public:
  using Domain = D;
  using Elem = typename D::Elem;

  explicit UniPoly(const D& dom) : dom_(dom) {}

  UniPoly(const D& dom, std::vector<Elem> coeffs) : dom_(dom), c_(std::move(coeffs)) { trim(); }

  static UniPoly zero(const D& dom) { return UniPoly(dom); }

  static UniPoly constant(const D& dom, Elem c) {
    UniPoly p(dom);
    if (!dom.is_zero(c)) p.c_.push_back(std::move(c));
    return p;
  }

  static UniPoly x(const D& dom) {
    UniPoly p(dom);
    p.c_ = {dom.zero(), dom.one()};
    return p;
  }

  static UniPoly monomial(const D& dom, int e, Elem c) {
    UniPoly p(dom);
    if (dom.is_zero(c)) return p;
    p.c_.assign(static_cast<std::size_t>(e) + 1, dom.zero());
    p.c_.back() = std::move(c);
    return p;
  }

  const D& domain() const { return dom_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const Elem& leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
  }

  bool is_monic() const { return !c_.empty() && dom_.equal(c_.back(), dom_.one()); }

  Elem coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return dom_.zero();
    return c_[static_cast<std::size_t>(i)];
  }

  const std::vector<Elem>& coeffs() const { return c_; }

  bool operator==(const UniPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!dom_.equal(c_[i], o.c_[i])) return false;
    return true;
  }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    const D& dom = a.dom_;
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), dom.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = dom.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return UniPoly(dom, std::move(r));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    const D& dom = a.dom_;
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), dom.zero());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = dom.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return UniPoly(dom, std::move(r));
  }

  UniPoly operator-() const {
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(dom_.neg(v));
    return UniPoly(dom_, std::move(r));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.dom_);
    const D& dom = a.dom_;
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, dom.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) dom.addmul(r[i + j], a.c_[i], b.c_[j]);
    return UniPoly(dom, std::move(r));
  }

  UniPoly scaled(const Elem& s) const {
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const auto& v : c_) r.push_back(dom_.mul(v, s));
    return UniPoly(dom_, std::move(r));
  }

  // Multiply by X^k.
  UniPoly shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<Elem> r(static_cast<std::size_t>(k), dom_.zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return UniPoly(dom_, std::move(r));
  }

  // Division with remainder; requires an invertible leading coefficient of
  // the divisor (a field, in all our uses).
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    static_assert(D::is_field, "divrem requires a field domain");
    if (b.is_zero()) throw Error("polynomial division by zero");
    const D& dom = a.dom_;
    if (a.degree() < b.degree()) return {UniPoly(dom), a};
    Elem lcinv = dom.inv(b.leading());
    std::vector<Elem> rem = a.c_;
    std::vector<Elem> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, dom.zero());
    for (int i = a.degree(); i >= b.degree(); --i) {
      Elem q = dom.mul(rem[static_cast<std::size_t>(i)], lcinv);
      if (dom.is_zero(q)) continue;
      quo[static_cast<std::size_t>(i - b.degree())] = q;
      for (int j = 0; j <= b.degree(); ++j) {
        auto& slot = rem[static_cast<std::size_t>(i - b.degree() + j)];
        slot = dom.sub(slot, dom.mul(q, b.c_[static_cast<std::size_t>(j)]));
      }
    }
    return {UniPoly(dom, std::move(quo)), UniPoly(dom, std::move(rem))};
  }

  UniPoly mod(const UniPoly& m) const { return divrem(*this, m).second; }

  UniPoly monic() const {
    static_assert(D::is_field, "monic requires a field domain");
    if (is_zero()) return *this;
    return scaled(dom_.inv(leading()));
  }

  static UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    static_assert(D::is_field, "gcd requires a field domain");
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
      UniPoly r = f.mod(g);
      f = std::move(g);
      g = std::move(r);
    }
    return f.is_zero() ? f : f.monic();
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(dom_);
    std::vector<Elem> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.push_back(dom_.mul(c_[i], dom_.from_int(Int(static_cast<unsigned long>(i)))));
    return UniPoly(dom_, std::move(r));
  }

  Elem eval(const Elem& x) const {
    Elem acc = dom_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = dom_.mul(acc, x);
      dom_.add_assign(acc, c_[i]);
    }
    return acc;
  }

  // Horner evaluation with polynomial argument modulo m.
  UniPoly eval_poly_mod(const UniPoly& arg, const UniPoly& m) const {
    UniPoly acc(dom_);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = (acc * arg + constant(dom_, c_[i])).mod(m);
    }
    return acc;
  }

  UniPoly powmod(const Int& e, const UniPoly& m) const {
    if (e < 0) throw Error("powmod: negative exponent");
    UniPoly base = this->mod(m);
    UniPoly acc = constant(dom_, dom_.one()).mod(m);
    for (std::size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
      acc = (acc * acc).mod(m);
      if (mpz_tstbit(e.get_mpz_t(), bit)) acc = (acc * base).mod(m);
    }
    return acc;
  }

  // gcd(f, f') constant <=> separable (for finite fields: squarefree).
  bool is_separable() const {
    static_assert(D::is_field, "separability test requires a field domain");
    if (degree() < 1) return false;
    return gcd(*this, derivative()).degree() == 0;
  }

  // x -> s*x followed by renormalization to monic: f(s X)/s^n for monic f.
  UniPoly rescale_root(const Elem& s) const {
    static_assert(D::is_field, "rescale_root requires a field domain");
    if (!is_monic()) throw Error("rescale_root requires a monic polynomial");
    const int n = degree();
    std::vector<Elem> r(c_.size(), dom_.zero());
    // new coeff of X^i is c_i * s^{i-n} = c_i / s^{n-i}
    Elem sinv = dom_.inv(s);
    Elem acc = dom_.one();
    for (int i = n; i >= 0; --i) {
      r[static_cast<std::size_t>(i)] = dom_.mul(c_[static_cast<std::size_t>(i)], acc);
      acc = dom_.mul(acc, sinv);
    }
    return UniPoly(dom_, std::move(r));
  }

  static UniPoly random_monic(const D& dom, int degree, Rng& rng) {
    std::vector<Elem> c;
    c.reserve(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) c.push_back(dom.random_elem(rng));
    c.push_back(dom.one());
    return UniPoly(dom, std::move(c));
  }

 private:
  void trim() {
    while (!c_.empty() && dom_.is_zero(c_.back())) c_.pop_back();
  }

  D dom_;
  std::vector<Elem> c_;
};

// Text round-trip through the shared grammar, restricted to one variable.
template <class D>
UniPoly<D> parse_unipoly(const std::string& text, const D& dom, const std::string& var = "x") {
  MultiPoly<D> m = parse_poly(text, dom, {var});
  std::vector<typename D::Elem> c(static_cast<std::size_t>(std::max(0, m.total_degree())) + 1,
                                  dom.zero());
  for (const auto& t : m.terms()) c[t.mono.exponent(0)] = t.coef;
  return UniPoly<D>(dom, std::move(c));
}

template <class D>
MultiPoly<D> to_multipoly(const UniPoly<D>& f) {
  std::vector<typename MultiPoly<D>::Term> ts;
  for (int i = f.degree(); i >= 0; --i) {
    auto c = f.coeff(i);
    if (!f.domain().is_zero(c))
      ts.push_back({Monomial::variable(0, static_cast<unsigned>(i)), std::move(c)});
  }
  return MultiPoly<D>::adopt_sorted(f.domain(), 1, std::move(ts));
}

template <class D>
std::string format_unipoly(const UniPoly<D>& f, const std::string& var = "x") {
  return format_poly(to_multipoly(f), {var});
}

}  // namespace tforge

#endif
