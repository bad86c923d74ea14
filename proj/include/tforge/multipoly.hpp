#ifndef TFORGE_MULTIPOLY_HPP
#define TFORGE_MULTIPOLY_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "tforge/domain.hpp"
#include "tforge/error.hpp"
#include "tforge/monomial.hpp"

namespace tforge {

template <class D>
class TermAccumulator;

// Sparse exact multivariate polynomial over an exchangeable coefficient
// domain. Terms are kept strictly lex-descending (x1 > x2 > ... > xn) with no
// zero coefficient stored, so equality is equality of the term vectors and
// the first term is the leading term.
template <class D>
class MultiPoly {
 public:
  using Domain = D;
  using Elem = typename D::Elem;

  struct Term {
    Monomial mono;
    Elem coef;
  };

  MultiPoly(const D& dom, int nvars) : dom_(dom), nvars_(nvars) {
    if (nvars < 0 || nvars > Monomial::kMaxVars)
      throw Error("variable count must be between 0 and " + std::to_string(Monomial::kMaxVars));
  }

  static MultiPoly zero(const D& dom, int nvars) { return MultiPoly(dom, nvars); }

  static MultiPoly constant(const D& dom, int nvars, Elem c) {
    MultiPoly p(dom, nvars);
    if (!dom.is_zero(c)) p.terms_.push_back({Monomial::one(), std::move(c)});
    return p;
  }

  static MultiPoly from_int(const D& dom, int nvars, const Int& v) {
    return constant(dom, nvars, dom.from_int(v));
  }

  // x_{i+1} in 1-based naming; i is the 0-based variable index.
  static MultiPoly variable(const D& dom, int nvars, int i, unsigned e = 1) {
    if (i < 0 || i >= nvars) throw Error("variable index out of range");
    if (e == 0) return constant(dom, nvars, dom.one());
    MultiPoly p(dom, nvars);
    p.terms_.push_back({Monomial::variable(i, e), dom.one()});
    return p;
  }

  static MultiPoly monomial_term(const D& dom, int nvars, Monomial m, Elem c) {
    MultiPoly p(dom, nvars);
    if (!dom.is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }

  // Canonicalize an arbitrary term list (merges duplicates, drops zeros).
  static MultiPoly from_terms(const D& dom, int nvars, const std::vector<Term>& ts);

  // Used by TermAccumulator: terms already sorted, distinct and nonzero.
  static MultiPoly adopt_sorted(const D& dom, int nvars, std::vector<Term> ts) {
    MultiPoly p(dom, nvars);
    p.terms_ = std::move(ts);
#ifndef NDEBUG
    p.check_canonical();
#endif
    return p;
  }

  const D& domain() const { return dom_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  Elem constant_value() const {
    if (terms_.empty()) return dom_.zero();
    if (!terms_.back().mono.is_one()) throw Error("polynomial is not constant");
    return terms_.back().coef;
  }

  // Lexicographically greatest term; the pure lex order makes the classical
  // leading-term statements directly assertable.
  const Term& leading_term() const {
    if (terms_.empty()) throw Error("leading term of the zero polynomial");
    return terms_.front();
  }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.total_degree(nvars_)));
    return d;
  }

  int degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.exponent(var)));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_[0].mono.total_degree(nvars_);
    for (const auto& t : terms_)
      if (t.mono.total_degree(nvars_) != d) return false;
    return true;
  }

  bool operator==(const MultiPoly& o) const {
    if (!dom_.same(o.dom_) || nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].mono == o.terms_[i].mono)) return false;
      if (!dom_.equal(terms_[i].coef, o.terms_[i].coef)) return false;
    }
    return true;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return merge(a, b, true); }

  MultiPoly operator-() const {
    MultiPoly r(dom_, nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono, dom_.neg(t.coef)});
    return r;
  }

  MultiPoly times_term(const Monomial& m, const Elem& c) const {
    MultiPoly r(dom_, nvars_);
    if (dom_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& u : terms_) {
      Elem v = dom_.mul(u.coef, c);
      if (!dom_.is_zero(v)) r.terms_.push_back({u.mono * m, std::move(v)});
    }
#ifndef NDEBUG
    r.check_canonical();
#endif
    return r;
  }

  MultiPoly scaled(const Elem& c) const { return times_term(Monomial::one(), c); }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(dom_, nvars_, dom_.one());
    MultiPoly base = *this;
    for (;;) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (!e) return r;
      base = base * base;
    }
  }

  // Exact evaluation at a point of the coefficient domain.
  Elem evaluate(const std::vector<Elem>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw DomainMismatch("evaluation point has wrong length");
    std::vector<std::vector<Elem>> powers(static_cast<std::size_t>(nvars_));
    for (int v = 0; v < nvars_; ++v) {
      int d = degree_in(v);
      auto& tab = powers[static_cast<std::size_t>(v)];
      tab.reserve(static_cast<std::size_t>(d + 2));
      tab.push_back(dom_.one());
      for (int e = 1; e <= d; ++e)
        tab.push_back(dom_.mul(tab.back(), point[static_cast<std::size_t>(v)]));
    }
    Elem acc = dom_.zero();
    for (const auto& t : terms_) {
      Elem val = t.coef;
      for (int v = 0; v < nvars_; ++v) {
        unsigned e = t.mono.exponent(v);
        if (e) val = dom_.mul(val, powers[static_cast<std::size_t>(v)][e]);
      }
      dom_.add_assign(acc, val);
    }
    return acc;
  }

  void require_compatible(const MultiPoly& o) const {
    if (!dom_.same(o.dom_)) throw DomainMismatch("coefficient domains differ");
    if (nvars_ != o.nvars_) throw DomainMismatch("variable counts differ");
  }

#ifndef NDEBUG
  void check_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (dom_.is_zero(terms_[i].coef)) throw Error("canonical form violated: stored zero");
      if (i + 1 < terms_.size() && !terms_[i].mono.lex_greater(terms_[i + 1].mono))
        throw Error("canonical form violated: term order");
    }
  }
#endif

 private:
  static MultiPoly merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    a.require_compatible(b);
    MultiPoly r(a.dom_, a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    const D& dom = a.dom_;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      const auto& ta = a.terms_[i];
      const auto& tb = b.terms_[j];
      if (ta.mono == tb.mono) {
        Elem c = subtract ? dom.sub(ta.coef, tb.coef) : dom.add(ta.coef, tb.coef);
        if (!dom.is_zero(c)) r.terms_.push_back({ta.mono, std::move(c)});
        ++i, ++j;
      } else if (ta.mono.lex_greater(tb.mono)) {
        r.terms_.push_back(ta);
        ++i;
      } else {
        r.terms_.push_back({tb.mono, subtract ? dom.neg(tb.coef) : tb.coef});
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j)
      r.terms_.push_back({b.terms_[j].mono, subtract ? dom.neg(b.terms_[j].coef) : b.terms_[j].coef});
#ifndef NDEBUG
    r.check_canonical();
#endif
    return r;
  }

  D dom_;
  int nvars_;
  std::vector<Term> terms_;
};

// Open-addressing accumulator used by products and big sums. The probe table
// holds indices into dense key/value arrays, so growing never moves a
// coefficient and extraction is a single sort of the dense arrays.
template <class D>
class TermAccumulator {
 public:
  using Elem = typename D::Elem;

  explicit TermAccumulator(const D& dom, std::size_t expected = 16) : dom_(dom) {
    std::size_t cap = 32;
    while (cap < expected * 2) cap <<= 1;
    slots_.assign(cap, -1);
    mask_ = cap - 1;
  }

  void add(const Monomial& m, const Elem& c) { dom_.add_assign(value_for(m), c); }

  void add_product(const Monomial& m, const Elem& a, const Elem& b) {
    dom_.addmul(value_for(m), a, b);
  }

  void add_poly(const MultiPoly<D>& p) {
    for (const auto& t : p.terms()) add(t.mono, t.coef);
  }

  // acc += a*b, fused
  void add_product_poly(const MultiPoly<D>& a, const MultiPoly<D>& b) {
    for (const auto& ta : a.terms())
      for (const auto& tb : b.terms()) add_product(ta.mono * tb.mono, ta.coef, tb.coef);
  }

  std::size_t distinct_terms() const { return keys_.size(); }

  MultiPoly<D> take(int nvars) {
    std::vector<std::uint32_t> idx(keys_.size());
    std::iota(idx.begin(), idx.end(), 0u);
    idx.erase(std::remove_if(idx.begin(), idx.end(),
                             [&](std::uint32_t i) { return dom_.is_zero(vals_[i]); }),
              idx.end());
    std::sort(idx.begin(), idx.end(),
              [&](std::uint32_t a, std::uint32_t b) { return keys_[a].lex_greater(keys_[b]); });
    std::vector<typename MultiPoly<D>::Term> ts;
    ts.reserve(idx.size());
    for (std::uint32_t i : idx) ts.push_back({keys_[i], std::move(vals_[i])});
    keys_.clear();
    vals_.clear();
    std::fill(slots_.begin(), slots_.end(), -1);
    return MultiPoly<D>::adopt_sorted(dom_, nvars, std::move(ts));
  }

 private:
  Elem& value_for(const Monomial& m) {
    std::size_t h = m.hash() & mask_;
    while (slots_[h] >= 0) {
      std::size_t k = static_cast<std::size_t>(slots_[h]);
      if (keys_[k] == m) return vals_[k];
      h = (h + 1) & mask_;
    }
    slots_[h] = static_cast<std::int64_t>(keys_.size());
    keys_.push_back(m);
    vals_.push_back(dom_.zero());
    if (keys_.size() * 3 > (mask_ + 1) * 2) {
      grow();
      return vals_.back();
    }
    return vals_.back();
  }

  void grow() {
    std::size_t cap = (mask_ + 1) << 1;
    slots_.assign(cap, -1);
    mask_ = cap - 1;
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      std::size_t h = keys_[i].hash() & mask_;
      while (slots_[h] >= 0) h = (h + 1) & mask_;
      slots_[h] = static_cast<std::int64_t>(i);
    }
  }

  D dom_;
  std::vector<Monomial> keys_;
  std::vector<Elem> vals_;
  std::vector<std::int64_t> slots_;
  std::size_t mask_ = 0;
};

template <class D>
MultiPoly<D> MultiPoly<D>::from_terms(const D& dom, int nvars,
                                      const std::vector<typename MultiPoly<D>::Term>& ts) {
  TermAccumulator<D> acc(dom, ts.size());
  for (const auto& t : ts) acc.add(t.mono, t.coef);
  return acc.take(nvars);
}

template <class D>
MultiPoly<D> operator*(const MultiPoly<D>& a, const MultiPoly<D>& b) {
  a.require_compatible(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly<D>::zero(a.domain(), a.nvars());
  if (b.num_terms() == 1) return a.times_term(b.terms()[0].mono, b.terms()[0].coef);
  if (a.num_terms() == 1) return b.times_term(a.terms()[0].mono, a.terms()[0].coef);
  TermAccumulator<D> acc(a.domain(), std::min<std::size_t>(a.num_terms() * b.num_terms() / 2 + 16,
                                                           std::size_t(1) << 22));
  acc.add_product_poly(a, b);
  return acc.take(a.nvars());
}

// Map coefficients into another domain (e.g. reduce ZZ mod p). The monomial
// order is untouched, so only zero-drops are needed.
template <class D1, class D2, class Fn>
MultiPoly<D2> map_coefficients(const MultiPoly<D1>& p, const D2& dom2, Fn&& fn) {
  std::vector<typename MultiPoly<D2>::Term> ts;
  ts.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    typename D2::Elem c = fn(t.coef);
    if (!dom2.is_zero(c)) ts.push_back({t.mono, std::move(c)});
  }
  return MultiPoly<D2>::adopt_sorted(dom2, p.nvars(), std::move(ts));
}

template <class D>
MultiPoly<D> reduce_mod_p(const MultiPoly<ZZ>& p, const D& dom) {
  return map_coefficients(p, dom, [&](const Int& c) { return dom.from_int(c); });
}

// Simultaneous substitution x_i -> repl[i] for the variables present in
// repl (0-based indices); all other variables keep their index in the output
// ring. Replacement polynomials live in the output ring.
template <class D>
MultiPoly<D> substitute(const MultiPoly<D>& p,
                        const std::vector<std::pair<int, MultiPoly<D>>>& repl, int out_nvars) {
  const D& dom = p.domain();
  std::vector<const MultiPoly<D>*> target(static_cast<std::size_t>(p.nvars()), nullptr);
  for (const auto& [v, r] : repl) {
    if (v < 0 || v >= p.nvars()) throw Error("substitute: variable index out of range");
    if (!dom.same(r.domain())) throw DomainMismatch("substitute: replacement domain differs");
    if (r.nvars() != out_nvars) throw DomainMismatch("substitute: replacement variable count differs");
    target[static_cast<std::size_t>(v)] = &r;
  }
  // Power tables for replaced variables only.
  std::vector<std::vector<MultiPoly<D>>> powers(static_cast<std::size_t>(p.nvars()));
  for (int v = 0; v < p.nvars(); ++v) {
    if (!target[static_cast<std::size_t>(v)]) continue;
    int d = p.degree_in(v);
    auto& tab = powers[static_cast<std::size_t>(v)];
    tab.push_back(MultiPoly<D>::constant(dom, out_nvars, dom.one()));
    for (int e = 1; e <= d; ++e) tab.push_back(tab.back() * (*target[static_cast<std::size_t>(v)]));
  }
  TermAccumulator<D> acc(dom, p.num_terms() + 16);
  for (const auto& t : p.terms()) {
    Monomial kept;  // part of the monomial in non-replaced variables
    MultiPoly<D> prod = MultiPoly<D>::constant(dom, out_nvars, dom.one());
    for (int v = 0; v < p.nvars(); ++v) {
      unsigned e = t.mono.exponent(v);
      if (!e) continue;
      if (target[static_cast<std::size_t>(v)]) {
        prod = prod * powers[static_cast<std::size_t>(v)][e];
      } else {
        kept.set_exponent(v, e);
      }
    }
    for (const auto& u : prod.terms()) acc.add_product(u.mono * kept, u.coef, t.coef);
  }
  return acc.take(out_nvars);
}

}  // namespace tforge

#endif
