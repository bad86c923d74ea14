#ifndef TFORGE_SYMMETRIC_HPP
#define TFORGE_SYMMETRIC_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tforge/multipoly.hpp"
#include "tforge/permutation.hpp"
#include "tforge/poly_text.hpp"

namespace tforge {

// (sigma . p)(x1, ..., xn) = p(x_{sigma(1)}, ..., x_{sigma(n)}); with this
// convention sigma.(tau.p) = (sigma tau).p.
template <class D>
MultiPoly<D> apply_permutation(const MultiPoly<D>& p, const Permutation& sigma) {
  if (sigma.n() != p.nvars()) throw DomainMismatch("permutation length differs from nvars");
  Permutation inv = sigma.inverse();
  std::vector<typename MultiPoly<D>::Term> ts;
  ts.reserve(p.num_terms());
  for (const auto& t : p.terms()) {
    Monomial m;
    for (int j = 0; j < p.nvars(); ++j) {
      unsigned e = t.mono.exponent(inv(j));
      if (e) m.set_exponent(j, e);
    }
    ts.push_back({m, t.coef});
  }
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return a.mono.lex_greater(b.mono); });
  return MultiPoly<D>::adopt_sorted(p.domain(), p.nvars(), std::move(ts));
}

// e_k(x1..xn): sum of all k-fold products of distinct variables; e_0 = 1.
template <class D>
MultiPoly<D> elementary_symmetric(const D& dom, int n, int k) {
  if (k < 0 || k > n) throw Error("elementary symmetric index out of range");
  if (k == 0) return MultiPoly<D>::constant(dom, n, dom.one());
  std::vector<typename MultiPoly<D>::Term> ts;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    Monomial m;
    for (int i : pick) m.set_exponent(i, 1);
    ts.push_back({m, dom.one()});
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(ts.begin(), ts.end(),
            [](const auto& a, const auto& b) { return a.mono.lex_greater(b.mono); });
  return MultiPoly<D>::adopt_sorted(dom, n, std::move(ts));
}

// All of e_0(f1..fm), ..., e_kmax(f1..fm) in one sweep: the running product
// prod (T + f_i) truncated at T^kmax shares every intermediate product, which
// is what keeps the degree-45 and degree-60 elementary symmetric functions of
// the covariant components affordable.
template <class D>
std::vector<MultiPoly<D>> elem_sym_prefix(const std::vector<MultiPoly<D>>& polys, int kmax) {
  if (polys.empty()) throw Error("elem_sym_prefix: empty input");
  const D& dom = polys[0].domain();
  int nv = polys[0].nvars();
  for (const auto& f : polys) polys[0].require_compatible(f);
  std::vector<MultiPoly<D>> e;
  e.push_back(MultiPoly<D>::constant(dom, nv, dom.one()));
  for (std::size_t i = 0; i < polys.size(); ++i) {
    int top = std::min<int>(kmax, static_cast<int>(i) + 1);
    if (static_cast<int>(e.size()) <= top) e.push_back(MultiPoly<D>::zero(dom, nv));
    for (int j = top; j >= 1; --j)
      e[static_cast<std::size_t>(j)] =
          e[static_cast<std::size_t>(j)] + e[static_cast<std::size_t>(j - 1)] * polys[i];
  }
  while (static_cast<int>(e.size()) <= kmax) e.push_back(MultiPoly<D>::zero(dom, nv));
  return e;
}

template <class D>
MultiPoly<D> elem_sym_of(const std::vector<MultiPoly<D>>& polys, int k) {
  if (k < 0 || k > static_cast<int>(polys.size()))
    throw Error("elem_sym_of: index out of range");
  return elem_sym_prefix(polys, k)[static_cast<std::size_t>(k)];
}

// Delta = prod_{i<j} (x_i - x_j); skew-symmetric, degree n(n-1)/2.
template <class D>
MultiPoly<D> vandermonde_delta(const D& dom, int n) {
  if (n < 2) throw Error("vandermonde_delta needs n >= 2");
  MultiPoly<D> r = MultiPoly<D>::constant(dom, n, dom.one());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      r = r * (MultiPoly<D>::variable(dom, n, i) - MultiPoly<D>::variable(dom, n, j));
  return r;
}

namespace detail {

inline std::string witness_string(const Monomial& m, int nvars, const std::string& coef) {
  std::string s = coef;
  for (int v = 0; v < nvars; ++v) {
    unsigned e = m.exponent(v);
    if (!e) continue;
    s += "*x" + std::to_string(v + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace detail

// Exact division by lex leading-term long division. Fails loudly with the
// offending remainder term if the division is not exact.
template <class D>
MultiPoly<D> divide_exact(const MultiPoly<D>& num, const MultiPoly<D>& den) {
  num.require_compatible(den);
  if (den.is_zero()) throw Error("division by the zero polynomial");
  const D& dom = num.domain();
  if (num.is_zero()) return MultiPoly<D>::zero(dom, num.nvars());
  std::map<Monomial, typename D::Elem, MonomialLexGreater> rem;
  for (const auto& t : num.terms()) rem.emplace_hint(rem.end(), t.mono, t.coef);
  const Monomial dm = den.leading_term().mono;
  const typename D::Elem& dc = den.leading_term().coef;
  std::vector<typename MultiPoly<D>::Term> q;
  while (!rem.empty()) {
    const auto& [m, c] = *rem.begin();
    if (!m.divisible_by(dm))
      throw InexactDivision("inexact polynomial division",
                            detail::witness_string(m, num.nvars(), dom.str(c)));
    typename D::Elem qc = dom.zero();
    if (!dom.try_div(qc, c, dc))
      throw InexactDivision("inexact polynomial division (coefficient)",
                            detail::witness_string(m, num.nvars(), dom.str(c)));
    Monomial qm = m.divided_by(dm);
    for (const auto& t : den.terms()) {
      Monomial key = qm * t.mono;
      auto it = rem.find(key);
      if (it == rem.end()) {
        typename D::Elem v = dom.neg(dom.mul(qc, t.coef));
        if (!dom.is_zero(v)) rem.emplace(key, std::move(v));
      } else {
        typename D::Elem v = dom.sub(it->second, dom.mul(qc, t.coef));
        if (dom.is_zero(v))
          rem.erase(it);
        else
          it->second = std::move(v);
      }
    }
    q.push_back({qm, std::move(qc)});
  }
  return MultiPoly<D>::adopt_sorted(dom, num.nvars(), std::move(q));
}

// Symmetry is checked on the n-1 adjacent transpositions, which generate Sn.
template <class D>
bool is_symmetric(const MultiPoly<D>& p) {
  for (int i = 0; i + 1 < p.nvars(); ++i) {
    if (apply_permutation(p, Permutation::transposition(p.nvars(), i, i + 1)) != p) return false;
  }
  return true;
}

template <class D>
bool is_skew(const MultiPoly<D>& p) {
  for (int i = 0; i + 1 < p.nvars(); ++i) {
    if (apply_permutation(p, Permutation::transposition(p.nvars(), i, i + 1)) != -p) return false;
  }
  return true;
}

// The coefficient symbols a_k = (-1)^k e_k of the universal monic polynomial
// X^n + a_1 X^{n-1} + ... + a_n.
template <class D>
struct SymmetricBasis {
  int n;
  std::vector<MultiPoly<D>> e;  // e[0..n]

  static SymmetricBasis make(const D& dom, int n) {
    SymmetricBasis b;
    b.n = n;
    for (int k = 0; k <= n; ++k) b.e.push_back(elementary_symmetric(dom, n, k));
    return b;
  }

  MultiPoly<D> a(int k) const {
    return k % 2 == 0 ? e[static_cast<std::size_t>(k)] : -e[static_cast<std::size_t>(k)];
  }
};

// Rewrite a symmetric polynomial in the coefficient symbols a_1..a_n
// (a_k = (-1)^k e_k) by classical leading-term elimination: the lex leading
// exponent of a symmetric polynomial is a partition lambda, and subtracting
// c * e_1^{l1-l2} e_2^{l2-l3} ... kills it; leading terms strictly decrease.
template <class D>
MultiPoly<D> symmetrize_to_elementary(const MultiPoly<D>& p) {
  const D& dom = p.domain();
  const int n = p.nvars();
  if (!is_symmetric(p)) throw InvarianceError("symmetrize_to_elementary: input is not symmetric");
  std::vector<std::vector<MultiPoly<D>>> epow(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; ++k)
    epow[static_cast<std::size_t>(k)].push_back(MultiPoly<D>::constant(dom, n, dom.one()));
  auto e_power = [&](int k, unsigned j) -> const MultiPoly<D>& {
    auto& tab = epow[static_cast<std::size_t>(k)];
    while (tab.size() <= j) {
      if (tab.size() == 1) {
        tab.push_back(elementary_symmetric(dom, n, k));
      } else {
        tab.push_back(tab.back() * tab[1]);
      }
    }
    return tab[j];
  };
  MultiPoly<D> work = p;
  std::vector<typename MultiPoly<D>::Term> out;
  while (!work.is_zero()) {
    const auto& lt = work.leading_term();
    unsigned prev = lt.mono.exponent(0);
    for (int v = 1; v < n; ++v) {
      unsigned cur = lt.mono.exponent(v);
      if (cur > prev)
        throw InvarianceError("symmetrize_to_elementary: leading exponent is not a partition");
      prev = cur;
    }
    Monomial amono;
    MultiPoly<D> prod = MultiPoly<D>::constant(dom, n, dom.one());
    unsigned degree = 0;
    for (int k = 1; k <= n; ++k) {
      unsigned mu = lt.mono.exponent(k - 1) - (k < n ? lt.mono.exponent(k) : 0u);
      degree += static_cast<unsigned>(k) * mu;
      if (!mu) continue;
      amono.set_exponent(k - 1, mu);
      prod = prod * e_power(k, mu);
    }
    typename D::Elem c = lt.coef;
    work = work - prod.scaled(c);
    out.push_back({amono, degree % 2 ? dom.neg(c) : std::move(c)});
  }
  return MultiPoly<D>::from_terms(dom, n, out);
}

// Inverse of symmetrize_to_elementary: substitute a_k -> (-1)^k e_k.
template <class D>
MultiPoly<D> expand_elementary(const MultiPoly<D>& q, int n) {
  if (q.nvars() != n) throw DomainMismatch("expand_elementary: variable count mismatch");
  const D& dom = q.domain();
  std::vector<std::pair<int, MultiPoly<D>>> repl;
  for (int k = 1; k <= n; ++k) {
    MultiPoly<D> ek = elementary_symmetric(dom, n, k);
    repl.emplace_back(k - 1, k % 2 ? -ek : ek);
  }
  return substitute(q, repl, n);
}

// Reinterpret p in a larger ambient ring (extra variables unused).
template <class D>
MultiPoly<D> with_nvars(const MultiPoly<D>& p, int nvars) {
  if (nvars < p.nvars()) throw Error("with_nvars cannot drop variables");
  std::vector<typename MultiPoly<D>::Term> ts(p.terms().begin(), p.terms().end());
  return MultiPoly<D>::adopt_sorted(p.domain(), nvars, std::move(ts));
}

// Condition (T): q(x1 + t, ..., xn + t) = q, i.e. q depends only on the
// differences x_i - x_j. Checked with a fresh variable t.
template <class D>
bool check_condition_T(const MultiPoly<D>& q) {
  const D& dom = q.domain();
  const int n = q.nvars();
  if (n + 1 > Monomial::kMaxVars) throw Error("condition (T): no room for the fresh variable");
  MultiPoly<D> t = MultiPoly<D>::variable(dom, n + 1, n);
  std::vector<std::pair<int, MultiPoly<D>>> repl;
  for (int v = 0; v < n; ++v)
    repl.emplace_back(v, MultiPoly<D>::variable(dom, n + 1, v) + t);
  return substitute(q, repl, n + 1) == with_nvars(q, n + 1);
}

// (x1...xn)^d q(1/x1, ..., 1/xn) as exponent reflection e_i -> d - e_i.
// Requires deg_{x_i} q <= d for all i.
template <class D>
MultiPoly<D> reciprocal_reflect(const MultiPoly<D>& q, const std::vector<unsigned>& d) {
  std::vector<typename MultiPoly<D>::Term> ts;
  ts.reserve(q.num_terms());
  for (const auto& t : q.terms()) {
    Monomial m;
    for (int v = 0; v < q.nvars(); ++v) {
      unsigned e = t.mono.exponent(v);
      if (e > d[static_cast<std::size_t>(v)])
        throw Error("reciprocal_reflect: per-variable degree exceeds d");
      m.set_exponent(v, d[static_cast<std::size_t>(v)] - e);
    }
    ts.push_back({m, t.coef});
  }
  return MultiPoly<D>::from_terms(q.domain(), q.nvars(), ts);
}

// Condition (R): n*d even and (x1...xn)^d q(1/x) = (-1)^{nd/2} q.
// d is supplied by the caller; it is a context choice, not inferred.
template <class D>
bool check_condition_R(const MultiPoly<D>& q, unsigned d) {
  const int n = q.nvars();
  for (int v = 0; v < n; ++v)
    if (q.degree_in(v) > static_cast<int>(d))
      throw Error("condition (R): per-variable degree exceeds d");
  unsigned nd = static_cast<unsigned>(n) * d;
  if (nd % 2) return false;
  MultiPoly<D> lhs = reciprocal_reflect(q, std::vector<unsigned>(static_cast<std::size_t>(n), d));
  MultiPoly<D> rhs = (nd / 2) % 2 ? -q : q;
  return lhs == rhs;
}

}  // namespace tforge

#endif
