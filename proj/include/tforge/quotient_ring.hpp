#ifndef TFORGE_QUOTIENT_RING_HPP
#define TFORGE_QUOTIENT_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tforge/linalg.hpp"
#include "tforge/unipoly.hpp"

namespace tforge {

// K[x]/(f) for a monic f over a field K, elements as residues of degree
// < deg f. This is the working model of the extension generated by one root
// of f: normalizer pipelines, generator searches and the conjugate-product
// oracles all run inside it. It is a field exactly when f is irreducible;
// the operations that need inverses say so.
template <class FD>
struct QuotientRing {
  using Elem = UniPoly<FD>;
  static constexpr bool is_field = true;  // used as a field when f is irreducible

  FD base;
  std::shared_ptr<const UniPoly<FD>> f;

  QuotientRing(const FD& k, UniPoly<FD> modulus)
      : base(k), f(std::make_shared<const UniPoly<FD>>(std::move(modulus))) {
    if (!f->is_monic() || f->degree() < 1)
      throw Error("quotient modulus must be monic of degree >= 1");
  }

  int n() const { return f->degree(); }

  Elem reduce(const Elem& a) const { return a.mod(*f); }
  Elem zero() const { return Elem::zero(base); }
  Elem one() const { return Elem::constant(base, base.one()); }
  Elem x() const { return reduce(Elem::x(base)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b).mod(*f); }
  Elem neg(const Elem& a) const { return -a; }
  void add_assign(Elem& a, const Elem& b) const { a = a + b; }
  void sub_assign(Elem& a, const Elem& b) const { a = a - b; }
  void addmul(Elem& a, const Elem& b, const Elem& c) const { a = add(a, mul(b, c)); }

  Elem inv(const Elem& a) const {
    if (a.is_zero()) throw Error("division by zero in " + name());
    Elem r0 = *f, r1 = reduce(a);
    Elem s0 = zero(), s1 = one();
    while (r1.degree() > 0) {
      auto [q, r] = Elem::divrem(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      Elem s2 = s0 - (q * s1).mod(*f);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r1.is_zero()) throw Error("zero divisor inverted in " + name() + " (modulus reducible)");
    return s1.scaled(base.inv(r1.coeff(0))).mod(*f);
  }

  bool try_div(Elem& out, const Elem& a, const Elem& b) const {
    if (b.is_zero()) return false;
    out = mul(a, inv(b));
    return true;
  }

  Elem pow(const Elem& a, const Int& e) const {
    if (e < 0) return inv(pow(a, Int(-e)));
    return a.powmod(e, *f);
  }

  Elem from_int(const Int& v) const { return Elem::constant(base, base.from_int(v)); }
  std::string str(const Elem& a) const { return format_unipoly(a, "x"); }
  bool same(const QuotientRing& o) const { return base.same(o.base) && *f == *o.f; }
  std::string name() const {
    return base.name() + "[x]/(" + format_unipoly(*f, "x") + ")";
  }
  Int characteristic() const { return base.characteristic(); }

  Int field_size() const
    requires requires(const FD& b) { b.field_size(); }
  {
    Int q = base.field_size();
    Int r(1);
    for (int i = 0; i < n(); ++i) r *= q;
    return r;
  }

  Elem random_elem(Rng& rng) const {
    std::vector<typename FD::Elem> c;
    c.reserve(static_cast<std::size_t>(n()));
    for (int i = 0; i < n(); ++i) c.push_back(base.random_elem(rng));
    return Elem(base, std::move(c));
  }

  // Deterministic enumeration: element index in base q = |K| with digits
  // (c0, c1, ..., c_{n-1}), c0 least significant; ascending index order is
  // exactly lexicographic order of (c_{n-1}, ..., c0).
  Elem nth_element(const Int& idx) const
    requires requires(const FD& b, const Int& i) { b.nth_element(i); b.field_size(); }
  {
    Int q = base.field_size();
    Int v = idx;
    std::vector<typename FD::Elem> c;
    c.reserve(static_cast<std::size_t>(n()));
    for (int i = 0; i < n(); ++i) {
      c.push_back(base.nth_element(v % q));
      v /= q;
    }
    return Elem(base, std::move(c));
  }

  // Coordinates of a residue in the power basis 1, x, ..., x^{n-1}.
  std::vector<typename FD::Elem> coords(const Elem& a) const {
    std::vector<typename FD::Elem> v;
    v.reserve(static_cast<std::size_t>(n()));
    for (int i = 0; i < n(); ++i) v.push_back(a.coeff(i));
    return v;
  }

  // Matrix of multiplication by a in the power basis.
  Matrix<FD> multiplication_matrix(const Elem& a) const {
    std::size_t nn = static_cast<std::size_t>(n());
    Matrix<FD> m(nn, std::vector<typename FD::Elem>(nn, base.zero()));
    Elem cur = reduce(a);
    for (std::size_t j = 0; j < nn; ++j) {
      for (std::size_t i = 0; i < nn; ++i) m[i][j] = cur.coeff(static_cast<int>(i));
      cur = mul(cur, x());
    }
    return m;
  }

  // Trace of the K-linear multiplication-by-a operator. Works for any monic
  // modulus, irreducible or not.
  typename FD::Elem trace(const Elem& a) const {
    Elem cur = reduce(a);
    typename FD::Elem t = base.zero();
    Elem xe = one();
    for (int i = 0; i < n(); ++i) {
      base.add_assign(t, mul(cur, xe).coeff(i));
      xe = mul(xe, x());
    }
    return t;
  }
};

// Minimal polynomial of alpha over the base field by linear algebra: the
// first linear dependence among 1, alpha, alpha^2, ...
template <class FD>
UniPoly<FD> minimal_polynomial(const QuotientRing<FD>& L, const typename QuotientRing<FD>::Elem& alpha) {
  const FD& K = L.base;
  const int n = L.n();
  // reduced rows with their expression in powers of alpha
  struct Row {
    std::vector<typename FD::Elem> vec;    // length n
    std::vector<typename FD::Elem> combo;  // coefficients over alpha^0..alpha^j
    int pivot;
  };
  std::vector<Row> rows;
  typename QuotientRing<FD>::Elem power = L.one();
  for (int j = 0; j <= n; ++j) {
    std::vector<typename FD::Elem> v = L.coords(power);
    std::vector<typename FD::Elem> combo(static_cast<std::size_t>(j) + 1, K.zero());
    combo[static_cast<std::size_t>(j)] = K.one();
    for (const Row& r : rows) {
      const typename FD::Elem& c = v[static_cast<std::size_t>(r.pivot)];
      if (K.is_zero(c)) continue;
      typename FD::Elem factor = c;  // r.vec has pivot 1
      for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] =
            K.sub(v[static_cast<std::size_t>(i)], K.mul(factor, r.vec[static_cast<std::size_t>(i)]));
      for (std::size_t i = 0; i < r.combo.size(); ++i)
        combo[i] = K.sub(combo[i], K.mul(factor, r.combo[i]));
    }
    int piv = -1;
    for (int i = 0; i < n; ++i)
      if (!K.is_zero(v[static_cast<std::size_t>(i)])) {
        piv = i;
        break;
      }
    if (piv < 0) {
      // combo gives the monic dependence: sum combo_i alpha^i = 0
      typename FD::Elem lead_inv = K.inv(combo.back());
      std::vector<typename FD::Elem> c(combo.size(), K.zero());
      for (std::size_t i = 0; i < combo.size(); ++i) c[i] = K.mul(combo[i], lead_inv);
      return UniPoly<FD>(K, std::move(c));
    }
    typename FD::Elem pinv = K.inv(v[static_cast<std::size_t>(piv)]);
    for (int i = 0; i < n; ++i)
      v[static_cast<std::size_t>(i)] = K.mul(v[static_cast<std::size_t>(i)], pinv);
    for (auto& c : combo) c = K.mul(c, pinv);
    rows.push_back({std::move(v), std::move(combo), piv});
    power = L.mul(power, alpha);
  }
  throw Error("minimal_polynomial: no dependence found (bug)");
}

// Frobenius-orbit minimal polynomial over a finite base field: the product
// of (Y - alpha^{q^i}) over the orbit, with coefficients verified to lie in
// the base field.
template <class FD>
UniPoly<FD> minimal_polynomial_frobenius(const QuotientRing<FD>& L,
                                         const typename QuotientRing<FD>::Elem& alpha) {
  const FD& K = L.base;
  const Int q = K.field_size();
  using LElem = typename QuotientRing<FD>::Elem;
  std::vector<LElem> orbit;
  LElem cur = L.reduce(alpha);
  do {
    orbit.push_back(cur);
    cur = L.pow(cur, q);
  } while (!L.equal(cur, orbit.front()));
  // expand prod (Y - beta) over L
  std::vector<LElem> c{L.one()};
  for (const LElem& beta : orbit) {
    std::vector<LElem> nc(c.size() + 1, L.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
      nc[i + 1] = L.add(nc[i + 1], c[i]);
      nc[i] = L.sub(nc[i], L.mul(beta, c[i]));
    }
    c = std::move(nc);
  }
  std::vector<typename FD::Elem> out;
  out.reserve(c.size());
  for (const LElem& v : c) {
    if (v.degree() > 0) throw Error("minimal polynomial coefficient not in the base field");
    out.push_back(v.coeff(0));
  }
  return UniPoly<FD>(K, std::move(out));
}

// One root of a polynomial that splits (at least partially) over a finite
// field, by equal-degree splitting; deterministic given the caller's rng.
template <class FD>
std::optional<typename FD::Elem> find_root(const UniPoly<FD>& g0, Rng& rng) {
  const FD& K = g0.domain();
  const Int Q = K.field_size();
  UniPoly<FD> x = UniPoly<FD>::x(K);
  UniPoly<FD> g = g0.monic();
  // keep only the part that splits into linear factors over K
  UniPoly<FD> xq = x.powmod(Q, g);
  g = UniPoly<FD>::gcd(xq - x, g);
  if (g.degree() < 1) return std::nullopt;
  const bool char2 = K.characteristic() == 2;
  int attempts = 0;
  while (g.degree() > 1) {
    if (++attempts > 500) throw Error("equal-degree splitting made no progress");
    typename FD::Elem c = K.random_elem(rng);
    UniPoly<FD> d(K);
    if (!char2) {
      UniPoly<FD> shifted = x + UniPoly<FD>::constant(K, c);
      UniPoly<FD> w = shifted.powmod((Q - 1) / 2, g) - UniPoly<FD>::constant(K, K.one());
      d = UniPoly<FD>::gcd(w, g);
    } else {
      // trace map of c*x over F_2: sum of 2^i-th powers
      unsigned long m = mpz_sizeinbase(Q.get_mpz_t(), 2) - 1;  // Q = 2^m
      UniPoly<FD> u = (UniPoly<FD>::constant(K, c) * x).mod(g);
      UniPoly<FD> acc = u;
      for (unsigned long i = 1; i < m; ++i) {
        u = (u * u).mod(g);
        acc = acc + u;
      }
      d = UniPoly<FD>::gcd(acc, g);
    }
    if (d.degree() > 0 && d.degree() < g.degree())
      g = 2 * d.degree() <= g.degree() ? d : UniPoly<FD>::divrem(g, d).first;
  }
  return K.neg(g.monic().coeff(0));
}

}  // namespace tforge

#endif
