#ifndef TFORGE_TRANSFORM_HPP
#define TFORGE_TRANSFORM_HPP

#include <utility>
#include <vector>

#include "tforge/linalg.hpp"
#include "tforge/qq_factor.hpp"
#include "tforge/quotient_ring.hpp"
#include "tforge/tschirnhaus.hpp"
#include "tforge/unipoly.hpp"

namespace tforge {

namespace detail {

template <class FD>
concept Enumerable = requires(const FD& d, const Int& i) {
  d.nth_element(i);
  d.field_size();
};

}  // namespace detail

// a_1..a_n with f = X^n + a_1 X^{n-1} + ... + a_n.
template <class FD>
std::vector<typename FD::Elem> monic_coefficient_vector(const UniPoly<FD>& f) {
  if (!f.is_monic()) throw Error("expected a monic polynomial");
  std::vector<typename FD::Elem> a;
  const int n = f.degree();
  a.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) a.push_back(f.coeff(n - i));
  return a;
}

template <class FD>
typename FD::Elem eval_zpoly(const ZPoly& p, const FD& dom,
                             const std::vector<typename FD::Elem>& point) {
  return reduce_mod_p(p, dom).evaluate(point);
}

// phi(f, X): the concrete degree-<n polynomial sending each root of f to a
// root of the transformed polynomial (untwisted forms only).
template <class FD>
UniPoly<FD> tschirnhaus_poly_for(const TschirnhausForm& tf, const UniPoly<FD>& f) {
  if (tf.twist != Twist::none)
    throw Error("the twisted covariant has no single-variable transformation polynomial");
  if (f.degree() != tf.n) throw DomainMismatch("polynomial degree differs from the form's n");
  const FD& dom = f.domain();
  std::vector<typename FD::Elem> a = monic_coefficient_vector(f);
  std::vector<typename FD::Elem> c;
  c.reserve(tf.x_coeffs.size());
  for (const ZPoly& pj : tf.x_coeffs) c.push_back(eval_zpoly(pj, dom, a));
  return UniPoly<FD>(dom, std::move(c));
}

// Resultant of two univariate polynomials over a field by the Euclidean
// remainder sequence.
template <class FD>
typename FD::Elem resultant_scalar(UniPoly<FD> a, UniPoly<FD> b) {
  const FD& dom = a.domain();
  if (a.is_zero() || b.is_zero()) return dom.zero();
  if (a.degree() == 0) return dom.pow(a.leading(), Int(b.degree()));
  typename FD::Elem acc = dom.one();
  while (b.degree() > 0) {
    UniPoly<FD> r = a.mod(b);
    if (r.is_zero()) return dom.zero();
    // Res(a,b) = (-1)^{deg a deg b} lc(b)^{deg a - deg r} Res(b, r)
    if ((a.degree() % 2) && (b.degree() % 2)) acc = dom.neg(acc);
    acc = dom.mul(acc, dom.pow(b.leading(), Int(a.degree() - r.degree())));
    a = std::move(b);
    b = std::move(r);
  }
  return dom.mul(acc, dom.pow(b.leading(), Int(a.degree())));
}

// Sylvester matrix of f and g as polynomials in X over the ring R, where the
// caller supplies coefficient access into R.
template <class R>
typename R::Elem sylvester_resultant(const R& ring, const std::vector<typename R::Elem>& fc,
                                     const std::vector<typename R::Elem>& gc) {
  const int n = static_cast<int>(fc.size()) - 1;
  const int m = static_cast<int>(gc.size()) - 1;
  if (n < 0 || m < 0) return ring.zero();
  const int size = n + m;
  if (size == 0) return ring.one();
  Matrix<R> mat(static_cast<std::size_t>(size),
                std::vector<typename R::Elem>(static_cast<std::size_t>(size), ring.zero()));
  for (int row = 0; row < m; ++row)
    for (int j = 0; j <= n; ++j)
      mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
          fc[static_cast<std::size_t>(n - j)];
  for (int row = 0; row < n; ++row)
    for (int j = 0; j <= m; ++j)
      mat[static_cast<std::size_t>(m + row)][static_cast<std::size_t>(row + j)] =
          gc[static_cast<std::size_t>(m - j)];
  return bareiss_det(ring, std::move(mat));
}

// fbar(Y) = Res_X(f(X), Y - phi(X)) for monic separable f: the monic degree-n
// polynomial whose roots are phi at the roots of f.
//
// Two paths, per the field:
//  - evaluation-interpolation on n*deg(phi)+1 points over finite fields large
//    enough to supply them (scalar resultants by the Euclidean sequence, then
//    Lagrange interpolation, with the surplus points re-checked);
//  - otherwise the Sylvester determinant over D[Y] by fraction-free
//    elimination.
template <class FD>
UniPoly<FD> resultant_transform(const UniPoly<FD>& f, const UniPoly<FD>& phi) {
  const FD& dom = f.domain();
  const int n = f.degree();
  const int m = std::max(0, phi.degree());
  if (!f.is_monic()) throw Error("resultant_transform expects a monic polynomial");

  if constexpr (detail::Enumerable<FD>) {
    const Int npts(static_cast<long>(n * m + 1));
    if (dom.field_size() >= npts && n * m + 1 > n) {
      std::vector<typename FD::Elem> xs, ys;
      for (Int i(0); i < npts; ++i) {
        typename FD::Elem y = dom.nth_element(i);
        // Res_X(f, y - phi)
        UniPoly<FD> g = UniPoly<FD>::constant(dom, y) - phi;
        xs.push_back(y);
        ys.push_back(resultant_scalar(f, g));
      }
      // Lagrange interpolation through the first n+1 points.
      UniPoly<FD> acc = UniPoly<FD>::zero(dom);
      for (int i = 0; i <= n; ++i) {
        UniPoly<FD> basis = UniPoly<FD>::constant(dom, dom.one());
        typename FD::Elem denom = dom.one();
        for (int j = 0; j <= n; ++j) {
          if (j == i) continue;
          basis = basis * (UniPoly<FD>::x(dom) -
                           UniPoly<FD>::constant(dom, xs[static_cast<std::size_t>(j)]));
          denom = dom.mul(denom, dom.sub(xs[static_cast<std::size_t>(i)],
                                         xs[static_cast<std::size_t>(j)]));
        }
        acc = acc + basis.scaled(dom.mul(ys[static_cast<std::size_t>(i)], dom.inv(denom)));
      }
      for (std::size_t i = static_cast<std::size_t>(n) + 1; i < xs.size(); ++i) {
        if (!dom.equal(acc.eval(xs[i]), ys[i]))
          throw Error("interpolated resultant failed the surplus-point check");
      }
      if (!acc.is_monic() || acc.degree() != n)
        throw Error("transformed polynomial is not monic of degree n");
      return acc;
    }
  }

  PolyDomain<FD> R(dom);
  std::vector<UniPoly<FD>> fc, gc;
  for (int i = 0; i <= n; ++i) fc.push_back(UniPoly<FD>::constant(dom, f.coeff(i)));
  // g = (Y - phi_0) - phi_1 X - ... - phi_m X^m as a polynomial in X over D[Y]
  for (int j = 0; j <= m; ++j) {
    if (j == 0) {
      gc.push_back(UniPoly<FD>(dom, {dom.neg(phi.coeff(0)), dom.one()}));  // Y - phi_0
    } else {
      gc.push_back(UniPoly<FD>::constant(dom, dom.neg(phi.coeff(j))));
    }
  }
  while (gc.size() > 1 && gc.back().is_zero()) gc.pop_back();
  UniPoly<FD> res = sylvester_resultant(R, fc, gc);
  if (!res.is_monic() || res.degree() != n)
    throw Error("transformed polynomial is not monic of degree n");
  return res;
}

// Cross-check oracle: fbar as the characteristic polynomial of the
// multiplication-by-phi(f,x) operator on K[x]/(f).
template <class FD>
UniPoly<FD> char_poly_transform(const UniPoly<FD>& f, const UniPoly<FD>& phi) {
  QuotientRing<FD> L(f.domain(), f);
  return charpoly(f.domain(), L.multiplication_matrix(L.reduce(phi)));
}

// The transformed polynomial fbar = Phibar(f) for a monic separable f.
template <class FD>
UniPoly<FD> transformed_polynomial(const UniPoly<FD>& f, const TschirnhausForm& tf) {
  const FD& dom = f.domain();
  if (f.degree() != tf.n) throw DomainMismatch("polynomial degree differs from the covariant's n");
  if (!f.is_monic()) throw Error("transformed_polynomial expects a monic polynomial");
  if (!f.is_separable()) throw Error("transformed_polynomial expects a separable polynomial");

  if (tf.twist == Twist::none) return resultant_transform(f, tschirnhaus_poly_for(tf, f));

  // Twisted (n = 6): closed form through the discriminant.
  // disc(f) = (-1)^{n(n-1)/2} Res(f, f') = -Res(f, f') for n = 6.
  typename FD::Elem D = dom.neg(resultant_scalar(f, f.derivative()));
  std::vector<typename FD::Elem> a = monic_coefficient_vector(f);
  typename FD::Elem D2 = dom.mul(D, D);
  typename FD::Elem D3 = dom.mul(D2, D);
  std::vector<typename FD::Elem> c(7, dom.zero());
  c[6] = dom.one();
  c[4] = dom.mul(D, eval_zpoly(tf.ebar2, dom, a));
  c[2] = dom.mul(D2, eval_zpoly(tf.ebar4, dom, a));
  c[1] = dom.neg(dom.mul(D3, dom.from_int(tf.e5_scalar)));
  c[0] = dom.mul(D3, eval_zpoly(tf.ebar6, dom, a));
  return UniPoly<FD>(dom, std::move(c));
}

// fbar = h^m with h irreducible, or the report that g is not such a power.
template <class FD>
struct PowerDecomposition {
  UniPoly<FD> h;
  int multiplicity = 1;
  bool is_power_of_irreducible = false;
};

template <class FD>
PowerDecomposition<FD> power_of_irreducible_decompose(const UniPoly<FD>& g0) {
  const FD& dom = g0.domain();
  if (!g0.is_monic()) throw Error("power_of_irreducible_decompose expects a monic polynomial");
  if (g0.degree() < 1) throw Error("power_of_irreducible_decompose expects degree >= 1");
  UniPoly<FD> g = g0;
  int mult = 1;

  // In characteristic p, a vanishing derivative means g(X) = u(X^p) and g is
  // the p-th power of the coefficient-wise p-th root of u.
  if constexpr (detail::Enumerable<FD>) {
    const Int p = dom.characteristic();
    const Int q = dom.field_size();
    while (g.degree() > 0 && g.derivative().is_zero()) {
      unsigned long pi = p.get_ui();
      std::vector<typename FD::Elem> root;
      for (int i = 0; i <= g.degree(); i += static_cast<int>(pi))
        root.push_back(dom.pow(g.coeff(i), q / p));
      g = UniPoly<FD>(dom, std::move(root));
      mult *= static_cast<int>(pi);
    }
  }

  UniPoly<FD> h = UniPoly<FD>::divrem(g, UniPoly<FD>::gcd(g, g.derivative())).first.monic();
  PowerDecomposition<FD> out{h, 1, false};
  if (g.degree() % h.degree() != 0) {
    out.h = g0;
    return out;
  }
  int m2 = g.degree() / h.degree();
  UniPoly<FD> power = UniPoly<FD>::constant(dom, dom.one());
  for (int i = 0; i < m2; ++i) power = power * h;
  if (power != g) {
    out.h = g0;
    return out;
  }
  bool irred;
  if constexpr (detail::Enumerable<FD>) {
    irred = is_irreducible(h);
  } else {
    static_assert(std::is_same_v<FD, QQ>, "unexpected coefficient domain");
    if (h.degree() == 1) {
      irred = true;
    } else {
      QQIrred t = qq_irreducible(h);
      if (t == QQIrred::undecided)
        throw Error("cannot certify irreducibility over QQ for this input");
      irred = t == QQIrred::irreducible;
    }
  }
  out.h = h;
  out.multiplicity = mult * m2;
  out.is_power_of_irreducible = irred;
  return out;
}

template <class FD>
struct ScaledTail {
  UniPoly<FD> poly;
  typename FD::Elem lambda;
};

// x -> lambda*x with lambda = d/c makes the linear and constant coefficients
// of x^n + ... + c x + d equal; a linear change, so irreducibility is kept.
template <class FD>
ScaledTail<FD> scale_tail(const UniPoly<FD>& f) {
  const FD& dom = f.domain();
  if (!f.is_monic()) throw Error("scale_tail expects a monic polynomial");
  typename FD::Elem c = f.coeff(1);
  typename FD::Elem d = f.coeff(0);
  if (dom.is_zero(c)) throw Error("scale_tail: zero linear coefficient");
  if (dom.is_zero(d)) throw Error("scale_tail: zero constant coefficient");
  typename FD::Elem lambda = dom.mul(d, dom.inv(c));
  UniPoly<FD> g = f.rescale_root(lambda);
  if (!dom.equal(g.coeff(0), g.coeff(1))) throw Error("scale_tail failed to equalize the tail");
  return {std::move(g), std::move(lambda)};
}

}  // namespace tforge

#endif
