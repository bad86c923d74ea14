#ifndef TFORGE_POLY_DOMAIN_HPP
#define TFORGE_POLY_DOMAIN_HPP

#include <string>

#include "tforge/unipoly.hpp"

namespace tforge {

// The ring D[y] presented as a coefficient domain, so UniPoly and the matrix
// routines can work over polynomial entries (Sylvester determinants,
// characteristic polynomials). Exact division is division with required zero
// remainder; fraction-free elimination only ever asks for divisions that are
// exact by construction.
template <class D>
struct PolyDomain {
  using Elem = UniPoly<D>;
  static constexpr bool is_field = false;

  D base;
  std::string var = "y";

  explicit PolyDomain(const D& b, std::string v = "y") : base(b), var(std::move(v)) {}

  Elem zero() const { return Elem::zero(base); }
  Elem one() const { return Elem::constant(base, base.one()); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  void add_assign(Elem& a, const Elem& b) const { a = a + b; }
  void sub_assign(Elem& a, const Elem& b) const { a = a - b; }
  void addmul(Elem& a, const Elem& b, const Elem& c) const { a = a + b * c; }
  bool try_div(Elem& out, const Elem& a, const Elem& b) const {
    if (b.is_zero()) return false;
    auto [q, r] = Elem::divrem(a, b);
    if (!r.is_zero()) return false;
    out = std::move(q);
    return true;
  }
  Elem from_int(const Int& v) const { return Elem::constant(base, base.from_int(v)); }
  std::string str(const Elem& a) const { return format_unipoly(a, var); }
  bool same(const PolyDomain& o) const { return base.same(o.base); }
  std::string name() const { return base.name() + "[" + var + "]"; }
  Int characteristic() const { return base.characteristic(); }
  Elem random_elem(Rng& rng) const {
    return Elem::constant(base, base.random_elem(rng));
  }
};

}  // namespace tforge

#endif
