#include "tforge/table.hpp"

namespace tforge {

namespace {

using Coef = QuinticTableEntry::Coef;

Coef cz() { return {Coef::zero, 0}; }
Coef ci(long v) { return {Coef::integer, v}; }
Coef ce() { return {Coef::element, 0}; }

QuinticTableEntry prime_entry(std::uint64_t p, long c, const std::string& display) {
  QuinticTableEntry e;
  e.p = p;
  e.k = 1;
  e.B = cz();
  e.C = ci(c);
  e.D = ci(c);
  e.display = display;
  return e;
}

}  // namespace

const std::vector<QuinticTableEntry>& quintic_table() {
  static const std::vector<QuinticTableEntry> table = [] {
    std::vector<QuinticTableEntry> t;
    {
      QuinticTableEntry e;
      e.p = 2;
      e.k = 2;
      e.B = cz();
      e.C = ce();
      e.D = ce();
      e.element_modulus = {1, 1, 1};
      e.element_name = "a";
      e.display = "x^5+a*x+a, a^2+a+1=0";
      t.push_back(e);
    }
    {
      QuinticTableEntry e;
      e.p = 2;
      e.k = 3;
      e.B = ce();
      e.C = ce();
      e.D = ce();
      e.element_modulus = {1, 0, 1, 1};
      e.element_name = "b";
      e.display = "x^5+b*x^3+b*x+b, b^3+b^2+1=0";
      t.push_back(e);
    }
    {
      QuinticTableEntry e;
      e.p = 2;
      e.k = 5;
      e.B = ce();
      e.C = ci(1);
      e.D = ci(1);
      e.element_modulus = {1, 0, 1, 1, 1, 1};
      e.element_name = "c";
      e.display = "x^5+c*x^3+x+1, c^5+c^4+c^3+c^2+1=0";
      t.push_back(e);
    }
    t.push_back(prime_entry(3, -1, "x^5-x-1"));
    t.push_back(prime_entry(5, -1, "x^5-x-1"));
    t.push_back(prime_entry(7, -2, "x^5-2*x-2"));
    t.push_back(prime_entry(11, -1, "x^5-x-1"));
    t.push_back(prime_entry(13, -1, "x^5-x-1"));
    t.push_back(prime_entry(17, 4, "x^5+4*x+4"));
    t.push_back(prime_entry(19, 3, "x^5+3*x+3"));
    t.push_back(prime_entry(23, 2, "x^5+2*x+2"));
    t.push_back(prime_entry(29, -4, "x^5-4*x-4"));
    t.push_back(prime_entry(31, 3, "x^5+3*x+3"));
    t.push_back(prime_entry(37, -3, "x^5-3*x-3"));
    return t;
  }();
  return table;
}

std::vector<std::uint64_t> fq_element_minpoly(const FqField& F, const FqField::Coord& a) {
  GFp base(F.p());
  QuotientRing<GFp> L(base, UniPoly<GFp>(base, std::vector<std::uint64_t>(F.modulus())));
  UniPoly<GFp> elem(base, std::vector<std::uint64_t>(a));
  UniPoly<GFp> m = minimal_polynomial_frobenius(L, elem);
  std::vector<std::uint64_t> out;
  for (int i = 0; i <= m.degree(); ++i) out.push_back(m.coeff(i));
  return out;
}

std::vector<TableCheck> verify_table_sec6() {
  std::vector<TableCheck> checks;
  for (const QuinticTableEntry& e : quintic_table()) {
    TableCheck c;
    c.polynomial = e.display;
    if (e.k == 1) {
      GFp K(e.p);
      c.field = K.name();
      std::optional<UniPoly<GFp>> f = quintic_table_polynomial(K);
      if (f && f->degree() == 5) {
        c.irreducible = is_irreducible(*f);
        c.shape_ok = K.is_zero(f->coeff(4)) && K.is_zero(f->coeff(2)) &&
                     K.equal(f->coeff(1), f->coeff(0)) && !K.is_zero(f->coeff(0));
      }
    } else {
      GFq K(std::make_shared<const FqField>(e.p, e.element_modulus, e.element_name));
      c.field = K.name();
      std::optional<UniPoly<GFq>> f = quintic_table_polynomial(K);
      if (f && f->degree() == 5) {
        c.irreducible = is_irreducible(*f);
        c.shape_ok = K.is_zero(f->coeff(4)) && K.is_zero(f->coeff(2)) &&
                     K.equal(f->coeff(1), f->coeff(0)) && !K.is_zero(f->coeff(0));
      }
    }
    checks.push_back(std::move(c));
  }
  return checks;
}

}  // namespace tforge
