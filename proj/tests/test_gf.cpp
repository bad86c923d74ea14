#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "tforge/gf_lemmas.hpp"
#include "tforge/quotient_ring.hpp"
#include "tforge/table.hpp"

using namespace tforge;

TEST_CASE("irreducibility basics") {
  GFp f3(3), f5(5);
  CHECK(is_irreducible(parse_unipoly<GFp>("x^2+1", f3)));
  CHECK(!is_irreducible(parse_unipoly<GFp>("x^2+1", f5)));
  CHECK(is_irreducible(parse_unipoly<GFp>("x^5-x-1", f3)));
  GFq f32(std::make_shared<const FqField>(2, std::vector<std::uint64_t>{1, 0, 1, 1, 1, 1}, "c"));
  CHECK(is_irreducible(parse_unipoly<GFq>("x^5+c*x^3+x+1", f32)));
}

TEST_CASE("irreducibility against exhaustive trial division") {
  // oracle: divide by every monic polynomial of degree <= n/2
  auto trial_division_irreducible = [](const auto& f) {
    const auto& dom = f.domain();
    using FD = std::decay_t<decltype(dom)>;
    int n = f.degree();
    Int q = dom.field_size();
    for (int d = 1; 2 * d <= n; ++d) {
      Int count(1);
      for (int i = 0; i < d; ++i) count *= q;
      for (Int idx(0); idx < count; ++idx) {
        std::vector<typename FD::Elem> c;
        Int v = idx;
        for (int i = 0; i < d; ++i) {
          c.push_back(dom.nth_element(v % q));
          v /= q;
        }
        c.push_back(dom.one());
        UniPoly<FD> g(dom, std::move(c));
        if (UniPoly<FD>::divrem(f, g).second.is_zero()) return false;
      }
    }
    return true;
  };

  GFp f2(2), f3(3);
  Rng rng(9);
  for (int n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      auto f = UniPoly<GFp>::random_monic(f2, n, rng);
      if (f.coeff(0) == 0) continue;
      CHECK(is_irreducible(f) == trial_division_irreducible(f));
    }
  }
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      auto f = UniPoly<GFp>::random_monic(f3, n, rng);
      CHECK(is_irreducible(f) == trial_division_irreducible(f));
    }
  }
  GFq f4(make_fq(2, 2));
  for (int trial = 0; trial < 10; ++trial) {
    auto f = UniPoly<GFq>::random_monic(f4, 4, rng);
    CHECK(is_irreducible(f) == trial_division_irreducible(f));
  }
}

TEST_CASE("minimal polynomials") {
  // alpha in F4 \ F2 -> x^2+x+1 (the unique irreducible quadratic over F2)
  GFp f2(2);
  QuotientRing<GFp> F4(f2, parse_unipoly<GFp>("x^2+x+1", f2));
  auto alpha = F4.x();
  CHECK(minimal_polynomial(F4, alpha) == parse_unipoly<GFp>("x^2+x+1", f2));
  CHECK(minimal_polynomial_frobenius(F4, alpha) == parse_unipoly<GFp>("x^2+x+1", f2));

  // an element of the prime field viewed inside F16 -> x - alpha
  QuotientRing<GFp> F16(f2, parse_unipoly<GFp>("x^4+x+1", f2));
  auto one = F16.one();
  CHECK(minimal_polynomial(F16, one) == parse_unipoly<GFp>("x+1", f2));

  // the root of x^5-x-1 inside its own quotient has that minimal polynomial
  GFp f3(3);
  auto f = parse_unipoly<GFp>("x^5-x-1", f3);
  QuotientRing<GFp> F243(f3, f);
  CHECK(minimal_polynomial(F243, F243.x()) == f);
  CHECK(minimal_polynomial_frobenius(F243, F243.x()) == f);

  // LA route and Frobenius-orbit route agree on random elements
  Rng rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = F243.random_elem(rng);
    auto m1 = minimal_polynomial(F243, a);
    auto m2 = minimal_polynomial_frobenius(F243, a);
    CHECK(m1 == m2);
    CHECK(5 % m1.degree() == 0);
    // divides x^{q^n} - x: equivalently a is a root of m1 and m1 irreducible
    CHECK(is_irreducible(m1));
    CHECK(m1.eval_poly_mod(a, f).is_zero());
  }
}

TEST_CASE("frobenius fixes exactly the prime field") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{2, 6}, {3, 4}, {5, 3}}) {
    GFq K(make_fq(p, k));
    Rng rng(p * 100 + static_cast<std::uint64_t>(k));
    for (int trial = 0; trial < 2000; ++trial) {
      auto a = K.random_elem(rng);
      auto b = K.random_elem(rng);
      CHECK(K.equal(K.F->frobenius(K.mul(a, b)), K.mul(K.F->frobenius(a), K.F->frobenius(b))));
      CHECK(K.equal(K.F->frobenius(K.add(a, b)), K.add(K.F->frobenius(a), K.F->frobenius(b))));
    }
    // exhaustive fixed-point scan
    Int size = K.field_size();
    for (Int i(0); i < size; ++i) {
      auto a = K.nth_element(i);
      bool fixed = K.equal(K.F->frobenius(a), a);
      CHECK(fixed == K.F->in_prime_field(a));
    }
  }
}

TEST_CASE("trace is linear and surjective") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 3}, {5, 2}, {2, 6}}) {
    GFq K(make_fq(p, k));
    std::set<std::uint64_t> image;
    Int size = K.field_size();
    std::vector<FqField::Coord> elems;
    for (Int i(0); i < size; ++i) elems.push_back(K.nth_element(i));
    for (const auto& a : elems) image.insert(K.F->trace(a));
    CHECK(image.size() == p);  // surjective onto F_p
    Rng rng(55);
    for (int trial = 0; trial < 500; ++trial) {
      const auto& a = elems[rng.below(elems.size())];
      const auto& b = elems[rng.below(elems.size())];
      std::uint64_t c = rng.below(p);
      auto scaled = K.mul(K.from_int(Int(static_cast<unsigned long>(c))), a);
      CHECK(K.F->trace(K.add(scaled, b)) ==
            addmod_u64(mulmod_u64(c, K.F->trace(a), p), K.F->trace(b), p));
    }
  }
}

TEST_CASE("explicit quintic list verifies") {
  auto checks = verify_table_sec6();
  CHECK(checks.size() == 14);
  for (const auto& c : checks) {
    CAPTURE(c.field);
    CAPTURE(c.polynomial);
    CHECK(c.irreducible);
    CHECK(c.shape_ok);
  }
  // the GF(2) exceptional equation and the second generator choice over GF(4)
  GFp f2(2);
  CHECK(is_irreducible(parse_unipoly<GFp>("x^5+x^3+1", f2)));
  GFq f4(std::make_shared<const FqField>(2, std::vector<std::uint64_t>{1, 1, 1}, "a"));
  auto a = f4.generator();
  auto a2 = f4.mul(a, a);  // the other element of F4 \ F2
  for (const auto& u : {a, a2}) {
    UniPoly<GFq> entry(f4, {u, u, f4.zero(), f4.zero(), f4.zero(), f4.one()});
    CHECK(is_irreducible(entry));
  }
}

TEST_CASE("subfield span codimension") {
  auto r24 = subfield_span_codim(2, 4);
  CHECK(r24.codim_bruteforce == 2);
  CHECK(r24.codim_formula == 2);
  auto r26 = subfield_span_codim(2, 6);
  CHECK(r26.codim_bruteforce == 2);  // span F4 + F8 has dimension 4
  CHECK(r26.agrees());
  CHECK(r26.projector_crosscheck_ok);
  auto r36 = subfield_span_codim(3, 6);
  CHECK(r36.codim_bruteforce == 2);  // (6/6)*(2-1)*(3-1)
  CHECK(r36.agrees());
  CHECK_THROWS_AS(subfield_span_codim(2, 30), Error);  // guard
}

TEST_CASE("vanishing bound") {
  auto r = vanishing_bound_witness(3, 1, 2);
  CHECK(r.no_counterexample);
  CHECK(r.min_rank == r.monomials);
  CHECK(vanishing_bound_witness(2, 1, 1).no_counterexample);
  CHECK(vanishing_bound_witness(5, 1, 4).no_counterexample);
  auto boundary = vanishing_bound_witness(2, 1, 2);
  CHECK(boundary.boundary_witness_ok);
  CHECK(!boundary.witness.empty());
  CHECK_THROWS_AS(vanishing_bound_witness(11, 1, 2), Error);  // guard
}

TEST_CASE("field construction validates moduli") {
  // t^2+1 over F2 = (t+1)^2 is reducible
  CHECK_THROWS_AS(FqField(2, std::vector<std::uint64_t>{1, 0, 1}, "t"), Error);
  CHECK_THROWS_AS(GFp(10), Error);
  // the classical moduli are the defaults for GF(8) and GF(32)
  CHECK(default_modulus(2, 3) == std::vector<std::uint64_t>{1, 0, 1, 1});
  CHECK(default_modulus(2, 5) == std::vector<std::uint64_t>{1, 0, 1, 1, 1, 1});
  // lexicographically least by coefficient value elsewhere
  CHECK(default_modulus(2, 2) == std::vector<std::uint64_t>{1, 1, 1});
}
