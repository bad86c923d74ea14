#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tforge/transform.hpp"

using namespace tforge;

namespace {
ZZ z;
}

TEST_CASE("extraction of toy covariants") {
  auto avars = numbered_vars("a", 3);
  // identity covariant: phi(a, X) = X
  TschirnhausForm tid = tschirnhaus_extract(build_covariant(ZPoly::variable(z, 3, 0), 3, Twist::none));
  CHECK(tid.x_coeffs[0].is_zero());
  CHECK(tid.x_coeffs[1] == ZPoly::constant(z, 3, Int(1)));
  CHECK(tid.x_coeffs[2].is_zero());

  // invariant seed e1: all components equal, phi(a, X) = -a1
  TschirnhausForm te1 = tschirnhaus_extract(build_covariant(elementary_symmetric(z, 3, 1), 3, Twist::none));
  CHECK(te1.x_coeffs[0] == parse_poly("-a1", z, avars));
  CHECK(te1.x_coeffs[1].is_zero());
  CHECK(te1.x_coeffs[2].is_zero());

  // x1^n reduces through the universal relation
  TschirnhausForm txn = tschirnhaus_extract(build_covariant(ZPoly::variable(z, 3, 0, 3), 3, Twist::none));
  CHECK(txn.x_coeffs[0] == parse_poly("-a3", z, avars));
  CHECK(txn.x_coeffs[1] == parse_poly("-a2", z, avars));
  CHECK(txn.x_coeffs[2] == parse_poly("-a1", z, avars));

  // sign-type seeds have no single-variable form
  CHECK_THROWS_AS(tschirnhaus_extract(build_covariant(omega1(4), 4, Twist::none, true)), Error);
}

TEST_CASE("pointwise roundtrip for the hermite form") {
  const TschirnhausForm& H = hermite_tschirnhaus();
  CHECK(H.n == 5);
  CHECK(H.x_coeffs.size() == 5);
  Rng rng(123);
  const Covariant& phi = hermite_phi();
  for (int trial = 0; trial < 100; ++trial) {
    std::uint64_t p = rng.prime_below(1000000);
    GFp f(p);
    std::vector<std::uint64_t> x;
    for (int i = 0; i < 5; ++i) x.push_back(f.random_elem(rng));
    std::vector<std::uint64_t> a;
    for (int k = 1; k <= 5; ++k) {
      std::uint64_t ek = reduce_mod_p(elementary_symmetric(z, 5, k), f).evaluate(x);
      a.push_back(k % 2 ? f.neg(ek) : ek);
    }
    std::vector<std::uint64_t> pj;
    for (const auto& c : H.x_coeffs) pj.push_back(reduce_mod_p(c, f).evaluate(a));
    for (int i = 0; i < 5; ++i) {
      std::uint64_t val = 0, xp = 1;
      for (int j = 0; j < 5; ++j) {
        val = f.add(val, f.mul(pj[static_cast<std::size_t>(j)], xp));
        xp = f.mul(xp, x[static_cast<std::size_t>(i)]);
      }
      CHECK(val == reduce_mod_p(phi.component(i), f).evaluate(x));
    }
  }
}

TEST_CASE("twisted form data") {
  const TschirnhausForm& J = joubert_tschirnhaus();
  CHECK(J.twist == Twist::tau);
  CHECK(J.e5_scalar == Int(-32));
  CHECK(J.x_coeffs.empty());
  // Ebar expansions reproduce the elementary symmetric functions of psi
  std::vector<ZPoly> e = elem_sym_prefix(joubert_psi().components, 6);
  CHECK(expand_elementary(J.ebar2, 6) == e[2]);
  CHECK(expand_elementary(J.ebar4, 6) == e[4]);
  CHECK(expand_elementary(J.ebar6, 6) == e[6]);
}

TEST_CASE("product roundtrip for the twisted form") {
  const TschirnhausForm& J = joubert_tschirnhaus();
  const Covariant& phi = joubert_phi();
  Rng rng(321);
  int done = 0;
  while (done < 60) {
    std::uint64_t p = rng.prime_below(1000000);
    if (p == 2) continue;
    GFp K(p);
    std::vector<std::uint64_t> x;
    for (int i = 0; i < 6; ++i) x.push_back(K.random_elem(rng));
    // f = prod (X - x_i) must be separable for the closed form
    UniPoly<GFp> f = UniPoly<GFp>::constant(K, 1);
    for (auto v : x) f = f * UniPoly<GFp>(K, {K.neg(v), 1});
    if (!f.is_separable()) continue;
    UniPoly<GFp> closed = transformed_polynomial(f, J);
    UniPoly<GFp> prod = UniPoly<GFp>::constant(K, 1);
    for (const auto& comp : phi.components) {
      std::uint64_t v = reduce_mod_p(comp, K).evaluate(x);
      prod = prod * UniPoly<GFp>(K, {K.neg(v), 1});
    }
    CHECK(closed == prod);
    ++done;
  }
}

TEST_CASE("transform of x^5 - a is Y^5") {
  const TschirnhausForm& H = hermite_tschirnhaus();
  QQ q;
  for (long a : {2, 3}) {
    UniPoly<QQ> f(q, {Rat(-a), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
    UniPoly<QQ> fbar = transformed_polynomial(f, H);
    CHECK(fbar == UniPoly<QQ>(q, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}));
    PowerDecomposition<QQ> dec = power_of_irreducible_decompose(fbar);
    CHECK(dec.is_power_of_irreducible);
    CHECK(dec.multiplicity == 5);
    CHECK(dec.h.degree() == 1);
  }
  GFp f11(11);
  UniPoly<GFp> f(f11, {f11.neg(2), 0, 0, 0, 0, 1});
  CHECK(f.is_separable());
  UniPoly<GFp> fbar = transformed_polynomial(f, H);
  CHECK(fbar == UniPoly<GFp>(f11, {0, 0, 0, 0, 0, 1}));
}

TEST_CASE("toy degree-2 covariant x -> x^2") {
  Covariant sq = build_covariant(ZPoly::variable(z, 2, 0, 2), 2, Twist::none);
  TschirnhausForm tf = tschirnhaus_extract(sq);
  QQ q;
  // f = (X-1)(X-2) = X^2 - 3X + 2 -> (Y-1)(Y-4)
  UniPoly<QQ> f(q, {Rat(2), Rat(-3), Rat(1)});
  UniPoly<QQ> fbar = transformed_polynomial(f, tf);
  CHECK(fbar == UniPoly<QQ>(q, {Rat(4), Rat(-5), Rat(1)}));
}

TEST_CASE("transform over GF(3) and the oracles") {
  GFp f3(3);
  const TschirnhausForm& H = hermite_tschirnhaus();
  UniPoly<GFp> f = parse_unipoly<GFp>("x^5-x-1", f3);
  UniPoly<GFp> fbar = transformed_polynomial(f, H);
  CHECK(fbar.degree() == 5);
  CHECK(fbar.is_monic());
  CHECK(fbar.coeff(4) == 0);
  CHECK(fbar.coeff(2) == 0);
  CHECK(is_irreducible(fbar));

  UniPoly<GFp> phi = tschirnhaus_poly_for(H, f);
  CHECK(char_poly_transform(f, phi) == fbar);

  // conjugate-product oracle inside GF(3)[x]/(f)
  QuotientRing<GFp> L(f3, f);
  UniPoly<GFp> root = L.x();
  UniPoly<QuotientRing<GFp>> prod = UniPoly<QuotientRing<GFp>>::constant(L, L.one());
  for (int i = 0; i < 5; ++i) {
    UniPoly<QuotientRing<GFp>> lin(L, {L.neg(phi.eval_poly_mod(root, f)), L.one()});
    prod = prod * lin;
    root = L.pow(root, Int(3));
  }
  for (int i = 0; i <= 5; ++i) {
    CHECK(prod.coeff(i).degree() <= 0);
    CHECK(prod.coeff(i).coeff(0) == fbar.coeff(i));
  }

  // resultant consistency: fbar(phi(f, theta)) = 0 in L
  UniPoly<GFp> image = L.reduce(phi.eval_poly_mod(L.x(), f));
  UniPoly<GFp> horner = UniPoly<GFp>::zero(f3);
  for (int i = fbar.degree(); i >= 0; --i) {
    horner = L.mul(horner, image);
    horner = L.add(horner, UniPoly<GFp>::constant(f3, fbar.coeff(i)));
  }
  CHECK(horner.is_zero());
}

TEST_CASE("resultant paths agree") {
  Rng rng(777);
  const TschirnhausForm& H = hermite_tschirnhaus();
  // interpolation path (large field) vs Sylvester path (forced) vs char-poly
  for (int trial = 0; trial < 25; ++trial) {
    GFp K(101);
    UniPoly<GFp> f = UniPoly<GFp>::random_monic(K, 5, rng);
    if (!f.is_separable()) continue;
    UniPoly<GFp> phi = tschirnhaus_poly_for(H, f);
    UniPoly<GFp> via_interp = resultant_transform(f, phi);  // 101 > 21 points
    PolyDomain<GFp> R(K);
    std::vector<UniPoly<GFp>> fc, gc;
    for (int i = 0; i <= f.degree(); ++i) fc.push_back(UniPoly<GFp>::constant(K, f.coeff(i)));
    int m = std::max(0, phi.degree());
    for (int j = 0; j <= m; ++j) {
      if (j == 0)
        gc.push_back(UniPoly<GFp>(K, {K.neg(phi.coeff(0)), K.one()}));
      else
        gc.push_back(UniPoly<GFp>::constant(K, K.neg(phi.coeff(j))));
    }
    UniPoly<GFp> via_sylvester = sylvester_resultant(R, fc, gc);
    CHECK(via_interp == via_sylvester);
    CHECK(via_interp == char_poly_transform(f, phi));
  }
  // scalar resultants: Euclidean chain vs Sylvester determinant
  for (int trial = 0; trial < 60; ++trial) {
    GFp K(97);
    auto a = UniPoly<GFp>::random_monic(K, 1 + static_cast<int>(rng.below(4)), rng);
    auto b = UniPoly<GFp>::random_monic(K, 1 + static_cast<int>(rng.below(4)), rng);
    std::vector<typename GFp::Elem> fa, fb;
    for (int i = 0; i <= a.degree(); ++i) fa.push_back(a.coeff(i));
    for (int i = 0; i <= b.degree(); ++i) fb.push_back(b.coeff(i));
    CHECK(resultant_scalar(a, b) == sylvester_resultant(K, fa, fb));
  }
  // extension field: transform by interpolation (|K| = 9 < 21 forces the
  // Sylvester path) against the characteristic-polynomial oracle
  {
    GFq K(make_fq(3, 2));
    for (int trial = 0; trial < 10; ++trial) {
      auto f = UniPoly<GFq>::random_monic(K, 5, rng);
      if (!f.is_separable()) continue;
      auto phi = tschirnhaus_poly_for(H, f);
      CHECK(transformed_polynomial(f, H) == char_poly_transform(f, phi));
    }
    GFq big(make_fq(5, 2));  // 25 >= 21: interpolation path
    for (int trial = 0; trial < 10; ++trial) {
      auto f = UniPoly<GFq>::random_monic(big, 5, rng);
      if (!f.is_separable()) continue;
      auto phi = tschirnhaus_poly_for(H, f);
      CHECK(transformed_polynomial(f, H) == char_poly_transform(f, phi));
    }
  }
  // over Q: the fraction-free Sylvester path against the oracle
  {
    QQ q;
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rat> c;
      for (int i = 0; i < 5; ++i) c.push_back(Rat(rng.range(-4, 4)));
      c.push_back(Rat(1));
      UniPoly<QQ> f(q, std::move(c));
      if (!f.is_separable()) continue;
      auto phi = tschirnhaus_poly_for(H, f);
      CHECK(transformed_polynomial(f, H) == char_poly_transform(f, phi));
    }
  }
}

TEST_CASE("x^5 - a maps to Y^5 for many a") {
  const TschirnhausForm& H = hermite_tschirnhaus();
  QQ q;
  for (long a = 1; a <= 10; ++a) {
    UniPoly<QQ> f(q, {Rat(-a), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
    UniPoly<QQ> want(q, {Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(transformed_polynomial(f, H) == want);
  }
  for (std::uint64_t p : {7, 13, 31}) {
    GFp K(p);
    for (std::uint64_t a = 1; a < 5; ++a) {
      UniPoly<GFp> f(K, {K.neg(a), 0, 0, 0, 0, 1});
      if (!f.is_separable()) continue;
      UniPoly<GFp> want(K, {0, 0, 0, 0, 0, 1});
      CHECK(transformed_polynomial(f, H) == want);
    }
  }
}

TEST_CASE("power decomposition") {
  GFp f3(3);
  // Y^5
  UniPoly<GFp> y5(f3, {0, 0, 0, 0, 0, 1});
  auto d1 = power_of_irreducible_decompose(y5);
  CHECK(d1.is_power_of_irreducible);
  CHECK(d1.multiplicity == 5);
  CHECK(d1.h == UniPoly<GFp>::x(f3));

  // (Y^2+1)^3 over F3
  UniPoly<GFp> q(f3, {1, 0, 1});
  auto d2 = power_of_irreducible_decompose(q * q * q);
  CHECK(d2.is_power_of_irreducible);
  CHECK(d2.multiplicity == 3);
  CHECK(d2.h == q);

  // irreducible -> multiplicity 1
  auto d3 = power_of_irreducible_decompose(parse_unipoly<GFp>("x^5-x-1", f3));
  CHECK(d3.is_power_of_irreducible);
  CHECK(d3.multiplicity == 1);

  // a product of distinct irreducibles is not a power
  UniPoly<GFp> mixed = parse_unipoly<GFp>("x^2+1", f3) * parse_unipoly<GFp>("x+1", f3);
  auto d4 = power_of_irreducible_decompose(mixed);
  CHECK(!d4.is_power_of_irreducible);

  // characteristic-p descent: (x+1)^4 over F2 has vanishing derivative
  GFp f2(2);
  UniPoly<GFp> lin(f2, {1, 1});
  auto d5 = power_of_irreducible_decompose(lin * lin * lin * lin);
  CHECK(d5.is_power_of_irreducible);
  CHECK(d5.multiplicity == 4);
  CHECK(d5.h == lin);

  CHECK_THROWS_AS(power_of_irreducible_decompose(UniPoly<GFp>(f3, {1, 2})), Error);  // non-monic
}

TEST_CASE("scale_tail") {
  GFp f3(3), f7(7);
  auto t1 = scale_tail(parse_unipoly<GFp>("x^5-x-1", f3));
  CHECK(t1.poly == parse_unipoly<GFp>("x^5-x-1", f3));  // already c = d
  CHECK(t1.lambda == 1);

  QQ q;
  auto t2 = scale_tail(parse_unipoly<QQ>("x^3-6*x-6", q));
  CHECK(t2.poly == parse_unipoly<QQ>("x^3-6*x-6", q));

  auto f = parse_unipoly<GFp>("x^5+2*x+4", f7);
  auto t3 = scale_tail(f);
  CHECK(t3.lambda == f7.mul(4, f7.inv(2)));
  CHECK(t3.poly.coeff(0) == t3.poly.coeff(1));
  CHECK(t3.poly.coeff(0) != 0);
  // substitute-and-expand oracle: coefficients scale by lambda^{i-n}
  for (int i = 0; i <= 5; ++i) {
    std::uint64_t li = powmod_u64(t3.lambda, static_cast<std::uint64_t>(i), 7);
    std::uint64_t ln = powmod_u64(t3.lambda, 5, 7);
    CHECK(f7.mul(t3.poly.coeff(i), ln) == f7.mul(f.coeff(i), li));
  }

  CHECK_THROWS_AS(scale_tail(parse_unipoly<GFp>("x^5+x^2", f7)), Error);
  CHECK_THROWS_AS(scale_tail(parse_unipoly<GFp>("x^5+1", f7)), Error);
}
