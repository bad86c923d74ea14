#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tforge/normalize.hpp"

using namespace tforge;

namespace {

template <class FD>
UniPoly<FD> random_irreducible(const FD& dom, int degree, Rng& rng) {
  for (;;) {
    auto f = UniPoly<FD>::random_monic(dom, degree, rng);
    if (is_irreducible(f)) return f;
  }
}

}  // namespace

TEST_CASE("quintic over GF(2) gives the exceptional equation") {
  GFp f2(2);
  Rng rng(1);
  auto eq = normalize_quintic(parse_unipoly<GFp>("x^5+x^2+1", f2), rng);
  CHECK(eq.transformed == parse_unipoly<GFp>("x^5+x^3+1", f2));
  CHECK(eq.shape == NormalShape::quintic_f2_exception);
  CHECK(eq.witness_available);
  QuotientRing<GFp> L(f2, eq.original);
  CHECK(minimal_polynomial(L, eq.generator_witness) == eq.transformed);
}

TEST_CASE("quintic over GF(8) uses the explicit entry") {
  GFq f8(std::make_shared<const FqField>(2, std::vector<std::uint64_t>{1, 0, 1, 1}, "b"));
  Rng rng(2);
  auto f = random_irreducible(f8, 5, rng);
  auto eq = normalize_quintic(f, rng);
  auto b = f8.generator();
  UniPoly<GFq> want(f8, {b, b, f8.zero(), b, f8.zero(), f8.one()});
  CHECK(eq.transformed == want);
  CHECK(eq.witness_available);
}

TEST_CASE("quintic over the in-between orders uses the shape scan") {
  Rng rng(3);
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{{3, 2}, {2, 4}, {5, 2}, {3, 3}}) {
    GFq K(make_fq(p, k));
    auto f = random_irreducible(K, 5, rng);
    auto eq = normalize_quintic(f, rng);
    CHECK(matches_shape(eq.transformed, NormalShape::quintic_bcc));
    CHECK(is_irreducible(eq.transformed));
    CHECK(eq.witness_available);
  }
}

TEST_CASE("quintic over GF(41) runs the generator search") {
  GFp K(41);
  Rng rng(4);
  auto f = parse_unipoly<GFp>("x^5+x+7", K);
  if (!is_irreducible(f)) f = random_irreducible(K, 5, rng);
  auto eq = normalize_quintic(f, rng);
  CHECK(matches_shape(eq.transformed, NormalShape::quintic_bcc));
  CHECK(is_irreducible(eq.transformed));
  CHECK(eq.notes.find("generator search") != std::string::npos);
  QuotientRing<GFp> L(K, f);
  CHECK(minimal_polynomial(L, eq.generator_witness) == eq.transformed);
}

TEST_CASE("quintic over QQ by bounded enumeration") {
  QQ q;
  Rng rng(5);
  auto eq = normalize_quintic(parse_unipoly<QQ>("x^5-x-1", q), rng);
  CHECK(matches_shape(eq.transformed, NormalShape::quintic_bcc));
  CHECK(qq_irreducible(eq.transformed) == QQIrred::irreducible);
  CHECK(eq.witness_available);
  QuotientRing<QQ> L(q, eq.original);
  CHECK(minimal_polynomial(L, eq.generator_witness) == eq.transformed);
}

TEST_CASE("sextic normalization over odd finite fields") {
  Rng rng(6);
  GFp f3(3);
  auto f = random_irreducible(f3, 6, rng);
  auto eq = normalize_sextic(f, rng);
  CHECK(matches_shape(eq.transformed, NormalShape::sextic_bcdd));
  CHECK(is_irreducible(eq.transformed));
  CHECK(eq.witness_available);
  QuotientRing<GFp> L(f3, f);
  CHECK(minimal_polynomial(L, eq.generator_witness) == eq.transformed);

  GFp f2(2);
  CHECK_THROWS_AS(normalize_sextic(parse_unipoly<GFp>("x^6+x+1", f2), rng), UnsupportedCase);
  try {
    normalize_sextic(parse_unipoly<GFp>("x^6+x+1", f2), rng);
  } catch (const UnsupportedCase& e) {
    CHECK(e.code == "CHAR2_UNSUPPORTED");
  }
}

TEST_CASE("cubic normalization") {
  QQ q;
  // trace already zero, b = 0: y = x + x^2 gives y^3 - 6y - 6
  auto eq = normalize_cubic(parse_unipoly<QQ>("x^3-2", q));
  CHECK(eq.transformed == parse_unipoly<QQ>("x^3-6*x-6", q));
  CHECK(matches_shape(eq.transformed, NormalShape::cubic_aa));
  QuotientRing<QQ> L(q, eq.original);
  CHECK(minimal_polynomial(L, eq.generator_witness) == eq.transformed);

  GFp f5(5);
  auto eq5 = normalize_cubic(parse_unipoly<GFp>("x^3+x+1", f5));
  CHECK(eq5.transformed == parse_unipoly<GFp>("x^3+x+1", f5));  // already x^3+ax+a

  // reducible input is rejected
  CHECK_THROWS_AS(normalize_cubic(parse_unipoly<QQ>("x^3-1", q)), Error);

  // char 3 divides the degree: the trace-zero search path still succeeds
  GFp f3(3);
  Rng rng(7);
  auto f = random_irreducible(f3, 3, rng);
  auto eq3 = normalize_cubic(f);
  CHECK(matches_shape(eq3.transformed, NormalShape::cubic_aa));
  CHECK(is_irreducible(eq3.transformed));
}

TEST_CASE("quartic normalization") {
  GFp f7(7);
  Rng rng(8);
  // force the biquadratic path: c = 0 after the trace-zero reduction
  UniPoly<GFp> biq(f7);
  bool found = false;
  for (std::uint64_t b = 0; b < 7 && !found; ++b)
    for (std::uint64_t d = 1; d < 7 && !found; ++d) {
      UniPoly<GFp> cand(f7, {d, 0, b, 0, 1});
      if (is_irreducible(cand)) {
        biq = cand;
        found = true;
      }
    }
  REQUIRE(found);
  auto eq = normalize_quartic(biq);
  CHECK(matches_shape(eq.transformed, NormalShape::quartic_abb));
  CHECK(is_irreducible(eq.transformed));
  CHECK(eq.notes.find("y = b/2 + x + x^2") != std::string::npos);

  // generic quartics over odd characteristic
  for (std::uint64_t p : {5, 7, 11}) {
    GFp K(p);
    auto f = random_irreducible(K, 4, rng);
    auto e = normalize_quartic(f);
    CHECK(matches_shape(e.transformed, NormalShape::quartic_abb));
    CHECK(is_irreducible(e.transformed));
    QuotientRing<GFp> L(K, f);
    CHECK(minimal_polynomial(L, e.generator_witness) == e.transformed);
  }
}

TEST_CASE("trace-zero generators") {
  QQ q;
  // Tr(x) = -3, so x + 1 has trace zero
  QuotientRing<QQ> L(q, parse_unipoly<QQ>("x^3+3*x^2+x+1", q));
  auto xi = trace_zero_generator(L);
  CHECK(xi == parse_unipoly<QQ>("x+1", q));
  CHECK(q.is_zero(L.trace(xi)));

  // degree 4 over GF(9): char 3 does not divide 4, shift path
  GFq f9(make_fq(3, 2));
  Rng rng(9);
  for (;;) {
    auto f = UniPoly<GFq>::random_monic(f9, 4, rng);
    if (!is_irreducible(f)) continue;
    QuotientRing<GFq> L9(f9, f);
    auto xi9 = trace_zero_generator(L9);
    CHECK(f9.is_zero(L9.trace(xi9)));
    CHECK(minimal_polynomial(L9, xi9).degree() == 4);
    break;
  }

  // char | n: quintic over GF(5), deterministic search path
  GFp f5(5);
  for (;;) {
    auto f = UniPoly<GFp>::random_monic(f5, 5, rng);
    if (!is_irreducible(f)) continue;
    QuotientRing<GFp> L5(f5, f);
    auto xi5 = trace_zero_generator(L5);
    CHECK(f5.is_zero(L5.trace(xi5)));
    CHECK(minimal_polynomial(L5, xi5).degree() == 5);
    break;
  }
}

TEST_CASE("the direct twisted image of an irreducible sextic splits as (1)(2)(3)") {
  // The outer automorphism exchanges 6-cycles with (3,2,1)-elements, so the
  // Galois orbits of the transformed values have sizes 1, 2 and 3. This is
  // why the finite-field normalizer transforms a split companion equation.
  Rng rng(77);
  const TschirnhausForm& J = joubert_tschirnhaus();
  for (std::uint64_t p : {3, 5, 7}) {
    GFp K(p);
    auto f = random_irreducible(K, 6, rng);
    auto fbar = transformed_polynomial(f, J);
    REQUIRE(fbar.degree() == 6);
    // distinct-degree split: gcd with x^{q^d} - x peels the degree-d part
    auto g = fbar.monic();
    auto x = UniPoly<GFp>::x(K);
    std::vector<int> degrees;
    UniPoly<GFp> xq = x.mod(g);
    for (int d = 1; d <= 6 && g.degree() > 0; ++d) {
      xq = xq.powmod(Int(static_cast<unsigned long>(p)), g);
      auto part = UniPoly<GFp>::gcd(xq - x, g);
      if (part.degree() > 0) {
        degrees.push_back(part.degree());
        g = UniPoly<GFp>::divrem(g, part).first;
        if (g.degree() > 0) xq = xq.mod(g);
      }
    }
    CHECK(degrees == std::vector<int>{1, 2, 3});
  }
}

TEST_CASE("the formula cross-checks run on every normalizer call") {
  // y^3 + 3cy + (c - c^2) for the cubic b = 0 path over a finite field
  GFp f7(7);
  // find an irreducible depressed cubic with b = 0: x^3 + c, c a non-cube
  bool hit = false;
  for (std::uint64_t c = 1; c < 7 && !hit; ++c) {
    UniPoly<GFp> f(f7, {c, 0, 0, 1});
    if (!is_irreducible(f)) continue;
    auto eq = normalize_cubic(f);
    CHECK(matches_shape(eq.transformed, NormalShape::cubic_aa));
    CHECK(eq.notes.find("y = x + x^2") != std::string::npos);
    hit = true;
  }
  CHECK(hit);
}
