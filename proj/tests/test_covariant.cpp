#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tforge/covariant.hpp"
#include "tforge/verify.hpp"

using namespace tforge;

namespace {
ZZ z;
}

TEST_CASE("hermite psi1") {
  const ZPoly& psi = hermite_psi1();
  CHECK(psi.total_degree() == 9);
  CHECK(psi.is_homogeneous());
  Monomial lead;
  lead.set_exponent(0, 6);
  lead.set_exponent(1, 3);
  CHECK(psi.leading_term().mono == lead);
  CHECK(psi.leading_term().coef == -1);
  for (int i = 1; i < 4; ++i)
    CHECK(apply_permutation(psi, Permutation::transposition(5, i, i + 1)) == psi);
}

TEST_CASE("omega1") {
  CHECK(omega1(5).total_degree() == 6);
  CHECK(omega1(3) == parse_poly("x2-x3", z, numbered_vars("x", 3)));
  // omega1(4) * (x1-x2)(x1-x3)(x1-x4) = +-Delta(4)
  ZPoly prod = omega1(4);
  for (int j = 1; j < 4; ++j)
    prod = prod * (ZPoly::variable(z, 4, 0) - ZPoly::variable(z, 4, j));
  auto d4 = vandermonde_delta(z, 4);
  CHECK((prod == d4 || prod == -d4));
}

TEST_CASE("hermite phi1 and psitilde") {
  CHECK(hermite_phi1().total_degree() == 25);
  CHECK(hermite_psi_tilde1().total_degree() == 15);
  for (int v = 0; v < 5; ++v) CHECK(hermite_phi1().degree_in(v) == 10);
  const Int& lc = hermite_phi1().leading_term().coef;
  CHECK((lc == 1 || lc == -1));

  // under the weight (4,3,2,1,0) each surviving component specializes to
  // t-degree 47 with a +-1 top coefficient; four of them give 4 * 47 = 188
  const Covariant& pt = hermite_psi_tilde();
  for (int i : {0, 1, 3, 4}) {
    std::vector<std::pair<int, ZPoly>> tpow;
    for (int j = 0; j < 5; ++j)
      tpow.emplace_back(j, ZPoly::variable(z, 1, 0, static_cast<unsigned>(4 - j)));
    ZPoly spec = substitute(pt.component(i), tpow, 1);
    CHECK(spec.total_degree() == 47);
    const Int& c = spec.leading_term().coef;
    CHECK((c == 1 || c == -1));
  }
}

TEST_CASE("build_covariant") {
  // identity covariant
  Covariant idc = build_covariant(ZPoly::variable(z, 3, 0), 3, Twist::none);
  for (int i = 0; i < 3; ++i) CHECK(idc.component(i) == ZPoly::variable(z, 3, i));

  // seed not stabilizer-invariant -> error naming a violating permutation
  CHECK_THROWS_AS(build_covariant(ZPoly::variable(z, 3, 1), 3, Twist::none), InvarianceError);

  // Hermite components pairwise distinct over ZZ and mod small primes
  const Covariant& phi = hermite_phi();
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j) CHECK(phi.components[i] != phi.components[j]);
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    GFp f(p);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = i + 1; j < 5; ++j)
        CHECK(reduce_mod_p(phi.components[i], f) != reduce_mod_p(phi.components[j], f));
  }

  // twisted covariant of degree 18
  const Covariant& jphi = joubert_phi();
  CHECK(jphi.twist == Twist::tau);
  for (const auto& c : jphi.components) {
    CHECK(c.total_degree() == 18);
    CHECK(c.is_homogeneous());
  }
  check_equivariance(jphi);
}

TEST_CASE("joubert h and psi1") {
  const OuterAutomorphism& T = outer_automorphism_tau();
  const ZPoly& h = joubert_h();
  CHECK(h.total_degree() == 3);
  CHECK(T.pairing_kernel().size() == 8);
  for (const auto& s : T.pairing_kernel()) CHECK(apply_permutation(h, s) == h);
  CHECK(T.normalizer_n0().size() == 24);
  CHECK(apply_permutation(h, Permutation::transposition(6, 0, 2)) != h);

  const ZPoly& psi = joubert_psi1();
  CHECK(psi.num_terms() == 20);
  for (const auto& t : psi.terms()) {
    CHECK((t.coef == 1 || t.coef == -1));
    CHECK(t.mono.total_degree(6) == 3);
  }
  GFp f2(2);
  CHECK(reduce_mod_p(psi, f2) == elementary_symmetric(f2, 6, 3));

  // independent reconstruction from the orbit sums o_ijk in the labels
  // (inf,0,1,2,3,4) -> indices (1..6): psi1 = o123 - o124 + x_inf*o02 - x_inf*o01
  auto var = [&](int label) {
    // label -1 = inf at index 0; label v at index v+1
    return ZPoly::variable(z, 6, label < 0 ? 0 : label + 1);
  };
  auto orbit3 = [&](int a, int b, int c) {
    ZPoly acc = ZPoly::zero(z, 6);
    for (int i = 0; i < 5; ++i)
      acc = acc + var((a + i) % 5) * var((b + i) % 5) * var((c + i) % 5);
    return acc;
  };
  auto orbit2 = [&](int a, int b) {
    ZPoly acc = ZPoly::zero(z, 6);
    for (int i = 0; i < 5; ++i) acc = acc + var((a + i) % 5) * var((b + i) % 5);
    return acc;
  };
  ZPoly expected = orbit3(1, 2, 3) - orbit3(1, 2, 4) + var(-1) * orbit2(0, 2) - var(-1) * orbit2(0, 1);
  CHECK(psi == expected);
}

TEST_CASE("outer automorphism") {
  const OuterAutomorphism& T = outer_automorphism_tau();
  CHECK(T.subgroup_h().size() == 120);
  for (const auto& t : T.transposition_images())
    CHECK(t.cycle_type() == std::vector<int>{2, 2, 2});
  // tau is a homomorphism on random pairs
  Rng rng(40);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> a{0, 1, 2, 3, 4, 5}, b{0, 1, 2, 3, 4, 5};
    for (int i = 5; i > 0; --i) {
      std::swap(a[static_cast<std::size_t>(i)], a[rng.below(static_cast<std::uint64_t>(i + 1))]);
      std::swap(b[static_cast<std::size_t>(i)], b[rng.below(static_cast<std::uint64_t>(i + 1))]);
    }
    Permutation s(a), t(b);
    CHECK(T.tau(s * t) == T.tau(s) * T.tau(t));
    CHECK(T.tau_inv(T.tau(s)) == s);
  }
  // outerness: the image of a 6-cycle has cycle type (3,2,1)
  CHECK(T.tau(Permutation({1, 2, 3, 4, 5, 0})).cycle_type() == std::vector<int>{3, 2, 1});
}

TEST_CASE("verify suites") {
  CHECK(verify_hermite().all_pass());
  CHECK(verify_joubert().all_pass());
  CHECK(verify_group_facts().all_pass());
  CHECK(verify_conditions_tr().all_pass());
}

TEST_CASE("joubert e5 scalar is computed, not assumed") {
  CHECK(joubert_e5_scalar() == Int(-32));
}

TEST_CASE("t-substitution facts") {
  TSubstitutionResult t = t_substitution_check();
  CHECK(t.psi3_vanishes);
  CHECK(t.psitilde3_vanishes);
  CHECK(t.lead_degree == 188);
  CHECK((t.lead_coeff == 1 || t.lead_coeff == -1));
}
