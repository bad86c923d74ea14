#include "tforge/verify.hpp"

#include <algorithm>
#include <iostream>
#include <set>

#include "tforge/rng.hpp"

namespace tforge {

namespace {

ZZ zdom;

std::string term_str(const ZPoly& p) {
  return format_poly(p, numbered_vars("x", p.nvars()));
}

// Elementary symmetric value of scalars over GF(p).
std::uint64_t elem_sym_value(const GFp& f, const std::vector<std::uint64_t>& vals, int k) {
  std::vector<std::uint64_t> e(static_cast<std::size_t>(k) + 1, 0);
  e[0] = 1;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    for (int j = std::min<int>(k, static_cast<int>(i) + 1); j >= 1; --j)
      e[static_cast<std::size_t>(j)] =
          f.add(e[static_cast<std::size_t>(j)], f.mul(e[static_cast<std::size_t>(j - 1)], vals[i]));
  }
  return e[static_cast<std::size_t>(k)];
}

struct ReducedCovariant {
  GFp f;
  std::vector<MultiPoly<GFp>> comps;
  MultiPoly<GFp> delta;
};

ReducedCovariant reduce_covariant(const Covariant& cov, const ZPoly& delta, std::uint64_t p) {
  GFp f(p);
  ReducedCovariant rc{f, {}, reduce_mod_p(delta, f)};
  for (const auto& c : cov.components) rc.comps.push_back(reduce_mod_p(c, f));
  return rc;
}

}  // namespace

TSubstitutionResult t_substitution_check() {
  TSubstitutionResult res;
  // x_j -> t^{5-j}
  std::vector<std::pair<int, ZPoly>> repl;
  for (int j = 0; j < 5; ++j)
    repl.emplace_back(j, ZPoly::variable(zdom, 1, 0, static_cast<unsigned>(4 - j)));
  auto specialize = [&](const ZPoly& p) { return substitute(p, repl, 1); };

  const Covariant& psit = hermite_psi_tilde();
  ZPoly psi3 = apply_permutation(hermite_psi1(), Permutation::transposition(5, 0, 2));
  res.psi3_vanishes = specialize(psi3).is_zero();
  res.psitilde3_vanishes = specialize(psit.component(2)).is_zero();

  ZPoly prod = ZPoly::constant(zdom, 1, Int(1));
  for (int i : {0, 1, 3, 4}) prod = prod * specialize(psit.component(i));
  if (!prod.is_zero()) {
    res.lead_degree = prod.total_degree();
    for (const auto& t : prod.terms()) {
      if (static_cast<int>(t.mono.exponent(0)) == res.lead_degree) res.lead_coeff = t.coef;
    }
  }
  return res;
}

namespace {

// Long identity computations report term-count milestones to stderr only;
// stdout stays byte-identical across runs.
void progress(const std::string& stage, std::size_t terms) {
  std::cerr << "[s4] " << stage << ": " << terms << " terms\n";
}

}  // namespace

S4Result compute_s4(bool full_phi_level) {
  S4Result r;
  const Covariant& psit = hermite_psi_tilde();
  std::vector<ZPoly> e = elem_sym_prefix(psit.components, 4);
  r.s4_psitilde = e[4];
  progress("e4(psitilde)", r.s4_psitilde.num_terms());
  const ZPoly& d = delta5();
  ZPoly d2 = d * d;
  r.S4 = divide_exact(r.s4_psitilde, d2);
  progress("S4 = e4/Delta^2", r.S4.num_terms());
  r.roundtrip_ok = (r.S4 * d2) == r.s4_psitilde;
  r.homogeneous_deg40 = r.S4.is_homogeneous() && r.S4.total_degree() == 40;
  Int g(0);
  for (const auto& t : r.S4.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
    if (g == 1) break;
  }
  r.coefficient_gcd = g;
  if (full_phi_level) {
    // s4(phi) = s4(psitilde) * Delta^4 because phi_i = psitilde_i * Delta;
    // then the literal division by Delta^6.
    ZPoly s4phi = r.s4_psitilde;
    for (int i = 0; i < 4; ++i) {
      s4phi = s4phi * d;
      progress("s4(phi) buildup " + std::to_string(i + 1) + "/4", s4phi.num_terms());
    }
    ZPoly q = s4phi;
    for (int i = 0; i < 6; ++i) {
      q = divide_exact(q, d);
      progress("division by Delta " + std::to_string(i + 1) + "/6", q.num_terms());
    }
    r.phi_level_ok = q == r.S4;
  }
  return r;
}

Int joubert_e5_scalar() {
  const Covariant& psi = joubert_psi();
  std::vector<ZPoly> e = elem_sym_prefix(psi.components, 5);
  ZPoly c = divide_exact(e[5], delta6());
  if (!c.is_constant()) throw Error("e5(psi) is not a scalar multiple of Delta");
  return c.constant_value();
}

VerifyReport verify_hermite() {
  VerifyReport rep;
  rep.suite = "hermite";

  const ZPoly& psi1 = hermite_psi1();
  const ZPoly& phi1 = hermite_phi1();
  const ZPoly& d = delta5();

  {
    const auto& lt = psi1.leading_term();
    Monomial want;
    want.set_exponent(0, 6);
    want.set_exponent(1, 3);
    rep.add("psi1 leading term = -x1^6*x2^3", lt.mono == want && lt.coef == -1,
            "found " + term_str(ZPoly::monomial_term(zdom, 5, lt.mono, lt.coef)));
  }
  {
    bool sym = true;
    for (int i = 1; i < 4; ++i)
      sym = sym && apply_permutation(psi1, Permutation::transposition(5, i, i + 1)) == psi1;
    rep.add("psi1 symmetric in x2..x5", sym);
  }
  {
    GFp f11(11);
    auto p = reduce_mod_p(psi1, f11);
    std::uint64_t z = 3;  // order 5 in F11
    std::vector<std::uint64_t> pt{1, z, f11.mul(z, z), powmod_u64(z, 3, 11), powmod_u64(z, 4, 11)};
    rep.add("psi1(1,z,z^2,z^3,z^4) = 0 in F11, z = 3", p.evaluate(pt) == 0);
  }
  rep.add("degree ledger psi1/omega1/Delta/phi1 = 9/6/10/25",
          psi1.total_degree() == 9 && omega1(5).total_degree() == 6 && d.total_degree() == 10 &&
              phi1.total_degree() == 25);
  {
    bool ok = true;
    for (int v = 0; v < 5; ++v) ok = ok && phi1.degree_in(v) == 10;
    rep.add("per-variable degree of phi1 = 10", ok);
  }
  {
    const Int& lc = phi1.leading_term().coef;
    rep.add("phi1 leading coefficient = +-1", lc == 1 || lc == -1, "found " + lc.get_str());
  }

  const Covariant& psit = hermite_psi_tilde();
  {
    std::vector<ZPoly> e = elem_sym_prefix(psit.components, 3);
    rep.add("e1(psitilde) = 0 exactly over ZZ", e[1].is_zero());
    rep.add("e2(psitilde) != 0", !e[2].is_zero(),
            std::to_string(e[2].num_terms()) + " terms");
    rep.add("e3(psitilde) = 0 exactly over ZZ", e[3].is_zero());
  }
  {
    const Covariant& phi = hermite_phi();
    ZPoly s1 = ZPoly::zero(zdom, 5);
    for (const auto& c : phi.components) s1 = s1 + c;
    rep.add("s1(phi) = 0 exactly over ZZ", s1.is_zero());

    // numeric phi-level spot check of s3(phi) = 0 at random points mod a
    // large prime (the exact statement follows from e3(psitilde) = 0 since
    // phi_i = psitilde_i * Delta)
    Rng rng(7);
    GFp f(1000003);
    bool ok = true;
    std::vector<MultiPoly<GFp>> comps;
    for (const auto& c : phi.components) comps.push_back(reduce_mod_p(c, f));
    for (int trial = 0; trial < 25 && ok; ++trial) {
      std::vector<std::uint64_t> pt;
      for (int i = 0; i < 5; ++i) pt.push_back(f.random_elem(rng));
      std::vector<std::uint64_t> vals;
      for (const auto& c : comps) vals.push_back(c.evaluate(pt));
      ok = elem_sym_value(f, vals, 1) == 0 && elem_sym_value(f, vals, 3) == 0;
    }
    rep.add("s1(phi), s3(phi) vanish at 25 random points mod 1000003", ok);
  }
  {
    TSubstitutionResult t = t_substitution_check();
    rep.add("psi3(t^4,t^3,t^2,t,1) = 0", t.psi3_vanishes);
    rep.add("psitilde3 vanishes under the t-substitution", t.psitilde3_vanishes);
    rep.add("product psitilde_{1,2,4,5} has leading term +-t^188",
            t.lead_degree == 188 && (t.lead_coeff == 1 || t.lead_coeff == -1),
            "degree " + std::to_string(t.lead_degree) + ", coefficient " + t.lead_coeff.get_str());
  }
  {
    const Covariant& phi = hermite_phi();
    bool distinct = true;
    for (std::size_t i = 0; i < phi.components.size(); ++i)
      for (std::size_t j = i + 1; j < phi.components.size(); ++j)
        distinct = distinct && phi.components[i] != phi.components[j];
    rep.add("phi components pairwise distinct over ZZ", distinct);
    bool mod_ok = true;
    for (std::uint64_t p : {2, 3, 5, 7, 11}) {
      ReducedCovariant rc = reduce_covariant(phi, d, p);
      for (std::size_t i = 0; i < rc.comps.size(); ++i)
        for (std::size_t j = i + 1; j < rc.comps.size(); ++j)
          mod_ok = mod_ok && rc.comps[i] != rc.comps[j];
    }
    rep.add("phi components pairwise distinct mod p in {2,3,5,7,11}", mod_ok);
  }
  return rep;
}

VerifyReport verify_joubert() {
  VerifyReport rep;
  rep.suite = "joubert";

  const ZPoly& psi1 = joubert_psi1();
  {
    bool ok = psi1.num_terms() == 20;
    for (const auto& t : psi1.terms()) ok = ok && (t.coef == 1 || t.coef == -1);
    rep.add("psi1 = 20 squarefree cubic monomials with coefficients +-1", ok);
  }
  {
    GFp f2(2);
    rep.add("psi1 mod 2 equals e3(x1..x6)",
            reduce_mod_p(psi1, f2) == elementary_symmetric(f2, 6, 3));
  }

  const Covariant& psi = joubert_psi();
  std::vector<ZPoly> e = elem_sym_prefix(psi.components, 5);
  rep.add("e1(psi) = 0 exactly over ZZ", e[1].is_zero());
  rep.add("e3(psi) = 0 exactly over ZZ", e[3].is_zero());
  {
    Int c;
    bool ok = false;
    std::string detail;
    try {
      ZPoly q = divide_exact(e[5], delta6());
      if (q.is_constant()) {
        c = q.constant_value();
        ok = (c == -32);
        detail = "e5(psi) = " + c.get_str() + " * Delta";
      } else {
        detail = "quotient not constant";
      }
    } catch (const InexactDivision& ex) {
      detail = ex.what();
    }
    rep.add("e5(psi) = -2^5 * Delta exactly", ok, detail);
  }
  {
    // s5(phi) = Delta^5 e5(psi) = -2^5 Delta^6; spot-checked numerically.
    const Covariant& phi = joubert_phi();
    GFp f(1000003);
    Rng rng(11);
    std::vector<MultiPoly<GFp>> comps;
    for (const auto& c : phi.components) comps.push_back(reduce_mod_p(c, f));
    MultiPoly<GFp> dm = reduce_mod_p(delta6(), f);
    bool ok = true;
    for (int trial = 0; trial < 25 && ok; ++trial) {
      std::vector<std::uint64_t> pt;
      for (int i = 0; i < 6; ++i) pt.push_back(f.random_elem(rng));
      std::vector<std::uint64_t> vals;
      for (const auto& c : comps) vals.push_back(c.evaluate(pt));
      std::uint64_t dv = dm.evaluate(pt);
      std::uint64_t want = f.mul(f.neg(32 % f.p()), powmod_u64(dv, 6, f.p()));
      ok = elem_sym_value(f, vals, 5) == want && elem_sym_value(f, vals, 1) == 0 &&
           elem_sym_value(f, vals, 3) == 0;
    }
    rep.add("s5(phi) = -2^5 * Delta^6 at 25 random points mod 1000003", ok);

    ZPoly s1 = ZPoly::zero(zdom, 6);
    for (const auto& c : phi.components) s1 = s1 + c;
    rep.add("s1(phi) = 0 exactly over ZZ", s1.is_zero());
  }
  {
    const Covariant& phi = joubert_phi();
    bool distinct_odd = true;
    for (std::uint64_t p : {3, 5, 7, 11}) {
      ReducedCovariant rc = reduce_covariant(phi, delta6(), p);
      for (std::size_t i = 0; i < rc.comps.size(); ++i)
        for (std::size_t j = i + 1; j < rc.comps.size(); ++j)
          distinct_odd = distinct_odd && rc.comps[i] != rc.comps[j];
    }
    rep.add("phi components pairwise distinct mod odd p in {3,5,7,11}", distinct_odd);

    ReducedCovariant rc2 = reduce_covariant(phi, delta6(), 2);
    bool all_equal = true;
    for (std::size_t i = 1; i < rc2.comps.size(); ++i)
      all_equal = all_equal && rc2.comps[i] == rc2.comps[0];
    rep.add("phi components coincide mod 2 (characteristic-2 failure)", all_equal);
  }
  return rep;
}

VerifyReport verify_s4(bool full_phi_level) {
  return verify_s4_from(compute_s4(full_phi_level), full_phi_level);
}

VerifyReport verify_s4_from(const S4Result& r, bool full_phi_level) {
  VerifyReport rep;
  rep.suite = "s4";
  rep.add("e4(psitilde) nonzero", !r.s4_psitilde.is_zero(),
          std::to_string(r.s4_psitilde.num_terms()) + " terms");
  rep.add("divide_exact(s4(psitilde), Delta^2) succeeds",
          !r.S4.is_zero(), std::to_string(r.S4.num_terms()) + " terms");
  rep.add("S4 roundtrip: S4 * Delta^2 = s4(psitilde)", r.roundtrip_ok);
  rep.add("S4 homogeneous of degree 40", r.homogeneous_deg40,
          "degree " + std::to_string(r.S4.total_degree()));
  rep.add("gcd of S4 coefficients = 1, so s4(phi) != 0 mod every prime",
          r.coefficient_gcd == 1, "gcd " + r.coefficient_gcd.get_str());
  if (full_phi_level)
    rep.add("divide_exact(s4(phi), Delta^6) = S4", r.phi_level_ok);
  {
    // numeric: S4(pt) * Delta(pt)^6 = s4 of the phi values
    const Covariant& phi = hermite_phi();
    GFp f(1000003);
    Rng rng(13);
    std::vector<MultiPoly<GFp>> comps;
    for (const auto& c : phi.components) comps.push_back(reduce_mod_p(c, f));
    MultiPoly<GFp> s4m = reduce_mod_p(r.S4, f);
    MultiPoly<GFp> dm = reduce_mod_p(delta5(), f);
    bool ok = true;
    for (int trial = 0; trial < 25 && ok; ++trial) {
      std::vector<std::uint64_t> pt;
      for (int i = 0; i < 5; ++i) pt.push_back(f.random_elem(rng));
      std::vector<std::uint64_t> vals;
      for (const auto& c : comps) vals.push_back(c.evaluate(pt));
      std::uint64_t lhs = f.mul(s4m.evaluate(pt), powmod_u64(dm.evaluate(pt), 6, f.p()));
      ok = lhs == elem_sym_value(f, vals, 4);
    }
    rep.add("S4 * Delta^6 matches s4 of the phi values at 25 random points", ok);
  }
  return rep;
}

VerifyReport verify_conditions_tr() {
  VerifyReport rep;
  rep.suite = "conditions-tr";
  const ZPoly& d = delta5();
  ZPoly d2 = d * d;
  rep.add("Delta^2 satisfies (T), n = 5", check_condition_T(d2));
  rep.add("Delta^2 satisfies (R) with d = 8", check_condition_R(d2, 8));
  rep.add("Delta satisfies (T)", check_condition_T(d));
  rep.add("psi1 satisfies (T)", check_condition_T(hermite_psi1()));
  rep.add("psitilde1 satisfies (T)", check_condition_T(hermite_psi_tilde1()));
  {
    // x1^3 (x1...x5)^3 psi1(1/x) = -psi1
    ZPoly lhs = reciprocal_reflect(hermite_psi1(), {6, 3, 3, 3, 3});
    rep.add("x1^3*(x1..x5)^3*psi1(1/x) = -psi1", lhs == -hermite_psi1());
  }
  rep.add("phi1 satisfies (R) with d = 10", check_condition_R(hermite_phi1(), 10));
  {
    // (T) is multiplicative; phi1 = psitilde1 * Delta then satisfies (T).
    Rng rng(5);
    bool lemma_ok = true;
    auto rand_diff_poly = [&](int n) {
      // sums of products of random differences x_i - x_j satisfy (T)
      ZPoly acc = ZPoly::zero(zdom, n);
      for (int s = 0; s < 2; ++s) {
        ZPoly prod = ZPoly::from_int(zdom, n, Int(rng.range(-3, 3)));
        for (int f = 0; f < 3; ++f) {
          int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
          int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
          if (i == j) j = (j + 1) % n;
          prod = prod * (ZPoly::variable(zdom, n, i) - ZPoly::variable(zdom, n, j));
        }
        acc = acc + prod;
      }
      return acc;
    };
    for (int trial = 0; trial < 5; ++trial) {
      ZPoly q1 = rand_diff_poly(4), q2 = rand_diff_poly(4);
      lemma_ok = lemma_ok && check_condition_T(q1) && check_condition_T(q2) &&
                 check_condition_T(q1 * q2);
    }
    rep.add("(T) multiplicative on random difference polynomials", lemma_ok);

    // numeric (T) for phi1 at random shifted points
    GFp f(1000003);
    MultiPoly<GFp> phim = reduce_mod_p(hermite_phi1(), f);
    Rng rng2(17);
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
      std::vector<std::uint64_t> pt, shifted;
      std::uint64_t t = f.random_elem(rng2);
      for (int i = 0; i < 5; ++i) {
        pt.push_back(f.random_elem(rng2));
        shifted.push_back(f.add(pt.back(), t));
      }
      ok = phim.evaluate(pt) == phim.evaluate(shifted);
    }
    rep.add("phi1 translation-invariant at 200 random points mod 1000003", ok);
  }
  return rep;
}

VerifyReport verify_group_facts() {
  VerifyReport rep;
  rep.suite = "group-facts";
  const OuterAutomorphism& T = outer_automorphism_tau();

  rep.add("|H| = 120 with H = PGL2(F5) acting on P^1(F5)", T.subgroup_h().size() == 120);
  rep.add("|N0| = 24", T.normalizer_n0().size() == 24);
  {
    // order profile of N0 matches S4: orders (1,2,3,4) with counts (1,9,8,6)
    int counts[5] = {0, 0, 0, 0, 0};
    for (const auto& s : T.normalizer_n0()) {
      int o = s.order();
      if (o >= 1 && o <= 4) ++counts[o];
    }
    rep.add("N0 has the S4 order profile 1/9/8/6",
            counts[1] == 1 && counts[2] == 9 && counts[3] == 8 && counts[4] == 6);
  }
  {
    // rho(N0) = S3 and ker(rho|N0) = (Z/2)^2
    std::set<int> images;
    int kernel_count = 0;
    bool kernel_exponent2 = true;
    const int block_of[6] = {0, 0, 1, 2, 2, 1};
    for (const auto& s : T.normalizer_n0()) {
      int img[3];
      for (int i = 0; i < 6; ++i) img[block_of[i]] = block_of[s(i)];
      images.insert(img[0] * 9 + img[1] * 3 + img[2]);
      if (img[0] == 0 && img[1] == 1 && img[2] == 2) {
        ++kernel_count;
        kernel_exponent2 = kernel_exponent2 && s.order() <= 2;
      }
    }
    rep.add("rho(N0) = S3", images.size() == 6);
    rep.add("ker(rho|N0) isomorphic to (Z/2)^2", kernel_count == 4 && kernel_exponent2);
  }
  {
    // H = N0 u eta N0 u ... u eta^4 N0, disjoint
    std::set<std::uint32_t> seen;
    Permutation p = Permutation::identity(6);
    bool disjoint = true;
    for (int i = 0; i < 5; ++i) {
      for (const auto& s : T.normalizer_n0()) {
        if (!seen.insert((p * s).rank()).second) disjoint = false;
      }
      p = p * T.eta();
    }
    bool covers = disjoint && seen.size() == 120;
    for (const auto& h : T.subgroup_h()) covers = covers && seen.count(h.rank());
    rep.add("H = N0 u eta*N0 u ... u eta^4*N0 (disjoint)", covers);
  }
  {
    bool ok = true;
    for (const auto& t : T.transposition_images())
      ok = ok && t.cycle_type() == std::vector<int>{2, 2, 2};
    rep.add("tau((1k)) is a triple transposition for k = 2..6", ok);
  }
  {
    // tau . tau is inner: cycle types are preserved
    Rng rng(23);
    bool ok = true;
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> img{0, 1, 2, 3, 4, 5};
      for (int i = 5; i > 0; --i)
        std::swap(img[static_cast<std::size_t>(i)],
                  img[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
      Permutation s(img);
      ok = ok && T.tau(T.tau(s)).cycle_type() == s.cycle_type();
    }
    rep.add("tau(tau(sigma)) is conjugate to sigma (50 random sigma)", ok);
  }
  {
    const ZPoly& h = joubert_h();
    bool kernel_fixes = true;
    for (const auto& s : T.pairing_kernel())
      kernel_fixes = kernel_fixes && apply_permutation(h, s) == h;
    rep.add("the 8 kernel elements fix h", kernel_fixes);

    bool semi = true;
    for (const auto& s : T.normalizer_n0()) {
      ZPoly moved = apply_permutation(h, s);
      semi = semi && (T.rho_sign(s) > 0 ? moved == h : moved == -h);
    }
    rep.add("sigma.h = sign(rho(sigma))*h for all sigma in N0", semi);

    rep.add("h is not S6-symmetric",
            apply_permutation(h, Permutation::transposition(6, 0, 2)) != h);
  }
  {
    bool ok = true;
    for (int n : {4, 5, 6}) {
      Covariant tz = build_covariant(omega1(n), n, Twist::none, true);
      ZPoly sum = ZPoly::zero(zdom, n);
      for (const auto& c : tz.components) sum = sum + c;
      ok = ok && sum.is_zero() &&
           tz.component(0).total_degree() == (n - 1) * (n - 2) / 2;
    }
    rep.add("trace-zero covariant: components sum to 0 for n = 4,5,6", ok);
  }
  return rep;
}

VerifyReport verify_suite(const std::string& which) {
  if (which == "hermite") return verify_hermite();
  if (which == "joubert") return verify_joubert();
  if (which == "s4") return verify_s4();
  if (which == "conditions-tr") return verify_conditions_tr();
  if (which == "group-facts") return verify_group_facts();
  throw Error("unknown verify suite '" + which + "'");
}

}  // namespace tforge
