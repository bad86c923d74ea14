#include "tforge/tschirnhaus.hpp"

namespace tforge {

namespace {

ZZ zdom;

// Sub-polynomial of the terms with x1-exponent m, in the variables x2..xn
// (indices shifted down by one).
ZPoly x1_coefficient(const ZPoly& p, unsigned m) {
  const int n = p.nvars();
  std::vector<ZPoly::Term> ts;
  for (const auto& t : p.terms()) {
    if (t.mono.exponent(0) != m) continue;
    Monomial shifted;
    for (int v = 1; v < n; ++v) {
      unsigned e = t.mono.exponent(v);
      if (e) shifted.set_exponent(v - 1, e);
    }
    ts.push_back({shifted, t.coef});
  }
  return ZPoly::from_terms(zdom, n - 1, ts);
}

}  // namespace

TschirnhausForm tschirnhaus_extract(const Covariant& cov) {
  check_equivariance(cov);
  TschirnhausForm tf;
  tf.n = cov.n;
  tf.twist = cov.twist;

  if (cov.twist == Twist::tau) {
    // Universal transformed-coefficient data via the Delta*Psi structure.
    const ZPoly& d = delta6();
    std::vector<ZPoly> psi;
    for (const auto& c : cov.components) psi.push_back(divide_exact(c, d));
    std::vector<ZPoly> e = elem_sym_prefix(psi, 6);
    if (!e[1].is_zero() || !e[3].is_zero())
      throw Error("twisted extraction: odd elementary symmetric functions do not vanish");
    ZPoly q = divide_exact(e[5], d);
    if (!q.is_constant()) throw Error("twisted extraction: e5(psi) is not a multiple of Delta");
    tf.e5_scalar = q.constant_value();
    tf.ebar2 = symmetrize_to_elementary(e[2]);
    tf.ebar4 = symmetrize_to_elementary(e[4]);
    tf.ebar6 = symmetrize_to_elementary(e[6]);
    return tf;
  }

  if (cov.sign_type)
    throw Error("sign-twisted covariants have no single-variable Tschirnhaus form");

  const int n = cov.n;
  const ZPoly& seed = cov.component(0);

  // Target ring: a1..an at indices 0..n-1, X at index n.
  const int anv = n + 1;
  const int xvar = n;
  if (anv > Monomial::kMaxVars) throw Error("too many variables for the extraction ring");

  // a'_k = a_k + x1 a_{k-1} + ... + x1^{k-1} a_1 + x1^k  (k = 1..n-1)
  std::vector<std::pair<int, ZPoly>> prime_repl;
  for (int k = 1; k < n; ++k) {
    ZPoly r = ZPoly::variable(zdom, anv, xvar, static_cast<unsigned>(k));
    for (int i = 0; i < k; ++i) {
      ZPoly ai = ZPoly::variable(zdom, anv, k - i - 1);  // a_{k-i}
      r = r + ai * ZPoly::variable(zdom, anv, xvar, static_cast<unsigned>(i));
    }
    prime_repl.emplace_back(k - 1, std::move(r));
  }

  ZPoly total = ZPoly::zero(zdom, anv);
  int dx1 = seed.degree_in(0);
  for (int m = 0; m <= dx1; ++m) {
    ZPoly cm = x1_coefficient(seed, static_cast<unsigned>(m));
    if (cm.is_zero()) continue;
    // symmetric in x2..xn; rewrite through the primed coefficient symbols
    ZPoly Cm = symmetrize_to_elementary(cm);
    ZPoly lifted = substitute(Cm, prime_repl, anv);
    total = total + lifted * ZPoly::variable(zdom, anv, xvar, static_cast<unsigned>(m));
  }

  // Reduce X^m for m >= n with X^n = -a1 X^{n-1} - ... - an.
  int dX = total.degree_in(xvar);
  std::vector<ZPoly> by_x(static_cast<std::size_t>(dX) + 1, ZPoly::zero(zdom, anv));
  for (const auto& t : total.terms()) {
    unsigned m = t.mono.exponent(xvar);
    Monomial rest = t.mono;
    rest.set_exponent(xvar, 0);
    by_x[m] = by_x[m] + ZPoly::monomial_term(zdom, anv, rest, t.coef);
  }
  for (int m = dX; m >= n; --m) {
    if (by_x[static_cast<std::size_t>(m)].is_zero()) continue;
    ZPoly top = std::move(by_x[static_cast<std::size_t>(m)]);
    by_x[static_cast<std::size_t>(m)] = ZPoly::zero(zdom, anv);
    for (int j = 1; j <= n; ++j) {
      ZPoly aj = ZPoly::variable(zdom, anv, j - 1);
      by_x[static_cast<std::size_t>(m - j)] = by_x[static_cast<std::size_t>(m - j)] - top * aj;
    }
  }
  for (int m = n; m <= dX; ++m) {
    if (!by_x[static_cast<std::size_t>(m)].is_zero())
      throw Error("extraction reduction left X-degree >= n");
  }

  // Drop the X variable: each coefficient lives in a1..an.
  tf.x_coeffs.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const ZPoly& src = j <= dX ? by_x[static_cast<std::size_t>(j)] : ZPoly::zero(zdom, anv);
    std::vector<ZPoly::Term> ts;
    for (const auto& t : src.terms()) {
      if (t.mono.exponent(xvar) != 0) throw Error("extraction: residual X inside a coefficient");
      ts.push_back({t.mono, t.coef});
    }
    tf.x_coeffs.push_back(ZPoly::from_terms(zdom, n, ts));
  }
  return tf;
}

const TschirnhausForm& hermite_tschirnhaus() {
  static const TschirnhausForm tf = tschirnhaus_extract(hermite_phi());
  return tf;
}

const TschirnhausForm& joubert_tschirnhaus() {
  static const TschirnhausForm tf = tschirnhaus_extract(joubert_phi());
  return tf;
}

}  // namespace tforge
