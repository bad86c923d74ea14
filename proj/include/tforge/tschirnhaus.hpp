#ifndef TFORGE_TSCHIRNHAUS_HPP
#define TFORGE_TSCHIRNHAUS_HPP

#include "tforge/covariant.hpp"

namespace tforge {

// The polynomial phi(a1,...,an,X) of X-degree < n attached to a plain
// covariant: phi_i(x) = phi(a(x), x_i) with a_k = (-1)^k e_k(x). For the
// tau-twisted S6 covariant no such single-variable form exists (it would
// force the seed to be S6-invariant); the twisted data instead consists of
// the universal coefficients of the transformed polynomial,
//   fbar(Y) = Y^6 + D*Ebar2(a) Y^4 + D^2*Ebar4(a) Y^2
//             - e5_scalar*D^3 Y + D^3*Ebar6(a),
// where D = disc(f) and Ebar_{2k} rewrites e_{2k}(psi_1,...,psi_6) in the
// coefficient symbols. e5_scalar is the exact integer with
// e5(psi) = e5_scalar * Delta.
struct TschirnhausForm {
  int n = 0;
  Twist twist = Twist::none;

  // untwisted: p_0, ..., p_{n-1} in the variables a1..an
  std::vector<ZPoly> x_coeffs;

  // twisted: symmetrized even elementary symmetric functions of the psi
  // components, in the variables a1..a6
  ZPoly ebar2{ZZ{}, 6};
  ZPoly ebar4{ZZ{}, 6};
  ZPoly ebar6{ZZ{}, 6};
  Int e5_scalar;
};

// Extraction for plain untwisted covariants: write phi_1 as a polynomial in
// x1 with coefficients symmetric in x2..xn, rewrite those through the
// elementary symmetrics of x2..xn via e'_k = sum_i (-x1)^i e_{k-i}, i.e.
// a'_k = sum_i x1^i a_{k-i}, then reduce x1^m for m >= n by
// x1^n = -a1 x1^{n-1} - ... - an. For the twisted Joubert covariant the
// universal coefficient data is computed instead.
TschirnhausForm tschirnhaus_extract(const Covariant& cov);

const TschirnhausForm& hermite_tschirnhaus();
const TschirnhausForm& joubert_tschirnhaus();

}  // namespace tforge

#endif
