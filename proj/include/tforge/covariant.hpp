#ifndef TFORGE_COVARIANT_HPP
#define TFORGE_COVARIANT_HPP

#include <vector>

#include "tforge/multipoly.hpp"
#include "tforge/permutation.hpp"
#include "tforge/symmetric.hpp"

namespace tforge {

using ZPoly = MultiPoly<ZZ>;

// The outer automorphism of S6, realized concretely: H = PGL2(F5) acting on
// P^1(F5) = {inf,0,1,2,3,4} is a transitive copy of S5 inside S6, and S6
// acting by left translation on its six cosets gives an automorphism that is
// not inner (it sends transpositions to triple transpositions). The identity
// coset is labeled 1, so tau(H) is exactly the stabilizer of 1.
class OuterAutomorphism {
 public:
  OuterAutomorphism();

  // tau and its inverse as lookups over all 720 elements.
  Permutation tau(const Permutation& s) const;
  Permutation tau_inv(const Permutation& s) const;

  // tau((1k)) for k = 2..6 (position k-2).
  const std::vector<Permutation>& transposition_images() const { return tau_transpositions_; }

  const std::vector<Permutation>& subgroup_h() const { return H_; }          // 120 elements
  const std::vector<Permutation>& normalizer_n0() const { return N0_; }      // 24 elements
  const std::vector<Permutation>& pairing_kernel() const { return kernel_; }  // 8 elements of N
  const Permutation& eta() const { return eta_; }  // the 5-cycle on labels 0..4, fixing inf

  // sign of the block action rho: N0 -> S3 on {{inf,0},{1,4},{2,3}}.
  int rho_sign(const Permutation& s) const;

  bool in_h(const Permutation& s) const;

 private:
  std::vector<Permutation> H_;
  std::vector<Permutation> N0_;
  std::vector<Permutation> kernel_;
  Permutation eta_{std::vector<int>{0, 2, 3, 4, 5, 1}};
  std::vector<Permutation> tau_table_;      // by rank over S6
  std::vector<Permutation> tau_inv_table_;  // by rank over S6
  std::vector<Permutation> tau_transpositions_;
};

// Cached singleton; the construction is deterministic.
const OuterAutomorphism& outer_automorphism_tau();

enum class Twist { none, tau };

// n-tuple of polynomial components with the defining equivariance
//   apply_permutation(c_i, sigma) == c_{pi(sigma)(i)},
// pi = identity for twist none, pi = tau for the twisted S6 target. The
// sign_type flag builds c_k = -(1k).c_1, the convention for targets twisted
// by the sign character (the omega and trace-zero covariants).
struct Covariant {
  int n = 0;
  Twist twist = Twist::none;
  bool sign_type = false;
  std::vector<ZPoly> components;

  const ZPoly& component(int i) const { return components[static_cast<std::size_t>(i)]; }
};

// Builds a covariant from its first component. Validates the required
// stabilizer invariance of the seed (S_{n-1} on the last variables for the
// untwisted case, H for the twisted case) and reports the violating
// permutation on failure.
Covariant build_covariant(const ZPoly& seed, int n, Twist twist, bool sign_type = false);

// Validates the defining equivariance on the adjacent transpositions.
void check_equivariance(const Covariant& cov);

// Hermite's degree-9 seed: the product of the three bracket sums; symmetric
// in x2..x5 with lex leading term -x1^6 x2^3.
const ZPoly& hermite_psi1();

// omega_1 = prod_{1<i<j<=n} (x_i - x_j), the trace-zero seed of degree
// C(n-1,2).
ZPoly omega1(int n);

// phi_1 = psi_1 * omega_1 * Delta, degree 25.
const ZPoly& hermite_phi1();

// psitilde_1 = psi_1 * omega_1, degree 15; phi_i = psitilde_i * Delta.
const ZPoly& hermite_psi_tilde1();

// The five psitilde components (sign type) and the five phi components.
const Covariant& hermite_psi_tilde();
const Covariant& hermite_phi();

// Joubert's seed h in the labels (inf,0,1,2,3,4) -> (x1,...,x6).
const ZPoly& joubert_h();

// psi_1 = (1/3) sum_i eta^i(h): the sum of all 20 squarefree cubic monomials
// with coefficients +-1. The divisibility of the orbit sum by 3 is asserted,
// so a wrong eta wiring fails fast.
const ZPoly& joubert_psi1();

// phi_1 = Delta * psi_1, degree 18, H-invariant.
const ZPoly& joubert_phi1();

// The six twisted psi components (phi_i / Delta, sign type over the twisted
// action) and the six twisted phi components.
const Covariant& joubert_psi();
const Covariant& joubert_phi();

const ZPoly& delta5();
const ZPoly& delta6();

}  // namespace tforge

#endif
