#ifndef TFORGE_VERIFY_HPP
#define TFORGE_VERIFY_HPP

#include <string>
#include <vector>

#include "tforge/covariant.hpp"

namespace tforge {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// t-power specialization of the psitilde components: psi3 and psitilde3
// vanish at (t^4, t^3, t^2, t, 1) and the product of the other four has
// leading coefficient +-1 in degree 188.
struct TSubstitutionResult {
  bool psi3_vanishes = false;
  bool psitilde3_vanishes = false;
  int lead_degree = 0;
  Int lead_coeff;
};
TSubstitutionResult t_substitution_check();

// s4 of the psitilde components, the quotient S4 = s4(phi)/Delta^6 of degree
// 40, and the phi-level division witness.
struct S4Result {
  ZPoly s4_psitilde{ZZ{}, 5};  // degree 60
  ZPoly S4{ZZ{}, 5};           // degree 40
  bool roundtrip_ok = false;       // S4 * Delta^2 == s4(psitilde)
  bool phi_level_ok = false;       // divide_exact(s4(phi), Delta^6) == S4
  bool homogeneous_deg40 = false;
  Int coefficient_gcd;             // 1 => nonzero mod every prime
};
// full_phi_level additionally materializes s4(phi) = s4(psitilde)*Delta^4
// and runs the literal division by Delta^6 (the slow path).
S4Result compute_s4(bool full_phi_level);

// Exact scalar c with e5(joubert psi) = c * Delta; comes out as -2^5.
Int joubert_e5_scalar();

VerifyReport verify_hermite();
VerifyReport verify_joubert();
VerifyReport verify_s4(bool full_phi_level = true);
// Same checks over an already-computed result (avoids recomputing e4).
VerifyReport verify_s4_from(const S4Result& r, bool full_phi_level);
VerifyReport verify_conditions_tr();
VerifyReport verify_group_facts();

VerifyReport verify_suite(const std::string& which);

}  // namespace tforge

#endif
