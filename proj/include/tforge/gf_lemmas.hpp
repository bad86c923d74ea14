#ifndef TFORGE_GF_LEMMAS_HPP
#define TFORGE_GF_LEMMAS_HPP

#include <string>
#include <vector>

#include "tforge/finite_field.hpp"

namespace tforge {

// Brute-force check of the subfield-span codimension formula: the F_p-span
// of the union of the maximal proper subfields of F_{p^n} has codimension
// (n / (l1...lk)) * (l1 - 1)...(lk - 1), l_i the prime factors of n.
struct SubfieldSpanReport {
  std::uint64_t p = 0;
  int n = 0;
  std::vector<int> prime_factors;
  int codim_bruteforce = -1;
  int codim_formula = -1;
  // averaging operator H = (1/l)(Id + F + ... + F^{l-1}) is a projection
  // onto the subfield, checked for every prime l | n with l != p
  bool projector_crosscheck_ok = false;
  bool agrees() const { return codim_bruteforce == codim_formula; }
};

// Guard: p^n <= 2^24 (elements are enumerated directly).
SubfieldSpanReport subfield_span_codim(std::uint64_t p, int n);

// Exhaustive confirmation that no nonzero homogeneous polynomial of degree
// d < q over F_q vanishes on F_q^{m+1} minus a proper subspace (checked for
// every hyperplane via the rank of the evaluation matrix), and the explicit
// boundary witness x0^{d-q+1} (x0^{q-1} - xm^{q-1}) when d = q.
struct VanishingBoundReport {
  std::uint64_t q = 0;
  int m = 0;
  int d = 0;
  int hyperplanes = 0;
  int monomials = 0;
  int min_rank = -1;
  bool no_counterexample = false;     // meaningful when d < q
  bool boundary_witness_ok = false;   // meaningful when d >= q
  std::string witness;
};

// Guards: q <= 9, m <= 2, d <= q.
VanishingBoundReport vanishing_bound_witness(std::uint64_t q, int m, int d);

}  // namespace tforge

#endif
