#ifndef TFORGE_TABLE_HPP
#define TFORGE_TABLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tforge/finite_field.hpp"
#include "tforge/quotient_ring.hpp"

namespace tforge {

// The fourteen explicit irreducible quintics of the shape x^5 + b x^3 + c x + c
// over the fields of order 4, 8, 32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37.
// Entries over extension fields name an element by its minimal polynomial
// over the prime field.
struct QuinticTableEntry {
  std::uint64_t p = 0;
  int k = 1;
  // coefficient specs for x^5 + B x^3 + C x + D
  struct Coef {
    enum Kind { zero, integer, element } kind = zero;
    long value = 0;  // for integer
  };
  Coef B, C, D;
  std::vector<std::uint64_t> element_modulus;  // minimal polynomial of the named element
  std::string element_name;                    // display symbol
  std::string display;                         // the polynomial as printed
};

const std::vector<QuinticTableEntry>& quintic_table();

struct TableCheck {
  std::string field;
  std::string polynomial;
  bool irreducible = false;
  bool shape_ok = false;
};

// Constructs each entry over its field with the stated modulus and verifies
// irreducibility and the x^5 + b x^3 + c x + c pattern.
std::vector<TableCheck> verify_table_sec6();

// Minimal polynomial over the prime field of an element of F_{p^k}.
std::vector<std::uint64_t> fq_element_minpoly(const FqField& F, const FqField::Coord& a);

// The table polynomial rebuilt over an arbitrary field K of matching order
// (the named element is located inside K by its minimal polynomial), or
// nullopt when |K| has no table entry.
template <class FD>
std::optional<UniPoly<FD>> quintic_table_polynomial(const FD& K) {
  const Int q = K.field_size();
  for (const QuinticTableEntry& e : quintic_table()) {
    Int eq = int_pow(Int(static_cast<unsigned long>(e.p)), static_cast<unsigned long>(e.k));
    if (eq != q) continue;
    typename FD::Elem u = K.zero();
    if (!e.element_modulus.empty()) {
      if constexpr (std::is_same_v<FD, GFq>) {
        if (K.F->p() != e.p) return std::nullopt;
        bool found = false;
        for (Int i(0); i < q && !found; ++i) {
          typename FD::Elem cand = K.nth_element(i);
          if (fq_element_minpoly(*K.F, cand) == e.element_modulus) {
            u = cand;
            found = true;
          }
        }
        if (!found) throw Error("table element not found inside " + K.name());
      } else {
        return std::nullopt;  // entry needs a proper extension field
      }
    }
    auto coef = [&](const QuinticTableEntry::Coef& c) {
      switch (c.kind) {
        case QuinticTableEntry::Coef::zero: return K.zero();
        case QuinticTableEntry::Coef::integer: return K.from_int(Int(c.value));
        case QuinticTableEntry::Coef::element: return u;
      }
      return K.zero();
    };
    return UniPoly<FD>(K, {coef(e.D), coef(e.C), K.zero(), coef(e.B), K.zero(), K.one()});
  }
  return std::nullopt;
}

}  // namespace tforge

#endif
