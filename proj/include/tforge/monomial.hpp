#ifndef TFORGE_MONOMIAL_HPP
#define TFORGE_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <cstddef>

#include "tforge/error.hpp"

namespace tforge {

// Exponent vector packed into two 64-bit words, eight 16-bit lanes, variable
// x1 in the most significant lane. Numeric comparison of (hi, lo) is then
// exactly the pure lexicographic order with x1 > x2 > ... > xn, which is the
// term order used everywhere in the library.
//
// Eight lanes cover every ambient ring in the system: at most 6 root
// variables plus a fresh translation variable, or 6 coefficient symbols
// a1..a6 plus the indeterminate of a Tschirnhaus form.
class Monomial {
 public:
  static constexpr int kMaxVars = 8;
  static constexpr unsigned kMaxExponent = 0xffff;

  Monomial() = default;

  static Monomial one() { return Monomial(); }

  static Monomial variable(int i, unsigned e = 1) {
    Monomial m;
    m.set_exponent(i, e);
    return m;
  }

  unsigned exponent(int i) const {
    return static_cast<unsigned>((word(i >> 2) >> shift(i)) & 0xffffu);
  }

  void set_exponent(int i, unsigned e) {
    if (e > kMaxExponent) throw Error("monomial exponent overflow");
    std::uint64_t& w = word(i >> 2);
    w = (w & ~(0xffffull << shift(i))) | (static_cast<std::uint64_t>(e) << shift(i));
  }

  unsigned total_degree(int nvars) const {
    unsigned d = 0;
    for (int i = 0; i < nvars; ++i) d += exponent(i);
    return d;
  }

  bool is_one() const { return w_[0] == 0 && w_[1] == 0; }

  // Product of monomials = lane-wise exponent sum. Degrees in this library
  // stay far below 2^16 per variable, so lanes cannot carry into each other;
  // the debug build still verifies that.
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.w_[0] = a.w_[0] + b.w_[0];
    r.w_[1] = a.w_[1] + b.w_[1];
#ifndef NDEBUG
    for (int i = 0; i < kMaxVars; ++i) {
      if (r.exponent(i) < a.exponent(i)) throw Error("monomial exponent overflow");
    }
#endif
    return r;
  }

  bool divisible_by(const Monomial& d) const {
    for (int i = 0; i < kMaxVars; ++i) {
      if (exponent(i) < d.exponent(i)) return false;
    }
    return true;
  }

  // Caller guarantees divisibility.
  Monomial divided_by(const Monomial& d) const {
    Monomial r;
    r.w_[0] = w_[0] - d.w_[0];
    r.w_[1] = w_[1] - d.w_[1];
    return r;
  }

  bool operator==(const Monomial& o) const = default;

  // true iff *this is lexicographically greater (comes first).
  bool lex_greater(const Monomial& o) const {
    return w_[0] != o.w_[0] ? w_[0] > o.w_[0] : w_[1] > o.w_[1];
  }

  std::size_t hash() const {
    std::uint64_t z = w_[0] * 0x9e3779b97f4a7c15ull;
    z ^= (z >> 29) ^ (w_[1] * 0xbf58476d1ce4e5b9ull);
    z *= 0x94d049bb133111ebull;
    return static_cast<std::size_t>(z ^ (z >> 32));
  }

 private:
  std::uint64_t word(int k) const { return w_[k]; }
  std::uint64_t& word(int k) { return w_[k]; }
  static int shift(int i) { return 16 * (3 - (i & 3)); }

  std::array<std::uint64_t, 2> w_{0, 0};
};

struct MonomialLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return a.lex_greater(b); }
};

}  // namespace tforge

#endif
