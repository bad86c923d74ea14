#ifndef TFORGE_DOMAIN_HPP
#define TFORGE_DOMAIN_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "tforge/error.hpp"
#include "tforge/integer.hpp"
#include "tforge/rng.hpp"

namespace tforge {

// A coefficient domain is a small value object describing an exact ring or
// field and providing its element operations:
//
//   using Elem = ...;          value type of a coefficient
//   static constexpr bool is_field;
//   zero, one, is_zero, equal, add, sub, mul, neg, add_assign, addmul,
//   try_div (exact division), from_int, str, same, name, characteristic,
//   random_elem
//
// MultiPoly and UniPoly are templated over this concept, so the ring of
// coefficients is exchangeable without touching any polynomial algorithm.

// The ring of integers.
struct ZZ {
  using Elem = Int;
  static constexpr bool is_field = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return mpz_sgn(a.get_mpz_t()) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  void add_assign(Elem& a, const Elem& b) const { a += b; }
  void sub_assign(Elem& a, const Elem& b) const { a -= b; }
  // a += b*c without temporaries; this is the hot spot of every big product.
  void addmul(Elem& a, const Elem& b, const Elem& c) const {
    mpz_addmul(a.get_mpz_t(), b.get_mpz_t(), c.get_mpz_t());
  }
  bool try_div(Elem& out, const Elem& a, const Elem& b) const {
    if (is_zero(b)) return false;
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
  }
  Elem from_int(const Int& v) const { return v; }
  bool is_neg(const Elem& a) const { return mpz_sgn(a.get_mpz_t()) < 0; }
  Elem abs(const Elem& a) const {
    Elem r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
  }
  std::string str(const Elem& a) const { return a.get_str(); }
  bool same(const ZZ&) const { return true; }
  std::string name() const { return "ZZ"; }
  Int characteristic() const { return 0; }
  Elem random_elem(Rng& rng) const { return Elem(rng.range(-20, 20)); }
};

// The field of rationals. GMP keeps every value reduced to lowest terms with
// a positive denominator.
struct QQ {
  using Elem = Rat;
  static constexpr bool is_field = true;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return mpq_sgn(a.get_mpq_t()) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  void add_assign(Elem& a, const Elem& b) const { a += b; }
  void sub_assign(Elem& a, const Elem& b) const { a -= b; }
  void addmul(Elem& a, const Elem& b, const Elem& c) const { a += b * c; }
  bool try_div(Elem& out, const Elem& a, const Elem& b) const {
    if (is_zero(b)) return false;
    out = a / b;
    return true;
  }
  Elem inv(const Elem& a) const {
    if (is_zero(a)) throw Error("division by zero in QQ");
    return Elem(1) / a;
  }
  Elem pow(const Elem& a, const Int& e) const {
    if (e < 0) return pow(inv(a), Int(-e));
    Elem num, den;
    mpz_pow_ui(num.get_num_mpz_t(), a.get_num_mpz_t(), e.get_ui());
    mpz_pow_ui(den.get_num_mpz_t(), a.get_den_mpz_t(), e.get_ui());
    Elem r(num.get_num(), den.get_num());
    r.canonicalize();
    return r;
  }
  Elem from_int(const Int& v) const { return Elem(v); }
  bool is_neg(const Elem& a) const { return mpq_sgn(a.get_mpq_t()) < 0; }
  Elem abs(const Elem& a) const {
    Elem r;
    mpq_abs(r.get_mpq_t(), a.get_mpq_t());
    return r;
  }
  std::string str(const Elem& a) const { return a.get_str(); }
  bool same(const QQ&) const { return true; }
  std::string name() const { return "QQ"; }
  Int characteristic() const { return 0; }
  Elem random_elem(Rng& rng) const {
    Rat r(rng.range(-12, 12), rng.range(1, 7));
    r.canonicalize();
    return r;
  }
};

// The prime field F_p, elements as least non-negative residues.
class GFp {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_field = true;

  explicit GFp(std::uint64_t p) : p_(p) {
    if (!is_prime_u64(p)) throw Error("GF(p): modulus " + std::to_string(p) + " is not prime");
  }

  std::uint64_t p() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p_; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return addmod_u64(a, b, p_); }
  Elem sub(const Elem& a, const Elem& b) const { return submod_u64(a, b, p_); }
  Elem mul(const Elem& a, const Elem& b) const { return mulmod_u64(a, b, p_); }
  Elem neg(const Elem& a) const { return a == 0 ? 0 : p_ - a; }
  void add_assign(Elem& a, const Elem& b) const { a = add(a, b); }
  void sub_assign(Elem& a, const Elem& b) const { a = sub(a, b); }
  void addmul(Elem& a, const Elem& b, const Elem& c) const { a = add(a, mul(b, c)); }
  bool try_div(Elem& out, const Elem& a, const Elem& b) const {
    if (b == 0) return false;
    out = mul(a, inv(b));
    return true;
  }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
    return invmod_u64(a, p_);
  }
  Elem pow(const Elem& a, const Int& e) const {
    if (e >= 0) return powmod_u64(a, e.get_ui(), p_);
    return inv(powmod_u64(a, Int(-e).get_ui(), p_));
  }
  Elem from_int(const Int& v) const { return mod_u64(v, p_); }
  std::string str(const Elem& a) const { return std::to_string(a); }
  bool same(const GFp& o) const { return p_ == o.p_; }
  std::string name() const { return "GF(" + std::to_string(p_) + ")"; }
  Int characteristic() const { return Int(static_cast<unsigned long>(p_)); }
  Int field_size() const { return Int(static_cast<unsigned long>(p_)); }
  Elem random_elem(Rng& rng) const { return rng.below(p_); }

  // Deterministic enumeration 0, 1, ..., p-1 used by generator searches.
  std::uint64_t size() const { return p_; }
  Elem nth_element(const Int& i) const { return mod_u64(i, p_); }

 private:
  std::uint64_t p_;
};

}  // namespace tforge

#endif
