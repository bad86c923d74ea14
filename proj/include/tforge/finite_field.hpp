#ifndef TFORGE_FINITE_FIELD_HPP
#define TFORGE_FINITE_FIELD_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tforge/integer.hpp"
#include "tforge/unipoly.hpp"

namespace tforge {

// Rabin irreducibility test over a finite field with q elements:
// f irreducible of degree n  <=>  X^{q^n} = X (mod f) and
// gcd(X^{q^{n/l}} - X, f) = 1 for every prime l | n.
template <class FD>
bool is_irreducible(const UniPoly<FD>& f) {
  const FD& dom = f.domain();
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  UniPoly<FD> m = f.monic();
  const Int q = dom.field_size();
  std::vector<int> prime_factors;
  int nn = n;
  for (int l = 2; l * l <= nn; ++l) {
    if (nn % l == 0) {
      prime_factors.push_back(l);
      while (nn % l == 0) nn /= l;
    }
  }
  if (nn > 1) prime_factors.push_back(nn);
  // frob[j] = X^{q^j} mod f, built by iterating the q-power map.
  UniPoly<FD> x = UniPoly<FD>::x(dom);
  std::vector<UniPoly<FD>> frob;
  frob.push_back(x.mod(m));
  for (int j = 1; j <= n; ++j) frob.push_back(frob.back().powmod(q, m));
  if (frob[static_cast<std::size_t>(n)] != x.mod(m)) return false;
  for (int l : prime_factors) {
    UniPoly<FD> g = UniPoly<FD>::gcd(frob[static_cast<std::size_t>(n / l)] - x, m);
    if (g.degree() != 0) return false;
  }
  return true;
}

// F_p[t]/(modulus): a single-step extension field with explicit modulus.
// Elements are coordinate vectors over F_p of length k, always reduced.
class FqField {
 public:
  using Coord = std::vector<std::uint64_t>;

  FqField(std::uint64_t p, std::vector<std::uint64_t> modulus, std::string gen = "t")
      : base_(p), mod_(std::move(modulus)), gen_(std::move(gen)) {
    if (mod_.size() < 2) throw Error("extension modulus must have degree >= 1");
    for (auto& c : mod_) c %= p;
    if (mod_.back() != 1) throw Error("extension modulus must be monic");
    UniPoly<GFp> m(base_, Coord(mod_.begin(), mod_.end()));
    if (!is_irreducible(m))
      throw Error("extension modulus is not irreducible over GF(" + std::to_string(p) + ")");
  }

  std::uint64_t p() const { return base_.p(); }
  int k() const { return static_cast<int>(mod_.size()) - 1; }
  const std::vector<std::uint64_t>& modulus() const { return mod_; }
  const std::string& generator_symbol() const { return gen_; }

  Int size() const { return int_pow(Int(static_cast<unsigned long>(p())), static_cast<unsigned long>(k())); }

  Coord zero() const { return Coord(static_cast<std::size_t>(k()), 0); }

  Coord one() const {
    Coord c = zero();
    c[0] = 1 % p();
    return c;
  }

  Coord generator() const {
    Coord c = zero();
    if (k() == 1) {
      // t is a root of a linear modulus, i.e. an element of F_p itself.
      c[0] = submod_u64(0, mod_[0], p());
    } else {
      c[1] = 1;
    }
    return c;
  }

  Coord from_int(const Int& v) const {
    Coord c = zero();
    c[0] = mod_u64(v, p());
    return c;
  }

  Coord from_coords(Coord v) const {
    v.resize(static_cast<std::size_t>(k()), 0);
    for (auto& x : v) x %= p();
    return v;
  }

  bool is_zero(const Coord& a) const {
    for (auto v : a)
      if (v) return false;
    return true;
  }

  bool equal(const Coord& a, const Coord& b) const { return a == b; }

  Coord add(const Coord& a, const Coord& b) const {
    Coord r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = addmod_u64(r[i], b[i], p());
    return r;
  }

  Coord sub(const Coord& a, const Coord& b) const {
    Coord r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = submod_u64(r[i], b[i], p());
    return r;
  }

  Coord neg(const Coord& a) const {
    Coord r(a);
    for (auto& v : r) v = v ? p() - v : 0;
    return r;
  }

  Coord mul(const Coord& a, const Coord& b) const {
    const std::uint64_t pp = p();
    const int kk = k();
    std::vector<std::uint64_t> prod(static_cast<std::size_t>(2 * kk - 1), 0);
    for (int i = 0; i < kk; ++i) {
      if (!a[static_cast<std::size_t>(i)]) continue;
      for (int j = 0; j < kk; ++j) {
        auto& slot = prod[static_cast<std::size_t>(i + j)];
        slot = addmod_u64(slot, mulmod_u64(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)], pp), pp);
      }
    }
    // reduce by the monic modulus
    for (int d = 2 * kk - 2; d >= kk; --d) {
      std::uint64_t c = prod[static_cast<std::size_t>(d)];
      if (!c) continue;
      prod[static_cast<std::size_t>(d)] = 0;
      for (int j = 0; j < kk; ++j) {
        auto& slot = prod[static_cast<std::size_t>(d - kk + j)];
        slot = submod_u64(slot, mulmod_u64(c, mod_[static_cast<std::size_t>(j)], pp), pp);
      }
    }
    prod.resize(static_cast<std::size_t>(kk));
    return prod;
  }

  Coord inv(const Coord& a) const {
    if (is_zero(a)) throw Error("division by zero in " + name());
    // extended Euclid over F_p[t]
    UniPoly<GFp> r0(base_, Coord(mod_.begin(), mod_.end()));
    UniPoly<GFp> r1(base_, a);
    UniPoly<GFp> s0 = UniPoly<GFp>::zero(base_);
    UniPoly<GFp> s1 = UniPoly<GFp>::constant(base_, 1);
    while (r1.degree() > 0) {
      auto [q, r] = UniPoly<GFp>::divrem(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      UniPoly<GFp> s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    if (r1.is_zero()) throw Error("inverse of a zero divisor in " + name());
    // r1 is a nonzero constant: inverse = s1 / r1
    UniPoly<GFp> inv = s1.scaled(base_.inv(r1.coeff(0)));
    Coord c = inv.coeffs();
    c.resize(static_cast<std::size_t>(k()), 0);
    return c;
  }

  Coord pow(const Coord& a, const Int& e) const {
    if (e < 0) return inv(pow(a, Int(-e)));
    Coord base = a, acc = one();
    Int ee = e;
    while (ee > 0) {
      if (mpz_odd_p(ee.get_mpz_t())) acc = mul(acc, base);
      base = mul(base, base);
      ee >>= 1;
    }
    return acc;
  }

  Coord frobenius(const Coord& a) const { return pow(a, Int(static_cast<unsigned long>(p()))); }

  // Absolute trace down to F_p: a + a^p + ... + a^{p^{k-1}}.
  std::uint64_t trace(const Coord& a) const {
    Coord acc = a, cur = a;
    for (int i = 1; i < k(); ++i) {
      cur = frobenius(cur);
      acc = add(acc, cur);
    }
    for (std::size_t i = 1; i < acc.size(); ++i)
      if (acc[i]) throw Error("trace did not land in the prime field");
    return acc[0];
  }

  bool in_prime_field(const Coord& a) const {
    for (std::size_t i = 1; i < a.size(); ++i)
      if (a[i]) return false;
    return true;
  }

  // Enumeration order: coordinate vectors by ascending integer value
  // c0 + c1*p + c2*p^2 + ...
  Coord nth_element(const Int& idx) const {
    Coord c = zero();
    Int v = idx;
    for (int i = 0; i < k(); ++i) {
      c[static_cast<std::size_t>(i)] = mod_u64(v, p());
      v /= static_cast<unsigned long>(p());
    }
    return c;
  }

  std::string str(const Coord& a) const {
    std::string out;
    for (int i = k() - 1; i >= 0; --i) {
      std::uint64_t c = a[static_cast<std::size_t>(i)];
      if (!c) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(c);
      } else {
        if (c != 1) out += std::to_string(c) + "*";
        out += gen_;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out.empty() ? "0" : out;
  }

  std::string name() const {
    UniPoly<GFp> m(base_, Coord(mod_.begin(), mod_.end()));
    return "GF(" + std::to_string(p()) + "^" + std::to_string(k()) +
           ";modulus=" + format_unipoly(m, gen_) + ")";
  }

  const GFp& prime_field() const { return base_; }

 private:
  GFp base_;
  std::vector<std::uint64_t> mod_;
  std::string gen_;
};

// The classical moduli for GF(8) and GF(32); otherwise the monic
// irreducible of degree k whose coefficient vector (c0 + c1 p + ...) has the
// least integer value, recorded in output for reproducibility.
inline std::vector<std::uint64_t> default_modulus(std::uint64_t p, int k) {
  if (p == 2 && k == 3) return {1, 0, 1, 1};        // t^3 + t^2 + 1
  if (p == 2 && k == 5) return {1, 0, 1, 1, 1, 1};  // t^5 + t^4 + t^3 + t^2 + 1
  GFp base(p);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(k) + 1, 0);
  c.back() = 1;
  for (;;) {
    UniPoly<GFp> f(base, c);
    if (f.degree() == k && is_irreducible(f)) return c;
    // increment the coefficient vector as a base-p counter
    for (int i = 0;; ++i) {
      if (i >= k) throw Error("no irreducible modulus found");  // cannot happen
      if (++c[static_cast<std::size_t>(i)] < p) break;
      c[static_cast<std::size_t>(i)] = 0;
    }
  }
}

inline std::shared_ptr<const FqField> make_fq(std::uint64_t p, int k,
                                              const std::string& gen = "t") {
  return std::make_shared<const FqField>(p, default_modulus(p, k), gen);
}

// Domain facade over a shared FqField.
struct GFq {
  using Elem = FqField::Coord;
  static constexpr bool is_field = true;

  std::shared_ptr<const FqField> F;

  explicit GFq(std::shared_ptr<const FqField> f) : F(std::move(f)) {}

  Elem zero() const { return F->zero(); }
  Elem one() const { return F->one(); }
  bool is_zero(const Elem& a) const { return F->is_zero(a); }
  bool equal(const Elem& a, const Elem& b) const { return F->equal(a, b); }
  Elem add(const Elem& a, const Elem& b) const { return F->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return F->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return F->mul(a, b); }
  Elem neg(const Elem& a) const { return F->neg(a); }
  void add_assign(Elem& a, const Elem& b) const { a = F->add(a, b); }
  void sub_assign(Elem& a, const Elem& b) const { a = F->sub(a, b); }
  void addmul(Elem& a, const Elem& b, const Elem& c) const { a = F->add(a, F->mul(b, c)); }
  bool try_div(Elem& out, const Elem& a, const Elem& b) const {
    if (F->is_zero(b)) return false;
    out = F->mul(a, F->inv(b));
    return true;
  }
  Elem inv(const Elem& a) const { return F->inv(a); }
  Elem pow(const Elem& a, const Int& e) const { return F->pow(a, e); }
  Elem from_int(const Int& v) const { return F->from_int(v); }
  std::string str(const Elem& a) const { return F->str(a); }
  bool same(const GFq& o) const {
    return F == o.F || (F->p() == o.F->p() && F->modulus() == o.F->modulus());
  }
  std::string name() const { return F->name(); }
  Int characteristic() const { return Int(static_cast<unsigned long>(F->p())); }
  Int field_size() const { return F->size(); }
  Elem random_elem(Rng& rng) const {
    Elem c = F->zero();
    for (auto& v : c) v = rng.below(F->p());
    return c;
  }
  std::optional<std::string> generator_symbol() const { return F->generator_symbol(); }
  Elem generator() const { return F->generator(); }
  Elem nth_element(const Int& idx) const { return F->nth_element(idx); }
};

}  // namespace tforge

#endif
