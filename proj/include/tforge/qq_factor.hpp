#ifndef TFORGE_QQ_FACTOR_HPP
#define TFORGE_QQ_FACTOR_HPP

#include <optional>
#include <vector>

#include "tforge/finite_field.hpp"
#include "tforge/unipoly.hpp"

namespace tforge {

// Confined irreducibility testing over QQ: rational root test plus reduction
// mod a fixed list of primes retaining the degree. A full factorization
// engine is out of scope; callers treat `undecided` as "keep searching" or
// reject the case.
enum class QQIrred { irreducible, reducible, undecided };

namespace detail {

struct Factored {
  std::vector<std::pair<Int, int>> primes;
  bool complete = true;
};

inline Factored trial_factor(Int v) {
  Factored f;
  if (v < 0) v = -v;
  if (v == 0) {
    f.complete = false;
    return f;
  }
  for (Int p(2); p * p <= v && p < 1000000; p = p == 2 ? Int(3) : p + 2) {
    if (v % p == 0) {
      int e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      f.primes.emplace_back(p, e);
    }
  }
  if (v > 1) {
    if (mpz_probab_prime_p(v.get_mpz_t(), 32)) {
      f.primes.emplace_back(v, 1);
    } else {
      f.complete = false;
    }
  }
  return f;
}

inline bool all_divisors(const Factored& f, std::vector<Int>& out, std::size_t cap = 20000) {
  out = {Int(1)};
  for (const auto& [p, e] : f.primes) {
    std::size_t base = out.size();
    Int pe(1);
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base; ++j) {
        out.push_back(out[j] * pe);
        if (out.size() > cap) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// Integer polynomial content-normalized from a rational one.
inline std::vector<Int> integer_coefficients(const UniPoly<QQ>& f) {
  Int lcm(1);
  for (const auto& c : f.coeffs()) {
    Int den = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / g * den;
  }
  std::vector<Int> out;
  Int content(0);
  for (const auto& c : f.coeffs()) {
    Rat scaled = c * Rat(lcm);
    out.push_back(scaled.get_num());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (content > 1)
    for (auto& c : out) c /= content;
  return out;
}

inline QQIrred qq_irreducible(const UniPoly<QQ>& f) {
  const int n = f.degree();
  if (n < 1) return QQIrred::reducible;
  if (n == 1) return QQIrred::irreducible;
  std::vector<Int> c = integer_coefficients(f);

  bool root_test_complete = true;
  if (c.front() == 0) return QQIrred::reducible;  // root at 0
  detail::Factored f0 = detail::trial_factor(c.front());
  detail::Factored fn = detail::trial_factor(c.back());
  std::vector<Int> num_divs, den_divs;
  bool num_ok = detail::all_divisors(f0, num_divs);
  bool den_ok = detail::all_divisors(fn, den_divs);
  root_test_complete = f0.complete && fn.complete && num_ok && den_ok;
  auto eval_at = [&](const Rat& r) {
    Rat acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * r + Rat(c[i]);
    return acc;
  };
  for (const Int& num : num_divs) {
    for (const Int& den : den_divs) {
      for (int sign : {1, -1}) {
        Rat r(sign * num, den);
        r.canonicalize();
        if (eval_at(r) == 0) return QQIrred::reducible;
      }
    }
  }
  if (n <= 3 && root_test_complete) return QQIrred::irreducible;

  for (std::uint64_t p : {2ull,  3ull,  5ull,  7ull,  11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull, 41ull, 43ull, 47ull, 53ull, 59ull, 61ull,
                          67ull, 71ull, 73ull, 79ull, 83ull, 89ull, 97ull}) {
    if (mod_u64(c.back(), p) == 0) continue;  // degree must be retained
    GFp fp(p);
    std::vector<std::uint64_t> red;
    red.reserve(c.size());
    for (const Int& v : c) red.push_back(mod_u64(v, p));
    UniPoly<GFp> fmod(fp, std::move(red));
    if (is_irreducible(fmod)) return QQIrred::irreducible;
  }
  return QQIrred::undecided;
}

}  // namespace tforge

#endif
