#ifndef TFORGE_TESTS_ORACLES_HPP
#define TFORGE_TESTS_ORACLES_HPP

// Independent brute-force oracles for the test suites. Everything here
// recomputes results with naive algorithms on naive representations, on
// purpose: none of it shares code with the production arithmetic paths.

#include <map>
#include <vector>

#include "tforge/multipoly.hpp"

namespace tforge::oracle {

using ExpVec = std::vector<unsigned>;
using NaivePoly = std::map<ExpVec, Int>;

inline NaivePoly to_naive(const MultiPoly<ZZ>& p) {
  NaivePoly out;
  for (const auto& t : p.terms()) {
    ExpVec e(static_cast<std::size_t>(p.nvars()));
    for (int v = 0; v < p.nvars(); ++v) e[static_cast<std::size_t>(v)] = t.mono.exponent(v);
    out[e] = t.coef;
  }
  return out;
}

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b, int nvars) {
  NaivePoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      ExpVec e(static_cast<std::size_t>(nvars));
      for (int v = 0; v < nvars; ++v)
        e[static_cast<std::size_t>(v)] = ea[static_cast<std::size_t>(v)] + eb[static_cast<std::size_t>(v)];
      out[e] += ca * cb;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

// prod_{i<j} (x_i - x_j) expanded naively.
inline NaivePoly naive_delta(int n) {
  NaivePoly acc;
  acc[ExpVec(static_cast<std::size_t>(n))] = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      NaivePoly factor;
      ExpVec ei(static_cast<std::size_t>(n)), ej(static_cast<std::size_t>(n));
      ei[static_cast<std::size_t>(i)] = 1;
      ej[static_cast<std::size_t>(j)] = 1;
      factor[ei] = 1;
      factor[ej] = -1;
      acc = naive_mul(acc, factor, n);
    }
  }
  return acc;
}

inline bool naive_equal(const MultiPoly<ZZ>& p, const NaivePoly& q) {
  return to_naive(p) == q;
}

// Newton's identity k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i as an oracle
// for rewriting small power sums in the coefficient symbols a_k = (-1)^k e_k.
// Returns p_k(n) expressed in the a-variables.
inline MultiPoly<ZZ> newton_power_sum_in_a(int n, int k) {
  ZZ z;
  // e_k in a-variables is just (-1)^k a_k for k <= n, else 0
  auto e_of = [&](int j) {
    if (j == 0) return MultiPoly<ZZ>::constant(z, n, Int(1));
    if (j > n) return MultiPoly<ZZ>::zero(z, n);
    MultiPoly<ZZ> aj = MultiPoly<ZZ>::variable(z, n, j - 1);
    return j % 2 ? -aj : aj;
  };
  std::vector<MultiPoly<ZZ>> p;  // p[0] unused
  p.push_back(MultiPoly<ZZ>::zero(z, n));
  for (int m = 1; m <= k; ++m) {
    // p_m = sum_{i=1}^{m-1} (-1)^{i-1} e_i p_{m-i} + (-1)^{m-1} m e_m
    MultiPoly<ZZ> acc = MultiPoly<ZZ>::zero(z, n);
    for (int i = 1; i < m; ++i) {
      MultiPoly<ZZ> term = e_of(i) * p[static_cast<std::size_t>(m - i)];
      acc = i % 2 ? acc + term : acc - term;
    }
    MultiPoly<ZZ> last = e_of(m).scaled(Int(m));
    acc = m % 2 ? acc + last : acc - last;
    p.push_back(acc);
  }
  return p[static_cast<std::size_t>(k)];
}

}  // namespace tforge::oracle

#endif
