#include "tforge/covariant.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tforge {

namespace {

// Labels of P^1(F5): position 0 is the point at infinity, position i (1..5)
// is the field value i-1.
constexpr int kInf = -1;

int label_value(int pos) { return pos == 0 ? kInf : pos - 1; }
int label_position(int v) { return v == kInf ? 0 : v + 1; }

int moebius_apply(int a, int b, int c, int d, int z) {
  auto mod5 = [](int x) { return ((x % 5) + 5) % 5; };
  auto inv5 = [&](int x) {
    for (int y = 1; y < 5; ++y)
      if (mod5(x * y) == 1) return y;
    throw Error("not invertible mod 5");
  };
  if (z == kInf) {
    if (mod5(c) == 0) return kInf;
    return mod5(a * inv5(c));
  }
  int den = mod5(c * z + d);
  int num = mod5(a * z + b);
  if (den == 0) return kInf;
  return mod5(num * inv5(den));
}

std::vector<Permutation> all_s6() {
  std::vector<int> v{0, 1, 2, 3, 4, 5};
  std::vector<Permutation> out;
  out.reserve(720);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

OuterAutomorphism::OuterAutomorphism() {
  // H = PGL2(F5) as permutations of the six labels.
  std::set<std::vector<int>> seen;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        for (int d = 0; d < 5; ++d) {
          if (((a * d - b * c) % 5 + 5) % 5 == 0) continue;
          std::vector<int> img(6);
          for (int pos = 0; pos < 6; ++pos)
            img[static_cast<std::size_t>(pos)] =
                label_position(moebius_apply(a, b, c, d, label_value(pos)));
          seen.insert(img);
        }
  for (const auto& img : seen) H_.emplace_back(img);
  if (H_.size() != 120) throw Error("PGL2(F5) enumeration produced " + std::to_string(H_.size()));

  // The pairing M = {{inf,0},{1,4},{2,3}} in label positions: {0,1},{2,5},{3,4}.
  const int block_of[6] = {0, 0, 1, 2, 2, 1};
  auto preserves_pairing = [&](const Permutation& s, bool pointwise) {
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) {
        if (block_of[i] != block_of[j]) continue;
        if (block_of[s(i)] != block_of[s(j)]) return false;
        if (pointwise && block_of[s(i)] != block_of[i]) return false;
      }
    }
    return true;
  };

  std::vector<Permutation> s6 = all_s6();
  for (const Permutation& s : s6) {
    if (preserves_pairing(s, true)) kernel_.push_back(s);
  }
  if (kernel_.size() != 8) throw Error("pairing kernel size " + std::to_string(kernel_.size()));
  for (const Permutation& h : H_)
    if (preserves_pairing(h, false)) N0_.push_back(h);
  if (N0_.size() != 24) throw Error("N0 size " + std::to_string(N0_.size()));

  // Left cosets of H, canonical representative = lex-least member. The
  // identity lies in H, so the identity coset is the lex-least of all and
  // receives index 0 (label 1); then tau(H) = Stab(1) by construction.
  std::map<std::vector<int>, int> coset_of_rep;
  std::vector<Permutation> reps;
  std::vector<int> coset_id(720, -1);
  for (const Permutation& s : s6) {
    std::vector<int> best;
    for (const Permutation& h : H_) {
      std::vector<int> cand = (s * h).images();
      if (best.empty() || cand < best) best = cand;
    }
    auto it = coset_of_rep.find(best);
    int id;
    if (it == coset_of_rep.end()) {
      id = static_cast<int>(reps.size());
      coset_of_rep.emplace(best, id);
      reps.emplace_back(best);
    } else {
      id = it->second;
    }
    coset_id[s.rank()] = id;
  }
  if (reps.size() != 6) throw Error("coset count " + std::to_string(reps.size()));

  tau_table_.assign(720, Permutation::identity(6));
  tau_inv_table_.assign(720, Permutation::identity(6));
  for (const Permutation& g : s6) {
    std::vector<int> img(6);
    for (int i = 0; i < 6; ++i)
      img[static_cast<std::size_t>(i)] = coset_id[(g * reps[static_cast<std::size_t>(i)]).rank()];
    tau_table_[g.rank()] = Permutation(img);
  }
  std::set<std::uint32_t> distinct;
  for (const Permutation& g : s6) distinct.insert(tau_table_[g.rank()].rank());
  if (distinct.size() != 720) throw Error("coset action is not faithful");
  for (const Permutation& g : s6) tau_inv_table_[tau_table_[g.rank()].rank()] = g;

  for (const Permutation& h : H_) {
    if (tau_table_[h.rank()](0) != 0) throw Error("tau(H) does not stabilize 1");
  }
  for (int k = 2; k <= 6; ++k) {
    Permutation t = tau_table_[Permutation::transposition(6, 0, k - 1).rank()];
    std::vector<int> ct = t.cycle_type();
    if (ct != std::vector<int>{2, 2, 2})
      throw Error("tau((1 " + std::to_string(k) + ")) is not a triple transposition");
    tau_transpositions_.push_back(t);
  }
}

Permutation OuterAutomorphism::tau(const Permutation& s) const { return tau_table_[s.rank()]; }

Permutation OuterAutomorphism::tau_inv(const Permutation& s) const {
  return tau_inv_table_[s.rank()];
}

int OuterAutomorphism::rho_sign(const Permutation& s) const {
  const int block_of[6] = {0, 0, 1, 2, 2, 1};
  int img[3] = {-1, -1, -1};
  for (int i = 0; i < 6; ++i) img[block_of[i]] = block_of[s(i)];
  // sign of the induced permutation of the three blocks
  int inversions = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (img[i] > img[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

bool OuterAutomorphism::in_h(const Permutation& s) const {
  return std::find(H_.begin(), H_.end(), s) != H_.end();
}

const OuterAutomorphism& outer_automorphism_tau() {
  static const OuterAutomorphism tau;
  return tau;
}

Covariant build_covariant(const ZPoly& seed, int n, Twist twist, bool sign_type) {
  if (seed.nvars() != n) throw DomainMismatch("seed variable count differs from n");
  Covariant cov;
  cov.n = n;
  cov.twist = twist;
  cov.sign_type = sign_type;

  auto seed_ok = [&](const Permutation& s) {
    ZPoly moved = apply_permutation(seed, s);
    if (sign_type && s.sign() < 0) return moved == -seed;
    return moved == seed;
  };

  if (twist == Twist::none) {
    for (int i = 1; i + 1 < n; ++i) {
      Permutation s = Permutation::transposition(n, i, i + 1);
      if (!seed_ok(s))
        throw InvarianceError("seed is not invariant under the stabilizer: violating " + s.str());
    }
    cov.components.push_back(seed);
    for (int k = 1; k < n; ++k) {
      Permutation s = Permutation::transposition(n, 0, k);
      ZPoly c = apply_permutation(seed, s);
      cov.components.push_back(sign_type ? -c : std::move(c));
    }
  } else {
    if (n != 6) throw Error("twisted covariants live on six variables");
    const OuterAutomorphism& T = outer_automorphism_tau();
    for (const Permutation& h : T.subgroup_h()) {
      if (!seed_ok(h))
        throw InvarianceError("seed is not H-invariant: violating " + h.str());
    }
    cov.components.push_back(seed);
    for (int k = 1; k < n; ++k) {
      Permutation sk = T.tau_inv(Permutation::transposition(n, 0, k));
      ZPoly c = apply_permutation(seed, sk);
      cov.components.push_back(sign_type && sk.sign() < 0 ? -c : std::move(c));
    }
  }
  check_equivariance(cov);
  return cov;
}

void check_equivariance(const Covariant& cov) {
  const OuterAutomorphism* T = cov.twist == Twist::tau ? &outer_automorphism_tau() : nullptr;
  for (int g = 0; g + 1 < cov.n; ++g) {
    Permutation s = Permutation::transposition(cov.n, g, g + 1);
    Permutation pi = T ? T->tau(s) : s;
    for (int i = 0; i < cov.n; ++i) {
      ZPoly lhs = apply_permutation(cov.component(i), s);
      const ZPoly& target = cov.component(pi(i));
      bool ok = cov.sign_type ? (lhs == -target) : (lhs == target);
      if (!ok)
        throw InvarianceError("covariant equivariance fails for " + s.str() + " at component " +
                              std::to_string(i + 1));
    }
  }
}

namespace {

ZZ zdom;

ZPoly var5(int i) { return ZPoly::variable(zdom, 5, i); }
ZPoly var6(int i) { return ZPoly::variable(zdom, 6, i); }

// 1-based difference x_i - x_j.
ZPoly diff5(int i, int j) { return var5(i - 1) - var5(j - 1); }
ZPoly diff6(int i, int j) { return var6(i - 1) - var6(j - 1); }

}  // namespace

const ZPoly& hermite_psi1() {
  static const ZPoly psi1 = [] {
    ZPoly b1 = diff5(1, 2) * diff5(1, 5) * diff5(4, 3) + diff5(1, 3) * diff5(1, 4) * diff5(2, 5);
    ZPoly b2 = diff5(1, 2) * diff5(1, 3) * diff5(5, 4) + diff5(1, 4) * diff5(1, 5) * diff5(2, 3);
    ZPoly b3 = diff5(1, 2) * diff5(1, 4) * diff5(5, 3) + diff5(1, 3) * diff5(1, 5) * diff5(4, 2);
    return b1 * b2 * b3;
  }();
  return psi1;
}

ZPoly omega1(int n) {
  if (n < 3) throw Error("omega1 needs n >= 3");
  ZPoly r = ZPoly::constant(zdom, n, Int(1));
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      r = r * (ZPoly::variable(zdom, n, i - 1) - ZPoly::variable(zdom, n, j - 1));
  return r;
}

const ZPoly& delta5() {
  static const ZPoly d = vandermonde_delta(zdom, 5);
  return d;
}

const ZPoly& delta6() {
  static const ZPoly d = vandermonde_delta(zdom, 6);
  return d;
}

const ZPoly& hermite_psi_tilde1() {
  static const ZPoly pt = hermite_psi1() * omega1(5);
  return pt;
}

const ZPoly& hermite_phi1() {
  static const ZPoly phi = hermite_psi_tilde1() * delta5();
  return phi;
}

const Covariant& hermite_psi_tilde() {
  static const Covariant cov = build_covariant(hermite_psi_tilde1(), 5, Twist::none, true);
  return cov;
}

const Covariant& hermite_phi() {
  static const Covariant cov = build_covariant(hermite_phi1(), 5, Twist::none, false);
  return cov;
}

const ZPoly& joubert_h() {
  // labels (inf,0,1,2,3,4) at positions (1,...,6):
  // h = (x_inf - x_4)(x_1 - x_3)(x_2 - x_0) + (x_0 - x_1)(x_4 - x_2)(x_3 - x_inf)
  static const ZPoly h =
      diff6(1, 6) * diff6(3, 5) * diff6(4, 2) + diff6(2, 3) * diff6(6, 4) * diff6(5, 1);
  return h;
}

const ZPoly& joubert_psi1() {
  static const ZPoly psi = [] {
    const OuterAutomorphism& T = outer_automorphism_tau();
    ZPoly sum = ZPoly::zero(zdom, 6);
    Permutation p = Permutation::identity(6);
    for (int i = 0; i < 5; ++i) {
      sum = sum + apply_permutation(joubert_h(), p);
      p = p * T.eta();
    }
    for (const auto& t : sum.terms()) {
      if (t.coef != 3 && t.coef != -3)
        throw Error("eta orbit sum has a coefficient different from +-3");
    }
    ZPoly third = map_coefficients(sum, zdom, [](const Int& c) { return Int(c / 3); });
    if (third.num_terms() != 20) throw Error("psi1 does not have 20 terms");
    for (const auto& t : third.terms()) {
      if (t.coef != 1 && t.coef != -1) throw Error("psi1 has a coefficient different from +-1");
      if (t.mono.total_degree(6) != 3) throw Error("psi1 has a non-cubic term");
    }
    return third;
  }();
  return psi;
}

const ZPoly& joubert_phi1() {
  static const ZPoly phi = delta6() * joubert_psi1();
  return phi;
}

const Covariant& joubert_psi() {
  static const Covariant cov = build_covariant(joubert_psi1(), 6, Twist::tau, true);
  return cov;
}

const Covariant& joubert_phi() {
  static const Covariant cov = build_covariant(joubert_phi1(), 6, Twist::tau, false);
  return cov;
}

}  // namespace tforge
