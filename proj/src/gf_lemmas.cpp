#include "tforge/gf_lemmas.hpp"

#include "tforge/linalg.hpp"

namespace tforge {

namespace {

std::vector<int> prime_factors_of(int n) {
  std::vector<int> out;
  for (int l = 2; l * l <= n; ++l) {
    if (n % l == 0) {
      out.push_back(l);
      while (n % l == 0) n /= l;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// q-th power Frobenius-iterate as an F_p-matrix in the power basis of F.
Matrix<GFp> frobenius_matrix(const FqField& F) {
  GFp base(F.p());
  int n = F.k();
  Matrix<GFp> m(static_cast<std::size_t>(n),
                std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  for (int j = 0; j < n; ++j) {
    FqField::Coord e = F.zero();
    e[static_cast<std::size_t>(j)] = 1;
    FqField::Coord img = F.frobenius(e);
    for (int i = 0; i < n; ++i)
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = img[static_cast<std::size_t>(i)];
  }
  return m;
}

Matrix<GFp> mat_pow(const GFp& dom, Matrix<GFp> base, int e) {
  Matrix<GFp> acc = identity_matrix(dom, base.size());
  while (e) {
    if (e & 1) acc = mat_mul(dom, acc, base);
    e >>= 1;
    if (e) base = mat_mul(dom, base, base);
  }
  return acc;
}

}  // namespace

SubfieldSpanReport subfield_span_codim(std::uint64_t p, int n) {
  SubfieldSpanReport rep;
  rep.p = p;
  rep.n = n;
  if (n < 2) throw Error("subfield_span_codim needs n >= 2");
  Int size = int_pow(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(n));
  if (size > Int(1) << 24) throw Error("subfield_span_codim guard: p^n exceeds 2^24");
  rep.prime_factors = prime_factors_of(n);

  int formula = 1;
  int radical = 1;
  for (int l : rep.prime_factors) {
    formula *= l - 1;
    radical *= l;
  }
  rep.codim_formula = (n / radical) * formula;

  FqField F(p, default_modulus(p, n));
  GFp base(p);

  // Direct enumeration: an element lies in the maximal subfield of index l
  // exactly when frob^{n/l} fixes it.
  std::vector<std::vector<std::uint64_t>> rows;
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    FqField::Coord x = F.nth_element(Int(static_cast<unsigned long>(idx)));
    for (int l : rep.prime_factors) {
      FqField::Coord y = x;
      for (int i = 0; i < n / l; ++i) y = F.frobenius(y);
      if (F.equal(y, x)) {
        rows.push_back(x);
        break;
      }
    }
  }
  rep.codim_bruteforce = n - static_cast<int>(mat_rank(base, rows));

  // Averaging-operator cross-check for l != p: H = (1/l)(Id + F^{n/l} + ... )
  // is a projection whose image is the index-l subfield.
  bool proj_ok = true;
  Matrix<GFp> B = frobenius_matrix(F);
  for (int l : rep.prime_factors) {
    if (static_cast<std::uint64_t>(l) % p == 0) continue;
    Matrix<GFp> M = mat_pow(base, B, n / l);
    std::size_t nn = static_cast<std::size_t>(n);
    Matrix<GFp> H(nn, std::vector<std::uint64_t>(nn, 0));
    Matrix<GFp> cur = identity_matrix(base, nn);
    for (int i = 0; i < l; ++i) {
      for (std::size_t r = 0; r < nn; ++r)
        for (std::size_t c = 0; c < nn; ++c) H[r][c] = base.add(H[r][c], cur[r][c]);
      cur = mat_mul(base, cur, M);
    }
    std::uint64_t linv = base.inv(static_cast<std::uint64_t>(l) % p);
    for (std::size_t r = 0; r < nn; ++r)
      for (std::size_t c = 0; c < nn; ++c) H[r][c] = base.mul(H[r][c], linv);
    // projection onto the fixed space of M, of dimension n/l
    Matrix<GFp> H2 = mat_mul(base, H, H);
    proj_ok = proj_ok && H2 == H;
    proj_ok = proj_ok && mat_rank(base, H) == static_cast<std::size_t>(n / l);
    Matrix<GFp> MH = mat_mul(base, M, H);
    proj_ok = proj_ok && MH == H;
  }
  rep.projector_crosscheck_ok = proj_ok;
  return rep;
}

namespace {

template <class FD>
void vanishing_bound_impl(const FD& K, VanishingBoundReport& rep) {
  const int m = rep.m;
  const int d = rep.d;
  const std::uint64_t q = rep.q;
  const int nv = m + 1;

  // all points of K^{m+1}
  std::vector<std::vector<typename FD::Elem>> points;
  {
    std::vector<Int> idx(static_cast<std::size_t>(nv), Int(0));
    for (;;) {
      std::vector<typename FD::Elem> pt;
      for (const Int& i : idx) pt.push_back(K.nth_element(i));
      points.push_back(std::move(pt));
      int pos = 0;
      while (pos < nv && ++idx[static_cast<std::size_t>(pos)] == Int(static_cast<unsigned long>(q))) {
        idx[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == nv) break;
    }
  }

  // monomial exponent vectors of total degree d
  std::vector<std::vector<int>> monos;
  {
    std::vector<int> e(static_cast<std::size_t>(nv), 0);
    auto rec = [&](auto&& self, int pos, int rest) -> void {
      if (pos == nv - 1) {
        e[static_cast<std::size_t>(pos)] = rest;
        monos.push_back(e);
        return;
      }
      for (int v = 0; v <= rest; ++v) {
        e[static_cast<std::size_t>(pos)] = v;
        self(self, pos + 1, rest - v);
      }
    };
    rec(rec, 0, d);
  }
  rep.monomials = static_cast<int>(monos.size());

  auto eval_mono = [&](const std::vector<int>& e, const std::vector<typename FD::Elem>& pt) {
    typename FD::Elem acc = K.one();
    for (int v = 0; v < nv; ++v)
      for (int i = 0; i < e[static_cast<std::size_t>(v)]; ++i)
        acc = K.mul(acc, pt[static_cast<std::size_t>(v)]);
    return acc;
  };

  if (d < static_cast<int>(q)) {
    // hyperplane normals up to scalar: first nonzero coordinate = 1
    std::vector<std::vector<typename FD::Elem>> normals;
    for (const auto& pt : points) {
      int first = -1;
      for (int v = 0; v < nv; ++v)
        if (!K.is_zero(pt[static_cast<std::size_t>(v)])) {
          first = v;
          break;
        }
      if (first < 0) continue;
      if (!K.equal(pt[static_cast<std::size_t>(first)], K.one())) continue;
      normals.push_back(pt);
    }
    rep.hyperplanes = static_cast<int>(normals.size());
    int min_rank = rep.monomials;
    bool ok = true;
    for (const auto& nrm : normals) {
      Matrix<FD> eval;
      for (const auto& pt : points) {
        typename FD::Elem dot = K.zero();
        for (int v = 0; v < nv; ++v)
          K.add_assign(dot, K.mul(nrm[static_cast<std::size_t>(v)], pt[static_cast<std::size_t>(v)]));
        if (K.is_zero(dot)) continue;  // on the hyperplane
        std::vector<typename FD::Elem> row;
        row.reserve(monos.size());
        for (const auto& e : monos) row.push_back(eval_mono(e, pt));
        eval.push_back(std::move(row));
      }
      int rank = static_cast<int>(mat_rank(K, eval));
      min_rank = std::min(min_rank, rank);
      ok = ok && rank == rep.monomials;
    }
    rep.min_rank = min_rank;
    rep.no_counterexample = ok;
  } else {
    // boundary d >= q: f = x0^{d-q+1} (x0^{q-1} - xm^{q-1}) vanishes exactly
    // off the hyperplane xm = 0
    bool ok = true;
    bool nonzero_somewhere = false;
    for (const auto& pt : points) {
      typename FD::Elem x0 = pt[0], xm = pt[static_cast<std::size_t>(m)];
      typename FD::Elem v = K.one();
      for (int i = 0; i < d - static_cast<int>(q) + 1; ++i) v = K.mul(v, x0);
      typename FD::Elem a = K.one(), b = K.one();
      for (std::uint64_t i = 0; i + 1 < q; ++i) {
        a = K.mul(a, x0);
        b = K.mul(b, xm);
      }
      v = K.mul(v, K.sub(a, b));
      if (!K.is_zero(xm)) {
        ok = ok && K.is_zero(v);
      } else if (!K.is_zero(v)) {
        nonzero_somewhere = true;
      }
    }
    rep.boundary_witness_ok = ok && nonzero_somewhere;
    rep.witness = "x0^" + std::to_string(d - static_cast<int>(q) + 1) + "*(x0^" +
                  std::to_string(q - 1) + " - x" + std::to_string(m) + "^" +
                  std::to_string(q - 1) + ")";
  }
}

}  // namespace

VanishingBoundReport vanishing_bound_witness(std::uint64_t q, int m, int d) {
  if (q > 9 || m > 2 || m < 1 || d > static_cast<int>(q) || d < 1)
    throw Error("vanishing_bound_witness guard: need q <= 9, 1 <= m <= 2, 1 <= d <= q");
  VanishingBoundReport rep;
  rep.q = q;
  rep.m = m;
  rep.d = d;
  if (is_prime_u64(q)) {
    GFp K(q);
    vanishing_bound_impl(K, rep);
  } else {
    std::uint64_t p = 2;
    int k = 0;
    for (std::uint64_t pp : {2ull, 3ull}) {
      std::uint64_t v = pp;
      int kk = 1;
      while (v < q) {
        v *= pp;
        ++kk;
      }
      if (v == q) {
        p = pp;
        k = kk;
        break;
      }
    }
    if (k == 0) throw Error("q is not a prime power <= 9");
    GFq K(make_fq(p, k));
    vanishing_bound_impl(K, rep);
  }
  return rep;
}

}  // namespace tforge
