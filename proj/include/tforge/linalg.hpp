#ifndef TFORGE_LINALG_HPP
#define TFORGE_LINALG_HPP

#include <utility>
#include <vector>

#include "tforge/poly_domain.hpp"
#include "tforge/unipoly.hpp"

namespace tforge {

template <class D>
using Matrix = std::vector<std::vector<typename D::Elem>>;

template <class D>
Matrix<D> identity_matrix(const D& dom, std::size_t n) {
  Matrix<D> m(n, std::vector<typename D::Elem>(n, dom.zero()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = dom.one();
  return m;
}

template <class D>
Matrix<D> mat_mul(const D& dom, const Matrix<D>& a, const Matrix<D>& b) {
  std::size_t n = a.size(), m = b[0].size(), k = b.size();
  Matrix<D> r(n, std::vector<typename D::Elem>(m, dom.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (dom.is_zero(a[i][l])) continue;
      for (std::size_t j = 0; j < m; ++j) dom.addmul(r[i][j], a[i][l], b[l][j]);
    }
  return r;
}

// Gaussian elimination over a field; destroys its copy of the matrix.
template <class D>
std::size_t mat_rank(const D& dom, Matrix<D> m) {
  static_assert(D::is_field);
  std::size_t rank = 0;
  std::size_t rows = m.size();
  if (!rows) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && dom.is_zero(m[pivot][c])) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    typename D::Elem inv = dom.inv(m[rank][c]);
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = dom.mul(m[rank][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || dom.is_zero(m[i][c])) continue;
      typename D::Elem f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = dom.sub(m[i][j], dom.mul(f, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

template <class D>
typename D::Elem mat_det_field(const D& dom, Matrix<D> m) {
  static_assert(D::is_field);
  std::size_t n = m.size();
  typename D::Elem det = dom.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && dom.is_zero(m[pivot][c])) ++pivot;
    if (pivot == n) return dom.zero();
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = dom.neg(det);
    }
    det = dom.mul(det, m[c][c]);
    typename D::Elem inv = dom.inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (dom.is_zero(m[i][c])) continue;
      typename D::Elem f = dom.mul(m[i][c], inv);
      for (std::size_t j = c; j < n; ++j)
        m[i][j] = dom.sub(m[i][j], dom.mul(f, m[c][j]));
    }
  }
  return det;
}

// Fraction-free (Bareiss) determinant over an integral domain. Every
// division performed is exact; this is the matrix form of the subresultant
// chain when applied to a Sylvester matrix.
template <class D>
typename D::Elem bareiss_det(const D& dom, Matrix<D> m) {
  std::size_t n = m.size();
  if (n == 0) return dom.one();
  typename D::Elem prev = dom.one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && dom.is_zero(m[pivot][k])) ++pivot;
    if (pivot == n) return dom.zero();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        typename D::Elem num =
            dom.sub(dom.mul(m[i][j], m[k][k]), dom.mul(m[i][k], m[k][j]));
        typename D::Elem q = dom.zero();
        if (!dom.try_div(q, num, prev)) throw Error("bareiss: inexact division");
        m[i][j] = std::move(q);
      }
      m[i][k] = dom.zero();
    }
    prev = m[k][k];
  }
  return negate ? dom.neg(m[n - 1][n - 1]) : m[n - 1][n - 1];
}

// Characteristic polynomial det(Y*I - M) of a square matrix over a field,
// computed fraction-free over D[y]. Monic of degree n.
template <class D>
UniPoly<D> charpoly(const D& dom, const Matrix<D>& m) {
  PolyDomain<D> R(dom);
  std::size_t n = m.size();
  Matrix<PolyDomain<D>> ym(n, std::vector<UniPoly<D>>(n, R.zero()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<typename D::Elem> c;
      if (i == j) {
        c = {dom.neg(m[i][j]), dom.one()};
      } else {
        c = {dom.neg(m[i][j])};
      }
      ym[i][j] = UniPoly<D>(dom, std::move(c));
    }
  return bareiss_det(R, std::move(ym));
}

// Companion matrix of a monic polynomial.
template <class D>
Matrix<D> companion_matrix(const UniPoly<D>& f) {
  const D& dom = f.domain();
  if (!f.is_monic()) throw Error("companion matrix requires a monic polynomial");
  std::size_t n = static_cast<std::size_t>(f.degree());
  Matrix<D> m(n, std::vector<typename D::Elem>(n, dom.zero()));
  for (std::size_t i = 1; i < n; ++i) m[i][i - 1] = dom.one();
  for (std::size_t i = 0; i < n; ++i) m[i][n - 1] = dom.neg(f.coeff(static_cast<int>(i)));
  return m;
}

// Evaluate a polynomial at a square matrix (Horner).
template <class D>
Matrix<D> poly_at_matrix(const D& dom, const UniPoly<D>& g, const Matrix<D>& m) {
  std::size_t n = m.size();
  Matrix<D> acc(n, std::vector<typename D::Elem>(n, dom.zero()));
  for (int i = g.degree(); i >= 0; --i) {
    acc = mat_mul(dom, acc, m);
    typename D::Elem c = g.coeff(i);
    for (std::size_t d = 0; d < n; ++d) dom.add_assign(acc[d][d], c);
  }
  return acc;
}

}  // namespace tforge

#endif
