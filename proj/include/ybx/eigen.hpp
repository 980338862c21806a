// Hermitian eigensolver (cyclic Jacobi with complex rotations) plus the
// spectral helpers derived from it: PSD square root and trace norm.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ybx/matrix.hpp"

namespace ybx {

/// Eigenvalues (ascending) and matching orthonormal eigenvector columns of a
/// Hermitian matrix.
struct EigenSystem {
  std::vector<double> values;
  ComplexMatrix vectors;  // column k pairs with values[k]
};

namespace detail {

inline double max_offdiag(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t p = 0; p + 1 < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.rows(); ++q) m = std::max(m, std::abs(a(p, q)));
  return m;
}

// One unitary Jacobi rotation annihilating the (p,q) entry of the Hermitian
// working matrix. With a_pq = r*u (r = |a_pq|, |u| = 1) the 2x2 transform is
//   J = [ c      s*u ]
//       [-s*u~   c   ]        (u~ = conj(u))
// and t = s/c solves t^2 + 2*tau*t - 1 = 0, tau = (a_qq - a_pp) / (2r),
// taking the smaller root so rotation angles stay below pi/4.
inline void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p,
                          std::size_t q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r < 1e-18) return;
  const cplx u = apq / r;
  const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx su = s * u;
  const cplx su_conj = s * std::conj(u);

  const std::size_t n = a.rows();
  // a <- a * J
  for (std::size_t k = 0; k < n; ++k) {
    const cplx akp = a(k, p), akq = a(k, q);
    a(k, p) = c * akp - su_conj * akq;
    a(k, q) = su * akp + c * akq;
  }
  // a <- J^dagger * a
  for (std::size_t k = 0; k < n; ++k) {
    const cplx apk = a(p, k), aqk = a(q, k);
    a(p, k) = c * apk - su * aqk;
    a(q, k) = su_conj * apk + c * aqk;
  }
  // exact zero on the annihilated pair; diagonal stays real
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = cplx(a(p, p).real(), 0.0);
  a(q, q) = cplx(a(q, q).real(), 0.0);
  // v <- v * J
  for (std::size_t k = 0; k < n; ++k) {
    const cplx vkp = v(k, p), vkq = v(k, q);
    v(k, p) = c * vkp - su_conj * vkq;
    v(k, q) = su * vkp + c * vkq;
  }
}

}  // namespace detail

/// Diagonalize a Hermitian matrix by cyclic Jacobi sweeps.
/// Sweeps run until the largest off-diagonal magnitude drops to 1e-13,
/// with a hard cap of 100 sweeps.
inline EigenSystem hermitian_eig(const ComplexMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("hermitian_eig: matrix is " + a.shape() + ", not square");
  if (hermiticity_residual(a) > 1e-10)
    throw std::invalid_argument("hermitian_eig: input is not Hermitian (residual " +
                                std::to_string(hermiticity_residual(a)) + ")");
  const std::size_t n = a.rows();

  // work on the Hermitian average so stray rounding asymmetry cannot bias sweeps
  ComplexMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      w(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  constexpr double kOffTol = 1e-13;
  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (detail::max_offdiag(w) > kOffTol) {
    if (++sweep > kMaxSweeps)
      throw std::runtime_error("hermitian_eig: no convergence in " +
                               std::to_string(kMaxSweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) detail::jacobi_rotate(w, v, p, q);
  }

  // ascending eigenvalues, ties kept in first-encountered column order
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t i, std::size_t j) { return w(i, i).real() < w(j, j).real(); });

  EigenSystem es;
  es.values.resize(n);
  es.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    es.values[k] = w(perm[k], perm[k]).real();
    for (std::size_t i = 0; i < n; ++i) es.vectors(i, k) = v(i, perm[k]);
  }
  return es;
}

/// Hermitian PSD square root via the eigensolver. Eigenvalues in
/// [-1e-10, 0) are treated as rounding noise and clamped to zero.
inline ComplexMatrix sqrt_psd(const ComplexMatrix& a) {
  EigenSystem es = hermitian_eig(a);
  std::vector<cplx> root(es.values.size());
  for (std::size_t k = 0; k < es.values.size(); ++k) {
    double lambda = es.values[k];
    if (lambda < -1e-10)
      throw std::invalid_argument("sqrt_psd: eigenvalue " + std::to_string(lambda) +
                                  " is negative beyond tolerance");
    root[k] = std::sqrt(std::max(lambda, 0.0));
  }
  ComplexMatrix b = es.vectors * ComplexMatrix::diagonal(root) * dagger(es.vectors);
  // symmetrize away rounding
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i; j < b.cols(); ++j) {
      const cplx avg = 0.5 * (b(i, j) + std::conj(b(j, i)));
      b(i, j) = avg;
      b(j, i) = std::conj(avg);
    }
  return b;
}

/// Trace norm of a Hermitian matrix: sum of |eigenvalue|.
inline double trace_norm_hermitian(const ComplexMatrix& a) {
  if (!is_hermitian(a))
    throw std::invalid_argument("trace_norm_hermitian: input is not Hermitian");
  EigenSystem es = hermitian_eig(a);
  double s = 0.0;
  for (double lambda : es.values) s += std::abs(lambda);
  return s;
}

}  // namespace ybx
