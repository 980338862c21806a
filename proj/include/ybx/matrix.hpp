// Dense row-major complex matrices and the tensor-product operations the
// rest of the library is built on. Everything here is a pure function of
// its inputs; matrices are small (at most a few dozen rows), so no attempt
// is made at blocking or sparsity.
#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybx {

using cplx = std::complex<double>;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, cplx(0.0, 0.0)) {
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("ComplexMatrix: dimensions must be positive");
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> init) {
    rows_ = init.size();
    if (rows_ == 0) throw std::invalid_argument("ComplexMatrix: empty initializer");
    cols_ = init.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_)
        throw std::invalid_argument("ComplexMatrix: ragged initializer rows");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::vector<cplx>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<cplx>& entries() const { return entries_; }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    require_same_shape(o, "operator+=");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }

  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    require_same_shape(o, "operator-=");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }

  ComplexMatrix& operator*=(cplx s) {
    for (auto& e : entries_) e *= s;
    return *this;
  }

 private:
  void require_same_shape(const ComplexMatrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument(std::string(op) + ": shape mismatch " + shape() +
                                  " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> entries_;
};

inline ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
inline ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
inline ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
inline ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matmul: dimension mismatch " + a.shape() + " * " +
                                b.shape());
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  return matmul(a, b);
}

/// Conjugate transpose.
inline ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix d(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d(j, i) = std::conj(a(i, j));
  return d;
}

/// Kronecker product; block (i,j) of the result is a(i,j)*b.
inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0, 0.0)) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

/// Embed a two-site operator at (position, position+1) of a site chain,
/// acting as the identity everywhere else.
inline ComplexMatrix embed_pair(const ComplexMatrix& op,
                                const std::vector<std::size_t>& site_dims,
                                std::size_t position) {
  if (position + 1 >= site_dims.size())
    throw std::invalid_argument("embed_pair: position " + std::to_string(position) +
                                " has no right neighbour in a " +
                                std::to_string(site_dims.size()) + "-site chain");
  const std::size_t pair_dim = site_dims[position] * site_dims[position + 1];
  if (!op.is_square() || op.rows() != pair_dim)
    throw std::invalid_argument("embed_pair: operator is " + op.shape() +
                                " but sites (" + std::to_string(position) + "," +
                                std::to_string(position + 1) + ") span dimension " +
                                std::to_string(pair_dim));
  std::size_t left = 1, right = 1;
  for (std::size_t s = 0; s < position; ++s) left *= site_dims[s];
  for (std::size_t s = position + 2; s < site_dims.size(); ++s) right *= site_dims[s];
  return kron(kron(ComplexMatrix::identity(left), op), ComplexMatrix::identity(right));
}

inline cplx trace(const ComplexMatrix& a) {
  if (!a.is_square())
    throw std::invalid_argument("trace: matrix is " + a.shape() + ", not square");
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// Largest entry magnitude; the residual norm used throughout.
inline double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& e : a.entries()) m = std::max(m, std::abs(e));
  return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return max_abs(a - b);
}

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

inline double hermiticity_residual(const ComplexMatrix& a) {
  return max_abs_diff(a, dagger(a));
}

inline bool is_hermitian(const ComplexMatrix& a, double tol = 1e-10) {
  return a.is_square() && hermiticity_residual(a) <= tol;
}

inline bool all_finite(const ComplexMatrix& a) {
  for (const auto& e : a.entries())
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

}  // namespace ybx
