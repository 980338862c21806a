// Entanglement measures: negativity, Wootters concurrence (pure, mixed, and
// the X-state closed form used as an independent cross-check), the three-
// tangle, and the entangled states generated by the X-form gates.
#pragma once

#include <array>
#include <cmath>

#include "ybx/eigen.hpp"
#include "ybx/matrix.hpp"
#include "ybx/partial.hpp"
#include "ybx/xform.hpp"

namespace ybx {

/// Normalized state vector on a tensor product of subsystems.
struct PureState {
  std::vector<cplx> amplitudes;
  std::vector<std::size_t> dims;

  PureState(std::vector<cplx> amps, std::vector<std::size_t> subsystem_dims)
      : amplitudes(std::move(amps)), dims(std::move(subsystem_dims)) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    if (amplitudes.size() != total)
      throw std::invalid_argument("PureState: " + std::to_string(amplitudes.size()) +
                                  " amplitudes but subsystem dimensions give " +
                                  std::to_string(total));
    double norm2 = 0.0;
    for (const cplx& c : amplitudes) norm2 += std::norm(c);
    if (std::abs(norm2 - 1.0) > 1e-10)
      throw std::invalid_argument("PureState: squared norm " + std::to_string(norm2) +
                                  " is not 1");
  }
};

/// Hermitian, unit-trace, positive semidefinite operator with a subsystem split.
struct DensityMatrix {
  ComplexMatrix matrix;
  std::vector<std::size_t> dims;

  DensityMatrix(ComplexMatrix m, std::vector<std::size_t> subsystem_dims)
      : matrix(std::move(m)), dims(std::move(subsystem_dims)) {
    std::size_t total = 1;
    for (std::size_t d : dims) total *= d;
    if (!matrix.is_square() || matrix.rows() != total)
      throw std::invalid_argument("DensityMatrix: matrix is " + matrix.shape() +
                                  " but subsystem dimensions give " +
                                  std::to_string(total));
    if (hermiticity_residual(matrix) > 1e-10)
      throw std::invalid_argument("DensityMatrix: not Hermitian");
    if (std::abs(trace(matrix) - cplx(1.0, 0.0)) > 1e-10)
      throw std::invalid_argument("DensityMatrix: trace is not 1");
    const EigenSystem es = hermitian_eig(matrix);
    if (es.values.front() < -1e-10)
      throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                  std::to_string(es.values.front()));
  }
};

inline DensityMatrix density(const PureState& psi) {
  const std::size_t n = psi.amplitudes.size();
  ComplexMatrix rho(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rho(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
  return DensityMatrix(std::move(rho), psi.dims);
}

/// Reduced state of a pure state on the kept sites.
inline DensityMatrix reduced(const PureState& psi, const std::set<std::size_t>& keep) {
  const DensityMatrix rho = density(psi);
  std::vector<std::size_t> kept_dims;
  for (std::size_t s = 0; s < psi.dims.size(); ++s)
    if (keep.count(s)) kept_dims.push_back(psi.dims[s]);
  return DensityMatrix(partial_trace(rho.matrix, psi.dims, keep), kept_dims);
}

/// States produced by the gate acting on the product basis: state k carries
/// the amplitudes of row k of R(theta), so the first state is the image of
/// the first basis ket.
inline std::vector<PureState> entangle_basis(const RMatrix& r) {
  const std::vector<std::size_t> dims{multiplicity(r.source.source.j1()),
                                      multiplicity(r.source.source.j2())};
  std::vector<PureState> states;
  states.reserve(r.matrix.rows());
  for (std::size_t k = 0; k < r.matrix.rows(); ++k) {
    std::vector<cplx> amps(r.matrix.cols());
    for (std::size_t j = 0; j < r.matrix.cols(); ++j) amps[j] = r.matrix(k, j);
    states.emplace_back(std::move(amps), dims);
  }
  return states;
}

/// Negativity (||rho^{T_B}||_1 - 1) / (d - 1) of a bipartite state, with
/// d the smaller subsystem dimension.
inline double negativity(const DensityMatrix& rho) {
  if (rho.dims.size() != 2)
    throw std::invalid_argument("negativity: need exactly two subsystems, got " +
                                std::to_string(rho.dims.size()));
  const std::size_t d = std::min(rho.dims[0], rho.dims[1]);
  const ComplexMatrix pt = partial_transpose(rho.matrix, rho.dims[0], rho.dims[1]);
  return (trace_norm_hermitian(pt) - 1.0) / (static_cast<double>(d) - 1.0);
}

namespace detail {

inline void require_two_qubits(const std::vector<std::size_t>& dims, const char* who) {
  if (dims.size() != 2 || dims[0] != 2 || dims[1] != 2)
    throw std::invalid_argument(std::string(who) + ": requires a 2x2 subsystem split");
}

inline ComplexMatrix sigma_y_pair() {
  return ComplexMatrix{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
}

inline ComplexMatrix conj_entries(const ComplexMatrix& a) {
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = std::conj(a(i, j));
  return c;
}

}  // namespace detail

/// Two-qubit pure-state concurrence 2|ad - bc|.
inline double concurrence_pure(const PureState& psi) {
  detail::require_two_qubits(psi.dims, "concurrence_pure");
  const auto& c = psi.amplitudes;
  return 2.0 * std::abs(c[0] * c[3] - c[1] * c[2]);
}

/// Wootters concurrence max{0, l1 - l2 - l3 - l4}, with l_i the decreasing
/// square roots of the eigenvalues of sqrt(rho) * rho~ * sqrt(rho) and
/// rho~ = (sy x sy) conj(rho) (sy x sy).
inline double concurrence_mixed(const DensityMatrix& rho) {
  detail::require_two_qubits(rho.dims, "concurrence_mixed");
  const ComplexMatrix yy = detail::sigma_y_pair();
  const ComplexMatrix rho_tilde = yy * detail::conj_entries(rho.matrix) * yy;
  const ComplexMatrix root = sqrt_psd(rho.matrix);
  const EigenSystem es = hermitian_eig(root * rho_tilde * root);
  std::array<double, 4> lambda{};
  for (std::size_t k = 0; k < 4; ++k)
    lambda[k] = std::sqrt(std::max(es.values[3 - k], 0.0));  // descending
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

/// Closed form for X-form density matrices,
/// 2 max{0, |rho_14| - sqrt(rho_22 rho_33), |rho_23| - sqrt(rho_11 rho_44)}.
/// Independent of concurrence_mixed, which it cross-checks.
inline double concurrence_xstate(const DensityMatrix& rho) {
  detail::require_two_qubits(rho.dims, "concurrence_xstate");
  const ComplexMatrix& m = rho.matrix;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j && i + j != 3 && std::abs(m(i, j)) > 1e-10)
        throw std::invalid_argument("concurrence_xstate: entry (" + std::to_string(i) +
                                    "," + std::to_string(j) + ") breaks the X pattern");
  const double inner = std::abs(m(1, 2)) - std::sqrt(m(0, 0).real() * m(3, 3).real());
  const double outer = std::abs(m(0, 3)) - std::sqrt(m(1, 1).real() * m(2, 2).real());
  return 2.0 * std::max({0.0, inner, outer});
}

/// Three-qubit residual tangle 4|d1 - 2 d2 + 4 d3| in the computational
/// basis with the first site most significant.
inline double three_tangle(const PureState& psi) {
  if (psi.dims != std::vector<std::size_t>{2, 2, 2})
    throw std::invalid_argument("three_tangle: requires a 2x2x2 subsystem split");
  const auto& c = psi.amplitudes;  // c[0] = <000|psi>, ..., c[7] = <111|psi>
  const cplx d1 = c[0] * c[0] * c[7] * c[7] + c[1] * c[1] * c[6] * c[6] +
                  c[2] * c[2] * c[5] * c[5] + c[4] * c[4] * c[3] * c[3];
  const cplx d2 = c[0] * c[7] * c[3] * c[4] + c[0] * c[7] * c[5] * c[2] +
                  c[0] * c[7] * c[6] * c[1] + c[3] * c[4] * c[5] * c[2] +
                  c[3] * c[4] * c[6] * c[1] + c[5] * c[2] * c[6] * c[1];
  const cplx d3 = c[0] * c[6] * c[5] * c[3] + c[7] * c[1] * c[2] * c[4];
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

/// Pairwise concurrences (C_AB, C_AC, C_BC) of a three-qubit pure state.
inline std::array<double, 3> pairwise_concurrences(const PureState& psi) {
  if (psi.dims != std::vector<std::size_t>{2, 2, 2})
    throw std::invalid_argument("pairwise_concurrences: requires a 2x2x2 subsystem split");
  return {concurrence_mixed(reduced(psi, {0, 1})),
          concurrence_mixed(reduced(psi, {0, 2})),
          concurrence_mixed(reduced(psi, {1, 2}))};
}

}  // namespace ybx
