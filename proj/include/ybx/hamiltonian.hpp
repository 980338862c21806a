// The 8x8 gate Hamiltonian: conjugate a single-site z generator by the
// three-qubit gate, decompose the result into four commuting pseudo-spin
// blocks with unit field vectors, and hand out the closed-form eigenpairs.
#pragma once

#include <array>
#include <cmath>

#include "ybx/entangle.hpp"
#include "ybx/matrix.hpp"
#include "ybx/xform.hpp"

namespace ybx {

/// H0 = s3 (x) I (x) I on three qubits (first site most significant):
/// diag(+1/2 x4, -1/2 x4).
inline ComplexMatrix build_h0() {
  ComplexMatrix h0(8, 8);
  for (std::size_t i = 0; i < 4; ++i) h0(i, i) = 0.5;
  for (std::size_t i = 4; i < 8; ++i) h0(i, i) = -0.5;
  return h0;
}

/// H = R(theta)^dagger H0 R(theta) for an 8x8 gate.
inline ComplexMatrix conjugate_h(const RMatrix& r) {
  if (r.matrix.rows() != 8 || r.matrix.cols() != 8)
    throw std::invalid_argument("conjugate_h: gate is " + r.matrix.shape() +
                                ", expected 8x8");
  return dagger(r.matrix) * build_h0() * r.matrix;
}

/// The four unit field vectors B_i = (sin t cos phi_i, sin t sin phi_i, cos t)
/// and the basis pairs carrying the pseudo-spin blocks.
struct FieldDecomposition {
  std::array<std::array<double, 3>, 4> b_vectors{};
  // 0-based basis pairs (0,7),(1,6),(2,5),(3,4); pair k spans |k> and |7-k>
  std::array<std::pair<std::size_t, std::size_t>, 4> pair_map{};
};

namespace detail {

inline void require_pair_constraint(const std::array<double, 4>& phis, const char* who) {
  if (std::abs(wrap_angle(phis[0] + phis[3] - phis[1] - phis[2])) > 1e-9)
    throw std::invalid_argument(std::string(who) +
                                ": phases must satisfy phi1 + phi4 = phi2 + phi3");
}

}  // namespace detail

inline FieldDecomposition field_decomposition(double theta,
                                              const std::array<double, 4>& phis) {
  detail::require_pair_constraint(phis, "field_decomposition");
  FieldDecomposition fd;
  for (std::size_t k = 0; k < 4; ++k) {
    fd.b_vectors[k] = {std::sin(theta) * std::cos(phis[k]),
                       std::sin(theta) * std::sin(phis[k]), std::cos(theta)};
    fd.pair_map[k] = {k, 7 - k};
  }
  return fd;
}

/// Sum of B_i . S_i over the four pseudo-spin blocks, with
/// Sx = (S+ + S-)/2 and Sy = (S+ - S-)/(2i).
inline ComplexMatrix reconstruct_field(const FieldDecomposition& fd) {
  ComplexMatrix h(8, 8);
  for (std::size_t k = 0; k < 4; ++k) {
    const auto [p, q] = fd.pair_map[k];
    const auto& b = fd.b_vectors[k];
    // S+ = |p><q| contributes to Sx and Sy; S3 = (|p><p| - |q><q|)/2
    h(p, q) += cplx(b[0] / 2.0, -b[1] / 2.0);
    h(q, p) += cplx(b[0] / 2.0, b[1] / 2.0);
    h(p, p) += b[2] / 2.0;
    h(q, q) -= b[2] / 2.0;
  }
  return h;
}

/// The eight closed-form eigenvectors, each supported on one basis pair:
///   e_i^+ = cos(t/2)|i> + sin(t/2) e^{+i phi_i} |9-i>   (energy +1/2)
///   e_i^- = -sin(t/2) e^{-i phi_i} |i> + cos(t/2) |9-i> (energy -1/2)
/// (1-based kets; i runs 1..4).
struct LabeledEigenpairs {
  std::vector<PureState> plus;   // plus[i] is e_{i+1}^+
  std::vector<PureState> minus;  // minus[i] is e_{i+1}^-
  double energy_plus = 0.5;
  double energy_minus = -0.5;

  const PureState& state(std::size_t i, int sign) const {
    return sign >= 0 ? plus.at(i) : minus.at(i);
  }
};

inline LabeledEigenpairs labeled_eigenpairs(double theta,
                                            const std::array<double, 4>& phis) {
  detail::require_pair_constraint(phis, "labeled_eigenpairs");
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const std::vector<std::size_t> dims{2, 2, 2};
  LabeledEigenpairs pairs;
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<cplx> up(8, cplx(0.0, 0.0));
    up[k] = c;
    up[7 - k] = s * std::exp(cplx(0.0, phis[k]));
    pairs.plus.emplace_back(std::move(up), dims);

    std::vector<cplx> down(8, cplx(0.0, 0.0));
    down[k] = -s * std::exp(cplx(0.0, -phis[k]));
    down[7 - k] = c;
    pairs.minus.emplace_back(std::move(down), dims);
  }
  return pairs;
}

/// Sum over i of |e_i^+><e_i^+| - |e_i^-><e_i^-| as written in the recast
/// form; numerically this equals 2H, not H (the +-1/2 spectrum halves it),
/// and callers report that factor explicitly.
inline ComplexMatrix eigenprojector_recast(const LabeledEigenpairs& pairs) {
  ComplexMatrix sum(8, 8);
  auto add_outer = [&sum](const PureState& psi, double weight) {
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j)
        sum(i, j) += weight * psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
  };
  for (std::size_t k = 0; k < 4; ++k) {
    add_outer(pairs.plus[k], 1.0);
    add_outer(pairs.minus[k], -1.0);
  }
  return sum;
}

}  // namespace ybx
