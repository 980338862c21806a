// Numerical certification of the defining relations on three-site chains:
// commutation of the adjacent-pair generators and both lines of the braid
// relation for the spectral-parameter gates.
#pragma once

#include "ybx/matrix.hpp"
#include "ybx/xform.hpp"

namespace ybx {

struct YbeReport {
  double residual_line1 = 0.0;      // chain V^{j1} V^{j2} V^{j1}
  double residual_line2 = 0.0;      // chain V^{j2} V^{j1} V^{j2}
  double residual_m_comm_121 = 0.0; // [M_12, M'_23] on the first chain
  double residual_m_comm_212 = 0.0; // [M'_12, M_23] on the second chain
  double theta1 = 0.0;
  double theta2 = 0.0;

  double max_residual() const {
    return std::max({residual_line1, residual_line2, residual_m_comm_121,
                     residual_m_comm_212});
  }
};

namespace detail {

struct ChainPair {
  ComplexMatrix op12;  // pair operator embedded at sites (0,1)
  ComplexMatrix op23;  // pair operator embedded at sites (1,2)
};

inline ChainPair embed_chain(const ComplexMatrix& first, const ComplexMatrix& second,
                             std::size_t d_outer, std::size_t d_inner) {
  const std::vector<std::size_t> dims{d_outer, d_inner, d_outer};
  return ChainPair{embed_pair(first, dims, 0), embed_pair(second, dims, 1)};
}

}  // namespace detail

/// Max-entry commutator norms of the adjacent-pair generators on both chains:
/// ||[M_12, M'_23]|| on V^{j1} V^{j2} V^{j1} and ||[M'_12, M_23]|| on the
/// swapped chain. Both vanish exactly when the table obeys its constraints.
inline std::pair<double, double> m_commutation_residuals(const PhaseTable& table) {
  const XFormM m = build_m_unchecked(table);
  const XFormM mp = build_m_partner_unchecked(table);
  const std::size_t d1 = multiplicity(table.j1());
  const std::size_t d2 = multiplicity(table.j2());
  const auto chain1 = detail::embed_chain(m.matrix, mp.matrix, d1, d2);
  const auto chain2 = detail::embed_chain(mp.matrix, m.matrix, d2, d1);
  return {max_abs(commutator(chain1.op12, chain1.op23)),
          max_abs(commutator(chain2.op12, chain2.op23))};
}

/// Residuals of both braid-relation lines,
///   R_12(t1) R_23(t1+t2) R_12(t2)  vs  R_23(t2) R_12(t1+t2) R_23(t1),
/// at the given spectral parameters, plus the generator commutator residuals.
inline YbeReport ybe_residual(const PhaseTable& table, double theta1, double theta2) {
  const XFormM m = build_m_unchecked(table);
  const XFormM mp = build_m_partner_unchecked(table);
  const std::size_t d1 = multiplicity(table.j1());
  const std::size_t d2 = multiplicity(table.j2());

  auto gate = [](const ComplexMatrix& gen, double th) {
    ComplexMatrix r = ComplexMatrix::identity(gen.rows());
    r *= cplx(std::cos(th / 2.0), 0.0);
    r += cplx(0.0, -std::sin(th / 2.0)) * gen;
    return r;
  };
  auto line = [&](const ComplexMatrix& a, const ComplexMatrix& b, std::size_t d_outer,
                  std::size_t d_inner) {
    const std::vector<std::size_t> dims{d_outer, d_inner, d_outer};
    auto r12 = [&](double th) { return embed_pair(gate(a, th), dims, 0); };
    auto r23 = [&](double th) { return embed_pair(gate(b, th), dims, 1); };
    const ComplexMatrix lhs = r12(theta1) * r23(theta1 + theta2) * r12(theta2);
    const ComplexMatrix rhs = r23(theta2) * r12(theta1 + theta2) * r23(theta1);
    return max_abs_diff(lhs, rhs);
  };

  YbeReport rep;
  rep.theta1 = theta1;
  rep.theta2 = theta2;
  rep.residual_line1 = line(m.matrix, mp.matrix, d1, d2);
  rep.residual_line2 = line(mp.matrix, m.matrix, d2, d1);
  const auto comm = m_commutation_residuals(table);
  rep.residual_m_comm_121 = comm.first;
  rep.residual_m_comm_212 = comm.second;
  return rep;
}

}  // namespace ybx
