// Construction of the X-form gate generators and their spectral-parameter
// matrices. A generator M on V^{j1} (x) V^{j2} is fixed by one phase per
// basis label pair,
//
//   M[(a,alpha), (b,beta)] = exp(-i phi_{a,alpha}) delta_{b,-a} delta_{beta,-alpha},
//
// and exponentiates to the one-parameter family
//
//   R(theta) = cos(theta/2) I - i sin(theta/2) M.
//
// M is an involution exactly when the phases are antisymmetric under
// (a,alpha) -> (-a,-alpha); the additive tables produced by make_phase_table
// also satisfy the pair of mixed-label conditions that make the adjacent-site
// commutators (and hence the braid relation for R) hold.
#pragma once

#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <utility>

#include "ybx/halfint.hpp"
#include "ybx/matrix.hpp"

namespace ybx {

/// Wrap an angle into (-pi, pi].
inline double wrap_angle(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(x, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

/// Row-major position of |a,alpha> with both labels descending, so the first
/// basis state is |j1, j2> and the last is |-j1, -j2>.
inline std::size_t basis_index(HalfInt j1, HalfInt j2, HalfInt a, HalfInt alpha) {
  require_magnetic(j1, a, "basis_index");
  require_magnetic(j2, alpha, "basis_index");
  const std::size_t row = static_cast<std::size_t>((j1.twice - a.twice) / 2);
  const std::size_t col = static_cast<std::size_t>((j2.twice - alpha.twice) / 2);
  return row * multiplicity(j2) + col;
}

/// Complete assignment of one phase (radians) to every label pair (a, alpha).
class PhaseTable {
 public:
  using Key = std::pair<int, int>;  // (2a, 2alpha)

  PhaseTable(HalfInt j1, HalfInt j2, std::map<Key, double> phi)
      : j1_(j1), j2_(j2), phi_(std::move(phi)) {
    require_spin(j1, "PhaseTable");
    require_spin(j2, "PhaseTable");
    for (HalfInt a : magnetic_labels(j1_))
      for (HalfInt alpha : magnetic_labels(j2_))
        if (!phi_.count({a.twice, alpha.twice}))
          throw std::invalid_argument("PhaseTable: missing phase for (a=" + a.str() +
                                      ", alpha=" + alpha.str() + ")");
    if (phi_.size() != multiplicity(j1_) * multiplicity(j2_))
      throw std::invalid_argument("PhaseTable: extraneous label pairs present");
  }

  /// Build from a flat list in basis_index order.
  static PhaseTable from_values(HalfInt j1, HalfInt j2, const std::vector<double>& values) {
    if (values.size() != multiplicity(j1) * multiplicity(j2))
      throw std::invalid_argument("PhaseTable: expected " +
                                  std::to_string(multiplicity(j1) * multiplicity(j2)) +
                                  " phases, got " + std::to_string(values.size()));
    std::map<Key, double> phi;
    for (HalfInt a : magnetic_labels(j1))
      for (HalfInt alpha : magnetic_labels(j2))
        phi[{a.twice, alpha.twice}] = values[basis_index(j1, j2, a, alpha)];
    return PhaseTable(j1, j2, std::move(phi));
  }

  HalfInt j1() const { return j1_; }
  HalfInt j2() const { return j2_; }
  std::size_t dimension() const { return multiplicity(j1_) * multiplicity(j2_); }

  double phase(HalfInt a, HalfInt alpha) const {
    auto it = phi_.find({a.twice, alpha.twice});
    if (it == phi_.end())
      throw std::invalid_argument("PhaseTable: no phase for (a=" + a.str() +
                                  ", alpha=" + alpha.str() + ")");
    return it->second;
  }

  PhaseTable with_phase(HalfInt a, HalfInt alpha, double value) const {
    auto phi = phi_;
    phi.at({a.twice, alpha.twice}) = value;
    return PhaseTable(j1_, j2_, std::move(phi));
  }

 private:
  HalfInt j1_, j2_;
  std::map<Key, double> phi_;
};

/// Residuals (mod 2pi) of the three families of phase constraints.
struct PhaseTableReport {
  double antisymmetry = 0.0;  // phi_{a,alpha} + phi_{-a,-alpha}
  double row_condition = 0.0;  // phi_{a,alpha} + phi_{-a,alpha} independent of a
  double column_condition = 0.0;  // phi_{a,alpha} + phi_{a,-alpha} independent of alpha

  double max_residual() const {
    return std::max({antisymmetry, row_condition, column_condition});
  }
  bool ok(double tol = 1e-9) const { return max_residual() <= tol; }
};

inline PhaseTableReport validate_phase_table(const PhaseTable& t) {
  PhaseTableReport rep;
  const auto as = magnetic_labels(t.j1());
  const auto alphas = magnetic_labels(t.j2());
  for (HalfInt a : as)
    for (HalfInt alpha : alphas)
      rep.antisymmetry = std::max(
          rep.antisymmetry, std::abs(wrap_angle(t.phase(a, alpha) + t.phase(-a, -alpha))));
  for (HalfInt alpha : alphas) {
    const double ref = t.phase(as.front(), alpha) + t.phase(-as.front(), alpha);
    for (HalfInt a : as)
      rep.row_condition = std::max(
          rep.row_condition,
          std::abs(wrap_angle(t.phase(a, alpha) + t.phase(-a, alpha) - ref)));
  }
  for (HalfInt a : as) {
    const double ref = t.phase(a, alphas.front()) + t.phase(a, -alphas.front());
    for (HalfInt alpha : alphas)
      rep.column_condition = std::max(
          rep.column_condition,
          std::abs(wrap_angle(t.phase(a, alpha) + t.phase(a, -alpha) - ref)));
  }
  return rep;
}

/// Additive construction phi_{a,alpha} = f_a + g_alpha with f and g extended
/// oddly (f_{-a} = -f_a, f_0 = 0). Satisfies every table constraint by
/// construction; f and g must cover all strictly positive labels.
inline PhaseTable make_phase_table(HalfInt j1, HalfInt j2,
                                   const std::map<HalfInt, double>& f,
                                   const std::map<HalfInt, double>& g) {
  require_spin(j1, "make_phase_table");
  require_spin(j2, "make_phase_table");
  auto odd_lookup = [](const std::map<HalfInt, double>& table, HalfInt label,
                       const char* name) {
    if (label.twice == 0) return 0.0;
    const HalfInt key = label.twice > 0 ? label : -label;
    auto it = table.find(key);
    if (it == table.end())
      throw std::invalid_argument(std::string("make_phase_table: table ") + name +
                                  " missing entry for label " + key.str());
    return label.twice > 0 ? it->second : -it->second;
  };
  std::map<PhaseTable::Key, double> phi;
  for (HalfInt a : magnetic_labels(j1))
    for (HalfInt alpha : magnetic_labels(j2))
      phi[{a.twice, alpha.twice}] = odd_lookup(f, a, "f") + odd_lookup(g, alpha, "g");
  return PhaseTable(j1, j2, std::move(phi));
}

/// An X-form involution together with the table it came from.
struct XFormM {
  ComplexMatrix matrix;
  PhaseTable source;
  std::string ordering = "a-descending,alpha-descending";
};

/// A spectral-parameter gate R(theta) = cos(theta/2) I - i sin(theta/2) M.
struct RMatrix {
  ComplexMatrix matrix;
  double theta = 0.0;
  XFormM source;
};

namespace detail {

inline ComplexMatrix xform_matrix(const PhaseTable& t, bool swapped) {
  const HalfInt jr = swapped ? t.j2() : t.j1();
  const HalfInt jc = swapped ? t.j1() : t.j2();
  ComplexMatrix m(t.dimension(), t.dimension());
  for (HalfInt a : magnetic_labels(t.j1()))
    for (HalfInt alpha : magnetic_labels(t.j2())) {
      const cplx value = std::exp(cplx(0.0, -t.phase(a, alpha)));
      if (swapped)
        m(basis_index(jr, jc, alpha, a), basis_index(jr, jc, -alpha, -a)) = value;
      else
        m(basis_index(jr, jc, a, alpha), basis_index(jr, jc, -a, -alpha)) = value;
    }
  return m;
}

inline void require_valid_table(const PhaseTable& t, const char* who) {
  const PhaseTableReport rep = validate_phase_table(t);
  if (!rep.ok())
    throw std::invalid_argument(
        std::string(who) + ": phase table violates constraints (antisymmetry " +
        std::to_string(rep.antisymmetry) + ", row " + std::to_string(rep.row_condition) +
        ", column " + std::to_string(rep.column_condition) + ")");
}

}  // namespace detail

/// M on V^{j1} (x) V^{j2}. The table must pass validate_phase_table.
inline XFormM build_m(const PhaseTable& t) {
  detail::require_valid_table(t, "build_m");
  return XFormM{detail::xform_matrix(t, false), t};
}

/// As build_m but without the constraint gate; the result need not be an
/// involution or Hermitian. Exists for deliberately broken diagnostics runs.
inline XFormM build_m_unchecked(const PhaseTable& t) {
  return XFormM{detail::xform_matrix(t, false), t};
}

/// The partner matrix on V^{j2} (x) V^{j1}; entries are transported by
/// swapping the label roles, M'[(alpha,a),(beta,b)] = M[(a,alpha),(b,beta)].
inline XFormM build_m_partner(const PhaseTable& t) {
  detail::require_valid_table(t, "build_m_partner");
  return XFormM{detail::xform_matrix(t, true), t};
}

inline XFormM build_m_partner_unchecked(const PhaseTable& t) {
  return XFormM{detail::xform_matrix(t, true), t};
}

inline RMatrix build_r(const XFormM& m, double theta) {
  const std::size_t n = m.matrix.rows();
  ComplexMatrix r = ComplexMatrix::identity(n);
  r *= cplx(std::cos(theta / 2.0), 0.0);
  r += cplx(0.0, -std::sin(theta / 2.0)) * m.matrix;
  return RMatrix{std::move(r), theta, m};
}

// ---------------------------------------------------------------------------
// The three concrete families.

/// j1 = j2 = 1/2: phi_{1/2,1/2} = phi + pi/2, phi_{1/2,-1/2} = 0.
inline PhaseTable family_4x4(double phi) {
  const double half = (phi + std::numbers::pi / 2.0) / 2.0;
  return make_phase_table(HalfInt(1), HalfInt(1), {{HalfInt(1), half}},
                          {{HalfInt(1), half}});
}

/// j1 = 1, j2 = 1/2: phi_{1,1/2} = phi1, phi_{1,-1/2} = phi2,
/// phi_{0,1/2} = (phi1 - phi2)/2.
inline PhaseTable family_6x6(double phi1, double phi2) {
  return make_phase_table(HalfInt(2), HalfInt(1), {{HalfInt(2), (phi1 + phi2) / 2.0}},
                          {{HalfInt(1), (phi1 - phi2) / 2.0}});
}

/// j1 = 3/2, j2 = 1/2, requiring phi1 + phi4 = phi2 + phi3 (mod 2pi).
/// The table phases are shifted by -pi/2 so the matrix entries carry the
/// conventional i * exp(-i phi_k) prefactors.
inline PhaseTable family_8x8(double phi1, double phi2, double phi3, double phi4) {
  if (std::abs(wrap_angle(phi1 + phi4 - phi2 - phi3)) > 1e-9)
    throw std::invalid_argument(
        "family_8x8: phases must satisfy phi1 + phi4 = phi2 + phi3 (got " +
        std::to_string(phi1) + " + " + std::to_string(phi4) + " != " +
        std::to_string(phi2) + " + " + std::to_string(phi3) + ")");
  constexpr double shift = std::numbers::pi / 2.0;
  return make_phase_table(
      HalfInt(3), HalfInt(1),
      {{HalfInt(3), (phi1 + phi2) / 2.0 - shift}, {HalfInt(1), (phi3 + phi4) / 2.0 - shift}},
      {{HalfInt(1), (phi1 - phi2) / 2.0}});
}

}  // namespace ybx
