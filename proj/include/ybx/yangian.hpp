// Yangian-style generator suite built on the labeled eigenbasis of the 8x8
// gate Hamiltonian: the sl(2) triple {I+, I-, I3}, the second family
// {F+, F-, F3} with its four free weights, relation verifiers, and the
// state-transfer graph the generators induce on the eight eigenstates.
#pragma once

#include <algorithm>
#include <cstdio>

#include "ybx/hamiltonian.hpp"
#include "ybx/matrix.hpp"

namespace ybx {

struct YangianParams {
  cplx alpha{1.0, 0.0};
  cplx beta{1.0, 0.0};
  cplx gamma{1.0, 0.0};
  cplx delta{1.0, 0.0};

  void require_nonzero() const {
    for (const cplx* p : {&alpha, &beta, &gamma, &delta})
      if (std::abs(*p) <= 1e-12)
        throw std::invalid_argument("YangianParams: weights must be nonzero");
  }
};

struct GeneratorSet {
  ComplexMatrix i_plus, i_minus, i_3;
  ComplexMatrix f_plus, f_minus, f_3;

  const ComplexMatrix& by_name(const std::string& name) const {
    if (name == "I+") return i_plus;
    if (name == "I-") return i_minus;
    if (name == "I3") return i_3;
    if (name == "F+") return f_plus;
    if (name == "F-") return f_minus;
    if (name == "F3") return f_3;
    throw std::invalid_argument("GeneratorSet: unknown generator " + name);
  }
};

/// Generator names in the fixed (lexicographic) order used for reports and
/// graph emission.
inline const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"F+", "F-", "F3", "I+", "I-", "I3"};
  return names;
}

namespace detail {

inline ComplexMatrix outer(const PureState& ket, const PureState& bra) {
  const std::size_t n = ket.amplitudes.size();
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = ket.amplitudes[i] * std::conj(bra.amplitudes[j]);
  return m;
}

inline std::vector<cplx> apply(const ComplexMatrix& m, const std::vector<cplx>& v) {
  std::vector<cplx> out(m.rows(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline cplx vdot(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

}  // namespace detail

/// The six generators as written on the eigenbasis. In each energy sector
/// the labels split into the doublets (1,2) and (3,4) for the I family,
/// while the F family hops across them with weights 2a, 2ab (+ sector) and
/// 2g, 2gd (- sector).
inline GeneratorSet build_generators(const LabeledEigenpairs& pairs,
                                     const YangianParams& params = {}) {
  params.require_nonzero();
  using detail::outer;
  const auto& ep = pairs.plus;   // e1+..e4+
  const auto& em = pairs.minus;  // e1-..e4-
  const cplx a = params.alpha, b = params.beta, g = params.gamma, d = params.delta;

  GeneratorSet gen;
  gen.i_plus = outer(ep[0], ep[1]) + outer(ep[2], ep[3]) + outer(em[0], em[1]) +
               outer(em[2], em[3]);
  gen.i_minus = dagger(gen.i_plus);
  gen.i_3 = cplx(0.5, 0.0) *
            (outer(ep[0], ep[0]) + outer(ep[2], ep[2]) + outer(em[0], em[0]) +
             outer(em[2], em[2]) - outer(ep[1], ep[1]) - outer(ep[3], ep[3]) -
             outer(em[1], em[1]) - outer(em[3], em[3]));
  gen.f_plus = 2.0 * a * (outer(ep[0], ep[3]) + b * outer(ep[2], ep[1])) +
               2.0 * g * (outer(em[0], em[3]) + d * outer(em[2], em[1]));
  gen.f_minus = 2.0 * a * (b * outer(ep[3], ep[0]) + outer(ep[1], ep[2])) +
                2.0 * g * (d * outer(em[3], em[0]) + outer(em[1], em[2]));
  gen.f_3 = a * (outer(ep[0], ep[2]) - outer(ep[1], ep[3]) + b * outer(ep[2], ep[0]) -
                 b * outer(ep[3], ep[1])) +
            g * (outer(em[0], em[2]) - outer(em[1], em[3]) + d * outer(em[2], em[0]) -
                 d * outer(em[3], em[1]));
  return gen;
}

/// Named max-entry residuals from one verification suite.
struct RelationReport {
  std::vector<std::pair<std::string, double>> residuals;

  double max_residual() const {
    double m = 0.0;
    for (const auto& [name, r] : residuals) m = std::max(m, r);
    return m;
  }
  bool ok(double tol = 1e-10) const { return max_residual() <= tol; }
};

/// The two sl(2) relations of the I family.
inline RelationReport verify_sl2(const GeneratorSet& g) {
  RelationReport rep;
  const double ladder =
      std::max(max_abs(commutator(g.i_3, g.i_plus) - g.i_plus),
               max_abs(commutator(g.i_3, g.i_minus) + g.i_minus));
  rep.residuals.emplace_back("[I3,I+-] = +-I+-", ladder);
  rep.residuals.emplace_back("[I+,I-] = 2I3",
                             max_abs(commutator(g.i_plus, g.i_minus) - 2.0 * g.i_3));
  return rep;
}

/// The six mixed relations coupling the I and F families.
inline RelationReport verify_mixed(const GeneratorSet& g) {
  RelationReport rep;
  rep.residuals.emplace_back(
      "[I3,F+-] = +-F+-", std::max(max_abs(commutator(g.i_3, g.f_plus) - g.f_plus),
                                   max_abs(commutator(g.i_3, g.f_minus) + g.f_minus)));
  rep.residuals.emplace_back(
      "[F3,I+-] = +-F+-", std::max(max_abs(commutator(g.f_3, g.i_plus) - g.f_plus),
                                   max_abs(commutator(g.f_3, g.i_minus) + g.f_minus)));
  rep.residuals.emplace_back(
      "[I+-,F-+] = +-2F3",
      std::max(max_abs(commutator(g.i_plus, g.f_minus) - 2.0 * g.f_3),
               max_abs(commutator(g.i_minus, g.f_plus) + 2.0 * g.f_3)));
  rep.residuals.emplace_back("[I3,F3] = 0", max_abs(commutator(g.i_3, g.f_3)));
  rep.residuals.emplace_back("[I+,F+] = 0", max_abs(commutator(g.i_plus, g.f_plus)));
  rep.residuals.emplace_back("[I-,F-] = 0", max_abs(commutator(g.i_minus, g.f_minus)));
  return rep;
}

/// The five Serre-type nested-commutator relations of the F family.
inline RelationReport verify_serre(const GeneratorSet& g) {
  auto nested = [](const ComplexMatrix& a, const ComplexMatrix& b,
                   const ComplexMatrix& c) { return commutator(a, commutator(b, c)); };
  RelationReport rep;
  rep.residuals.emplace_back("[F3,[F+,F-]] = 0",
                             max_abs(nested(g.f_3, g.f_plus, g.f_minus)));
  rep.residuals.emplace_back("[F+,[F3,F+]] = 0",
                             max_abs(nested(g.f_plus, g.f_3, g.f_plus)));
  rep.residuals.emplace_back("[F-,[F3,F-]] = 0",
                             max_abs(nested(g.f_minus, g.f_3, g.f_minus)));
  rep.residuals.emplace_back(
      "[F+,[F+,F-]] + 2[F3,[F3,F+]] = 0",
      max_abs(nested(g.f_plus, g.f_plus, g.f_minus) +
              2.0 * nested(g.f_3, g.f_3, g.f_plus)));
  rep.residuals.emplace_back(
      "[F-,[F-,F+]] - 2[F3,[F3,F-]] = 0",
      max_abs(nested(g.f_minus, g.f_minus, g.f_plus) -
              2.0 * nested(g.f_3, g.f_3, g.f_minus)));
  return rep;
}

/// [H, Y] residual for each of the six generators.
inline RelationReport verify_symmetry(const ComplexMatrix& h, const GeneratorSet& g) {
  if (!is_hermitian(h))
    throw std::invalid_argument("verify_symmetry: Hamiltonian is not Hermitian");
  RelationReport rep;
  for (const auto& name : generator_names())
    rep.residuals.emplace_back("[H," + name + "] = 0",
                               max_abs(commutator(h, g.by_name(name))));
  return rep;
}

/// Directed graph of generator action on the eight labeled eigenstates.
/// Node labels are e1p..e4m; an edge (Y, e, e', c) records Y|e> = c|e'>.
struct TransferGraph {
  struct Edge {
    std::string generator;
    std::string source;
    std::string target;
    cplx coeff;
  };
  std::vector<std::string> nodes;  // index-major, + before -
  std::vector<Edge> edges;         // sorted by generator name, then source node
};

/// Node labels in their canonical order e1p, e1m, e2p, e2m, ...
inline std::vector<std::string> transfer_graph_nodes() {
  std::vector<std::string> nodes;
  for (int i = 1; i <= 4; ++i)
    for (char sign : {'p', 'm'})
      nodes.push_back("e" + std::to_string(i) + sign);
  return nodes;
}

/// Act every generator on every eigenstate and classify the image: zero
/// vector (no edge), or a single eigenstate up to tol (one edge, possibly a
/// self-loop). An image overlapping several eigenstates signals that the
/// generators and eigenpairs do not belong together.
inline TransferGraph transfer_graph(const GeneratorSet& g, const LabeledEigenpairs& pairs,
                                    double tol = 1e-9) {
  if (tol <= 0.0) throw std::invalid_argument("transfer_graph: tol must be positive");
  TransferGraph graph;
  graph.nodes = transfer_graph_nodes();

  std::vector<const PureState*> states;  // in node order
  for (std::size_t i = 0; i < 4; ++i) {
    states.push_back(&pairs.plus[i]);
    states.push_back(&pairs.minus[i]);
  }

  for (const auto& name : generator_names()) {
    const ComplexMatrix& y = g.by_name(name);
    for (std::size_t s = 0; s < states.size(); ++s) {
      const std::vector<cplx> image = detail::apply(y, states[s]->amplitudes);
      double norm2 = 0.0;
      for (const cplx& c : image) norm2 += std::norm(c);
      if (std::sqrt(norm2) < tol) continue;

      std::size_t hits = 0, target = 0;
      cplx coeff = 0.0;
      for (std::size_t t = 0; t < states.size(); ++t) {
        const cplx overlap = detail::vdot(states[t]->amplitudes, image);
        if (std::abs(overlap) > tol) {
          ++hits;
          target = t;
          coeff = overlap;
        }
      }
      if (hits != 1)
        throw std::runtime_error("transfer_graph: image of " + graph.nodes[s] +
                                 " under " + name + " overlaps " + std::to_string(hits) +
                                 " eigenstates; generators and eigenpairs mismatch");
      double residual2 = 0.0;
      for (std::size_t i = 0; i < image.size(); ++i)
        residual2 += std::norm(image[i] - coeff * states[target]->amplitudes[i]);
      if (std::sqrt(residual2) > tol)
        throw std::runtime_error("transfer_graph: image of " + graph.nodes[s] +
                                 " under " + name + " is not proportional to " +
                                 graph.nodes[target]);
      if (graph.nodes[s].back() != graph.nodes[target].back())
        throw std::runtime_error("transfer_graph: edge " + graph.nodes[s] + " -> " +
                                 graph.nodes[target] + " crosses energy sectors");
      graph.edges.push_back({name, graph.nodes[s], graph.nodes[target], coeff});
    }
  }
  return graph;
}

/// Deterministic plain-text rendering (DOT syntax): node statements in
/// canonical order, then one edge line per action with the generator and the
/// coefficient (real/imag, six decimals) as label.
inline std::string emit_dot(const TransferGraph& graph) {
  std::string out;
  out += "digraph transfer_graph {\n";
  out += "  // edges derived from generator action on the labeled eigenbasis\n";
  for (const auto& node : graph.nodes) out += "  " + node + ";\n";
  char buf[128];
  for (const auto& e : graph.edges) {
    std::snprintf(buf, sizeof(buf), "  %s -> %s [label=\"%s %.6f%+.6fi\"];\n",
                  e.source.c_str(), e.target.c_str(), e.generator.c_str(),
                  e.coeff.real(), e.coeff.imag());
    out += buf;
  }
  out += "}\n";
  return out;
}

}  // namespace ybx
