// Command-line surface: build gates, run the verification battery, sweep
// entanglement measures into CSV, dump spectra, and emit the transfer graph.
// All output is routed through a single string so a file target and stdout
// are byte-identical; identical configuration and seed give identical bytes.
#pragma once

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybx/eigen.hpp"
#include "ybx/entangle.hpp"
#include "ybx/hamiltonian.hpp"
#include "ybx/random.hpp"
#include "ybx/serialize.hpp"
#include "ybx/xform.hpp"
#include "ybx/yangian.hpp"
#include "ybx/ybe.hpp"

namespace ybx::cli {

struct RunConfig {
  std::string command;
  std::string family = "4x4";
  double theta = 0.0;
  double theta1 = 0.0, theta2 = 0.0;
  bool have_theta12 = false;
  std::vector<double> phases;
  std::vector<double> phases_raw;
  double j1 = 0.0, j2 = 0.0;     // general family spins
  std::vector<double> f, g;      // general family additive tables
  std::string measure = "negativity";
  double start = 0.0, stop = 0.0;
  std::size_t count = 0;
  std::uint64_t seed = 42;
  int trials = 100;
  int h_trials = 20;
  std::vector<double> params{1.0, 1.0, 1.0, 1.0};
  double tol = 1e-9;
  std::string output;  // empty means stdout
  std::string format;
};

namespace detail {

inline HalfInt to_halfint(double j, const char* name) {
  const double doubled = 2.0 * j;
  const long long rounded = std::llround(doubled);
  if (std::abs(doubled - static_cast<double>(rounded)) > 1e-9 || rounded < 1)
    throw std::invalid_argument(std::string(name) + " must be a positive integer or "
                                "half-integer, got " + std::to_string(j));
  return HalfInt(static_cast<int>(rounded));
}

inline std::array<double, 4> four_phases(const std::vector<double>& phases,
                                         const char* who) {
  if (phases.size() != 4)
    throw std::invalid_argument(std::string(who) + ": expected 4 phases, got " +
                                std::to_string(phases.size()));
  return {phases[0], phases[1], phases[2], phases[3]};
}

inline std::pair<HalfInt, HalfInt> family_spins(const RunConfig& cfg) {
  if (cfg.family == "4x4") return {HalfInt(1), HalfInt(1)};
  if (cfg.family == "6x6") return {HalfInt(2), HalfInt(1)};
  if (cfg.family == "8x8") return {HalfInt(3), HalfInt(1)};
  return {to_halfint(cfg.j1, "--j1"), to_halfint(cfg.j2, "--j2")};
}

/// Build the phase table the configuration describes. Raw phases bypass the
/// family constructors (and with them every constraint check).
inline PhaseTable table_from_config(const RunConfig& cfg) {
  const auto [j1, j2] = family_spins(cfg);
  if (!cfg.phases_raw.empty()) return PhaseTable::from_values(j1, j2, cfg.phases_raw);

  if (cfg.family == "4x4") {
    if (cfg.phases.size() != 1)
      throw std::invalid_argument("family 4x4 takes exactly 1 phase");
    return family_4x4(cfg.phases[0]);
  }
  if (cfg.family == "6x6") {
    if (cfg.phases.size() != 2)
      throw std::invalid_argument("family 6x6 takes exactly 2 phases");
    return family_6x6(cfg.phases[0], cfg.phases[1]);
  }
  if (cfg.family == "8x8") {
    const auto p = four_phases(cfg.phases, "family 8x8");
    return family_8x8(p[0], p[1], p[2], p[3]);
  }
  // general: additive tables over the strictly positive labels, descending
  std::map<HalfInt, double> f, g;
  std::size_t k = 0;
  for (HalfInt a : magnetic_labels(j1))
    if (a.twice > 0) {
      if (k >= cfg.f.size())
        throw std::invalid_argument("family general: --f needs one value per positive "
                                    "label of j1 (descending)");
      f[a] = cfg.f[k++];
    }
  if (k != cfg.f.size())
    throw std::invalid_argument("family general: too many --f values");
  k = 0;
  for (HalfInt alpha : magnetic_labels(j2))
    if (alpha.twice > 0) {
      if (k >= cfg.g.size())
        throw std::invalid_argument("family general: --g needs one value per positive "
                                    "label of j2 (descending)");
      g[alpha] = cfg.g[k++];
    }
  if (k != cfg.g.size())
    throw std::invalid_argument("family general: too many --g values");
  return make_phase_table(j1, j2, f, g);
}

inline void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file " + cfg.output);
  file << text;
}

inline std::string json_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// build-r

inline std::string render_matrix_text(const ComplexMatrix& m) {
  std::string text;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) text += "  ";
      text += format_double(m(i, j).real(), 6) + static_cast<std::string>("+") +
              format_double(m(i, j).imag(), 6) + "i";
    }
    text += "\n";
  }
  return text;
}

inline int cmd_build_r(const RunConfig& cfg, std::ostream& out) {
  const PhaseTable table = table_from_config(cfg);
  const RMatrix r = build_r(cfg.phases_raw.empty() ? build_m(table)
                                                   : build_m_unchecked(table),
                            cfg.theta);
  const std::string format = cfg.format.empty() ? "json" : cfg.format;
  if (format == "json")
    emit(cfg, json_dump(matrix_to_json(r.matrix)), out);
  else if (format == "text")
    emit(cfg, render_matrix_text(r.matrix), out);
  else
    throw std::invalid_argument("build-r supports formats json and text");
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string name;
  double residual;
  double tolerance;
  bool pass() const { return residual <= tolerance; }
};

inline std::string render_checks_text(const RunConfig& cfg,
                                      const std::vector<Check>& checks) {
  std::string text = "family " + cfg.family + "  seed " + std::to_string(cfg.seed) +
                     "  trials " + std::to_string(cfg.trials) + "\n";
  std::size_t width = 0;
  for (const Check& c : checks) width = std::max(width, c.name.size());
  std::size_t passed = 0;
  for (const Check& c : checks) {
    std::string line = c.name;
    line.resize(width + 2, ' ');
    std::string residual = format_double(c.residual, 6);
    residual.resize(std::max<std::size_t>(residual.size(), 14), ' ');
    line += residual + "(tol " + format_double(c.tolerance, 6) + ")  " +
            (c.pass() ? "PASS" : "FAIL");
    text += line + "\n";
    passed += c.pass();
  }
  text += std::to_string(passed) + "/" + std::to_string(checks.size()) +
          " checks passed\n";
  return text;
}

inline nlohmann::json checks_json(const RunConfig& cfg, const std::vector<Check>& checks) {
  nlohmann::json items = nlohmann::json::array();
  bool all = true;
  for (const Check& c : checks) {
    items.push_back({{"name", c.name},
                     {"residual", c.residual},
                     {"tolerance", c.tolerance},
                     {"pass", c.pass()}});
    all = all && c.pass();
  }
  return {{"command", "verify"}, {"family", cfg.family}, {"seed", cfg.seed},
          {"trials", cfg.trials}, {"checks", items}, {"all_pass", all}};
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const PhaseTable table = table_from_config(cfg);
  const XFormM m = build_m_unchecked(table);
  const XFormM mp = build_m_partner_unchecked(table);
  const std::size_t n = table.dimension();
  Rng rng(cfg.seed);
  std::vector<Check> checks;

  checks.push_back({"phase table constraints", validate_phase_table(table).max_residual(),
                    1e-9});
  checks.push_back({"generator hermiticity (both orders)",
                    std::max(hermiticity_residual(m.matrix),
                             hermiticity_residual(mp.matrix)),
                    1e-12});
  checks.push_back(
      {"generator involution (both orders)",
       std::max(max_abs_diff(m.matrix * m.matrix, ComplexMatrix::identity(n)),
                max_abs_diff(mp.matrix * mp.matrix, ComplexMatrix::identity(n))),
       1e-12});

  double unitarity = 0.0;
  for (int t = 0; t < std::max(1, cfg.trials / 10); ++t) {
    const double theta = rng.uniform(-2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
    for (const XFormM* gen : {&m, &mp}) {
      const RMatrix r = build_r(*gen, theta);
      unitarity = std::max(unitarity, max_abs_diff(dagger(r.matrix) * r.matrix,
                                                   ComplexMatrix::identity(n)));
    }
  }
  checks.push_back({"gate unitarity over theta draws", unitarity, 1e-12});

  const auto [c121, c212] = m_commutation_residuals(table);
  checks.push_back({"pair commutation on chain 121", c121, 1e-12});
  checks.push_back({"pair commutation on chain 212", c212, 1e-12});

  double line1 = 0.0, line2 = 0.0;
  for (int t = 0; t < cfg.trials; ++t) {
    const YbeReport rep = ybe_residual(table, rng.uniform(-std::numbers::pi, std::numbers::pi),
                                       rng.uniform(-std::numbers::pi, std::numbers::pi));
    line1 = std::max(line1, rep.residual_line1);
    line2 = std::max(line2, rep.residual_line2);
  }
  checks.push_back({"braid relation line 1 (" + std::to_string(cfg.trials) + " trials)",
                    line1, 1e-10});
  checks.push_back({"braid relation line 2 (" + std::to_string(cfg.trials) + " trials)",
                    line2, 1e-10});
  if (cfg.have_theta12) {
    const YbeReport rep = ybe_residual(table, cfg.theta1, cfg.theta2);
    checks.push_back({"braid relation at (theta1, theta2)",
                      std::max(rep.residual_line1, rep.residual_line2), 1e-10});
  }

  if (cfg.family == "8x8" && cfg.phases_raw.empty()) {
    const auto phis = four_phases(cfg.phases, "verify");
    double spectrum = 0.0, field = 0.0, pairs_res = 0.0, recast = 0.0;
    double sl2 = 0.0, mixed = 0.0, serre = 0.0, symmetry = 0.0;
    for (int t = 0; t < cfg.h_trials; ++t) {
      const double theta = rng.uniform(-std::numbers::pi, std::numbers::pi);
      const RMatrix r = build_r(build_m(table), theta);
      const ComplexMatrix h = conjugate_h(r);
      const EigenSystem es = hermitian_eig(h);
      for (std::size_t k = 0; k < 8; ++k)
        spectrum = std::max(spectrum, std::abs(es.values[k] - (k < 4 ? -0.5 : 0.5)));

      field = std::max(field,
                       max_abs_diff(reconstruct_field(field_decomposition(theta, phis)), h));

      const LabeledEigenpairs pairs = labeled_eigenpairs(theta, phis);
      for (std::size_t i = 0; i < 4; ++i)
        for (int sign : {+1, -1}) {
          const PureState& e = pairs.state(i, sign);
          const double energy = sign > 0 ? 0.5 : -0.5;
          for (std::size_t row = 0; row < 8; ++row) {
            cplx he = 0.0;
            for (std::size_t col = 0; col < 8; ++col) he += h(row, col) * e.amplitudes[col];
            pairs_res = std::max(pairs_res, std::abs(he - energy * e.amplitudes[row]));
          }
        }
      recast = std::max(recast, max_abs_diff(eigenprojector_recast(pairs), 2.0 * h));

      const GeneratorSet gen = build_generators(pairs);
      sl2 = std::max(sl2, verify_sl2(gen).max_residual());
      mixed = std::max(mixed, verify_mixed(gen).max_residual());
      serre = std::max(serre, verify_serre(gen).max_residual());
      symmetry = std::max(symmetry, verify_symmetry(h, gen).max_residual());
    }
    checks.push_back({"spectrum is {-1/2 x4, +1/2 x4}", spectrum, 1e-10});
    checks.push_back({"field decomposition reconstructs H", field, 1e-10});
    checks.push_back({"analytic eigenpairs satisfy H|e> = E|e>", pairs_res, 1e-10});
    checks.push_back({"eigenprojector sum equals 2H (factor-2 recast)", recast, 1e-10});
    checks.push_back({"sl2 relations (2)", sl2, 1e-10});
    checks.push_back({"mixed relations (6)", mixed, 1e-10});
    checks.push_back({"serre-type relations (5)", serre, 1e-10});
    checks.push_back({"[H,Y] = 0 for all six generators", symmetry, 1e-10});
  }

  bool all = true;
  for (const Check& c : checks) all = all && c.pass();

  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (format == "text")
    emit(cfg, render_checks_text(cfg, checks), out);
  else if (format == "json")
    emit(cfg, json_dump(checks_json(cfg, checks)), out);
  else
    throw std::invalid_argument("verify supports formats text and json");
  return all ? 0 : 1;
}

// ---------------------------------------------------------------------------
// sweep

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
  if (cfg.count < 2) throw std::invalid_argument("sweep needs --count >= 2");
  if (cfg.stop < cfg.start) throw std::invalid_argument("sweep needs stop >= start");

  std::string csv = "theta,state_label,measure,value,analytic,abs_error\n";
  auto row = [&csv](double theta, const std::string& label, const std::string& measure,
                    double value, double analytic) {
    csv += format_double(theta) + "," + label + "," + measure + "," +
           format_double(value) + "," + format_double(analytic) + "," +
           format_double(std::abs(value - analytic)) + "\n";
  };

  const bool is_gate_family = cfg.family == "4x4" || cfg.family == "6x6";
  if (cfg.measure == "negativity" && !is_gate_family)
    throw std::invalid_argument("negativity sweeps need family 4x4 or 6x6");
  if (cfg.measure == "three-tangle" && cfg.family != "8x8")
    throw std::invalid_argument("three-tangle sweeps need family 8x8");
  if (cfg.measure == "concurrence" && cfg.family != "4x4" && cfg.family != "8x8")
    throw std::invalid_argument("concurrence sweeps need family 4x4 or 8x8");

  const PhaseTable table = table_from_config(cfg);
  for (std::size_t k = 0; k < cfg.count; ++k) {
    const double theta =
        cfg.start + (cfg.stop - cfg.start) * static_cast<double>(k) /
                        static_cast<double>(cfg.count - 1);
    if (cfg.measure == "negativity" || (cfg.measure == "concurrence" && cfg.family == "4x4")) {
      const auto states = entangle_basis(build_r(build_m(table), theta));
      const double analytic = std::abs(std::sin(theta));
      for (std::size_t s = 0; s < states.size(); ++s) {
        const std::string label = "e" + std::to_string(s + 1);
        if (cfg.measure == "negativity")
          row(theta, label, "negativity", negativity(density(states[s])), analytic);
        else
          row(theta, label, "concurrence", concurrence_pure(states[s]), analytic);
      }
    } else {
      const auto phis = four_phases(cfg.phases, "sweep");
      const LabeledEigenpairs pairs = labeled_eigenpairs(theta, phis);
      for (std::size_t i = 0; i < 4; ++i)
        for (int sign : {+1, -1}) {
          const std::string label =
              "e" + std::to_string(i + 1) + (sign > 0 ? "p" : "m");
          const PureState& psi = pairs.state(i, sign);
          if (cfg.measure == "three-tangle") {
            row(theta, label, "three_tangle", three_tangle(psi),
                std::sin(theta) * std::sin(theta));
          } else {
            const auto c = pairwise_concurrences(psi);
            row(theta, label, "C_AB", c[0], 0.0);
            row(theta, label, "C_AC", c[1], 0.0);
            row(theta, label, "C_BC", c[2], 0.0);
          }
        }
    }
  }
  emit(cfg, csv, out);
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum

inline int cmd_spectrum(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family != "8x8")
    throw std::invalid_argument("spectrum needs family 8x8");
  const auto phis = four_phases(cfg.phases, "spectrum");
  const PhaseTable table = family_8x8(phis[0], phis[1], phis[2], phis[3]);
  const ComplexMatrix h = conjugate_h(build_r(build_m(table), cfg.theta));
  const EigenSystem es = hermitian_eig(h);

  const std::string format = cfg.format.empty() ? "text" : cfg.format;
  if (format == "text") {
    std::string text = "eigenvalues (ascending):";
    for (double v : es.values) text += " " + format_double(v, 6);
    text += "\nanalytic energies: -1/2 (x4), +1/2 (x4)\n";
    emit(cfg, text, out);
  } else if (format == "csv") {
    std::string csv = "index,eigenvalue\n";
    for (std::size_t k = 0; k < es.values.size(); ++k)
      csv += std::to_string(k) + "," + format_double(es.values[k]) + "\n";
    emit(cfg, csv, out);
  } else if (format == "json") {
    nlohmann::json j{{"command", "spectrum"},
                     {"theta", cfg.theta},
                     {"phases", cfg.phases},
                     {"eigenvalues", es.values},
                     {"analytic_energies", {{"plus", 0.5}, {"minus", -0.5}}}};
    emit(cfg, json_dump(j), out);
  } else {
    throw std::invalid_argument("spectrum supports formats text, csv and json");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// transfer-graph

inline int cmd_transfer_graph(const RunConfig& cfg, std::ostream& out) {
  if (cfg.family != "8x8")
    throw std::invalid_argument("transfer-graph needs family 8x8");
  const auto phis = four_phases(cfg.phases, "transfer-graph");
  family_8x8(phis[0], phis[1], phis[2], phis[3]);  // constraint gate
  if (cfg.params.size() != 4)
    throw std::invalid_argument("--params takes 4 values (alpha, beta, gamma, delta)");
  const LabeledEigenpairs pairs = labeled_eigenpairs(cfg.theta, phis);
  const YangianParams params{cfg.params[0], cfg.params[1], cfg.params[2], cfg.params[3]};
  const TransferGraph graph =
      transfer_graph(build_generators(pairs, params), pairs, cfg.tol);

  const std::string format = cfg.format.empty() ? "dot" : cfg.format;
  if (format == "dot") {
    emit(cfg, emit_dot(graph), out);
  } else if (format == "json") {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : graph.edges)
      edges.push_back({{"generator", e.generator},
                       {"source", e.source},
                       {"target", e.target},
                       {"coeff", {e.coeff.real(), e.coeff.imag()}}});
    emit(cfg, json_dump({{"command", "transfer-graph"}, {"nodes", graph.nodes},
                         {"edges", edges}}),
         out);
  } else {
    throw std::invalid_argument("transfer-graph supports formats dot and json");
  }
  return 0;
}

}  // namespace detail

/// Parse arguments (without the program name) and run one subcommand.
/// Returns 0 on success, 1 when a verification check fails, 2 on usage or
/// configuration errors.
inline int run(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"X-form braid-gate toolkit: gate construction, relation "
               "verification, entanglement sweeps, transfer graphs"};
  app.require_subcommand(1);

  auto add_family = [&cfg](CLI::App* sub, bool with_general) {
    std::vector<std::string> families{"4x4", "6x6", "8x8"};
    if (with_general) families.push_back("general");
    sub->add_option("--family", cfg.family, "gate family")
        ->check(CLI::IsMember(families));
    sub->add_option("--phases", cfg.phases, "family phase parameters")
        ->delimiter(',');
    if (with_general) {
      sub->add_option("--j1", cfg.j1, "first spin (general family)");
      sub->add_option("--j2", cfg.j2, "second spin (general family)");
      sub->add_option("--f", cfg.f, "additive phases for positive a labels, descending")
          ->delimiter(',');
      sub->add_option("--g", cfg.g,
                      "additive phases for positive alpha labels, descending")
          ->delimiter(',');
    }
  };
  auto add_output = [&cfg](CLI::App* sub, const std::string& formats) {
    sub->add_option("--output", cfg.output, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "output format: " + formats);
  };

  CLI::App* build = app.add_subcommand("build-r", "construct a gate matrix");
  add_family(build, true);
  build->add_option("--theta", cfg.theta, "spectral parameter (radians)");
  add_output(build, "json (default), text");

  CLI::App* verify = app.add_subcommand("verify", "run the verification battery");
  add_family(verify, true);
  verify->add_option("--phases-raw", cfg.phases_raw,
                     "full phase table in basis order, bypassing family constraints")
      ->delimiter(',');
  verify->add_option("--trials", cfg.trials, "random spectral-parameter pairs")
      ->check(CLI::PositiveNumber);
  verify->add_option("--h-trials", cfg.h_trials, "random angles for the 8x8 suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "random seed");
  CLI::Option* t1 = verify->add_option("--theta1", cfg.theta1,
                                       "explicit first spectral parameter");
  verify->add_option("--theta2", cfg.theta2, "explicit second spectral parameter")
      ->needs(t1);
  add_output(verify, "text (default), json");

  CLI::App* sweep = app.add_subcommand("sweep", "sweep a measure over theta into CSV");
  add_family(sweep, false);
  sweep->add_option("--measure", cfg.measure, "negativity, concurrence or three-tangle")
      ->check(CLI::IsMember({"negativity", "concurrence", "three-tangle"}));
  sweep->add_option("--start", cfg.start, "first theta")->required();
  sweep->add_option("--stop", cfg.stop, "last theta")->required();
  sweep->add_option("--count", cfg.count, "grid points (>= 2)")->required();
  sweep->add_option("--seed", cfg.seed, "random seed");
  add_output(sweep, "csv");

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of the 8x8 Hamiltonian");
  spectrum->add_option("--family", cfg.family, "gate family (8x8)")
      ->check(CLI::IsMember({"8x8"}));
  spectrum->add_option("--theta", cfg.theta, "spectral parameter (radians)");
  spectrum->add_option("--phases", cfg.phases, "four phases")->delimiter(',');
  add_output(spectrum, "text (default), csv, json");

  CLI::App* graph = app.add_subcommand("transfer-graph",
                                       "generator action on the eigenbasis");
  graph->add_option("--family", cfg.family, "gate family (8x8)")
      ->check(CLI::IsMember({"8x8"}));
  graph->add_option("--theta", cfg.theta, "spectral parameter (radians)");
  graph->add_option("--phases", cfg.phases, "four phases")->delimiter(',');
  graph->add_option("--params", cfg.params, "alpha,beta,gamma,delta weights")
      ->delimiter(',');
  graph->add_option("--tol", cfg.tol, "edge detection tolerance")
      ->check(CLI::PositiveNumber);
  add_output(graph, "dot (default), json");

  std::vector<const char*> argv{"ybx"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  // spectrum/transfer-graph default to the only family they support
  if (spectrum->parsed() || graph->parsed()) cfg.family = "8x8";
  cfg.have_theta12 = t1->count() > 0;

  try {
    if (build->parsed()) {
      cfg.command = "build-r";
      return detail::cmd_build_r(cfg, out);
    }
    if (verify->parsed()) {
      cfg.command = "verify";
      return detail::cmd_verify(cfg, out);
    }
    if (sweep->parsed()) {
      cfg.command = "sweep";
      return detail::cmd_sweep(cfg, out);
    }
    if (spectrum->parsed()) {
      cfg.command = "spectrum";
      return detail::cmd_spectrum(cfg, out);
    }
    cfg.command = "transfer-graph";
    return detail::cmd_transfer_graph(cfg, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ybx::cli
