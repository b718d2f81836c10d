#pragma once

// Experiment runner behind the spinweave command line: one function per
// experiment, each producing CSV records and a JSON summary.

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spinweave/spinweave.hpp"

namespace spinweave::cli {

inline constexpr const char* summary_schema = "spinweave.summary/1";

enum ExitCode : int { ok = 0, invalid_config = 2, numerical_failure = 3 };

struct RunConfig {
  std::string experiment;
  std::size_t n = 8;
  double lambda = 1.0;
  double kappa = 1.0;
  std::optional<double> omega;
  int bits = 4;
  std::optional<std::size_t> grid;
  double timing_jitter = 0.0;
  double coupling_disorder = 0.0;
  double offset = 0.0;
  std::uint64_t seed = 0;
  std::string out;

  double phi = pi / 3;
  std::vector<double> phases;       // beta, gamma, delta for the rotation network
  std::size_t link = 1;             // R
  std::optional<double> time;
  std::optional<std::size_t> steps;
  std::optional<double> theta;
  std::vector<std::size_t> pair;    // 1-based sites for gate-cphase
  std::size_t max_n = 32;
  std::string network;              // network file for transfer

  ErrorModel errors() const {
    ErrorModel e{timing_jitter, coupling_disorder, 0.0, seed};
    e.validate();
    return e;
  }

  double effective_kappa() const { return omega ? kappa_for_solid_angle(lambda, *omega) : kappa; }
};

struct RunResult {
  json summary;
  std::vector<ExperimentRecord> records;
  int exit_code = ok;
};

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"transfer",      "geoloop", "bits",      "fringe",
                                              "freqscan",      "offset",  "gate-hadamard", "gate-ab",
                                              "gate-cnot",     "gate-cphase", "holonomy", "block"};
  return names;
}

namespace detail {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorKind::invalid_argument, what);
}

inline json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline RunResult run_transfer(const RunConfig& c) {
  const NetworkSpec spec = c.network.empty() ? build_pst_chain(c.n, c.lambda) : load_network(c.network);
  const double t_end = c.time.value_or(pi / c.lambda);
  const std::size_t grid = c.grid.value_or(1);
  require(grid >= 1, "grid must be non-empty");
  const std::size_t in = spec.port("in").at(0);
  const auto& out = spec.port("out");
  const Propagator prop(assemble(spec));
  const StateVector start = StateVector::basis(spec.n_sites(), in);

  RunResult r;
  for (std::size_t k = 0; k < grid; ++k) {
    const double t = grid == 1 ? t_end : t_end * static_cast<double>(k) / static_cast<double>(grid - 1);
    const StateVector psi = prop.apply(start, t);
    ExperimentRecord rec;
    rec.theta_or_chi = t;
    rec.arrival_prob = arrival_probability(psi, out);
    rec.phase = std::arg(psi.amplitudes(static_cast<Eigen::Index>(out.at(0))));
    rec.seed = c.seed;
    r.records.push_back(rec);
  }
  r.summary = {{"arrival", r.records.back().arrival_prob}, {"time", t_end}, {"n_sites", spec.n_sites()}};
  return r;
}

inline RunResult run_geoloop(const RunConfig& c) {
  const double kappa = c.effective_kappa();
  const LoopResult res = geometric_loop(c.n, c.lambda, kappa, c.errors(), 1, c.seed);
  const double omega = solid_angle(c.lambda, kappa);
  RunResult r;
  r.records.push_back({omega, kappa, res.return_probability, res.phase, std::nan(""), std::nan(""), c.seed});
  r.summary = {{"return_probability", res.return_probability},
               {"phase", res.phase},
               {"solid_angle", omega},
               {"predicted_phase", wrap_angle(predicted_phase(c.n, omega))},
               {"loop_phase_law", loop_phase_law(c.n, c.lambda, kappa)}};
  return r;
}

inline RunResult run_bits(const RunConfig& c) {
  const BitEstimate est = estimate_length_bits(ChainOracle(c.n, c.lambda, c.errors()), c.bits, c.seed);
  RunResult r;
  r.records = est.rounds;
  r.summary = {{"estimated_N", est.n},
               {"bits", est.bits},
               {"probabilities", est.probabilities},
               {"low_confidence", est.low_confidence}};
  if (est.low_confidence) r.exit_code = numerical_failure;
  return r;
}

inline RunResult run_fringe(const RunConfig& c) {
  const double kappa = c.effective_kappa();
  const std::size_t grid = c.grid.value_or(64);
  require(grid >= 3, "fringe grid needs at least 3 points");
  FringeFit fit = fringe_scan(c.n, c.lambda, kappa, chi_grid(grid), c.errors());
  RunResult r;
  r.records = std::move(fit.records);
  r.summary = {{"nu", fit.nu},
               {"chi0", fit.chi0},
               {"J_Omega", wrap_angle(predicted_phase(c.n, solid_angle(c.lambda, kappa)))},
               {"loop_phase_law", loop_phase_law(c.n, c.lambda, kappa)}};
  return r;
}

inline RunResult run_freqscan(const RunConfig& c) {
  const std::size_t grid = c.grid.value_or(256);
  FrequencyEstimate est = frequency_scan(c.n, c.lambda, theta_grid(grid), c.errors(), c.max_n);
  RunResult r;
  r.records = std::move(est.records);
  r.summary = {{"estimated_N", est.n}, {"J", est.J}, {"scores", est.scores}};
  return r;
}

inline RunResult run_offset(const RunConfig& c) {
  const double kappa = c.effective_kappa();
  const OffsetCalibration cal = calibrate_offset(c.n, c.lambda, kappa, c.offset);
  const double hold = 2.0 * pi / std::hypot(c.lambda, kappa);
  RunResult r;
  r.records.push_back({hold, kappa, cal.return_probability, cal.measured_phase, std::nan(""), std::nan(""), c.seed});
  r.summary = {{"dynamical_phase", cal.dynamical_phase},
               {"measured_phase", cal.measured_phase},
               {"expected", wrap_angle(c.offset * hold)}};
  return r;
}

inline RunResult gate_summary(const LogicalUnitary& g, const Matrix2c& target) {
  RunResult r;
  r.summary = gate_report(g.matrix, g.arrival_probability, gate_fidelity(g.matrix, target), 1.0 - g.arrival_probability);
  if (g.arrival_probability < 1.0 - 1e-8) r.exit_code = numerical_failure;
  return r;
}

inline RunResult run_gate_hadamard(const RunConfig& c) {
  const double t = c.time.value_or(pi / c.lambda);
  if (!c.phases.empty()) {
    require(c.phases.size() == 3, "--phases takes beta,gamma,delta");
    const auto g = logical_unitary(build_single_qubit_network(c.phases[0], c.phases[1], c.phases[2], c.lambda), t);
    const Matrix2c target = pauli::phase(c.phases[2]) * pauli::hadamard() * pauli::phase(c.phases[1]) *
                            pauli::hadamard() * pauli::phase(c.phases[0]);
    RunResult r = gate_summary(g, target);
    r.summary["network"] = "rotation";
    return r;
  }
  RunResult r = gate_summary(logical_unitary(build_hadamard_network(c.n, c.link, c.lambda), t), pauli::hadamard());
  r.summary["network"] = "hadamard";
  return r;
}

inline RunResult run_gate_ab(const RunConfig& c) {
  RunResult r = gate_summary(ab_phase_gate(c.n, c.lambda, c.phi), pauli::phase(c.phi));
  r.summary["ring_transfer_probability"] = ring_transfer_probability(c.n, c.lambda, c.phi);
  return r;
}

inline RunResult run_gate_cnot(const RunConfig& c) {
  const std::size_t grid = c.grid.value_or(256);
  require(grid >= 2, "cnot grid needs at least 2 points");
  const double t_end = c.time.value_or(2.0 * pi / c.lambda);
  const Propagator prop(cnot_operator(c.n, c.lambda));
  const StateVector start = StateVector::basis(2 * c.n, 0);
  RunResult r;
  double worst = 0.0;
  for (std::size_t k = 0; k < grid; ++k) {
    const double t = t_end * static_cast<double>(k) / static_cast<double>(grid - 1);
    const StateVector psi = prop.apply(start, t);
    const double p = psi.amplitudes.tail(static_cast<Eigen::Index>(c.n)).squaredNorm();
    worst = std::max(worst, std::abs(p - cnot_flip_probability_closed(c.n, t, c.lambda)));
    r.records.push_back({t, 0.0, p, std::arg(psi.amplitudes(static_cast<Eigen::Index>(c.n))), std::nan(""),
                         std::nan(""), c.seed});
  }
  const double t_flip = cnot_flip_time(c.n, c.lambda);
  const double p_flip = simulate_cnot(c.n, t_flip, c.lambda).p_flip;
  r.summary = {{"flip_time", t_flip},
               {"p_flip", p_flip},
               {"flip_width", cnot_flip_width(c.n, c.lambda)},
               {"max_closed_vs_sim", worst}};
  if (p_flip < 1.0 - 1e-9) r.exit_code = numerical_failure;
  return r;
}

inline RunResult run_gate_cphase(const RunConfig& c) {
  std::size_t i = 0, j = 1;
  if (!c.pair.empty()) {
    require(c.pair.size() == 2 && c.pair[0] >= 1 && c.pair[1] >= 1, "--pair takes two 1-based sites");
    i = c.pair[0] - 1, j = c.pair[1] - 1;
  }
  const TwoQubitGate g = exchange_cphase_gate(c.n, c.lambda, i, j);
  const ExchangeResult ex = two_excitation_exchange(c.n, c.lambda, i, j);
  RunResult r;
  r.summary = {{"matrix", matrix_json(g.matrix)},
               {"arrival", g.arrival},
               {"fidelity_to_target", g.cz_fidelity},
               {"leakage", 1.0 - g.arrival},
               {"exchange_ratio", complex_pair(ex.ratio)}};
  if (g.arrival < 1.0 - 1e-8) r.exit_code = numerical_failure;
  return r;
}

inline RunResult run_holonomy(const RunConfig& c) {
  const std::size_t N = c.n, R = c.link;
  const double P = holonomy_P(N, R);
  double theta = 0.0, phi = 0.0;
  if (c.theta) {
    theta = *c.theta, phi = c.phi;
  } else {
    const HadamardParams hp = holonomy_hadamard_params(P);
    theta = hp.theta, phi = hp.phi;
  }
  const double T = c.time.value_or(200.0 / c.lambda);
  const std::size_t steps = c.steps.value_or(static_cast<std::size_t>(std::ceil(20.0 * T * c.lambda)));
  const HolonomyRun run = adiabatic_holonomy(N, R, theta, phi, T, steps, c.lambda);
  const HolonomyParams params = HolonomyParams::make(N, R, theta, phi);
  const Matrix2c closed = holonomy_closed_form(params);
  const Matrix2c adiabatic = holonomy_closed_form(params, ConnectionSign::adiabatic);

  RunResult r;
  r.summary = gate_report(run.matrix, 1.0 - run.leakage, gate_fidelity(run.matrix, closed), run.leakage);
  r.summary["theta"] = theta;
  r.summary["phi"] = phi;
  r.summary["P"] = P;
  r.summary["distance_to_closed_form"] = gate_distance(run.matrix, closed);
  r.summary["distance_to_adiabatic_closed_form"] = gate_distance(run.matrix, adiabatic);
  r.summary["closed_form_hadamard_fidelity"] = gate_fidelity(closed, pauli::hadamard());
  r.summary["non_adiabatic"] = run.non_adiabatic;
  if (run.non_adiabatic) r.exit_code = numerical_failure;
  return r;
}

inline RunResult run_block(const RunConfig& c) {
  const std::size_t grid = c.grid.value_or(8);
  require(grid >= 2, "block grid needs at least 2 strengths");
  const BlockScaling fit = fit_block_scaling(c.n, geomspace(10.0 * c.lambda, 100.0 * c.lambda, grid), c.lambda);
  RunResult r;
  for (std::size_t k = 0; k < fit.g.size(); ++k)
    r.records.push_back({fit.g[k], 0.0, 1.0 - fit.infidelity[k], 0.0, std::nan(""), std::nan(""), c.seed});
  r.summary = {{"slope", fit.slope}, {"alpha", fit.alpha}};
  return r;
}

}  // namespace detail

/// Runs one experiment. Library errors propagate; map them with exit_code_for.
inline RunResult run(const RunConfig& c) {
  static const std::map<std::string, std::function<RunResult(const RunConfig&)>> table{
      {"transfer", detail::run_transfer},         {"geoloop", detail::run_geoloop},
      {"bits", detail::run_bits},                 {"fringe", detail::run_fringe},
      {"freqscan", detail::run_freqscan},         {"offset", detail::run_offset},
      {"gate-hadamard", detail::run_gate_hadamard}, {"gate-ab", detail::run_gate_ab},
      {"gate-cnot", detail::run_gate_cnot},       {"gate-cphase", detail::run_gate_cphase},
      {"holonomy", detail::run_holonomy},         {"block", detail::run_block}};
  const auto it = table.find(c.experiment);
  if (it == table.end()) throw Error(ErrorKind::invalid_argument, "unknown experiment '" + c.experiment + "'");
  require_positive(c.lambda, "lambda");
  RunResult r = it->second(c);

  json results = std::move(r.summary);
  r.summary = {{"schema", summary_schema},
               {"experiment", c.experiment},
               {"parameters",
                {{"n", c.n},
                 {"lambda", c.lambda},
                 {"seed", c.seed},
                 {"timing_jitter", c.timing_jitter},
                 {"coupling_disorder", c.coupling_disorder}}},
               {"rows", r.records.size()},
               {"results", std::move(results)}};
  return r;
}

inline int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::numerical ? numerical_failure : invalid_config;
}

/// Builders available to emit-network.
inline NetworkSpec build_named_network(const std::string& name, const RunConfig& c) {
  if (name == "pst") return build_pst_chain(c.n, c.lambda);
  if (name == "y-junction") return build_y_junction(c.n, c.lambda);
  if (name == "ring") return build_flux_ring(c.n, c.lambda, c.phi);
  if (name == "phase-chain") return build_phase_chain(c.n, c.lambda, c.phi);
  if (name == "hadamard-unit") return build_hadamard_unit(c.lambda);
  if (name == "hadamard") return build_hadamard_network(c.n, c.link, c.lambda);
  if (name == "rotation") {
    const std::vector<double> p = c.phases.empty() ? std::vector<double>{0, 0, 0} : c.phases;
    if (p.size() != 3) throw Error(ErrorKind::invalid_argument, "--phases takes beta,gamma,delta");
    return build_single_qubit_network(p[0], p[1], p[2], c.lambda);
  }
  if (name == "linked") return build_linked_chains(c.n, c.link, c.theta.value_or(0.0), c.phi, c.lambda);
  if (name == "switch") return build_switch_chain(c.n, 1, c.lambda);
  throw Error(ErrorKind::invalid_argument, "unknown builder '" + name + "'");
}

inline const std::vector<std::string>& builder_names() {
  static const std::vector<std::string> names{"pst",     "y-junction", "ring",   "phase-chain", "hadamard-unit",
                                              "hadamard", "rotation",   "linked", "switch"};
  return names;
}

}  // namespace spinweave::cli
