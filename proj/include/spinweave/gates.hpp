#pragma once

// Dual-rail logical gates realised by network topology, the chain-mediated
// CNOT, two-excitation exchange, the non-abelian holonomy of two linked
// chains, and the Zeeman switch.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "spinweave/dynamics.hpp"
#include "spinweave/error.hpp"
#include "spinweave/linalg.hpp"
#include "spinweave/network.hpp"

namespace spinweave {

/// Action on {|0_L>, |1_L>}: column c holds the output-port amplitudes for
/// input rail c; arrival is the smaller of the two output weights.
struct LogicalUnitary {
  Matrix2c matrix = Matrix2c::Zero();
  double arrival_probability = 0.0;
};

inline LogicalUnitary logical_unitary(const NetworkSpec& spec, const DualRailPorts& ports, double t) {
  ports.validate(spec.n_sites());
  const CMatrix u = time_evolution(assemble(spec), t);
  const auto at = [&](std::size_t out, std::size_t in) {
    return u(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in));
  };
  LogicalUnitary g;
  g.matrix << at(ports.rail0_out, ports.rail0_in), at(ports.rail0_out, ports.rail1_in),
      at(ports.rail1_out, ports.rail0_in), at(ports.rail1_out, ports.rail1_in);
  g.arrival_probability = std::min(g.matrix.col(0).squaredNorm(), g.matrix.col(1).squaredNorm());
  return g;
}

inline LogicalUnitary logical_unitary(const NetworkSpec& spec, double t) {
  return logical_unitary(spec, dual_rail_ports(spec), t);
}

// ---------------------------------------------------------------------------
// Flux phase gate
// ---------------------------------------------------------------------------

/// Plain chain on rail 0 and a phase chain carrying phi on rail 1.
inline NetworkSpec build_phase_gate_network(std::size_t N, double lambda, double phi) {
  if (N < 2) throw Error(ErrorKind::invalid_size, "phase gate needs N >= 2");
  require_positive(lambda, "lambda");
  NetworkSpec spec(2 * N);
  const cplx step = std::polar(1.0, phi / static_cast<double>(N - 1));
  for (std::size_t n = 1; n < N; ++n) {
    spec.add_edge(n - 1, n, pst_hop(N, n, lambda));
    spec.add_edge(N + n - 1, N + n, pst_hop(N, n, lambda) * step);
  }
  spec.set_port("rail0_in", {0}).set_port("rail0_out", {N - 1});
  spec.set_port("rail1_in", {N}).set_port("rail1_out", {2 * N - 1});
  return spec;
}

/// diag(1, e^{i phi}) up to a global phase at t = pi/lambda. The flux enters
/// as the per-hop phase phi/(N-1), i.e. H = cos(d) Jx + sin(d) Jy on rail 1.
inline LogicalUnitary ab_phase_gate(std::size_t N, double lambda, double phi) {
  return logical_unitary(build_phase_gate_network(N, lambda, phi), pi / lambda);
}

/// A -> B transfer probability through the literal flux ring at t = pi/lambda.
inline double ring_transfer_probability(std::size_t N, double lambda, double phi,
                                        FluxPlacement placement = FluxPlacement::uniform) {
  const NetworkSpec ring = build_flux_ring(N, lambda, phi, placement);
  const StateVector out = propagate(assemble(ring), pi / lambda, StateVector::basis(ring.n_sites(), ring.port("in")[0]));
  return arrival_probability(out, ring.port("out"));
}

// ---------------------------------------------------------------------------
// CNOT
// ---------------------------------------------------------------------------

/// Chain of N control-line sites coupled to a target qubit, over the basis
/// |n, b> with index n + N b: hops (lambda/2) sqrt(i (2N - i)) inside each b
/// block and -lambda N/2 between |N,0> and |N,1>.
inline SubspaceOperator cnot_operator(std::size_t N, double lambda = 1.0) {
  if (N < 1) throw Error(ErrorKind::invalid_size, "CNOT chain needs N >= 1");
  require_positive(lambda, "lambda");
  const auto n = static_cast<Eigen::Index>(N);
  CMatrix h = CMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index b = 0; b < 2; ++b)
    for (Eigen::Index i = 1; i < n; ++i) {
      const double k = 0.5 * lambda * std::sqrt(static_cast<double>(i) * static_cast<double>(2 * n - i));
      h(b * n + i, b * n + i - 1) = h(b * n + i - 1, b * n + i) = k;
    }
  const double eta = 0.5 * lambda * static_cast<double>(N);
  h(n - 1, 2 * n - 1) = h(2 * n - 1, n - 1) = -eta;
  return SubspaceOperator(std::move(h));
}

inline double cnot_flip_probability_closed(std::size_t N, double t, double lambda = 1.0) {
  const double s2 = std::pow(std::sin(0.5 * lambda * t), 2);
  const double c2 = std::pow(std::cos(0.5 * lambda * t), 2);
  const int big = static_cast<int>(2 * N - 1);
  double p = 0.0;
  for (std::size_t n = N + 1; n <= 2 * N; ++n) {
    const int k = static_cast<int>(n - 1);
    const double binom = std::exp(std::lgamma(big + 1) - std::lgamma(k + 1) - std::lgamma(big - k + 1));
    p += binom * std::pow(s2, k) * std::pow(c2, big - k);
  }
  return p;
}

struct CnotRun {
  double p_flip = 0.0;
  StateVector state;
};

/// Evolves |1,0> and sums the weight on the b = 1 block.
inline CnotRun simulate_cnot(std::size_t N, double t, double lambda = 1.0) {
  CnotRun run;
  run.state = propagate(cnot_operator(N, lambda), t, StateVector::basis(2 * N, 0));
  run.p_flip = run.state.amplitudes.tail(static_cast<Eigen::Index>(N)).squaredNorm();
  return run;
}

namespace detail {
/// Golden-section maximisation of a unimodal f on [a, b].
inline double golden_max(const std::function<double(double)>& f, double a, double b, double tol = 1e-12) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d, d = c, fd = fc;
      c = b - g * (b - a), fc = f(c);
    } else {
      a = c, c = d, fc = fd;
      d = a + g * (b - a), fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

/// Grid search followed by golden-section refinement around the best point.
inline double argmax_on(const std::function<double(double)>& f, double lo, double hi, std::size_t grid) {
  double best_t = lo, best = f(lo);
  const double step = (hi - lo) / static_cast<double>(grid);
  for (std::size_t i = 1; i <= grid; ++i) {
    const double t = lo + step * static_cast<double>(i);
    const double v = f(t);
    if (v > best) best = v, best_t = t;
  }
  return golden_max(f, std::max(lo, best_t - step), std::min(hi, best_t + step));
}

/// First t in [lo, hi] with f(t) = level for increasing f.
inline double bisect_increasing(const std::function<double(double)>& f, double level, double lo, double hi) {
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < level ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}
}  // namespace detail

/// Time in (pi/2, 3pi/2)/lambda at which the excitation arrives on |1,1>.
/// The summed flip probability is flat there, so the sharp single-state
/// arrival fixes the time.
inline double cnot_flip_time(std::size_t N, double lambda = 1.0) {
  const auto target = static_cast<Eigen::Index>(N);
  const Propagator prop(cnot_operator(N, lambda));
  const StateVector start = StateVector::basis(2 * N, 0);
  const auto p = [&](double t) { return std::norm(prop.apply(start, t).amplitudes(target)); };
  return detail::argmax_on(p, 0.5 * pi / lambda, 1.5 * pi / lambda, 400);
}

/// 10-90 % rise time of the flip probability on its way up to the first flip.
inline double cnot_flip_width(std::size_t N, double lambda = 1.0) {
  const auto p = [&](double t) { return cnot_flip_probability_closed(N, t, lambda); };
  return detail::bisect_increasing(p, 0.9, 0.0, pi / lambda) - detail::bisect_increasing(p, 0.1, 0.0, pi / lambda);
}

/// Relabelling |n,0> -> site n, |n,1> -> site 2N+1-n, with the b = 1 block
/// sign-flipped, which maps cnot_operator onto the length-2N chain.
inline CMatrix cnot_chain_permutation(std::size_t N) {
  const auto n = static_cast<Eigen::Index>(N);
  CMatrix p = CMatrix::Zero(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    p(i, i) = 1.0;
    p(2 * n - 1 - i, n + i) = -1.0;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Two-excitation exchange
// ---------------------------------------------------------------------------

struct ExchangeResult {
  std::size_t out_first = 0, out_second = 0;  ///< 0-based, ascending
  double arrival = 0.0;
  cplx ratio{};  ///< pair amplitude / product of single transfer amplitudes
};

/// Sends excitations at sites i < j (0-based) through the length-N chain for
/// pi/lambda; they arrive on the mirror sites with the exchange sign.
inline ExchangeResult two_excitation_exchange(std::size_t N, double lambda, std::size_t i, std::size_t j) {
  if (i >= j || j >= N) throw Error(ErrorKind::invalid_site, "need 0 <= i < j < N");
  const NetworkSpec chain = build_pst_chain(N, lambda);
  const ExcitationBasis basis(N, 2);
  const double t = pi / lambda;
  const CMatrix u1 = time_evolution(assemble(chain, 1), t);
  const StateVector out = propagate(assemble(chain, 2), t, StateVector::basis(basis.dim(), basis.pair_index(i, j)));

  ExchangeResult r;
  r.out_first = N - 1 - j;
  r.out_second = N - 1 - i;
  const cplx pair = out.amplitudes(static_cast<Eigen::Index>(basis.pair_index(r.out_first, r.out_second)));
  const cplx single_i = u1(static_cast<Eigen::Index>(N - 1 - i), static_cast<Eigen::Index>(i));
  const cplx single_j = u1(static_cast<Eigen::Index>(N - 1 - j), static_cast<Eigen::Index>(j));
  r.arrival = std::norm(pair);
  r.ratio = pair / (single_i * single_j);
  return r;
}

struct TwoQubitGate {
  Eigen::Matrix4cd matrix = Eigen::Matrix4cd::Zero();
  double arrival = 0.0;
  double cz_fidelity = 0.0;  ///< to CZ after the best local z-phases and global phase
};

/// Fidelity to diag(1,1,1,-1) once local z rotations are allowed: the target
/// adopts the gate's own single-qubit phases.
inline double cz_fidelity_up_to_local_z(const Eigen::Matrix4cd& g) {
  const cplx d00 = g(0, 0);
  if (std::abs(d00) == 0.0) return 0.0;
  const double a = std::arg(g(1, 1) / d00), b = std::arg(g(2, 2) / d00);
  Eigen::Matrix4cd target = Eigen::Matrix4cd::Zero();
  target(0, 0) = 1.0;
  target(1, 1) = std::polar(1.0, a);
  target(2, 2) = std::polar(1.0, b);
  target(3, 3) = -std::polar(1.0, a + b);
  return std::norm((target.adjoint() * g).trace()) / 16.0;
}

/// Two dual-rail qubits: rail 0 of A and of B on their own chains, both rail-1
/// sites (i for A, j for B) on one shared chain. Simulated in the two-excitation
/// sector of all 3N sites; basis order |a b> = |00>, |01>, |10>, |11>.
inline TwoQubitGate exchange_cphase_gate(std::size_t N, double lambda = 1.0, std::size_t i = 0, std::size_t j = 1) {
  if (i >= j || j >= N) throw Error(ErrorKind::invalid_site, "need 0 <= i < j < N");
  require_positive(lambda, "lambda");
  NetworkSpec spec(3 * N);
  const std::size_t a0 = 0, b0 = N, shared = 2 * N;
  for (std::size_t n = 1; n < N; ++n)
    for (std::size_t base : {a0, b0, shared}) spec.add_edge(base + n - 1, base + n, pst_hop(N, n, lambda));

  const auto a_in = [&](int bit) { return bit ? shared + i : a0 + i; };
  const auto b_in = [&](int bit) { return bit ? shared + j : b0 + j; };
  const auto a_out = [&](int bit) { return bit ? shared + N - 1 - i : a0 + N - 1 - i; };
  const auto b_out = [&](int bit) { return bit ? shared + N - 1 - j : b0 + N - 1 - j; };

  const ExcitationBasis basis(3 * N, 2);
  const Propagator prop(assemble(spec, 2));
  TwoQubitGate gate;
  gate.arrival = 1.0;
  for (int in = 0; in < 4; ++in) {
    const int ai = in >> 1, bi = in & 1;
    const StateVector psi = prop.apply(StateVector::basis(basis.dim(), basis.pair_index(a_in(ai), b_in(bi))), pi / lambda);
    double w = 0.0;
    for (int out = 0; out < 4; ++out) {
      const int ao = out >> 1, bo = out & 1;
      const cplx amp = psi.amplitudes(static_cast<Eigen::Index>(basis.pair_index(a_out(ao), b_out(bo))));
      gate.matrix(out, in) = amp;
      w += std::norm(amp);
    }
    gate.arrival = std::min(gate.arrival, w);
  }
  gate.cz_fidelity = cz_fidelity_up_to_local_z(gate.matrix);
  return gate;
}

// ---------------------------------------------------------------------------
// Holonomy on linked chains
// ---------------------------------------------------------------------------

/// Weight of the binomial top eigenvector beyond link R:
/// P = sum_{n=R+1}^{N} C(N-1, n-1) / 2^(N-1).
inline double holonomy_P(std::size_t N, std::size_t R) {
  if (N < 2) throw Error(ErrorKind::invalid_size, "holonomy needs N >= 2");
  if (R > N) throw Error(ErrorKind::invalid_argument, "R must lie in 0..N");
  double p = 0.0;
  for (std::size_t n = R + 1; n <= N; ++n) {
    const double k = static_cast<double>(n - 1), m = static_cast<double>(N - 1);
    p += std::exp(std::lgamma(m + 1) - std::lgamma(k + 1) - std::lgamma(m - k + 1) - m * std::log(2.0));
  }
  return p;
}

/// s = sqrt(P^2 sin^2 theta + (1 - P + P cos theta)^2) / 2, so A_phi^2 = -s^2.
inline double holonomy_s(double P, double theta) {
  return 0.5 * std::hypot(P * std::sin(theta), 1.0 - P + P * std::cos(theta));
}

struct HolonomyParams {
  std::size_t N = 4;
  std::size_t R = 2;
  double theta = 0.0;
  double phi = 0.0;
  double P = 0.5;
  double s = 0.5;

  static HolonomyParams make(std::size_t N, std::size_t R, double theta, double phi) {
    if (R < 1 || R + 1 > N) throw Error(ErrorKind::invalid_argument, "R must lie in 1..N-1");
    HolonomyParams p{N, R, theta, phi, holonomy_P(N, R), 0.0};
    p.s = holonomy_s(p.P, theta);
    return p;
  }
};

/// Top-eigenvalue pair psi_1, psi_2 (energy lambda (N-1)/2) of
/// build_linked_chains(N, R, theta, phi) over sites {|n>, |n'>}.
inline std::pair<CVector, CVector> eigvec_pair(const HolonomyParams& p) {
  const auto N = static_cast<Eigen::Index>(p.N);
  CVector psi1 = CVector::Zero(2 * N), psi2 = CVector::Zero(2 * N);
  const double c = std::cos(p.theta / 2), s = std::sin(p.theta / 2);
  const cplx e = std::polar(1.0, p.phi);
  for (Eigen::Index n = 1; n <= N; ++n) {
    const double m = static_cast<double>(N - 1), k = static_cast<double>(n - 1);
    const double w = std::exp(0.5 * (std::lgamma(m + 1) - std::lgamma(k + 1) - std::lgamma(m - k + 1) - m * std::log(2.0)));
    const Eigen::Index top = n - 1, bot = N + n - 1;
    if (static_cast<std::size_t>(n) <= p.R) {
      psi1(top) = w;
      psi2(bot) = w;
    } else {
      psi1(top) = w * c;
      psi1(bot) = -w * s * std::conj(e);
      psi2(bot) = w * c;
      psi2(top) = w * s * e;
    }
  }
  psi2 *= std::conj(e);
  return {psi1, psi2};
}

/// Sign of the connection the closed form integrates. `positive` uses
/// A_theta = i(P/2) sigma_y and A_phi = (i/2)(P sin theta sigma_x + (1 - P + P
/// cos theta) sigma_z); `adiabatic` uses their negatives, -<psi_i|d psi_j>,
/// which is what the Schrodinger evolution follows.
enum class ConnectionSign { positive, adiabatic };

/// exp(-A_theta theta) exp(A_phi phi) exp(A_theta theta) in the psi_1/psi_2
/// frame, which collapses to cos(s phi) + sin(s phi)/s e^{-i P theta sigma_y} A_phi.
inline Matrix2c holonomy_closed_form(const HolonomyParams& p, ConnectionSign sign = ConnectionSign::positive) {
  const double sgn = sign == ConnectionSign::positive ? 1.0 : -1.0;
  const Matrix2c a_phi =
      sgn * 0.5 * I * (p.P * std::sin(p.theta) * pauli::x() + (1.0 - p.P + p.P * std::cos(p.theta)) * pauli::z());
  const Matrix2c frame = su2_rotation(0, 1, 0, sgn * p.P * p.theta);
  const double s = holonomy_s(p.P, p.theta);
  return std::cos(s * p.phi) * Matrix2c::Identity() + (std::sin(s * p.phi) / s) * frame * a_phi;
}

struct HadamardParams {
  double theta = 0.0;
  double phi = 0.0;
};

/// Smallest theta in (0, pi/(P+1)] making the x and z parts of the positive-sign
/// holonomy equal, then phi = pi/(2 s) so that it is a Hadamard.
inline HadamardParams holonomy_hadamard_params(double P) {
  if (!(P >= 0.0 && P <= 1.0)) throw Error(ErrorKind::invalid_argument, "P must lie in [0, 1]");
  const auto f = [P](double th) {
    return P * std::sin((P + 1) * th) + (1 - P) * std::sin(P * th) - (1 - P) * std::cos(P * th) -
           P * std::cos((P + 1) * th);
  };
  const double hi = pi / (P + 1);
  const int grid = 2000;
  double lo = 0.0, flo = f(0.0);
  for (int k = 1; k <= grid; ++k) {
    const double th = hi * k / grid, fth = f(th);
    if ((flo <= 0.0) != (fth <= 0.0) || fth == 0.0) {
      double a = lo, b = th;
      for (int it = 0; it < 200 && b - a > 1e-16; ++it) {
        const double m = 0.5 * (a + b);
        ((f(m) <= 0.0) == (flo <= 0.0) ? a : b) = m;
      }
      const double theta = 0.5 * (a + b);
      return {theta, pi / (2.0 * holonomy_s(P, theta))};
    }
    lo = th, flo = fth;
  }
  throw Error(ErrorKind::numerical, "no Hadamard solution for P = " + std::to_string(P));
}

struct HolonomyRun {
  Matrix2c matrix = Matrix2c::Zero();
  double leakage = 0.0;
  bool non_adiabatic = false;  ///< leakage above 0.1
};

/// Raised-cosine ramp (1 - cos(pi u))/2 on [0, 1].
inline double smooth_ramp(double u) { return 0.5 * (1.0 - std::cos(pi * u)); }

/// Drives build_linked_chains around (0,0) -> (theta,0) -> (theta,phi) -> (0,phi)
/// in three legs of T/3, each with a raised-cosine ramp, and reports the
/// evolution between the psi_1/psi_2 frames at the two ends with the common
/// dynamical phase e^{-i E_max T} removed.
inline HolonomyRun adiabatic_holonomy(std::size_t N, std::size_t R, double theta, double phi, double T,
                                      std::size_t steps, double lambda = 1.0) {
  const auto path = [&](double s) -> CMatrix {
    double th = 0.0, ph = 0.0;
    if (s < 1.0 / 3) {
      th = theta * smooth_ramp(3 * s);
    } else if (s < 2.0 / 3) {
      th = theta, ph = phi * smooth_ramp(3 * s - 1);
    } else {
      th = theta * (1.0 - smooth_ramp(3 * s - 2)), ph = phi;
    }
    return assemble(build_linked_chains(N, R, th, ph, lambda)).matrix();
  };
  const CMatrix u = evolve_time_dependent(path, T, steps);

  const auto [q1, q2] = eigvec_pair(HolonomyParams::make(N, R, 0.0, 0.0));
  const auto [f1, f2] = eigvec_pair(HolonomyParams::make(N, R, 0.0, phi));
  CMatrix start(q1.size(), 2), end(f1.size(), 2);
  start << q1, q2;
  end << f1, f2;
  const double e_max = 0.5 * lambda * static_cast<double>(N - 1);

  HolonomyRun run;
  run.matrix = (end.adjoint() * u * start) * std::polar(1.0, e_max * T);
  run.leakage = std::max(0.0, 1.0 - run.matrix.squaredNorm() / 2.0);
  run.non_adiabatic = run.leakage > 0.1;
  return run;
}

/// Rotates |1> into the top eigenvector of lambda Jx with lambda (Jx + Jz)
/// held for pi/(sqrt2 lambda).
inline StateVector prepare_top_eigenstate(std::size_t N, double lambda = 1.0) {
  const SubspaceOperator h = assemble(build_pst_chain(N, lambda)) + diagonal_operator(gradient_diagonal(N, lambda));
  return propagate(h, pi / (std::sqrt(2.0) * lambda), StateVector::basis(N, 0));
}

// ---------------------------------------------------------------------------
// Zeeman switch
// ---------------------------------------------------------------------------

/// max over t in [0.8, 1.2] pi/lambda of |<out|U(t)|in>|^2 for the switch
/// chain with detuning g_block on the switch site.
inline double block_transfer_fidelity(std::size_t M, double g_block, double lambda = 1.0, std::size_t tail = 1) {
  const NetworkSpec chain = build_switch_chain(M, tail, lambda);
  const NetworkSpec spec = attach_onsite_block(chain, chain.port("switch")[0], g_block);
  const Propagator prop(assemble(spec));
  const std::size_t in = spec.port("in")[0], out = spec.port("out")[0];
  const StateVector start = StateVector::basis(spec.n_sites(), in);
  const auto f = [&](double t) { return arrival_probability(prop.apply(start, t), {out}); };
  const double t = detail::argmax_on(f, 0.8 * pi / lambda, 1.2 * pi / lambda, 800);
  return f(t);
}

struct BlockScaling {
  std::vector<double> g;
  std::vector<double> infidelity;
  double slope = 0.0;  ///< d log(1 - f) / d log g
  double alpha = 0.0;  ///< 1 - f ~ alpha / g^2 prefactor from the fit intercept
};

inline BlockScaling fit_block_scaling(std::size_t M, const std::vector<double>& g, double lambda = 1.0,
                                      std::size_t tail = 1) {
  if (g.size() < 2) throw Error(ErrorKind::invalid_argument, "need at least two block strengths");
  BlockScaling out;
  out.g = g;
  Eigen::MatrixXd a(static_cast<Eigen::Index>(g.size()), 2);
  Eigen::VectorXd y(static_cast<Eigen::Index>(g.size()));
  for (std::size_t k = 0; k < g.size(); ++k) {
    const double inf = 1.0 - block_transfer_fidelity(M, g[k], lambda, tail);
    if (!(inf > 0.0)) throw Error(ErrorKind::numerical, "block infidelity not positive");
    out.infidelity.push_back(inf);
    a(static_cast<Eigen::Index>(k), 0) = 1.0;
    a(static_cast<Eigen::Index>(k), 1) = std::log(g[k]);
    y(static_cast<Eigen::Index>(k)) = std::log(inf);
  }
  const Eigen::Vector2d c = a.colPivHouseholderQr().solve(y);
  out.slope = c(1);
  out.alpha = std::exp(c(0));
  return out;
}

/// n log-spaced values from lo to hi inclusive.
inline std::vector<double> geomspace(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k)
    v[k] = lo * std::pow(hi / lo, n == 1 ? 0.0 : static_cast<double>(k) / static_cast<double>(n - 1));
  return v;
}

}  // namespace spinweave
