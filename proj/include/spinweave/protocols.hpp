#pragma once

// Geometric-phase loop on a perfect-transfer chain and the metrology built on
// it: chain-length bit extraction, fringe and frequency scans, offset
// calibration, with optional timing and coupling errors.
//
// The loop is (lambda Jx, pi/2lambda), (lambda Jx + kappa Jz, pi/sqrt(lambda^2
// + kappa^2)), (lambda Jx, pi/2lambda) acting on (|vac> + |1>)/sqrt2. It
// returns |1> with unit probability and a vacuum-relative phase -J (pi + Omega)
// with J = (N-1)/2 and Omega = 2 atan(lambda/kappa): the rotation axis sweeps
// the solid angle pi + Omega.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "spinweave/dynamics.hpp"
#include "spinweave/error.hpp"
#include "spinweave/linalg.hpp"
#include "spinweave/network.hpp"
#include "spinweave/sweep.hpp"

namespace spinweave {

struct ErrorModel {
  double timing_jitter_frac = 0.0;      ///< durations times 1+u, u ~ U[-f, f], fresh per run
  double coupling_disorder_frac = 0.0;  ///< hops times 1+u, u ~ U[-f, f], frozen per network
  double field_offset = 0.0;            ///< uniform energy shift while the gradient is on
  std::uint64_t seed = 0;

  void validate() const {
    auto frac_ok = [](double f) { return f >= 0.0 && f < 1.0; };
    if (!frac_ok(timing_jitter_frac) || !frac_ok(coupling_disorder_frac))
      throw Error(ErrorKind::invalid_argument, "error fractions must lie in [0, 1)");
    if (!std::isfinite(field_offset)) throw Error(ErrorKind::invalid_argument, "field offset must be finite");
  }

  bool error_free() const {
    return timing_jitter_frac == 0.0 && coupling_disorder_frac == 0.0 && field_offset == 0.0;
  }
};

namespace detail {
enum class Stream : std::uint64_t { couplings = 1, timing = 2 };

inline std::mt19937_64 make_rng(std::uint64_t seed, Stream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

inline std::vector<double> uniform_factors(std::mt19937_64& rng, std::size_t n, double frac) {
  std::uniform_real_distribution<double> u(-frac, frac);
  std::vector<double> f(n, 1.0);
  if (frac > 0.0)
    for (double& x : f) x = 1.0 + u(rng);
  return f;
}
}  // namespace detail

/// Per-edge coupling factors; depend only on the model's base seed.
inline std::vector<double> coupling_factors(const ErrorModel& errors, std::size_t n_edges) {
  auto rng = detail::make_rng(errors.seed, detail::Stream::couplings);
  return detail::uniform_factors(rng, n_edges, errors.coupling_disorder_frac);
}

/// Per-segment duration factors for one run.
inline std::vector<double> timing_factors(const ErrorModel& errors, std::uint64_t run_seed, std::size_t n_segments) {
  auto rng = detail::make_rng(run_seed, detail::Stream::timing);
  return detail::uniform_factors(rng, n_segments, errors.timing_jitter_frac);
}

/// One sweep point. Unused fit columns hold NaN.
struct ExperimentRecord {
  double theta_or_chi = 0.0;
  double kappa = 0.0;
  double arrival_prob = 0.0;
  double phase = 0.0;
  double nu = std::numeric_limits<double>::quiet_NaN();
  double chi0 = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t seed = 0;
};

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Omega = 2 atan(lambda/kappa), in (0, pi].
inline double solid_angle(double lambda, double kappa) {
  require_positive(lambda, "lambda");
  if (kappa < 0.0) throw Error(ErrorKind::invalid_argument, "kappa must be non-negative");
  return 2.0 * std::atan2(lambda, kappa);
}

/// Gradient giving the solid angle Omega: kappa = lambda / tan(Omega/2).
inline double kappa_for_solid_angle(double lambda, double omega) {
  if (!(omega > 0.0 && omega <= pi)) throw Error(ErrorKind::invalid_argument, "Omega must lie in (0, pi]");
  return omega == pi ? 0.0 : lambda / std::tan(0.5 * omega);
}

/// J Omega with J = (N-1)/2, the phase quoted for the loop.
inline double predicted_phase(std::size_t N, double omega) { return 0.5 * static_cast<double>(N - 1) * omega; }

/// Phase the simulated loop actually returns, -J (pi + Omega), in (-pi, pi].
/// Defined for any real kappa (kappa < 0 gives Omega > pi).
inline double loop_phase_law(std::size_t N, double lambda, double kappa) {
  const double omega = 2.0 * std::atan2(lambda, kappa);
  return wrap_angle(-0.5 * static_cast<double>(N - 1) * (pi + omega));
}

/// Measurement law after the final Hadamard: P = (1 + Re(a e^{-i chi}))/2.
inline double interference_probability(cplx a, double chi) {
  if (std::abs(a) > 1.0 + 1e-12) throw Error(ErrorKind::invalid_argument, "amplitude exceeds 1 in magnitude");
  return std::clamp(0.5 * (1.0 + std::real(a * std::polar(1.0, -chi))), 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Loop
// ---------------------------------------------------------------------------

struct LoopResult {
  cplx amplitude{};               ///< <1|T|1>, the vacuum is untouched
  double return_probability = 0;  ///< |amplitude|^2
  double phase = 0;               ///< vacuum-relative, in (-pi, pi]
};

/// A chain whose length is hidden from the estimators: they may only run loops.
/// Coupling disorder is drawn once here; timing jitter per run.
class ChainOracle {
 public:
  ChainOracle(std::size_t N, double lambda = 1.0, ErrorModel errors = {}) : lambda_(lambda), errors_(errors) {
    errors_.validate();
    NetworkSpec chain = build_pst_chain(N, lambda);
    chain = chain.scaled_edges(coupling_factors(errors_, chain.edges().size()));
    hop_ = assemble(chain).matrix();
    jz_unit_ = gradient_diagonal(N, 1.0);
    n_ = N;
  }

  double lambda() const noexcept { return lambda_; }
  const ErrorModel& errors() const noexcept { return errors_; }

  /// Runs the loop `repetitions` times in a row; segment timing draws come
  /// from `run_seed`.
  LoopResult loop(double kappa, int repetitions = 1, std::uint64_t run_seed = 0) const {
    if (repetitions < 1) throw Error(ErrorKind::invalid_argument, "repetitions must be >= 1");
    const SubspaceOperator flat(hop_);
    const SubspaceOperator tilted = gradient(kappa);
    const double quarter = pi / (2.0 * lambda_);
    const double arc = pi / std::hypot(lambda_, kappa);
    const auto jitter = timing_factors(errors_, run_seed, 3 * static_cast<std::size_t>(repetitions));

    Schedule sched;
    for (int r = 0; r < repetitions; ++r) {
      const std::size_t j = 3 * static_cast<std::size_t>(r);
      sched.push_back({flat, quarter * jitter[j]});
      sched.push_back({tilted, arc * jitter[j + 1]});
      sched.push_back({flat, quarter * jitter[j + 2]});
    }
    return finish(run_schedule(sched, StateVector::with_reference(n_, 0)));
  }

  /// Offset-calibration loop: gradient held for a full circle 2pi/sqrt(lambda^2
  /// + kappa^2) with an extra uniform shift, closing wait 3pi/2lambda.
  LoopResult offset_loop(double kappa, double offset) const {
    const SubspaceOperator flat(hop_);
    Schedule sched{{flat, pi / (2.0 * lambda_)},
                   {gradient(kappa).shifted(offset), 2.0 * pi / std::hypot(lambda_, kappa)},
                   {flat, 3.0 * pi / (2.0 * lambda_)}};
    return finish(run_schedule(sched, StateVector::with_reference(n_, 0)));
  }

 private:
  SubspaceOperator gradient(double kappa) const {
    CMatrix h = hop_;
    for (std::size_t i = 0; i < n_; ++i)
      h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) += kappa * jz_unit_[i] + errors_.field_offset;
    return SubspaceOperator(std::move(h));
  }

  static LoopResult finish(const StateVector& out) {
    const cplx a = out.amplitudes(0) / out.vacuum;
    return {a, std::norm(a), site_amplitude_phase(out, 0).phase};
  }

  std::size_t n_ = 0;
  double lambda_;
  ErrorModel errors_;
  CMatrix hop_;
  std::vector<double> jz_unit_;
};

inline LoopResult geometric_loop(std::size_t N, double lambda, double kappa, const ErrorModel& errors = {},
                                 int repetitions = 1, std::uint64_t run_seed = 0) {
  return ChainOracle(N, lambda, errors).loop(kappa, repetitions, run_seed);
}

// ---------------------------------------------------------------------------
// Chain-length bits
// ---------------------------------------------------------------------------

/// Round r encloses the total area A_r = 2 pi k_r / 2^r with k_r odd:
///   r = 0: kappa = 0, one loop, A = 2 pi
///   r = 1: kappa = lambda, two loops, A = 3 pi
///   r >= 2: kappa = lambda tan(pi / 2^r), one loop, A = 2 pi - 2 pi / 2^r
/// so after removing the bits already read the residual phase is pi k_r times
/// bit r of N-1.
struct BitRound {
  double kappa = 0.0;
  int repetitions = 1;
  double area = 0.0;
};

inline BitRound bit_round(int r, double lambda) {
  if (r < 0) throw Error(ErrorKind::invalid_argument, "round index must be >= 0");
  if (r == 0) return {0.0, 1, 2.0 * pi};
  if (r == 1) return {lambda, 2, 3.0 * pi};
  const double frac = std::ldexp(1.0, -r);
  return {lambda * std::tan(pi * frac), 1, 2.0 * pi - 2.0 * pi * frac};
}

struct BitEstimate {
  std::size_t n = 0;
  std::vector<int> bits;                  ///< bit r of N-1, least significant first
  std::vector<ExperimentRecord> rounds;   ///< theta_or_chi holds the compensation chi_r
  std::vector<double> probabilities;      ///< interference probability per round
  bool low_confidence = false;            ///< some round fell within 0.05 of 1/2
};

inline constexpr double ambiguity_band = 0.05;

inline BitEstimate estimate_length_bits(const ChainOracle& chain, int max_bits, std::uint64_t seed = 0) {
  if (max_bits < 1 || max_bits > 30) throw Error(ErrorKind::invalid_argument, "max_bits must lie in 1..30");
  BitEstimate est;
  std::uint64_t low = 0;
  for (int r = 0; r < max_bits; ++r) {
    const BitRound round = bit_round(r, chain.lambda());
    const std::uint64_t run_seed = child_seed(seed, static_cast<std::size_t>(r));
    const LoopResult res = chain.loop(round.kappa, round.repetitions, run_seed);
    const double chi = -0.5 * static_cast<double>(low) * round.area;
    const double p = interference_probability(res.amplitude, chi);
    const int bit = p < 0.5 ? 1 : 0;
    if (std::abs(p - 0.5) < ambiguity_band) est.low_confidence = true;
    low |= static_cast<std::uint64_t>(bit) << r;
    est.bits.push_back(bit);
    est.probabilities.push_back(p);
    est.rounds.push_back({wrap_angle(chi), round.kappa, res.return_probability, res.phase,
                          std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(),
                          run_seed});
  }
  est.n = static_cast<std::size_t>(low) + 1;
  return est;
}

// ---------------------------------------------------------------------------
// Scans
// ---------------------------------------------------------------------------

struct FringeFit {
  double nu = 0.0;
  double chi0 = 0.0;  ///< in (-pi, pi]
  double mean = 0.0;
  std::vector<ExperimentRecord> records;
};

/// Least-squares fit of P(chi) = c0 + c1 cos chi + c2 sin chi, so that
/// nu = 2 sqrt(c1^2 + c2^2) and chi0 = atan2(c2, c1).
inline FringeFit fit_fringe(const std::vector<double>& chi, const std::vector<double>& p) {
  if (chi.size() != p.size()) throw Error(ErrorKind::dimension_mismatch, "chi and P lengths differ");
  if (chi.size() < 3) throw Error(ErrorKind::invalid_argument, "fringe fit needs at least 3 points");
  const auto n = static_cast<Eigen::Index>(chi.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double c = chi[static_cast<std::size_t>(i)];
    a(i, 0) = 1.0;
    a(i, 1) = std::cos(c);
    a(i, 2) = std::sin(c);
    b(i) = p[static_cast<std::size_t>(i)];
  }
  const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  if (qr.rank() < 3) throw Error(ErrorKind::numerical, "chi grid does not determine the fringe");
  const Eigen::Vector3d c = qr.solve(b);
  FringeFit fit;
  fit.mean = c(0);
  fit.nu = 2.0 * std::hypot(c(1), c(2));
  fit.chi0 = wrap_angle(std::atan2(c(2), c(1)));
  return fit;
}

/// Uniform analysis-angle grid on [0, 2pi).
inline std::vector<double> chi_grid(std::size_t points) {
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) g[i] = 2.0 * pi * static_cast<double>(i) / static_cast<double>(points);
  return g;
}

/// Open theta grid k pi/(points + 1), k = 1..points.
inline std::vector<double> theta_grid(std::size_t points) {
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) g[i] = pi * static_cast<double>(i + 1) / static_cast<double>(points + 1);
  return g;
}

/// One loop per chi point (fresh timing draws per point), then a fringe fit.
inline FringeFit fringe_scan(std::size_t N, double lambda, double kappa, const std::vector<double>& chis,
                             const ErrorModel& errors = {}) {
  const ChainOracle chain(N, lambda, errors);
  auto records = parallel_map(chis.size(), [&](std::size_t i) {
    const std::uint64_t s = child_seed(errors.seed, i);
    const LoopResult res = chain.loop(kappa, 1, s);
    ExperimentRecord rec;
    rec.theta_or_chi = chis[i];
    rec.kappa = kappa;
    rec.arrival_prob = res.return_probability;
    rec.phase = res.phase;
    rec.seed = s;
    return rec;
  });
  std::vector<double> p(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const cplx a = std::polar(std::sqrt(records[i].arrival_prob), records[i].phase);
    p[i] = interference_probability(a, chis[i]);
  }
  FringeFit fit = fit_fringe(chis, p);
  for (auto& r : records) {
    r.nu = fit.nu;
    r.chi0 = fit.chi0;
  }
  fit.records = std::move(records);
  return fit;
}

struct FrequencyEstimate {
  double J = 0.0;
  std::size_t n = 0;
  std::vector<double> scores;  ///< template correlation for N = 2 .. max_n
  std::vector<ExperimentRecord> records;
};

/// Phase-locked template search. The error-free scan with kappa = lambda cot
/// theta is P(theta) = (1 + cos(m (theta + pi/2)))/2 with m = N - 1, so each
/// candidate m is scored by the correlation of the centred data with the
/// centred template; the best m gives J = m/2. Requires at least four points
/// per oscillation of the highest candidate.
inline FrequencyEstimate estimate_frequency(const std::vector<double>& theta, const std::vector<double>& p,
                                            std::size_t max_n = 32) {
  if (theta.size() != p.size()) throw Error(ErrorKind::dimension_mismatch, "theta and P lengths differ");
  if (max_n < 2) throw Error(ErrorKind::invalid_argument, "max_n must be >= 2");
  if (theta.size() < 4) throw Error(ErrorKind::invalid_argument, "frequency scan needs at least 4 points");
  std::vector<double> sorted = theta;
  std::sort(sorted.begin(), sorted.end());
  double gap = 0.0;
  for (std::size_t i = 1; i < sorted.size(); ++i) gap = std::max(gap, sorted[i] - sorted[i - 1]);
  const double m_max = static_cast<double>(max_n - 1);
  if (gap * m_max > 0.5 * pi)
    throw Error(ErrorKind::invalid_argument, "theta grid too coarse: fewer than 4 points per oscillation for N = " +
                                                 std::to_string(max_n));

  const auto n = static_cast<Eigen::Index>(p.size());
  Eigen::VectorXd data = Eigen::Map<const Eigen::VectorXd>(p.data(), n);
  data.array() -= data.mean();

  FrequencyEstimate est;
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_m = 1;
  for (std::size_t m = 1; m + 1 <= max_n; ++m) {
    Eigen::VectorXd t(n);
    for (Eigen::Index i = 0; i < n; ++i)
      t(i) = std::cos(static_cast<double>(m) * (theta[static_cast<std::size_t>(i)] + 0.5 * pi));
    t.array() -= t.mean();
    const double norm = t.norm();
    const double score = norm > 0.0 ? data.dot(t) / norm : 0.0;
    est.scores.push_back(score);
    if (score > best) {
      best = score;
      best_m = m;
    }
  }
  est.n = best_m + 1;
  est.J = 0.5 * static_cast<double>(best_m);
  return est;
}

/// Loop plus chi = 0 readout over the theta grid with kappa = lambda cot theta.
/// Coupling disorder is frozen from errors.seed; each point draws its timing
/// from seed ^ index.
inline FrequencyEstimate frequency_scan(std::size_t N, double lambda, const std::vector<double>& theta,
                                        const ErrorModel& errors = {}, std::size_t max_n = 32) {
  for (double t : theta)
    if (!(t > 0.0 && t < pi)) throw Error(ErrorKind::invalid_argument, "theta must lie in (0, pi)");
  // Validate the grid before spending any time on the simulation.
  estimate_frequency(theta, std::vector<double>(theta.size(), 0.0), max_n);

  const ChainOracle chain(N, lambda, errors);
  auto records = parallel_map(theta.size(), [&](std::size_t i) {
    const std::uint64_t s = child_seed(errors.seed, i);
    const double kappa = lambda / std::tan(theta[i]);
    const LoopResult res = chain.loop(kappa, 1, s);
    ExperimentRecord rec;
    rec.theta_or_chi = theta[i];
    rec.kappa = kappa;
    rec.arrival_prob = res.return_probability;
    rec.phase = res.phase;
    rec.seed = s;
    return rec;
  });
  std::vector<double> p(records.size());
  for (std::size_t i = 0; i < records.size(); ++i)
    p[i] = interference_probability(std::polar(std::sqrt(records[i].arrival_prob), records[i].phase), 0.0);
  FrequencyEstimate est = estimate_frequency(theta, p, max_n);
  est.records = std::move(records);
  return est;
}

// ---------------------------------------------------------------------------
// Offset calibration
// ---------------------------------------------------------------------------

struct OffsetCalibration {
  double measured_phase = 0.0;    ///< vacuum-relative phase, -b t mod 2pi
  double dynamical_phase = 0.0;   ///< b t recovered from it, in (-pi, pi]
  double return_probability = 0.0;
};

/// The full-circle loop encloses a whole sphere, whose geometric phase is a
/// multiple of 2pi, so only the offset's dynamical phase survives.
inline OffsetCalibration calibrate_offset(std::size_t N, double lambda, double kappa, double field_offset) {
  require_positive(lambda, "lambda");
  const LoopResult res = ChainOracle(N, lambda).offset_loop(kappa, field_offset);
  return {res.phase, wrap_angle(-res.phase), res.return_probability};
}

}  // namespace spinweave
