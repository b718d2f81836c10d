#include <gtest/gtest.h>

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "spinweave/protocols.hpp"

using namespace spinweave;

TEST(SolidAngle, Values) {
  EXPECT_DOUBLE_EQ(solid_angle(1.0, 0.0), pi);
  EXPECT_NEAR(solid_angle(1.0, 1.0), pi / 2, 1e-15);
  EXPECT_NEAR(solid_angle(1.0, std::sqrt(3.0)), pi / 3, 1e-15);
  EXPECT_THROW(solid_angle(1.0, -1.0), Error);
  EXPECT_THROW(solid_angle(0.0, 1.0), Error);
  for (double om : {0.3, 1.0, pi / 2, 2.5, pi}) EXPECT_NEAR(solid_angle(1.3, kappa_for_solid_angle(1.3, om)), om, 1e-14);
}

TEST(PredictedPhase, Values) {
  EXPECT_DOUBLE_EQ(predicted_phase(3, pi), pi);
  EXPECT_DOUBLE_EQ(predicted_phase(9, 0.0), 0.0);
  EXPECT_NEAR(predicted_phase(8, pi / 2), 7 * pi / 4, 1e-15);
}

TEST(GeometricLoop, ReturnsWithUnitProbability) {
  for (std::size_t N : {2, 3, 5, 8})
    for (double k : {0.0, 0.5, 1.0, 3.0, -0.7}) EXPECT_GE(geometric_loop(N, 1.0, k).return_probability, 1 - 1e-10);
}

TEST(GeometricLoop, PlainLoopPhaseIsPiTimesNMinusOne) {
  for (std::size_t N = 2; N <= 9; ++N)
    EXPECT_LT(angle_distance(geometric_loop(N, 1.0, 0.0).phase, pi * (N - 1.0)), 1e-9) << N;
}

TEST(GeometricLoop, PhaseFollowsEnclosedArea) {
  // The axis path encloses pi + Omega, and the returned phase is -J (pi + Omega).
  for (std::size_t N : {3, 4, 8})
    for (double k : {0.2, 0.5, 1.0, 3.0, 10.0})
      for (double lambda : {0.7, 1.0}) {
        const double omega = solid_angle(lambda, k);
        const double want = -0.5 * (N - 1.0) * (pi + omega);
        EXPECT_LT(angle_distance(geometric_loop(N, lambda, k).phase, want), 1e-9);
        EXPECT_LT(angle_distance(loop_phase_law(N, lambda, k), want), 1e-12);
      }
}

TEST(GeometricLoop, PhaseSlopeInOmegaIsJ) {
  for (std::size_t N : {3, 8}) {
    const double a = 1.0, b = 1.02;
    const double pa = geometric_loop(N, 1.0, kappa_for_solid_angle(1.0, a)).phase;
    const double pb = geometric_loop(N, 1.0, kappa_for_solid_angle(1.0, b)).phase;
    EXPECT_NEAR(std::abs(wrap_angle(pb - pa)) / (b - a), 0.5 * (N - 1.0), 1e-8);
  }
}

TEST(Interference, Law) {
  EXPECT_DOUBLE_EQ(interference_probability(1.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(interference_probability(-1.0, 0.0), 0.0);
  EXPECT_NEAR(interference_probability(I, pi / 2), 1.0, 1e-15);
  EXPECT_THROW(interference_probability(1.5, 0.0), Error);
}

namespace {

/// XY Hamiltonian of a network on the full 2^n space; qubit 0 is the most
/// significant bit.
CMatrix full_space_hamiltonian(const NetworkSpec& s) {
  const int n = static_cast<int>(s.n_sites());
  const Eigen::Index dim = Eigen::Index(1) << n;
  CMatrix h = CMatrix::Zero(dim, dim);
  auto bit = [n](Eigen::Index state, std::size_t site) { return (state >> (n - 1 - static_cast<int>(site))) & 1; };
  for (Eigen::Index st = 0; st < dim; ++st) {
    for (std::size_t i = 0; i < s.n_sites(); ++i)
      if (bit(st, i)) h(st, st) += s.onsite()[i];
    for (const Edge& e : s.edges()) {
      if (bit(st, e.from) && !bit(st, e.to)) {
        const Eigen::Index to = st ^ (Eigen::Index(1) << (n - 1 - static_cast<int>(e.from))) ^
                                (Eigen::Index(1) << (n - 1 - static_cast<int>(e.to)));
        h(to, st) += e.amplitude;
        h(st, to) += std::conj(e.amplitude);
      }
    }
  }
  return h;
}

}  // namespace

TEST(Interference, MatchesFullQubitSpaceMeasurement) {
  // Three sites with detuned, irregular couplings so the return amplitude has |a| < 1.
  NetworkSpec s(3);
  s.add_edge(0, 1, 0.61).add_edge(1, 2, cplx(0.37, 0.12)).add_onsite(1, 0.23).add_onsite(2, -0.4);
  NetworkSpec g = s;
  g.add_onsite(0, 0.8).add_onsite(2, -0.8);
  const Schedule sched{{assemble(s), 0.9}, {assemble(g), 1.7}, {assemble(s), 0.4}};
  const StateVector out = run_schedule(sched, StateVector::with_reference(3, 0));
  const cplx a = out.amplitudes(0) / out.vacuum;
  ASSERT_LT(std::abs(a), 0.99);

  // Hadamard on qubit 0 of |000>, the same evolution, then diag(1, e^{-i chi}) and
  // Hadamard on qubit 0, reading P(qubit 0 = 0).
  const Matrix2c had = pauli::hadamard();
  const CMatrix id4 = CMatrix::Identity(4, 4);
  CVector psi = CVector::Zero(8);
  psi(0) = 1.0;
  psi = Eigen::kroneckerProduct(CMatrix(had), id4).eval() * psi;
  for (const auto& [h, t] : std::vector<std::pair<NetworkSpec, double>>{{s, 0.9}, {g, 1.7}, {s, 0.4}})
    psi = time_evolution(SubspaceOperator(full_space_hamiltonian(h)), t) * psi;
  for (double chi : {0.0, 0.7, 2.0, -1.1}) {
    const Matrix2c readout = had * pauli::phase(-chi);
    const CVector fin = Eigen::kroneckerProduct(CMatrix(readout), id4).eval() * psi;
    const double p0 = fin.head(4).squaredNorm();
    EXPECT_NEAR(interference_probability(a, chi), p0, 1e-12);
  }
}

TEST(ErrorModel, ValidationAndDeterminism) {
  EXPECT_THROW((ErrorModel{1.0, 0.0, 0.0, 0}.validate()), Error);
  EXPECT_THROW((ErrorModel{0.0, -0.1, 0.0, 0}.validate()), Error);
  const ErrorModel e{0.3, 0.4, 0.0, 99};
  EXPECT_EQ(coupling_factors(e, 7), coupling_factors(e, 7));
  EXPECT_EQ(timing_factors(e, 5, 3), timing_factors(e, 5, 3));
  EXPECT_NE(timing_factors(e, 5, 3), timing_factors(e, 6, 3));
  for (double f : coupling_factors(e, 50)) EXPECT_TRUE(f >= 0.6 && f <= 1.4);
  for (double f : timing_factors(ErrorModel{}, 1, 4)) EXPECT_EQ(f, 1.0);
}

TEST(GeometricLoop, SameSeedSameResult) {
  const ErrorModel e{0.5, 0.3, 0.0, 17};
  const auto a = geometric_loop(6, 1.0, 0.8, e, 1, 4);
  const auto b = geometric_loop(6, 1.0, 0.8, e, 1, 4);
  EXPECT_EQ(a.amplitude, b.amplitude);
  EXPECT_LT(a.return_probability, 1.0);
}

TEST(Bits, RecoversLengths) {
  EXPECT_EQ(estimate_length_bits(ChainOracle(8), 4).n, 8u);
  EXPECT_EQ(estimate_length_bits(ChainOracle(5), 3).n, 5u);
  for (std::size_t N = 2; N <= 16; ++N) {
    const auto est = estimate_length_bits(ChainOracle(N), 4);
    EXPECT_EQ(est.n, N);
    EXPECT_FALSE(est.low_confidence);
    for (double p : est.probabilities) EXPECT_TRUE(p < 1e-9 || p > 1 - 1e-9);
  }
}

TEST(Bits, ParityRound) {
  EXPECT_EQ(estimate_length_bits(ChainOracle(2), 1).bits, std::vector<int>{1});
  EXPECT_EQ(estimate_length_bits(ChainOracle(7), 1).bits, std::vector<int>{0});
  // Lengths alias modulo 2^bits.
  EXPECT_EQ(estimate_length_bits(ChainOracle(19), 4).n, 3u);
}

TEST(Bits, FlagsAmbiguousRounds) {
  // Heavy timing jitter scrambles the rounds; at least one seed lands near 1/2.
  bool flagged = false;
  for (std::uint64_t seed = 0; seed < 20 && !flagged; ++seed)
    flagged = estimate_length_bits(ChainOracle(8, 1.0, ErrorModel{0.9, 0.0, 0.0, seed}), 4, seed).low_confidence;
  EXPECT_TRUE(flagged);
  EXPECT_THROW(estimate_length_bits(ChainOracle(8), 0), Error);
}

TEST(Fringe, ErrorFreeFitFollowsLoopPhase) {
  const auto fit = fringe_scan(8, 1.0, 1.0, chi_grid(64));
  EXPECT_NEAR(fit.nu, 1.0, 1e-9);
  EXPECT_LT(angle_distance(fit.chi0, loop_phase_law(8, 1.0, 1.0)), 1e-9);
  EXPECT_EQ(fit.records.size(), 64u);
}

TEST(Fringe, LargeGradientLimit) {
  // Omega -> 0 leaves the plain half-sphere phase -J pi.
  const auto fit = fringe_scan(5, 1.0, 1e6, chi_grid(32));
  EXPECT_LT(angle_distance(fit.chi0, -2.0 * pi), 1e-5);
}

TEST(Fringe, VisibilityBoundedUnderErrors) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto fit = fringe_scan(6, 1.0, 0.7, chi_grid(40), ErrorModel{0.4, 0.3, 0.0, seed});
    EXPECT_LE(fit.nu, 1 + 1e-9);
  }
}

TEST(Fringe, FitRecoversSyntheticCurve) {
  std::vector<double> chi = chi_grid(17), p;
  for (double c : chi) p.push_back(0.5 * (1 + 0.6 * std::cos(c - 1.2)));
  const auto fit = fit_fringe(chi, p);
  EXPECT_NEAR(fit.nu, 0.6, 1e-12);
  EXPECT_NEAR(fit.chi0, 1.2, 1e-12);
  EXPECT_THROW(fit_fringe({0.0, 1.0}, {0.5, 0.5}), Error);
}

TEST(FrequencyScan, ErrorFree) {
  const auto est = frequency_scan(8, 1.0, theta_grid(256));
  EXPECT_EQ(est.n, 8u);
  EXPECT_DOUBLE_EQ(est.J, 3.5);
  EXPECT_EQ(est.records.size(), 256u);
  const auto two = frequency_scan(2, 1.0, theta_grid(256));
  EXPECT_DOUBLE_EQ(two.J, 0.5);
}

TEST(FrequencyScan, RefusesCoarseGrid) {
  EXPECT_THROW(frequency_scan(8, 1.0, theta_grid(40)), Error);
  EXPECT_NO_THROW(frequency_scan(8, 1.0, theta_grid(40), {}, 16));
}

TEST(FrequencyScan, TimingJitterMajorityCorrect) {
  int correct = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    correct += frequency_scan(8, 1.0, theta_grid(256), ErrorModel{0.5, 0.0, 0.0, seed}).n == 8;
  EXPECT_GT(correct, 15);
}

TEST(FrequencyScan, ModerateCouplingDisorder) {
  int correct = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    correct += frequency_scan(8, 1.0, theta_grid(256), ErrorModel{0.0, 0.4, 0.0, seed}).n == 8;
  EXPECT_GE(correct, 24);
}

TEST(FrequencyScan, IndependentOfWorkerCount) {
  const ErrorModel e{0.3, 0.2, 0.0, 5};
  const auto grid = theta_grid(128);
  setenv("SPINWEAVE_THREADS", "1", 1);
  const auto a = frequency_scan(6, 1.0, grid, e);
  setenv("SPINWEAVE_THREADS", "4", 1);
  const auto b = frequency_scan(6, 1.0, grid, e);
  unsetenv("SPINWEAVE_THREADS");
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].arrival_prob, b.records[i].arrival_prob);
    EXPECT_EQ(a.records[i].phase, b.records[i].phase);
  }
  EXPECT_EQ(a.scores, b.scores);
}

TEST(Offset, RecoversDynamicalPhase) {
  EXPECT_LT(std::abs(calibrate_offset(8, 1.0, 1.0, 0.0).measured_phase), 1e-9);
  for (double b : {0.1, -0.3, 0.05})
    EXPECT_LT(angle_distance(calibrate_offset(8, 1.0, 1.0, b).dynamical_phase, b * 2 * pi / std::sqrt(2.0)), 1e-9);
  EXPECT_NEAR(std::abs(calibrate_offset(8, 1.0, 1.0, 0.1).measured_phase), 0.1 * 2 * pi / std::sqrt(2.0), 1e-6);
}

TEST(Offset, IndependentOfChainLength) {
  for (std::size_t N : {3, 4, 7, 10})
    EXPECT_NEAR(calibrate_offset(N, 1.0, 0.6, 0.17).dynamical_phase, calibrate_offset(5, 1.0, 0.6, 0.17).dynamical_phase,
                1e-9);
}
