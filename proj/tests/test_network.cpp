#include <gtest/gtest.h>

#include <cmath>

#include "spinweave/dynamics.hpp"
#include "spinweave/network.hpp"

using namespace spinweave;

namespace {

double hop_of(const NetworkSpec& s, std::size_t a, std::size_t b) { return s.hop(a, b).value().real(); }

/// |<out|U(t)|in>|^2 in the single-excitation sector.
double transfer(const NetworkSpec& s, std::size_t in, std::size_t out, double t) {
  return arrival_probability(propagate(assemble(s), t, StateVector::basis(s.n_sites(), in)), {out});
}

}  // namespace

TEST(NetworkSpec, RejectsSelfLoopsDuplicatesAndBadSites) {
  NetworkSpec s(3);
  s.add_edge(0, 1, 1.0);
  EXPECT_THROW(s.add_edge(1, 1, 1.0), Error);
  EXPECT_THROW(s.add_edge(1, 0, 2.0), Error);
  EXPECT_THROW(s.add_edge(0, 3, 1.0), Error);
  EXPECT_THROW(s.add_onsite(5, 1.0), Error);
  EXPECT_THROW(s.set_port("in", {0, 0}), Error);
  EXPECT_THROW(s.set_port("in", {4}), Error);
  EXPECT_THROW(s.port("missing"), Error);
}

TEST(NetworkSpec, ReverseHopIsConjugate) {
  NetworkSpec s(2);
  s.add_edge(0, 1, cplx(0.3, 0.4));
  EXPECT_EQ(*s.hop(0, 1), cplx(0.3, 0.4));
  EXPECT_EQ(*s.hop(1, 0), cplx(0.3, -0.4));
  EXPECT_FALSE(NetworkSpec(3).hop(0, 2).has_value());
}

TEST(PstChain, TwoSiteHopIsHalfLambda) {
  const auto s = build_pst_chain(2, 1.0);
  ASSERT_EQ(s.edges().size(), 1u);
  EXPECT_DOUBLE_EQ(hop_of(s, 0, 1), 0.5);
  EXPECT_EQ(s.port("in"), std::vector<std::size_t>{0});
  EXPECT_EQ(s.port("out"), std::vector<std::size_t>{1});
}

TEST(PstChain, MirrorSymmetricHops) {
  const auto s = build_pst_chain(9, 1.7);
  for (std::size_t n = 1; n < 9; ++n) EXPECT_DOUBLE_EQ(hop_of(s, n - 1, n), hop_of(s, 9 - n - 1, 9 - n));
}

TEST(PstChain, SixSiteHops) {
  const auto s = build_pst_chain(6, 1.0);
  const double want[] = {std::sqrt(5.0), std::sqrt(8.0), 3.0, std::sqrt(8.0), std::sqrt(5.0)};
  for (std::size_t n = 0; n < 5; ++n) EXPECT_NEAR(hop_of(s, n, n + 1), 0.5 * want[n], 1e-15);
}

TEST(PstChain, RejectsShortChain) {
  try {
    build_pst_chain(1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_size);
  }
}

TEST(Gradient, Values) {
  const auto d = gradient_diagonal(5, 2.0);
  const std::vector<double> want{4, 2, 0, -2, -4};
  for (std::size_t i = 0; i < 5; ++i) EXPECT_DOUBLE_EQ(d[i], want[i]);
  for (double x : gradient_diagonal(7, 0.0)) EXPECT_EQ(x, 0.0);
  const auto e = gradient_diagonal(4, 1.0, 0.3);
  const std::vector<double> want_e{1.8, 0.8, -0.2, -1.2};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(e[i], want_e[i], 1e-15);
}

TEST(YJunction, JunctionHopsAndDarkState) {
  const std::size_t N = 5;
  const auto y = build_y_junction(N, 1.0);
  EXPECT_EQ(y.n_sites(), N + 1);
  EXPECT_NEAR(hop_of(y, 0, 2), 0.5 * std::sqrt(N - 1.0) / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(hop_of(y, 1, 2), 0.5 * std::sqrt(N - 1.0) / std::sqrt(2.0), 1e-15);

  const CMatrix h = assemble(y).matrix();
  CVector dark = CVector::Zero(N + 1);
  dark(0) = 1 / std::sqrt(2.0);
  dark(1) = -1 / std::sqrt(2.0);
  EXPECT_LT((h * dark).norm(), 1e-14);
  EXPECT_THROW(build_y_junction(2), Error);
}

TEST(YJunction, SymmetricInputBehavesLikeChainSiteOne) {
  const std::size_t N = 6;
  const auto y = build_y_junction(N, 1.0);
  const auto chain = build_pst_chain(N, 1.0);
  StateVector sym{0.0, CVector::Zero(N + 1)};
  sym.amplitudes(0) = sym.amplitudes(1) = 1 / std::sqrt(2.0);
  for (double t : {0.3, 1.1, pi}) {
    const auto a = propagate(assemble(y), t, sym);
    const auto b = propagate(assemble(chain), t, StateVector::basis(N, 0));
    for (std::size_t n = 2; n <= N; ++n) EXPECT_NEAR(std::abs(a.amplitudes(n) - b.amplitudes(n - 1)), 0.0, 1e-12);
  }
}

TEST(FluxRing, EdgeCountAndPhase) {
  const auto ring = build_flux_ring(4, 1.0, 0.9);
  EXPECT_EQ(ring.edges().size(), 6u);
  EXPECT_EQ(flux_ring_edge_count(4), 6u);
  for (const Edge& e : ring.edges()) EXPECT_NEAR(std::arg(e.amplitude), 0.9 / 6, 1e-14);
  EXPECT_EQ(ring.n_sites(), 6u);
}

TEST(FluxRing, ZeroAndFullFluxTransferPerfectly) {
  for (std::size_t N : {3, 4, 6}) {
    const auto r0 = build_flux_ring(N, 1.0, 0.0);
    EXPECT_GE(transfer(r0, 0, 1, pi), 1 - 1e-10);
    EXPECT_NEAR(transfer(build_flux_ring(N, 1.0, 2 * pi), 0, 1, pi), transfer(r0, 0, 1, pi), 1e-10);
  }
}

TEST(FluxRing, SingleEdgePlacementIsGaugeEquivalent) {
  for (double phi : {0.4, pi / 3, 2.0}) {
    const double a = transfer(build_flux_ring(5, 1.0, phi), 0, 1, 2.3);
    const double b = transfer(build_flux_ring(5, 1.0, phi, FluxPlacement::single_edge), 0, 1, 2.3);
    EXPECT_NEAR(a, b, 1e-12);
  }
}

TEST(HadamardUnit, DecouplesInRotatedBasis) {
  const auto u = build_hadamard_unit(1.0);
  const CMatrix h = assemble(u).matrix();
  CVector plus = CVector::Zero(4), minus = CVector::Zero(4);
  plus(0) = plus(1) = minus(0) = 1 / std::sqrt(2.0);
  minus(1) = -1 / std::sqrt(2.0);
  // |+> couples only to R2 (site 3), |-> only to R1 (site 2), each with sqrt2.
  EXPECT_NEAR(std::abs((h * plus)(3)), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(std::abs((h * plus)(2)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs((h * minus)(2)), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(std::abs((h * minus)(3)), 0.0, 1e-14);
}

TEST(HadamardUnit, TransfersPlusStateAtRabiTime) {
  const auto u = build_hadamard_unit(1.0);
  StateVector plus{0.0, CVector::Zero(4)};
  plus.amplitudes(0) = plus.amplitudes(1) = 1 / std::sqrt(2.0);
  const auto out = propagate(assemble(u), pi / (2 * std::sqrt(2.0)), plus);
  EXPECT_NEAR(arrival_probability(out, {3}), 1.0, 1e-12);
  EXPECT_THROW(build_hadamard_unit(0.0), Error);
}

TEST(SingleQubitNetwork, StructureAndArrival) {
  const auto s = build_single_qubit_network(1.0, 2.0, 3.0, 1.0);
  EXPECT_EQ(s.n_sites(), 12u);
  EXPECT_EQ(s.edges().size(), 14u);
  EXPECT_NEAR(std::arg(*s.hop(6, 7)), 1.0, 1e-14);
  EXPECT_NEAR(std::arg(*s.hop(8, 9)), 2.0, 1e-14);
  EXPECT_NEAR(std::arg(*s.hop(10, 11)), 3.0, 1e-14);
  const auto p = dual_rail_ports(s);
  EXPECT_GE(transfer(s, p.rail0_in, p.rail0_out, pi) + transfer(s, p.rail0_in, p.rail1_out, pi), 1 - 1e-10);
  EXPECT_GE(transfer(s, p.rail1_in, p.rail0_out, pi) + transfer(s, p.rail1_in, p.rail1_out, pi), 1 - 1e-10);
}

TEST(LinkedChains, ZeroThetaIsTwoChains) {
  const auto s = build_linked_chains(5, 2, 0.0, 0.7);
  for (const Edge& e : s.edges()) EXPECT_EQ((e.from < 5), (e.to < 5));
  EXPECT_THROW(build_linked_chains(5, 5, 0.1, 0.1), Error);
  EXPECT_THROW(build_linked_chains(5, 0, 0.1, 0.1), Error);
}

TEST(LinkedChains, SpectrumIndependentOfPhi) {
  const Eigen::VectorXd e0 = Propagator(assemble(build_linked_chains(4, 2, pi / 3, 0.0))).energies();
  const Eigen::VectorXd e1 = Propagator(assemble(build_linked_chains(4, 2, pi / 3, pi / 5))).energies();
  EXPECT_LT((e0 - e1).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_TRUE(is_hermitian(assemble(build_linked_chains(4, 2, pi / 3, pi / 5)).matrix(), 1e-14));
}

TEST(OnsiteBlock, ZeroIsIdentityAndLargeBlocks) {
  const auto chain = build_pst_chain(6);
  EXPECT_EQ(attach_onsite_block(chain, 2, 0.0), chain);
  EXPECT_LT(transfer(attach_onsite_block(chain, 2, 100.0), 0, 5, pi), 0.05);
  EXPECT_THROW(attach_onsite_block(chain, 6, 1.0), Error);
}

TEST(Builders, AllHermitian) {
  const std::vector<NetworkSpec> specs{build_pst_chain(7, 1.3),
                                       build_y_junction(5),
                                       build_flux_ring(5, 1.0, 1.1),
                                       build_phase_chain(4, 1.0, 0.8),
                                       build_hadamard_unit(0.7),
                                       build_hadamard_network(5, 2),
                                       build_single_qubit_network(0.3, 1.2, 2.2),
                                       build_linked_chains(6, 3, 0.9, 0.4),
                                       build_switch_chain(3, 2)};
  for (const auto& s : specs) EXPECT_LE(hermiticity_defect(assemble(s).matrix()), 1e-14);
}

TEST(Gauge, FlippingSignsAtASiteKeepsTransfer) {
  const auto s = build_single_qubit_network(0.4, 1.9, 2.7);
  NetworkSpec flipped(s.n_sites());
  for (const Edge& e : s.edges())
    flipped.add_edge(e.from, e.to, (e.from == 3 || e.to == 3) ? -e.amplitude : e.amplitude);
  for (std::size_t out = 0; out < 12; ++out) EXPECT_NEAR(transfer(s, 0, out, 1.7), transfer(flipped, 0, out, 1.7), 1e-12);
}

TEST(DualRailPorts, MustBeDistinct) {
  DualRailPorts p{0, 1, 2, 2};
  EXPECT_THROW(p.validate(4), Error);
  EXPECT_THROW((DualRailPorts{0, 1, 2, 9}.validate(4)), Error);
  EXPECT_NO_THROW((DualRailPorts{0, 1, 2, 3}.validate(4)));
}
