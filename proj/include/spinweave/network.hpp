#pragma once

// Graph-level description of spin networks and builders for the standard
// topologies: perfect-transfer chains, Y-junction, flux ring, Hadamard unit,
// the arbitrary single-qubit rotation network and linked chains.
//
// Hop convention: an edge (from, to, a) stores the single-excitation matrix
// element <to|H|from> = a; the reverse hop is conj(a). A coupling written as
// J (sx sx + sy sy) therefore appears here as a = 2J. Sites are 0-based in
// memory and 1-based in files.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinweave/error.hpp"
#include "spinweave/linalg.hpp"

namespace spinweave {

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  cplx amplitude{};

  friend bool operator==(const Edge&, const Edge&) = default;
};

class NetworkSpec {
 public:
  using PortMap = std::map<std::string, std::vector<std::size_t>>;

  explicit NetworkSpec(std::size_t n_sites) : n_sites_(n_sites), onsite_(n_sites, 0.0) {}

  std::size_t n_sites() const noexcept { return n_sites_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<double>& onsite() const noexcept { return onsite_; }
  const PortMap& ports() const noexcept { return ports_; }

  NetworkSpec& add_edge(std::size_t from, std::size_t to, cplx amplitude) {
    check_site(from);
    check_site(to);
    if (from == to)
      throw Error(ErrorKind::invalid_argument, "self-loop on site " + std::to_string(from + 1));
    if (find_edge(from, to) != edges_.end())
      throw Error(ErrorKind::invalid_argument, "duplicate edge between sites " +
                                                   std::to_string(from + 1) + " and " +
                                                   std::to_string(to + 1));
    edges_.push_back({from, to, amplitude});
    return *this;
  }

  /// Accumulates onto the site's existing energy.
  NetworkSpec& add_onsite(std::size_t site, double energy) {
    check_site(site);
    onsite_[site] += energy;
    return *this;
  }

  NetworkSpec& set_port(const std::string& name, std::vector<std::size_t> sites) {
    for (std::size_t s : sites) check_site(s);
    auto sorted = sites;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorKind::invalid_argument, "port '" + name + "' lists a site twice");
    ports_[name] = std::move(sites);
    return *this;
  }

  const std::vector<std::size_t>& port(const std::string& name) const {
    auto it = ports_.find(name);
    if (it == ports_.end()) throw Error(ErrorKind::invalid_argument, "no port named '" + name + "'");
    return it->second;
  }

  bool has_port(const std::string& name) const { return ports_.count(name) != 0; }

  /// <to|H|from>, or nullopt when the pair is uncoupled.
  std::optional<cplx> hop(std::size_t from, std::size_t to) const {
    auto it = find_edge(from, to);
    if (it == edges_.end()) return std::nullopt;
    return it->from == from ? it->amplitude : std::conj(it->amplitude);
  }

  /// Multiplies every edge amplitude by factors[e] (edge order).
  NetworkSpec scaled_edges(const std::vector<double>& factors) const {
    if (factors.size() != edges_.size())
      throw Error(ErrorKind::dimension_mismatch, "one factor per edge required");
    NetworkSpec out = *this;
    for (std::size_t e = 0; e < edges_.size(); ++e) out.edges_[e].amplitude *= factors[e];
    return out;
  }

  friend bool operator==(const NetworkSpec&, const NetworkSpec&) = default;

 private:
  void check_site(std::size_t s) const {
    if (s >= n_sites_)
      throw Error(ErrorKind::invalid_site, "site " + std::to_string(s + 1) + " outside 1.." +
                                               std::to_string(n_sites_));
  }

  std::vector<Edge>::const_iterator find_edge(std::size_t a, std::size_t b) const {
    return std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) {
      return (e.from == a && e.to == b) || (e.from == b && e.to == a);
    });
  }

  std::size_t n_sites_;
  std::vector<Edge> edges_;
  std::vector<double> onsite_;
  PortMap ports_;
};

/// Input and output sites of a dual-rail qubit; |0_L> lives on rail 0.
struct DualRailPorts {
  std::size_t rail0_in = 0;
  std::size_t rail1_in = 0;
  std::size_t rail0_out = 0;
  std::size_t rail1_out = 0;

  void validate(std::size_t n_sites) const {
    const std::size_t s[4] = {rail0_in, rail1_in, rail0_out, rail1_out};
    for (int a = 0; a < 4; ++a) {
      if (s[a] >= n_sites) throw Error(ErrorKind::invalid_site, "dual-rail port outside network");
      for (int b = a + 1; b < 4; ++b)
        if (s[a] == s[b]) throw Error(ErrorKind::invalid_argument, "dual-rail ports must be distinct");
    }
  }
};

/// Reads the rail0_in / rail1_in / rail0_out / rail1_out ports (first site of each).
inline DualRailPorts dual_rail_ports(const NetworkSpec& spec) {
  DualRailPorts p{spec.port("rail0_in").at(0), spec.port("rail1_in").at(0),
                  spec.port("rail0_out").at(0), spec.port("rail1_out").at(0)};
  p.validate(spec.n_sites());
  return p;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Hop amplitude of link n (1-based, between sites n and n+1) in the
/// perfect-transfer chain of length N: (lambda/2) sqrt(n (N - n)).
inline double pst_hop(std::size_t N, std::size_t n, double lambda) {
  return 0.5 * lambda * std::sqrt(static_cast<double>(n) * static_cast<double>(N - n));
}

inline void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw Error(ErrorKind::invalid_argument, std::string(what) + " must be positive");
}

inline NetworkSpec build_pst_chain(std::size_t N, double lambda = 1.0) {
  if (N < 2) throw Error(ErrorKind::invalid_size, "perfect-transfer chain needs N >= 2");
  require_positive(lambda, "lambda");
  NetworkSpec spec(N);
  for (std::size_t n = 1; n < N; ++n) spec.add_edge(n - 1, n, pst_hop(N, n, lambda));
  spec.set_port("in", {0}).set_port("out", {N - 1});
  return spec;
}

/// On-site energies of the linear gradient, entry n = (kappa/2)(N+1-2n) + offset.
inline std::vector<double> gradient_diagonal(std::size_t N, double kappa, double offset = 0.0) {
  if (N < 2) throw Error(ErrorKind::invalid_size, "gradient needs N >= 2");
  std::vector<double> d(N);
  for (std::size_t n = 1; n <= N; ++n)
    d[n - 1] = 0.5 * kappa * (static_cast<double>(N + 1) - 2.0 * static_cast<double>(n)) + offset;
  return d;
}

/// Two input sites (0, 1) both feeding chain site 2 with J_1/sqrt2, then the
/// rest of a length-N chain on sites 2..N. N+1 sites in total.
inline NetworkSpec build_y_junction(std::size_t N, double lambda = 1.0) {
  if (N < 3) throw Error(ErrorKind::invalid_size, "Y-junction needs N >= 3");
  require_positive(lambda, "lambda");
  NetworkSpec spec(N + 1);
  const double split = pst_hop(N, 1, lambda) / std::sqrt(2.0);
  spec.add_edge(0, 2, split).add_edge(1, 2, split);
  for (std::size_t n = 2; n < N; ++n) spec.add_edge(n, n + 1, pst_hop(N, n, lambda));
  spec.set_port("in_pair", {0, 1}).set_port("out", {N});
  return spec;
}

enum class FluxPlacement {
  uniform,      ///< e^{i phi/L} on every directed edge along the ring orientation
  single_edge,  ///< the whole e^{i phi} on the closing edge (gauge equivalent)
};

/// Number of edges in build_flux_ring(N, ...).
inline std::size_t flux_ring_edge_count(std::size_t N) { return 2 * (N - 1); }

/// Flux ring: site A (0), site B (1), an upper branch on sites
/// 2..N-1 and a lower branch on sites N..2N-3, each branch carrying chain
/// sites 2..N-1. Orientation: A -> upper -> B -> lower -> A.
inline NetworkSpec build_flux_ring(std::size_t N, double lambda, double phi,
                                   FluxPlacement placement = FluxPlacement::uniform) {
  if (N < 3) throw Error(ErrorKind::invalid_size, "flux ring needs N >= 3");
  require_positive(lambda, "lambda");
  const std::size_t branch = N - 2;
  NetworkSpec spec(2 + 2 * branch);
  const std::size_t a = 0, b = 1;
  auto upper = [&](std::size_t n) { return 2 + (n - 2); };           // chain site n in 2..N-1
  auto lower = [&](std::size_t n) { return 2 + branch + (n - 2); };  // chain site n in 2..N-1

  const std::size_t L = flux_ring_edge_count(N);
  const cplx step = placement == FluxPlacement::uniform ? std::polar(1.0, phi / static_cast<double>(L)) : 1.0;
  const double r2 = std::sqrt(2.0);

  spec.add_edge(a, upper(2), pst_hop(N, 1, lambda) / r2 * step);
  for (std::size_t n = 2; n + 1 <= N - 1; ++n) spec.add_edge(upper(n), upper(n + 1), pst_hop(N, n, lambda) * step);
  spec.add_edge(upper(N - 1), b, pst_hop(N, N - 1, lambda) / r2 * step);
  spec.add_edge(b, lower(N - 1), pst_hop(N, N - 1, lambda) / r2 * step);
  for (std::size_t n = N - 1; n >= 3; --n) spec.add_edge(lower(n), lower(n - 1), pst_hop(N, n - 1, lambda) * step);
  const cplx closing = placement == FluxPlacement::uniform ? step : std::polar(1.0, phi);
  spec.add_edge(lower(2), a, pst_hop(N, 1, lambda) / r2 * closing);

  spec.set_port("in", {a}).set_port("out", {b});
  return spec;
}

/// Chain whose forward hops all carry e^{i phi/(N-1)}: in the single
/// excitation sector H = cos(d) Jx + sin(d) Jy, transfer picks up phi.
inline NetworkSpec build_phase_chain(std::size_t N, double lambda, double phi) {
  if (N < 2) throw Error(ErrorKind::invalid_size, "phase chain needs N >= 2");
  require_positive(lambda, "lambda");
  NetworkSpec spec(N);
  const cplx step = std::polar(1.0, phi / static_cast<double>(N - 1));
  for (std::size_t n = 1; n < N; ++n) spec.add_edge(n - 1, n, pst_hop(N, n, lambda) * step);
  spec.set_port("in", {0}).set_port("out", {N - 1});
  return spec;
}

/// Two identical uncoupled chains; rail 0 on sites 0..N-1, rail 1 on N..2N-1.
inline NetworkSpec build_parallel_chains(std::size_t N, double lambda = 1.0) {
  if (N < 2) throw Error(ErrorKind::invalid_size, "parallel chains need N >= 2");
  require_positive(lambda, "lambda");
  NetworkSpec spec(2 * N);
  for (std::size_t n = 1; n < N; ++n) {
    spec.add_edge(n - 1, n, pst_hop(N, n, lambda));
    spec.add_edge(N + n - 1, N + n, pst_hop(N, n, lambda));
  }
  spec.set_port("rail0_in", {0}).set_port("rail0_out", {N - 1});
  spec.set_port("rail1_in", {N}).set_port("rail1_out", {2 * N - 1});
  return spec;
}

/// Hadamard unit on sites L1, L2, R1, R2 (0..3): L1-R1 = L2-R2 = L1-R2 = +s,
/// L2-R1 = -s. (L1 + L2)/sqrt2 couples only to R2 and (L1 - L2)/sqrt2 only to
/// R1, each with strength sqrt2 s, so rail 0 leaves on R2.
inline NetworkSpec build_hadamard_unit(double scale) {
  require_positive(scale, "scale");
  NetworkSpec spec(4);
  spec.add_edge(0, 2, scale).add_edge(1, 3, scale).add_edge(0, 3, scale).add_edge(1, 2, -scale);
  spec.set_port("rail0_in", {0}).set_port("rail1_in", {1});
  spec.set_port("rail0_out", {3}).set_port("rail1_out", {2});
  return spec;
}

/// Parallel chains of length N with link `link` (1..N-1) replaced by the
/// Hadamard unit at strength pst_hop/sqrt2, so the unit acts with the
/// replaced link's strength.
inline NetworkSpec build_hadamard_network(std::size_t N, std::size_t link, double lambda = 1.0) {
  if (N < 2) throw Error(ErrorKind::invalid_size, "Hadamard network needs N >= 2");
  if (link < 1 || link > N - 1) throw Error(ErrorKind::invalid_argument, "link index outside 1..N-1");
  require_positive(lambda, "lambda");
  NetworkSpec spec(2 * N);
  auto r0 = [](std::size_t n) { return n - 1; };
  auto r1 = [N](std::size_t n) { return N + n - 1; };
  for (std::size_t n = 1; n < N; ++n) {
    const double h = pst_hop(N, n, lambda);
    if (n != link) {
      spec.add_edge(r0(n), r0(n + 1), h).add_edge(r1(n), r1(n + 1), h);
      continue;
    }
    // Unit with L1 = rail0, L2 = rail1, R2 = rail0 next, R1 = rail1 next.
    const double s = h / std::sqrt(2.0);
    spec.add_edge(r0(n), r1(n + 1), s);   // L1-R1
    spec.add_edge(r1(n), r0(n + 1), s);   // L2-R2
    spec.add_edge(r0(n), r0(n + 1), s);   // L1-R2
    spec.add_edge(r1(n), r1(n + 1), -s);  // L2-R1
  }
  spec.set_port("rail0_in", {r0(1)}).set_port("rail0_out", {r0(N)});
  spec.set_port("rail1_in", {r1(1)}).set_port("rail1_out", {r1(N)});
  return spec;
}

/// Rotation network: two rails of six sites (rail 0 on 0..5, rail 1 on 6..11), rail
/// labels sqrt5, 2, 3, 2, sqrt5 times lambda/2, crossing units of strength 2
/// at links 2 and 4, and the phases beta, gamma, delta on rail-1 links 1, 3
/// and 5. Logical action at t = pi/lambda: D(delta) H D(gamma) H D(beta).
inline NetworkSpec build_single_qubit_network(double beta, double gamma, double delta, double lambda = 1.0) {
  require_positive(lambda, "lambda");
  NetworkSpec spec(12);
  const double h = 0.5 * lambda;
  auto b = [](std::size_t p) { return p - 1; };
  auto t = [](std::size_t p) { return 5 + p; };
  const double r5 = std::sqrt(5.0);

  spec.add_edge(b(1), b(2), r5 * h).add_edge(t(1), t(2), r5 * h * std::polar(1.0, beta));
  spec.add_edge(b(2), b(3), 2 * h).add_edge(t(2), t(3), 2 * h);
  spec.add_edge(b(2), t(3), -2 * h).add_edge(t(2), b(3), 2 * h);
  spec.add_edge(b(3), b(4), 3 * h).add_edge(t(3), t(4), 3 * h * std::polar(1.0, gamma));
  spec.add_edge(b(4), b(5), 2 * h).add_edge(t(4), t(5), 2 * h);
  spec.add_edge(t(4), b(5), -2 * h).add_edge(b(4), t(5), 2 * h);
  spec.add_edge(b(5), b(6), r5 * h).add_edge(t(5), t(6), r5 * h * std::polar(1.0, delta));

  spec.set_port("rail0_in", {b(1)}).set_port("rail0_out", {b(6)});
  spec.set_port("rail1_in", {t(1)}).set_port("rail1_out", {t(6)});
  return spec;
}

/// Linked chains: two chains of length N (rail 0 on 0..N-1 = |n>, rail 1 on
/// N..2N-1 = |n'>) linked at link R: straight hops J_R cos(theta/2),
/// R' -> R+1 = J_R sin(theta/2) e^{i phi}, R -> (R+1)' = -J_R sin(theta/2) e^{-i phi}.
inline NetworkSpec build_linked_chains(std::size_t N, std::size_t R, double theta, double phi,
                                       double lambda = 1.0) {
  if (N < 2) throw Error(ErrorKind::invalid_size, "linked chains need N >= 2");
  if (R < 1 || R > N - 1) throw Error(ErrorKind::invalid_argument, "link index R outside 1..N-1");
  require_positive(lambda, "lambda");
  NetworkSpec spec(2 * N);
  auto top = [](std::size_t n) { return n - 1; };
  auto bot = [N](std::size_t n) { return N + n - 1; };
  for (std::size_t n = 1; n < N; ++n) {
    const double j = pst_hop(N, n, lambda);
    if (n != R) {
      spec.add_edge(top(n), top(n + 1), j).add_edge(bot(n), bot(n + 1), j);
      continue;
    }
    const double c = j * std::cos(theta / 2), s = j * std::sin(theta / 2);
    spec.add_edge(top(n), top(n + 1), c).add_edge(bot(n), bot(n + 1), c);
    if (s != 0.0) {
      spec.add_edge(bot(n), top(n + 1), s * std::polar(1.0, phi));
      spec.add_edge(top(n), bot(n + 1), -s * std::polar(1.0, -phi));
    }
  }
  spec.set_port("rail0_in", {top(1)}).set_port("rail0_out", {top(N)});
  spec.set_port("rail1_in", {bot(1)}).set_port("rail1_out", {bot(N)});
  return spec;
}

/// Adds a detuning g_block to one site (Zeeman switch).
inline NetworkSpec attach_onsite_block(NetworkSpec spec, std::size_t site, double g_block) {
  spec.add_onsite(site, g_block);
  return spec;
}

/// Perfect-transfer segment of length M on sites 0..M-1 followed by a switch
/// site M and `tail` further sites, joined by uniform hops lambda/sqrt2.
/// Ports: "in", "out" (segment ends) and "switch".
inline NetworkSpec build_switch_chain(std::size_t M, std::size_t tail, double lambda = 1.0) {
  if (M < 2) throw Error(ErrorKind::invalid_size, "switch chain needs M >= 2");
  require_positive(lambda, "lambda");
  NetworkSpec spec(M + 1 + tail);
  for (std::size_t n = 1; n < M; ++n) spec.add_edge(n - 1, n, pst_hop(M, n, lambda));
  const double link = lambda / std::sqrt(2.0);
  for (std::size_t k = M - 1; k + 1 < M + 1 + tail; ++k) spec.add_edge(k, k + 1, link);
  spec.set_port("in", {0}).set_port("out", {M - 1}).set_port("switch", {M});
  return spec;
}

}  // namespace spinweave
