#pragma once

// Excitation-number sectors, Hamiltonian assembly and exact propagation
// U(t) = exp(-i H t) by Hermitian eigendecomposition. The vacuum has energy 0
// and is carried as a scalar next to the sector amplitudes so that it can act
// as the interferometric phase reference.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "spinweave/error.hpp"
#include "spinweave/linalg.hpp"
#include "spinweave/network.hpp"

namespace spinweave {

/// Sites holding an excitation: singletons in site order for k = 1, pairs in
/// lexicographic order for k = 2, the empty set for k = 0.
class ExcitationBasis {
 public:
  using State = std::vector<std::size_t>;

  ExcitationBasis(std::size_t n_sites, int k) : n_sites_(n_sites), k_(k) {
    switch (k) {
      case 0: states_.push_back({}); break;
      case 1:
        for (std::size_t i = 0; i < n_sites; ++i) states_.push_back({i});
        break;
      case 2:
        if (n_sites < 2) throw Error(ErrorKind::invalid_size, "two-excitation sector needs at least 2 sites");
        for (std::size_t a = 0; a < n_sites; ++a)
          for (std::size_t b = a + 1; b < n_sites; ++b) states_.push_back({a, b});
        break;
      default: throw Error(ErrorKind::invalid_argument, "excitation number must be 0, 1 or 2");
    }
  }

  int k() const noexcept { return k_; }
  std::size_t n_sites() const noexcept { return n_sites_; }
  std::size_t dim() const noexcept { return states_.size(); }
  const std::vector<State>& states() const noexcept { return states_; }

  /// Index of the pair {a, b} (any order) in the k = 2 basis.
  std::size_t pair_index(std::size_t a, std::size_t b) const {
    if (k_ != 2) throw Error(ErrorKind::invalid_argument, "pair_index needs the k = 2 basis");
    if (a == b || a >= n_sites_ || b >= n_sites_) throw Error(ErrorKind::invalid_site, "bad pair");
    if (a > b) std::swap(a, b);
    // Pairs starting below a, then the offset within the a-block.
    const std::size_t before = a * n_sites_ - a * (a + 1) / 2;
    return before + (b - a - 1);
  }

  friend bool operator==(const ExcitationBasis& x, const ExcitationBasis& y) {
    return x.n_sites_ == y.n_sites_ && x.k_ == y.k_;
  }

 private:
  std::size_t n_sites_;
  int k_;
  std::vector<State> states_;
};

/// Dense Hermitian matrix over an excitation sector.
class SubspaceOperator {
 public:
  explicit SubspaceOperator(CMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() != matrix_.cols())
      throw Error(ErrorKind::dimension_mismatch, "operator must be square");
    if (!is_hermitian(matrix_))
      throw Error(ErrorKind::invalid_argument, "operator is not Hermitian");
  }

  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const CMatrix& matrix() const noexcept { return matrix_; }

  SubspaceOperator operator+(const SubspaceOperator& o) const {
    check_dim(o);
    return SubspaceOperator(matrix_ + o.matrix_);
  }
  SubspaceOperator operator*(double a) const { return SubspaceOperator(a * matrix_); }
  friend SubspaceOperator operator*(double a, const SubspaceOperator& h) { return h * a; }

  /// H + shift * identity.
  SubspaceOperator shifted(double shift) const {
    return SubspaceOperator(matrix_ + shift * CMatrix::Identity(matrix_.rows(), matrix_.cols()));
  }

 private:
  void check_dim(const SubspaceOperator& o) const {
    if (o.dim() != dim()) throw Error(ErrorKind::dimension_mismatch, "operator dimensions differ");
  }
  CMatrix matrix_;
};

/// Vacuum amplitude plus amplitudes over one excitation sector.
struct StateVector {
  cplx vacuum{0.0, 0.0};
  CVector amplitudes;

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes.size()); }
  double norm() const { return std::sqrt(std::norm(vacuum) + amplitudes.squaredNorm()); }

  static StateVector basis(std::size_t dim, std::size_t index) {
    if (index >= dim) throw Error(ErrorKind::invalid_site, "basis index outside sector");
    StateVector s{0.0, CVector::Zero(static_cast<Eigen::Index>(dim))};
    s.amplitudes(static_cast<Eigen::Index>(index)) = 1.0;
    return s;
  }

  /// (|vac> + |index>)/sqrt2, the interferometric input state.
  static StateVector with_reference(std::size_t dim, std::size_t index) {
    StateVector s = basis(dim, index);
    s.vacuum = 1.0 / std::sqrt(2.0);
    s.amplitudes /= std::sqrt(2.0);
    return s;
  }
};

struct Segment {
  SubspaceOperator hamiltonian;
  double duration = 0.0;
};

using Schedule = std::vector<Segment>;

// ---------------------------------------------------------------------------

/// Matrix of the network Hamiltonian over the k-excitation sector.
inline SubspaceOperator assemble(const NetworkSpec& spec, int k = 1) {
  if (k != 1 && k != 2) throw Error(ErrorKind::invalid_argument, "assemble supports k = 1 or 2");
  const auto n = static_cast<Eigen::Index>(spec.n_sites());
  if (k == 1) {
    CMatrix h = CMatrix::Zero(n, n);
    for (const Edge& e : spec.edges()) {
      h(static_cast<Eigen::Index>(e.to), static_cast<Eigen::Index>(e.from)) += e.amplitude;
      h(static_cast<Eigen::Index>(e.from), static_cast<Eigen::Index>(e.to)) += std::conj(e.amplitude);
    }
    for (Eigen::Index i = 0; i < n; ++i) h(i, i) += spec.onsite()[static_cast<std::size_t>(i)];
    return SubspaceOperator(std::move(h));
  }

  const ExcitationBasis basis(spec.n_sites(), 2);
  const auto dim = static_cast<Eigen::Index>(basis.dim());
  CMatrix h = CMatrix::Zero(dim, dim);
  for (std::size_t s = 0; s < basis.dim(); ++s) {
    const auto& st = basis.states()[s];
    h(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(s)) = spec.onsite()[st[0]] + spec.onsite()[st[1]];
  }
  // One excitation hops from b to c while the other stays on a.
  for (const Edge& e : spec.edges()) {
    for (std::size_t a = 0; a < spec.n_sites(); ++a) {
      if (a == e.from || a == e.to) continue;
      const auto src = static_cast<Eigen::Index>(basis.pair_index(a, e.from));
      const auto dst = static_cast<Eigen::Index>(basis.pair_index(a, e.to));
      h(dst, src) += e.amplitude;
      h(src, dst) += std::conj(e.amplitude);
    }
  }
  return SubspaceOperator(std::move(h));
}

/// Diagonal operator with the given entries.
inline SubspaceOperator diagonal_operator(const std::vector<double>& entries) {
  CVector d(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) d(static_cast<Eigen::Index>(i)) = entries[i];
  return SubspaceOperator(d.asDiagonal().toDenseMatrix());
}

/// Eigendecomposition of a Hermitian operator, reused for many times t.
class Propagator {
 public:
  explicit Propagator(const SubspaceOperator& h) : solver_(h.matrix()) {
    if (solver_.info() != Eigen::Success)
      throw Error(ErrorKind::numerical, "Hermitian eigendecomposition failed");
  }

  const Eigen::VectorXd& energies() const { return solver_.eigenvalues(); }
  const CMatrix& eigenvectors() const { return solver_.eigenvectors(); }

  CMatrix unitary(double t) const {
    const CVector phases = (-I * t * solver_.eigenvalues().cast<cplx>()).array().exp();
    return solver_.eigenvectors() * phases.asDiagonal() * solver_.eigenvectors().adjoint();
  }

  CVector apply(const CVector& v, double t) const {
    if (v.size() != solver_.eigenvalues().size())
      throw Error(ErrorKind::dimension_mismatch, "state and operator dimensions differ");
    const CVector phases = (-I * t * solver_.eigenvalues().cast<cplx>()).array().exp();
    CVector c = solver_.eigenvectors().adjoint() * v;
    return solver_.eigenvectors() * (phases.array() * c.array()).matrix();
  }

  StateVector apply(const StateVector& psi, double t) const { return {psi.vacuum, apply(psi.amplitudes, t)}; }

 private:
  Eigen::SelfAdjointEigenSolver<CMatrix> solver_;
};

inline CMatrix time_evolution(const SubspaceOperator& h, double t) { return Propagator(h).unitary(t); }

inline StateVector propagate(const SubspaceOperator& h, double t, const StateVector& psi) {
  if (psi.dim() != h.dim()) throw Error(ErrorKind::dimension_mismatch, "state and operator dimensions differ");
  if (t == 0.0) return psi;
  return Propagator(h).apply(psi, t);
}

inline StateVector run_schedule(const Schedule& sched, StateVector psi) {
  for (const Segment& seg : sched) {
    if (seg.duration < 0.0) throw Error(ErrorKind::invalid_argument, "negative segment duration");
    psi = propagate(seg.hamiltonian, seg.duration, psi);
  }
  return psi;
}

/// Product of midpoint exponentials prod_m exp(-i H((m - 1/2)/steps) T/steps),
/// later steps on the left. `h` maps s in [0, 1] to a SubspaceOperator or CMatrix.
template <class HamiltonianPath>
CMatrix evolve_time_dependent(HamiltonianPath&& h, double total_time, std::size_t steps) {
  if (steps < 1) throw Error(ErrorKind::invalid_argument, "steps must be >= 1");
  if (!(total_time > 0.0)) throw Error(ErrorKind::invalid_argument, "total time must be positive");
  const double dt = total_time / static_cast<double>(steps);
  CMatrix u;
  for (std::size_t m = 1; m <= steps; ++m) {
    const double s = (static_cast<double>(m) - 0.5) / static_cast<double>(steps);
    const SubspaceOperator hm(h(s));
    const CMatrix step = Propagator(hm).unitary(dt);
    u = (m == 1) ? step : CMatrix(step * u);
  }
  return u;
}

/// Total weight on the given sector indices (sites for k = 1).
inline double arrival_probability(const StateVector& psi, const std::vector<std::size_t>& sites) {
  double p = 0.0;
  for (std::size_t s : sites) {
    if (s >= psi.dim()) throw Error(ErrorKind::invalid_site, "port site outside state");
    p += std::norm(psi.amplitudes(static_cast<Eigen::Index>(s)));
  }
  return p;
}

struct AmplitudePhase {
  double magnitude = 0.0;
  double phase = 0.0;  ///< relative to the vacuum amplitude, in (-pi, pi]
};

inline AmplitudePhase site_amplitude_phase(const StateVector& psi, std::size_t site) {
  if (site >= psi.dim()) throw Error(ErrorKind::invalid_site, "site outside state");
  if (std::abs(psi.vacuum) <= 1e-9)
    throw Error(ErrorKind::numerical, "vacuum reference amplitude vanishes");
  const cplx a = psi.amplitudes(static_cast<Eigen::Index>(site));
  return {std::abs(a), wrap_angle(std::arg(a) - std::arg(psi.vacuum))};
}

}  // namespace spinweave
