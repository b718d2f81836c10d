#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "spinweave/error.hpp"

namespace spinweave {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Matrix2c = Eigen::Matrix2cd;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

/// Maps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * pi);
  if (w <= -pi) w += 2.0 * pi;
  return w;
}

/// Smallest |a - b| modulo 2pi.
inline double angle_distance(double a, double b) { return std::abs(wrap_angle(a - b)); }

inline double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// max|H - H^dag| relative to max|H| (absolute when H vanishes).
inline double hermiticity_defect(const CMatrix& h) {
  const double scale = max_abs(h);
  const double defect = max_abs(h - h.adjoint());
  return scale > 0.0 ? defect / scale : defect;
}

inline bool is_hermitian(const CMatrix& h, double tol = 1e-12) {
  return h.rows() == h.cols() && hermiticity_defect(h) <= tol;
}

/// Global-phase-insensitive overlap fidelity |Tr(U^dag V)|^2 / d^2.
inline double gate_fidelity(const CMatrix& u, const CMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
    throw Error(ErrorKind::dimension_mismatch, "gate_fidelity needs equal square matrices");
  const double d = static_cast<double>(u.rows());
  return std::norm((u.adjoint() * v).trace()) / (d * d);
}

/// sqrt(1 - F): vanishes iff U and V agree up to a global phase.
inline double gate_distance(const CMatrix& u, const CMatrix& v) {
  return std::sqrt(std::max(0.0, 1.0 - gate_fidelity(u, v)));
}

/// max|U - e^{ia} V| with the global phase a chosen from Tr(V^dag U).
inline double max_abs_up_to_phase(const CMatrix& u, const CMatrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw Error(ErrorKind::dimension_mismatch, "max_abs_up_to_phase needs equal shapes");
  const cplx overlap = (v.adjoint() * u).trace();
  const cplx phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : cplx(1.0);
  return max_abs(u - phase * v);
}

inline double unitarity_defect(const CMatrix& u) {
  return max_abs(u.adjoint() * u - CMatrix::Identity(u.cols(), u.cols()));
}

namespace pauli {
inline Matrix2c identity() { return Matrix2c::Identity(); }
inline Matrix2c x() {
  Matrix2c m;
  m << 0, 1, 1, 0;
  return m;
}
inline Matrix2c y() {
  Matrix2c m;
  m << 0, -I, I, 0;
  return m;
}
inline Matrix2c z() {
  Matrix2c m;
  m << 1, 0, 0, -1;
  return m;
}
inline Matrix2c hadamard() { return (x() + z()) / std::sqrt(2.0); }
/// diag(1, e^{i a})
inline Matrix2c phase(double a) {
  Matrix2c m;
  m << 1, 0, 0, std::polar(1.0, a);
  return m;
}
}  // namespace pauli

/// exp(-i a n.sigma) for a unit (or arbitrary real) 3-vector via the closed form.
inline Matrix2c su2_rotation(double ax, double ay, double az, double angle) {
  const double norm = std::sqrt(ax * ax + ay * ay + az * az);
  if (norm == 0.0) return Matrix2c::Identity();
  const Matrix2c n = (ax * pauli::x() + ay * pauli::y() + az * pauli::z()) / norm;
  return std::cos(angle) * Matrix2c::Identity() - I * std::sin(angle) * n;
}

}  // namespace spinweave
