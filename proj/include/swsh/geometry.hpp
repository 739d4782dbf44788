#ifndef SWSH_GEOMETRY_HPP
#define SWSH_GEOMETRY_HPP

#include <array>
#include <complex>

#include "swsh/harmonics.hpp"
#include "swsh/wigner.hpp"

namespace swsh {

/// Relative zyz Euler angles between two directions.
///
/// beta is in [0, pi] and gamma in (-pi, pi]. alpha is in (-2 pi, 2 pi]:
/// the extra turn records which of the two SU(2) lifts of the relative
/// rotation is meant, which half-integer spins can see. Coincident
/// directions give exactly (0, 0, 0).
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  RotationAngles as_rotation() const { return {alpha, beta, gamma}; }
  friend bool operator==(const EulerAngles&, const EulerAngles&) = default;
};

/// 2x2 SU(2) matrix, row-major, rows/columns ordered m = +1/2, -1/2.
using Spinor2x2 = std::array<std::complex<double>, 4>;

/// Spin-1/2 Wigner matrix D^{1/2}(alpha, beta, gamma).
Spinor2x2 su2_matrix(const RotationAngles& angles);

/// Angles (a, b, c) with su2_matrix(a, b, c) == u exactly (not up to sign).
/// a in (-2 pi, 2 pi], b in [0, pi], c in (-pi, pi]; gimbal lock folds the
/// twist into a with c = 0.
RotationAngles su2_angles(const Spinor2x2& u);

/// Relative Euler angles of dirp seen from dir.
///
/// With U(dir) = D^{1/2}(phi, theta, 0), take the zyz angles (a, b, c) of
/// U(dir)^dagger U(dirp) and return (-a, b, -c). These are the angles for
/// which the spin-weighted addition theorem holds with
/// D = e^{-i m alpha} d(beta) e^{-i m' gamma}; see docs/conventions.md.
EulerAngles relative_euler(const Direction& dir, const Direction& dirp);

/// Largest violation of the closed-form relations
///   cot alpha = cos th cot dphi - cot th' sin th csc dphi
///   cos beta  = cos th cos th' + sin th sin th' cos dphi
///   cot gamma = cos th' cot dphi - cot th sin th' csc dphi
/// with dphi = phi - phi'. The cotangent relations are measured relative to
/// max(1, |rhs|) and skipped where either side is non-finite.
/// Throws DomainError if dphi is within 1e-8 of a multiple of pi.
double euler_consistency_residual(const Direction& dir, const Direction& dirp, const EulerAngles& eu);

}  // namespace swsh

#endif  // SWSH_GEOMETRY_HPP
