#include "swsh/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace swsh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGimbalTolerance = 1e-14;

Spinor2x2 adjoint_times(const Spinor2x2& a, const Spinor2x2& b) {
  // a^dagger b
  return {std::conj(a[0]) * b[0] + std::conj(a[2]) * b[2], std::conj(a[0]) * b[1] + std::conj(a[2]) * b[3],
          std::conj(a[1]) * b[0] + std::conj(a[3]) * b[2], std::conj(a[1]) * b[1] + std::conj(a[3]) * b[3]};
}

// (a, c) ~ (a + 2pi, c + 2pi) ~ (a + 4pi, c) all name the same SU(2) element.
void normalize_twist(double& alpha, double& gamma) {
  while (gamma > kPi) {
    gamma -= 2.0 * kPi;
    alpha -= 2.0 * kPi;
  }
  while (gamma <= -kPi) {
    gamma += 2.0 * kPi;
    alpha += 2.0 * kPi;
  }
  while (alpha > 2.0 * kPi) alpha -= 4.0 * kPi;
  while (alpha <= -2.0 * kPi) alpha += 4.0 * kPi;
}

double cot(double x) { return std::cos(x) / std::sin(x); }

double relative_gap(double lhs, double rhs) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) return 0.0;
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

}  // namespace

Spinor2x2 su2_matrix(const RotationAngles& r) {
  const double c = std::cos(0.5 * r.beta);
  const double s = std::sin(0.5 * r.beta);
  const double sum = 0.5 * (r.alpha + r.gamma);
  const double diff = 0.5 * (r.alpha - r.gamma);
  return {std::polar(1.0, -sum) * c, -std::polar(1.0, -diff) * s, std::polar(1.0, diff) * s,
          std::polar(1.0, sum) * c};
}

RotationAngles su2_angles(const Spinor2x2& u) {
  const double mag_diag = std::abs(u[0]);
  const double mag_off = std::abs(u[1]);
  RotationAngles out;
  out.beta = 2.0 * std::atan2(mag_off, mag_diag);

  // u00 = e^{-i(a+c)/2} cos(b/2), -u01 = e^{-i(a-c)/2} sin(b/2)
  if (mag_off < kGimbalTolerance) {
    out.alpha = -2.0 * std::arg(u[0]);
    out.gamma = 0.0;
  } else if (mag_diag < kGimbalTolerance) {
    out.alpha = -2.0 * std::arg(-u[1]);
    out.gamma = 0.0;
  } else {
    const double sum = -2.0 * std::arg(u[0]);
    const double diff = -2.0 * std::arg(-u[1]);
    out.alpha = 0.5 * (sum + diff);
    out.gamma = 0.5 * (sum - diff);
  }

  normalize_twist(out.alpha, out.gamma);
  return out;
}

EulerAngles relative_euler(const Direction& dir, const Direction& dirp) {
  if (dir == dirp) return {0.0, 0.0, 0.0};
  const Spinor2x2 u = su2_matrix({dir.phi(), dir.theta(), 0.0});
  const Spinor2x2 up = su2_matrix({dirp.phi(), dirp.theta(), 0.0});
  const RotationAngles r = su2_angles(adjoint_times(u, up));

  // Negating both twist angles keeps the lift (the pair moves together).
  EulerAngles eu{-r.alpha, r.beta, -r.gamma};
  normalize_twist(eu.alpha, eu.gamma);
  if (eu.gamma == 0.0) eu.gamma = 0.0;  // drop -0.0
  if (eu.alpha == 0.0) eu.alpha = 0.0;
  return eu;
}

double euler_consistency_residual(const Direction& dir, const Direction& dirp, const EulerAngles& eu) {
  const double dphi = dir.phi() - dirp.phi();
  if (std::abs(std::sin(dphi)) < 1e-8)
    throw DomainError("Euler-angle relations need phi - phi' away from multiples of pi");

  const double th = dir.theta();
  const double thp = dirp.theta();
  const double cot_d = cot(dphi);
  const double csc_d = 1.0 / std::sin(dphi);

  const double rhs_alpha = std::cos(th) * cot_d - cot(thp) * std::sin(th) * csc_d;
  const double rhs_beta = std::cos(th) * std::cos(thp) + std::sin(th) * std::sin(thp) * std::cos(dphi);
  const double rhs_gamma = std::cos(thp) * cot_d - cot(th) * std::sin(thp) * csc_d;

  double worst = std::abs(std::cos(eu.beta) - rhs_beta);
  worst = std::max(worst, relative_gap(cot(eu.alpha), rhs_alpha));
  worst = std::max(worst, relative_gap(cot(eu.gamma), rhs_gamma));
  return worst;
}

}  // namespace swsh
