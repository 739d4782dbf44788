#include "swsh/harmonics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "swsh/wigner.hpp"

namespace swsh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

double norm_factor(HalfInt ell) { return std::sqrt((2.0 * ell.value() + 1.0) / kFourPi); }

void require_off_pole(double theta, const char* what) {
  if (std::sin(theta) < kPoleExclusion)
    throw DomainError(std::string(what) + ": theta=" + std::to_string(theta) + " is too close to a pole");
}

}  // namespace

double raise_factor(HalfInt s, HalfInt ell) {
  if (ell == s) return 0.0;
  return std::sqrt((ell - s).value() * (ell + s + 1_hi).value());
}

double lower_factor(HalfInt s, HalfInt ell) {
  if (ell == -s) return 0.0;
  return std::sqrt((ell + s).value() * (ell - s + 1_hi).value());
}

bool QuantumNumbers::valid() const {
  return ell >= abs(s) && abs(m) <= ell && (ell - s).is_integer() && (ell - m).is_integer();
}

void QuantumNumbers::check() const {
  if (!valid())
    throw DomainError("invalid quantum numbers (s=" + s.to_string() + ", ell=" + ell.to_string() +
                      ", m=" + m.to_string() + "): need ell >= |s|, |m| <= ell, ell-s and ell-m integers");
}

Direction::Direction(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi))
    throw DomainError("theta must lie in [0, pi], got " + std::to_string(theta));
  if (!std::isfinite(phi)) throw DomainError("phi must be finite");
  double p = std::fmod(phi, kTwoPi);
  if (p < 0.0) p += kTwoPi;
  if (p >= kTwoPi) p = 0.0;
  theta_ = theta;
  phi_ = p;
}

std::complex<double> swsh_at(const QuantumNumbers& q, double theta, double phi) {
  q.check();
  const double d = wigner_small_d(q.ell, q.m, -q.s, theta);
  // conj(e^{-i m phi} d) = e^{i m phi} d
  const std::complex<double> rot = (phi == 0.0) ? std::complex<double>(d, 0.0)
                                                : d * std::polar(1.0, q.m.value() * phi);
  return sign_phase(q.s) * norm_factor(q.ell) * rot;
}

std::complex<double> swsh_eval(const QuantumNumbers& q, const Direction& dir) {
  return swsh_at(q, dir.theta(), dir.phi());
}

std::complex<double> swsh_pole(const QuantumNumbers& q) {
  q.check();
  if (q.s != -q.m) return {0.0, 0.0};
  return sign_phase(q.s) * norm_factor(q.ell);
}

std::complex<double> edth_analytic_at(const QuantumNumbers& q, double theta, double phi, Edth op) {
  q.check();
  if (op == Edth::raise) {
    const double f = raise_factor(q.s, q.ell);
    if (f == 0.0) return {0.0, 0.0};
    return f * swsh_at({q.s + 1_hi, q.ell, q.m}, theta, phi);
  }
  const double f = lower_factor(q.s, q.ell);
  if (f == 0.0) return {0.0, 0.0};
  return -f * swsh_at({q.s - 1_hi, q.ell, q.m}, theta, phi);
}

std::complex<double> edth_analytic(const QuantumNumbers& q, const Direction& dir, Edth op) {
  return edth_analytic_at(q, dir.theta(), dir.phi(), op);
}

std::complex<double> edth_numeric(const QuantumNumbers& q, const Direction& dir, Edth op, double h) {
  q.check();
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  const double th = dir.theta();
  const double ph = dir.phi();
  if (th < 10.0 * h || std::numbers::pi - th < 10.0 * h) throw DomainError("edth_numeric: stencil crosses a pole");
  require_off_pole(th, "edth_numeric");

  const auto y = [&](double t, double p) { return swsh_at(q, t, p); };
  const std::complex<double> d_theta = (y(th + h, ph) - y(th - h, ph)) / (2.0 * h);
  const std::complex<double> d_phi = (y(th, ph + h) - y(th, ph - h)) / (2.0 * h);
  const std::complex<double> i_over_sin{0.0, 1.0 / std::sin(th)};
  const double s_cot = q.s.value() * std::cos(th) / std::sin(th);
  const std::complex<double> y0 = y(th, ph);

  if (op == Edth::raise) return -(d_theta + i_over_sin * d_phi - s_cot * y0);
  return -(d_theta - i_over_sin * d_phi + s_cot * y0);
}

std::complex<double> dtheta_at(const QuantumNumbers& q, double theta, double phi) {
  return -0.5 * (edth_analytic_at(q, theta, phi, Edth::raise) + edth_analytic_at(q, theta, phi, Edth::lower));
}

std::complex<double> dtheta(const QuantumNumbers& q, const Direction& dir) {
  return dtheta_at(q, dir.theta(), dir.phi());
}

std::complex<double> dphi(const QuantumNumbers& q, const Direction& dir) {
  return std::complex<double>(0.0, q.m.value()) * swsh_eval(q, dir);
}

std::complex<double> dphi_from_ladder(const QuantumNumbers& q, const Direction& dir) {
  const double th = dir.theta();
  const std::complex<double> ladder = edth_analytic(q, dir, Edth::raise) - edth_analytic(q, dir, Edth::lower);
  const std::complex<double> i{0.0, 1.0};
  return 0.5 * i * std::sin(th) * ladder - i * q.s.value() * std::cos(th) * swsh_eval(q, dir);
}

double de_residual(const QuantumNumbers& q, const Direction& dir) {
  q.check();
  const double th = dir.theta();
  const double ph = dir.phi();
  require_off_pole(th, "de_residual");

  // d2/dtheta2 Y = -1/2 [ raise * d/dtheta Y_{s+1} - lower * d/dtheta Y_{s-1} ]
  std::complex<double> d2{0.0, 0.0};
  if (const double f = raise_factor(q.s, q.ell); f != 0.0) d2 += f * dtheta_at({q.s + 1_hi, q.ell, q.m}, th, ph);
  if (const double f = lower_factor(q.s, q.ell); f != 0.0) d2 -= f * dtheta_at({q.s - 1_hi, q.ell, q.m}, th, ph);
  d2 *= -0.5;

  const std::complex<double> y = swsh_at(q, th, ph);
  const std::complex<double> d1 = dtheta_at(q, th, ph);
  const double s = q.s.value();
  const double m = q.m.value();
  const double sin_t = std::sin(th);
  const double cos_t = std::cos(th);

  // d_phi -> i m, so s^2 - 2 i s cos d_phi - d_phi^2 -> s^2 + 2 s m cos + m^2.
  const std::complex<double> lhs = d2 + (cos_t / sin_t) * d1 - (s * s + 2.0 * s * m * cos_t + m * m) / (sin_t * sin_t) * y;
  const double l = q.ell.value();
  return std::abs(lhs + l * (l + 1.0) * y);
}

}  // namespace swsh
