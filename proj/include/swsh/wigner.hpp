#ifndef SWSH_WIGNER_HPP
#define SWSH_WIGNER_HPP

#include <complex>

#include "swsh/half_int.hpp"

namespace swsh {

/// Default largest angular momentum the log-factorial table is sized for.
inline constexpr int kDefaultEllMax = 64;

/// zyz rotation angles in radians. For half-integer representations the
/// angles identify an SU(2) element, so alpha is not reduced mod 2 pi.
struct RotationAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

struct WignerArgs {
  HalfInt ell;
  HalfInt m;
  HalfInt mprime;
  RotationAngles angles;
};

/// Throws DomainError unless ell >= 0, |m|,|m'| <= ell and ell - m,
/// ell - m' are integers.
void check_wigner_indices(HalfInt ell, HalfInt m, HalfInt mprime);

/// ln Gamma(x + 1) for half-integer x >= 0.
///
/// Values for x <= 2*kDefaultEllMax + 1 come from an immutable table built
/// once on first use (thread-safe static init); larger arguments are
/// evaluated directly.
double log_factorial_half(HalfInt x);

/// Wigner small-d matrix element d^ell_{m,m'}(beta).
///
/// Factorial-sum form
///   d = sum_k (-1)^{k-m'+m} sqrt((l+m)!(l-m)!(l+m')!(l-m')!)
///       / ((l+m'-k)! k! (l-m-k)! (k-m'+m)!)
///       cos(beta/2)^{2l-2k+m'-m} sin(beta/2)^{2k-m'+m}
/// with each term assembled in log space and the terms summed in order of
/// increasing magnitude. beta == 0 returns delta_{m,m'} by branch.
double wigner_small_d(HalfInt ell, HalfInt m, HalfInt mprime, double beta);

/// D^ell_{m,m'}(alpha, beta, gamma) = e^{-i m alpha} d^ell_{m,m'}(beta) e^{-i m' gamma}.
std::complex<double> wigner_big_D(const WignerArgs& args);

}  // namespace swsh

#endif  // SWSH_WIGNER_HPP
