#ifndef SWSH_HARMONICS_HPP
#define SWSH_HARMONICS_HPP

#include <complex>

#include "swsh/half_int.hpp"

namespace swsh {

/// Spin weight s, degree ell and azimuthal number m of a harmonic.
///
/// Valid iff ell >= |s|, |m| <= ell and ell - |s|, ell - m are integers.
struct QuantumNumbers {
  HalfInt s;
  HalfInt ell;
  HalfInt m;

  bool valid() const;
  /// Throws DomainError with a description if !valid().
  void check() const;
};

/// A point on the two-sphere. phi is reduced into [0, 2 pi) once at
/// construction; half-integer harmonics are evaluated at the stored
/// representative.
class Direction {
 public:
  Direction() = default;
  Direction(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

  friend bool operator==(const Direction&, const Direction&) = default;

 private:
  double theta_ = 0.0;
  double phi_ = 0.0;
};

inline constexpr double kDefaultFiniteDifferenceStep = 1e-5;
/// Operators containing cot(theta) or 1/sin(theta) require sin(theta) >= this.
inline constexpr double kPoleExclusion = 1e-3;

enum class Edth { raise, lower };

/// Ladder prefactors sqrt((l-s)(l+s+1)) and sqrt((l+s)(l-s+1)); exactly
/// zero in the annihilation cases l == s and l == -s respectively.
double raise_factor(HalfInt s, HalfInt ell);
double lower_factor(HalfInt s, HalfInt ell);

/// sY_lm(theta, phi) = (-1)^s sqrt((2l+1)/4pi) conj(D^l_{m,-s}(phi, theta, 0)).
std::complex<double> swsh_eval(const QuantumNumbers& q, const Direction& dir);

/// Same as swsh_eval but at raw angles with no reduction of phi. Used where
/// the azimuth carries an SU(2) lift (Euler gamma) or is a stencil offset.
std::complex<double> swsh_at(const QuantumNumbers& q, double theta, double phi);

/// Value at the north pole (theta = phi = 0) by Kronecker branch:
/// (-1)^s delta_{s,-m} sqrt((2l+1)/4pi).
std::complex<double> swsh_pole(const QuantumNumbers& q);

/// Spin raising (edth) or lowering (edth-bar) through the ladder relations:
///   raise: sqrt((l-s)(l+s+1)) Y_{s+1}
///   lower: -sqrt((l+s)(l-s+1)) Y_{s-1}
/// Exact zero when the prefactor vanishes.
std::complex<double> edth_analytic(const QuantumNumbers& q, const Direction& dir, Edth op);
std::complex<double> edth_analytic_at(const QuantumNumbers& q, double theta, double phi, Edth op);

/// Applies -[d_theta +- (i/sin) d_phi -+ s cot] to swsh_eval with central
/// differences. Test oracle for edth_analytic.
std::complex<double> edth_numeric(const QuantumNumbers& q, const Direction& dir, Edth op,
                                  double h = kDefaultFiniteDifferenceStep);

/// d/dtheta of the harmonic, -1/2 (edth + edth-bar) Y.
std::complex<double> dtheta(const QuantumNumbers& q, const Direction& dir);
std::complex<double> dtheta_at(const QuantumNumbers& q, double theta, double phi);

/// d/dphi of the harmonic, i m Y.
std::complex<double> dphi(const QuantumNumbers& q, const Direction& dir);

/// The phi-derivative rebuilt from the ladder:
/// (i/2) sin(theta) (edth - edth-bar) Y - i s cos(theta) Y.
std::complex<double> dphi_from_ladder(const QuantumNumbers& q, const Direction& dir);

/// |L[Y] + l(l+1) Y| where
///   L = (1/sin) d_theta (sin d_theta) - (1/sin^2) (s^2 - 2 i s cos d_phi - d_phi^2)
/// with both theta-derivatives taken through the ladder. Requires
/// sin(theta) >= kPoleExclusion.
double de_residual(const QuantumNumbers& q, const Direction& dir);

}  // namespace swsh

#endif  // SWSH_HARMONICS_HPP
