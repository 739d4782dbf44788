#ifndef SWSH_THEOREMS_HPP
#define SWSH_THEOREMS_HPP

#include <array>
#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "swsh/harmonics.hpp"

namespace swsh {

/// Which mode sum is meant. Each is
///   (-1)^s sum_m w(m) A(theta, phi) conj(B(theta', phi'))
/// with (w, A, B) =
///   Base       (1,   Y,         Y')
///   DThetaLeft (1,   dY/dtheta, Y')
///   MWeight    (m,   Y,         Y')
///   DThetaBoth (1,   dY/dtheta, dY'/dtheta')
///   M2Weight   (m^2, Y,         Y')
///   MDTheta    (m,   dY/dtheta, Y')
enum class TheoremId { Base, DThetaLeft, MWeight, DThetaBoth, M2Weight, MDTheta };

inline constexpr std::array<TheoremId, 6> kAllTheorems = {TheoremId::Base,       TheoremId::DThetaLeft,
                                                          TheoremId::MWeight,    TheoremId::DThetaBoth,
                                                          TheoremId::M2Weight,   TheoremId::MDTheta};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

/// Closed forms for MDTheta exist in a published variant whose overall sign
/// is wrong. `verified` is the corrected form; `as_printed` reproduces the
/// published one so the discrepancy stays testable. Other theorems ignore it.
enum class Form { verified, as_printed };

/// Spins s, s' and degree ell of an addition theorem.
/// Valid iff s - s' is an integer, ell >= max(|s|, |s'|) and ell - s is an integer.
struct TheoremParams {
  HalfInt s;
  HalfInt sprime;
  HalfInt ell;

  bool valid() const;
  void check() const;
};

/// Literal left-hand side, summed over ascending m with compensation.
std::complex<double> lhs_sum(TheoremId id, const TheoremParams& p, const Direction& dir, const Direction& dirp);

/// Right-hand side in terms of the relative Euler angles of (dir, dirp).
/// Ladder terms whose square-root prefactor vanishes are skipped before any
/// shifted quantum numbers are formed.
std::complex<double> rhs_closed(TheoremId id, const TheoremParams& p, const Direction& dir, const Direction& dirp,
                                Form form = Form::verified);

/// Closed form of the coincident sum (no (-1)^s prefactor):
///   sum_m w(m) A(theta, phi) conj(B(theta, phi)).
/// Kronecker deltas on (s, s') are exact half-integer comparisons.
std::complex<double> coincidence_rhs(TheoremId id, const TheoremParams& p, const Direction& dir,
                                     Form form = Form::verified);

/// Closed form of the coincident sum with s' = s.
std::complex<double> spinsame_rhs(TheoremId id, HalfInt s, HalfInt ell, const Direction& dir,
                                  Form form = Form::verified);

/// All (s, s', ell) with 2s, 2s' in [-max_twice_spin, max_twice_spin],
/// s - s' integer, and 2 ell <= max_twice_ell, in lexicographic order of
/// (2s, 2s', 2ell).
std::vector<TheoremParams> parameter_grid(int max_twice_spin = 4, int max_twice_ell = 16);

}  // namespace swsh

#endif  // SWSH_THEOREMS_HPP
