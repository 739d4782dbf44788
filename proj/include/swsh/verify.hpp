#ifndef SWSH_VERIFY_HPP
#define SWSH_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "swsh/theorems.hpp"

namespace swsh {

enum class VerifyMode { two_point, coincidence, spinsame };

std::string_view to_string(VerifyMode mode);
std::optional<VerifyMode> mode_from_string(std::string_view name);

struct CheckReport {
  TheoremId theorem = TheoremId::Base;
  TheoremParams params;
  VerifyMode mode = VerifyMode::two_point;
  std::size_t samples = 0;
  double max_abs_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::pair<Direction, Direction> worst_case;
};

struct VerifyRequest {
  TheoremId theorem = TheoremId::Base;
  TheoremParams params;
  std::size_t samples = 100;
  double tolerance = 1e-9;
  std::uint64_t seed = 42;
  VerifyMode mode = VerifyMode::two_point;
  Form form = Form::verified;
};

/// Seeded directions, uniform on the sphere (cos theta and phi uniform),
/// rejecting sin(theta) < 1e-6. Identical output for identical seeds on
/// every platform (no std::*_distribution involved).
std::vector<Direction> sample_directions(std::size_t count, std::uint64_t seed);

/// Residual at one sample:
///   two_point:   |lhs_sum(d, d') - rhs_closed(d, d')|
///   coincidence: |(-1)^{-s} lhs_sum(d, d) - coincidence_rhs(d)|
///   spinsame:    |(-1)^{-s} lhs_sum(d, d) - spinsame_rhs(d)|   (needs s' == s)
double sample_residual(const VerifyRequest& req, const Direction& dir, const Direction& dirp);

/// Reference implementation: one thread, samples in order.
CheckReport verify_serial(const VerifyRequest& req);

/// Same report as verify_serial, with the per-sample residuals evaluated
/// in parallel (OpenMP when available). The max reduction runs afterwards
/// in sample order, so the worst case is the same for any thread count.
CheckReport verify(const VerifyRequest& req);

/// Tolerance budget for one grid entry: base * (2 ell + 1) * tol_scale, with
/// base = 1e-9 (Base, two-point), 1e-8 (derivative/weighted theorems,
/// two-point), 1e-9 (coincidence), 1e-10 (spinsame).
double default_tolerance(TheoremId id, VerifyMode mode, HalfInt ell, double tol_scale = 1.0);

}  // namespace swsh

#endif  // SWSH_VERIFY_HPP
