#include "swsh/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "swsh/geometry.hpp"

namespace swsh {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 53 random bits -> [0, 1)
double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check_request(const VerifyRequest& req) {
  req.params.check();
  if (req.samples < 1) throw DomainError("verify: samples must be >= 1");
  if (!(req.tolerance > 0.0)) throw DomainError("verify: tolerance must be positive");
  if (req.mode == VerifyMode::spinsame && req.params.s != req.params.sprime)
    throw DomainError("verify: spinsame mode requires s' == s");
}

struct Sample {
  Direction dir;
  Direction dirp;
};

std::vector<Sample> draw_samples(const VerifyRequest& req) {
  const bool paired = req.mode == VerifyMode::two_point;
  const auto dirs = sample_directions(paired ? 2 * req.samples : req.samples, req.seed);
  std::vector<Sample> out(req.samples);
  for (std::size_t i = 0; i < req.samples; ++i)
    out[i] = paired ? Sample{dirs[2 * i], dirs[2 * i + 1]} : Sample{dirs[i], dirs[i]};
  return out;
}

CheckReport reduce(const VerifyRequest& req, const std::vector<Sample>& samples, const std::vector<double>& residuals) {
  CheckReport report;
  report.theorem = req.theorem;
  report.params = req.params;
  report.mode = req.mode;
  report.samples = samples.size();
  report.tolerance = req.tolerance;
  std::size_t worst = 0;
  double max_res = -1.0;
  for (std::size_t i = 0; i < residuals.size(); ++i) {
    // NaN counts as the worst possible residual.
    const double r = std::isnan(residuals[i]) ? INFINITY : residuals[i];
    if (r > max_res) {
      max_res = r;
      worst = i;
    }
  }
  report.max_abs_residual = max_res;
  report.pass = max_res <= req.tolerance;
  report.worst_case = {samples[worst].dir, samples[worst].dirp};
  return report;
}

}  // namespace

std::string_view to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::two_point: return "two_point";
    case VerifyMode::coincidence: return "coincidence";
    case VerifyMode::spinsame: return "spinsame";
  }
  return "?";
}

std::optional<VerifyMode> mode_from_string(std::string_view name) {
  for (VerifyMode m : {VerifyMode::two_point, VerifyMode::coincidence, VerifyMode::spinsame})
    if (to_string(m) == name) return m;
  return std::nullopt;
}

std::vector<Direction> sample_directions(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Direction> out;
  out.reserve(count);
  while (out.size() < count) {
    const double cos_t = 2.0 * unit_draw(rng) - 1.0;
    const double phi = kTwoPi * unit_draw(rng);
    if (std::sqrt(1.0 - cos_t * cos_t) < 1e-6) continue;
    out.emplace_back(std::acos(cos_t), phi);
  }
  return out;
}

double sample_residual(const VerifyRequest& req, const Direction& dir, const Direction& dirp) {
  const TheoremParams& p = req.params;
  switch (req.mode) {
    case VerifyMode::two_point:
      return std::abs(lhs_sum(req.theorem, p, dir, dirp) - rhs_closed(req.theorem, p, dir, dirp, req.form));
    case VerifyMode::coincidence: {
      const auto plain = std::conj(sign_phase(p.s)) * lhs_sum(req.theorem, p, dir, dir);
      return std::abs(plain - coincidence_rhs(req.theorem, p, dir, req.form));
    }
    case VerifyMode::spinsame: {
      const auto plain = std::conj(sign_phase(p.s)) * lhs_sum(req.theorem, p, dir, dir);
      return std::abs(plain - spinsame_rhs(req.theorem, p.s, p.ell, dir, req.form));
    }
  }
  return INFINITY;
}

CheckReport verify_serial(const VerifyRequest& req) {
  check_request(req);
  const auto samples = draw_samples(req);
  std::vector<double> residuals(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) residuals[i] = sample_residual(req, samples[i].dir, samples[i].dirp);
  return reduce(req, samples, residuals);
}

CheckReport verify(const VerifyRequest& req) {
  check_request(req);
  const auto samples = draw_samples(req);
  std::vector<double> residuals(samples.size());
  const auto n = static_cast<std::int64_t>(samples.size());
#if defined(SWSH_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    residuals[k] = sample_residual(req, samples[k].dir, samples[k].dirp);
  }
  return reduce(req, samples, residuals);
}

double default_tolerance(TheoremId id, VerifyMode mode, HalfInt ell, double tol_scale) {
  double base = 1e-9;
  switch (mode) {
    case VerifyMode::two_point: base = id == TheoremId::Base ? 1e-9 : 1e-8; break;
    case VerifyMode::coincidence: base = 1e-9; break;
    case VerifyMode::spinsame: base = 1e-10; break;
  }
  return base * (2.0 * ell.value() + 1.0) * tol_scale;
}

}  // namespace swsh
