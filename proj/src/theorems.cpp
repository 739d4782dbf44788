#include "swsh/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "swsh/geometry.hpp"
#include "swsh/summation.hpp"

namespace swsh {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// sqrt((l - s - 1)(l - s)(l + s + 1)(l + s + 2)): two raising steps from s.
double double_raise_factor(HalfInt s, HalfInt ell) {
  const double v = (ell - s - 1_hi).value() * (ell - s).value() * (ell + s + 1_hi).value() * (ell + s + 2_hi).value();
  return v > 0.0 ? std::sqrt(v) : 0.0;
}

double delta(HalfInt a, HalfInt b) { return a == b ? 1.0 : 0.0; }

double casimir_shift(HalfInt s, HalfInt ell) {
  const double l = ell.value();
  const double sv = s.value();
  return l * l + l - sv * sv;
}

// Evaluates e^{-i(s+ds) alpha} Y_{s+ds, l, -s'+dsp}(beta, gamma) on demand.
class EulerTerms {
 public:
  EulerTerms(const TheoremParams& p, const EulerAngles& eu) : p_(p), eu_(eu) {}

  cplx operator()(double coef, int ds, int dsp) const {
    if (coef == 0.0) return {0.0, 0.0};
    const HalfInt spin = p_.s + HalfInt::integer(ds);
    const QuantumNumbers q{spin, p_.ell, -p_.sprime + HalfInt::integer(dsp)};
    const cplx y = swsh_at(q, eu_.beta, eu_.gamma);
    if (eu_.alpha == 0.0) return coef * y;
    return coef * std::polar(1.0, -spin.value() * eu_.alpha) * y;
  }

 private:
  TheoremParams p_;
  EulerAngles eu_;
};

}  // namespace

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::Base: return "Base";
    case TheoremId::DThetaLeft: return "DThetaLeft";
    case TheoremId::MWeight: return "MWeight";
    case TheoremId::DThetaBoth: return "DThetaBoth";
    case TheoremId::M2Weight: return "M2Weight";
    case TheoremId::MDTheta: return "MDTheta";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (TheoremId id : kAllTheorems)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

bool TheoremParams::valid() const {
  return (s - sprime).is_integer() && ell >= abs(s) && ell >= abs(sprime) && (ell - s).is_integer();
}

void TheoremParams::check() const {
  if (!valid())
    throw DomainError("invalid theorem parameters (s=" + s.to_string() + ", s'=" + sprime.to_string() +
                      ", ell=" + ell.to_string() + "): need s-s' integer, ell >= max(|s|,|s'|), ell-s integer");
}

std::complex<double> lhs_sum(TheoremId id, const TheoremParams& p, const Direction& dir, const Direction& dirp) {
  p.check();
  const bool deriv_left = id == TheoremId::DThetaLeft || id == TheoremId::DThetaBoth || id == TheoremId::MDTheta;
  const bool deriv_right = id == TheoremId::DThetaBoth;

  CompensatedSum<cplx> acc;
  for (HalfInt m = -p.ell; m <= p.ell; m += 1_hi) {
    const QuantumNumbers q{p.s, p.ell, m};
    const QuantumNumbers qp{p.sprime, p.ell, m};
    const double mv = m.value();
    double w = 1.0;
    if (id == TheoremId::MWeight || id == TheoremId::MDTheta) w = mv;
    if (id == TheoremId::M2Weight) w = mv * mv;
    if (w == 0.0) continue;

    const cplx a = deriv_left ? dtheta(q, dir) : swsh_eval(q, dir);
    const cplx b = deriv_right ? dtheta(qp, dirp) : swsh_eval(qp, dirp);
    acc += w * a * std::conj(b);
  }
  return sign_phase(p.s) * acc.value();
}

std::complex<double> rhs_closed(TheoremId id, const TheoremParams& p, const Direction& dir, const Direction& dirp,
                                Form form) {
  p.check();
  const EulerAngles eu = relative_euler(dir, dirp);
  const EulerTerms T(p, eu);

  const double norm = std::sqrt((2.0 * p.ell.value() + 1.0) / (4.0 * kPi));
  const double up = raise_factor(p.s, p.ell);
  const double dn = lower_factor(p.s, p.ell);
  const double upp = raise_factor(p.sprime, p.ell);
  const double dnp = lower_factor(p.sprime, p.ell);
  const double s = p.s.value();
  const double sp = p.sprime.value();
  const double st = std::sin(dir.theta());
  const double ct = std::cos(dir.theta());
  const double stp = std::sin(dirp.theta());
  const double ctp = std::cos(dirp.theta());

  switch (id) {
    case TheoremId::Base:
      return norm * T(1.0, 0, 0);

    case TheoremId::DThetaLeft:
      return 0.5 * norm * (T(up, 1, 0) - T(dn, -1, 0));

    case TheoremId::MWeight:
      return -0.5 * norm * ((T(up, 1, 0) + T(dn, -1, 0)) * st + T(2.0 * s, 0, 0) * ct);

    case TheoremId::DThetaBoth:
      return -0.25 * norm * (T(up * upp, 1, -1) - T(up * dnp, 1, 1) - T(dn * upp, -1, -1) + T(dn * dnp, -1, 1));

    case TheoremId::M2Weight: {
      const cplx both = T(up * upp, 1, -1) + T(up * dnp, 1, 1) + T(dn * upp, -1, -1) + T(dn * dnp, -1, 1);
      const cplx left = T(up, 1, 0) + T(dn, -1, 0);
      const cplx right = T(upp, 0, -1) + T(dnp, 0, 1);
      return -norm * (0.25 * st * stp * both - 0.5 * sp * st * ctp * left + 0.5 * s * ct * stp * right -
                      s * sp * ct * ctp * T(1.0, 0, 0));
    }

    case TheoremId::MDTheta: {
      const cplx both = T(up * upp, 1, -1) - T(dn * upp, -1, -1) + T(up * dnp, 1, 1) - T(dn * dnp, -1, 1);
      const cplx left = T(up, 1, 0) - T(dn, -1, 0);
      const cplx printed = -0.25 * norm * (both * stp - 2.0 * sp * left * ctp);
      return form == Form::as_printed ? printed : -printed;
    }
  }
  return {0.0, 0.0};
}

std::complex<double> coincidence_rhs(TheoremId id, const TheoremParams& p, const Direction& dir, Form form) {
  p.check();
  const HalfInt s = p.s;
  const HalfInt sp = p.sprime;
  const HalfInt one = 1_hi;
  const HalfInt two = 2_hi;
  const double c = 2.0 * p.ell.value() + 1.0;
  const double up = raise_factor(s, p.ell);
  const double dn = lower_factor(s, p.ell);
  const double upp = raise_factor(sp, p.ell);
  const double dnp = lower_factor(sp, p.ell);
  const double st = std::sin(dir.theta());
  const double ct = std::cos(dir.theta());

  switch (id) {
    case TheoremId::Base:
      return c / (4.0 * kPi) * delta(s, sp);

    case TheoremId::DThetaLeft:
      return -c / (8.0 * kPi) * (up * delta(s + one, sp) - upp * delta(s, sp + one));

    case TheoremId::MWeight:
      return c / (8.0 * kPi) * (up * delta(s + one, sp) + upp * delta(s, sp + one)) * st -
             c / (4.0 * kPi) * s.value() * delta(s, sp) * ct;

    case TheoremId::DThetaBoth:
      return c / (16.0 * kPi) *
             (2.0 * casimir_shift(s, p.ell) * delta(s, sp) - double_raise_factor(s, p.ell) * delta(s + two, sp) -
              double_raise_factor(sp, p.ell) * delta(s, sp + two));

    case TheoremId::M2Weight: {
      const double diag = (0.5 * casimir_shift(s, p.ell) * st * st + s.value() * s.value() * ct * ct) * delta(s, sp);
      const double cross = 0.25 * st * st * (up * dnp * delta(s + one, sp - one) + dn * upp * delta(s - one, sp + one));
      const double mixed = -0.5 * st * ct *
                           ((2.0 * sp.value() + 1.0) * upp * delta(s, sp + one) +
                            (2.0 * s.value() + 1.0) * up * delta(s + one, sp));
      return c / (4.0 * kPi) * (diag + cross + mixed);
    }

    case TheoremId::MDTheta: {
      const double sin_part = -2.0 * s.value() * delta(s, sp) - double_raise_factor(sp, p.ell) * delta(s, sp + two) +
                              double_raise_factor(s, p.ell) * delta(s + two, sp);
      const double cos_part = -2.0 * sp.value() * (up * delta(s + one, sp) - upp * delta(s, sp + one));
      const double printed = c / (16.0 * kPi) * (sin_part * st + cos_part * ct);
      return form == Form::as_printed ? printed : -printed;
    }
  }
  return {0.0, 0.0};
}

std::complex<double> spinsame_rhs(TheoremId id, HalfInt s, HalfInt ell, const Direction& dir, Form form) {
  TheoremParams{s, s, ell}.check();
  const double c = 2.0 * ell.value() + 1.0;
  const double sv = s.value();
  const double st = std::sin(dir.theta());
  const double ct = std::cos(dir.theta());
  const double k = casimir_shift(s, ell);

  switch (id) {
    case TheoremId::Base: return c / (4.0 * kPi);
    case TheoremId::DThetaLeft: return 0.0;
    case TheoremId::MWeight: return -c * sv * ct / (4.0 * kPi);
    case TheoremId::DThetaBoth: return c * k / (8.0 * kPi);
    case TheoremId::M2Weight: return c * (k * st * st + 2.0 * sv * sv * ct * ct) / (8.0 * kPi);
    case TheoremId::MDTheta: {
      const double printed = -c * sv * st / (8.0 * kPi);
      return form == Form::as_printed ? printed : -printed;
    }
  }
  return {0.0, 0.0};
}

std::vector<TheoremParams> parameter_grid(int max_twice_spin, int max_twice_ell) {
  std::vector<TheoremParams> grid;
  for (int ts = -max_twice_spin; ts <= max_twice_spin; ++ts) {
    for (int tsp = -max_twice_spin; tsp <= max_twice_spin; ++tsp) {
      if ((ts - tsp) % 2 != 0) continue;
      for (int tl = std::max(std::abs(ts), std::abs(tsp)); tl <= max_twice_ell; tl += 2)
        grid.push_back({HalfInt::from_twice(ts), HalfInt::from_twice(tsp), HalfInt::from_twice(tl)});
    }
  }
  return grid;
}

}  // namespace swsh
