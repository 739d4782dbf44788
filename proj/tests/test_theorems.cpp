#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "swsh/theorems.hpp"
#include "swsh/verify.hpp"

using swsh::Direction;
using swsh::Form;
using swsh::HalfInt;
using swsh::TheoremId;
using swsh::TheoremParams;
using cplx = std::complex<double>;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }
constexpr double kFourPi = 4 * M_PI;
constexpr double kEightPi = 8 * M_PI;

// Coincident sum without the (-1)^s prefactor.
cplx plain_sum(TheoremId id, const TheoremParams& p, const Direction& d) {
  return std::conj(swsh::sign_phase(p.s)) * swsh::lhs_sum(id, p, d, d);
}

}  // namespace

TEST_CASE("names round-trip") {
  for (TheoremId id : swsh::kAllTheorems) CHECK(swsh::theorem_from_string(swsh::to_string(id)) == id);
  CHECK_FALSE(swsh::theorem_from_string("Nope").has_value());
}

TEST_CASE("parameter validation and grid") {
  CHECK(TheoremParams{h(1), h(-1), h(3)}.valid());
  CHECK_FALSE(TheoremParams{h(1), h(0), h(2)}.valid());
  CHECK_FALSE(TheoremParams{h(2), h(2), h(1)}.valid());
  CHECK_FALSE(TheoremParams{h(4), h(0), h(2)}.valid());
  CHECK_THROWS_AS(swsh::lhs_sum(TheoremId::Base, {h(1), h(0), h(2)}, Direction(1, 1), Direction(1, 2)),
                  swsh::DomainError);
  const auto grid = swsh::parameter_grid();
  for (const auto& p : grid) CHECK(p.valid());
  std::size_t expected = 0;
  for (int ts = -4; ts <= 4; ++ts)
    for (int tsp = -4; tsp <= 4; ++tsp)
      if ((ts - tsp) % 2 == 0)
        for (int tl = std::max(std::abs(ts), std::abs(tsp)); tl <= 16; tl += 2) ++expected;
  CHECK(grid.size() == expected);
}

TEST_CASE("base theorem point values") {
  const Direction a(0.4, 1.1), b(2.0, 5.0);
  CHECK(std::abs(swsh::lhs_sum(TheoremId::Base, {h(0), h(0), h(0)}, a, b) - 1 / kFourPi) < 1e-16);
  for (int tl = 2; tl <= 12; tl += 2) {
    const TheoremParams p{h(2), h(2), h(tl)};
    const double c = (tl + 1) / kFourPi;
    CHECK(std::abs(plain_sum(TheoremId::Base, p, a) - c) < 1e-13);
    CHECK(std::abs(swsh::rhs_closed(TheoremId::Base, p, a, a) - swsh::sign_phase(p.s) * c) < 1e-13);
    CHECK(std::abs(plain_sum(TheoremId::DThetaLeft, p, a)) < 1e-13);
  }
}

TEST_CASE("every theorem holds at random pairs") {
  const auto dirs = swsh::sample_directions(16, 5);
  for (TheoremId id : swsh::kAllTheorems)
    for (const auto& p : swsh::parameter_grid(3, 9))
      for (std::size_t i = 0; i < dirs.size(); i += 2) {
        const double res =
            std::abs(swsh::lhs_sum(id, p, dirs[i], dirs[i + 1]) - swsh::rhs_closed(id, p, dirs[i], dirs[i + 1]));
        CHECK_MESSAGE(res <= 1e-9 * (2 * p.ell.value() + 1),
                      swsh::to_string(id) << " s=" << p.s.to_string() << " s'=" << p.sprime.to_string()
                                          << " l=" << p.ell.to_string());
      }
}

TEST_CASE("coincidence closed forms") {
  const Direction d(1.3, 0.2);
  for (int tl = 2; tl <= 10; tl += 2) {
    const double l = tl / 2.0;
    CHECK(swsh::coincidence_rhs(TheoremId::DThetaBoth, {h(2), h(2), h(tl)}, d).real() ==
          doctest::Approx((2 * l + 1) * (l * l + l - 1) / kEightPi));
    CHECK(swsh::coincidence_rhs(TheoremId::M2Weight, {h(0), h(0), h(tl)}, Direction(M_PI / 2, 0.3)).real() ==
          doctest::Approx((2 * l + 1) * l * (l + 1) / kEightPi));
  }
  CHECK(swsh::coincidence_rhs(TheoremId::DThetaLeft, {h(-2), h(4), h(6)}, d) == cplx(0, 0));
  CHECK(std::abs(plain_sum(TheoremId::DThetaLeft, {h(-2), h(4), h(6)}, d)) < 1e-13);
}

TEST_CASE("spin-equal closed forms") {
  // Sum of m |Y|^2 at s = 1, l = 2 on a theta grid.
  const double c = 5 / kFourPi;
  for (auto [t, f] : {std::pair{0.0, 1.0}, {M_PI / 4, std::sqrt(0.5)}, {M_PI / 2, 0.0}}) {
    const auto v = swsh::spinsame_rhs(TheoremId::MWeight, h(2), h(4), Direction(t, 0.0));
    CHECK(v.real() == doctest::Approx(-c * f).scale(1.0));
  }
  for (double t : {0.1, 1.0, 2.5})
    CHECK(swsh::spinsame_rhs(TheoremId::MWeight, h(0), h(6), Direction(t, 1.0)) == cplx(0, 0));
  CHECK(swsh::spinsame_rhs(TheoremId::M2Weight, h(0), h(2), Direction(M_PI / 2, 0)).real() ==
        doctest::Approx(3 / kFourPi));
  for (double t : {0.2, 1.7, 3.0})
    CHECK(swsh::spinsame_rhs(TheoremId::DThetaBoth, h(1), h(5), Direction(t, 0)).real() ==
          doctest::Approx(6 * (2.5 * 3.5 - 0.25) / kEightPi));
  CHECK(swsh::spinsame_rhs(TheoremId::Base, h(3), h(7), Direction(1, 1)).real() == doctest::Approx(8 / kFourPi));
}

TEST_CASE("s = 0 reduces to the scalar closed forms") {
  const auto dirs = swsh::sample_directions(20, 8);
  for (int tl = 0; tl <= 16; tl += 2) {
    const double l = tl / 2.0;
    const TheoremParams p{h(0), h(0), h(tl)};
    for (const auto& d : dirs) {
      const double st = std::sin(d.theta());
      const double tol = 1e-10 * (2 * l + 1);
      // sum |Y|^2, sum m |Y|^2, sum m^2 |Y|^2, sum |dY|^2 and sum m dY conj(Y)
      CHECK(std::abs(plain_sum(TheoremId::Base, p, d) - (2 * l + 1) / kFourPi) <= tol);
      CHECK(std::abs(plain_sum(TheoremId::MWeight, p, d)) <= tol);
      CHECK(std::abs(plain_sum(TheoremId::M2Weight, p, d) - (2 * l + 1) * l * (l + 1) * st * st / kEightPi) <= tol);
      CHECK(std::abs(plain_sum(TheoremId::DThetaBoth, p, d) - (2 * l + 1) * l * (l + 1) / kEightPi) <= tol);
      CHECK(std::abs(plain_sum(TheoremId::MDTheta, p, d)) <= tol);
    }
  }
}

TEST_CASE("MDTheta: corrected sign holds, the printed sign does not") {
  const Direction eq(M_PI / 2, 0.0);
  const double val = swsh::spinsame_rhs(TheoremId::MDTheta, h(1), h(1), eq).real();
  CHECK(val == doctest::Approx(1 / kEightPi).epsilon(1e-14));
  CHECK(swsh::spinsame_rhs(TheoremId::MDTheta, h(1), h(1), eq, Form::as_printed).real() ==
        doctest::Approx(-1 / kEightPi).epsilon(1e-14));
  CHECK(plain_sum(TheoremId::MDTheta, {h(1), h(1), h(1)}, eq).real() == doctest::Approx(1 / kEightPi).epsilon(1e-13));

  const Direction a(0.8, 0.3), b(2.1, 4.0);
  const TheoremParams p{h(1), h(-1), h(3)};
  const auto lhs = swsh::lhs_sum(TheoremId::MDTheta, p, a, b);
  CHECK(std::abs(lhs - swsh::rhs_closed(TheoremId::MDTheta, p, a, b)) < 1e-12);
  CHECK(std::abs(lhs - swsh::rhs_closed(TheoremId::MDTheta, p, a, b, Form::as_printed)) > 1e-3);
  const TheoremParams pc{h(2), h(2), h(4)};
  CHECK(std::abs(plain_sum(TheoremId::MDTheta, pc, a) - swsh::coincidence_rhs(TheoremId::MDTheta, pc, a)) < 1e-12);
  CHECK(std::abs(plain_sum(TheoremId::MDTheta, pc, a) -
                 swsh::coincidence_rhs(TheoremId::MDTheta, pc, a, Form::as_printed)) > 1e-3);
}

TEST_CASE("pole values fed through rhs_closed reproduce coincidence_rhs") {
  const Direction d(1.2, 3.3);
  for (TheoremId id : swsh::kAllTheorems)
    for (const auto& p : swsh::parameter_grid(4, 10)) {
      const auto via_rhs = std::conj(swsh::sign_phase(p.s)) * swsh::rhs_closed(id, p, d, d);
      CHECK(std::abs(via_rhs - swsh::coincidence_rhs(id, p, d)) <= 1e-12 * (2 * p.ell.value() + 1));
    }
}
