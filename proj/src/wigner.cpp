#include "swsh/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "swsh/summation.hpp"

namespace swsh {

namespace {

// Stored in long double: the small-d sum cancels, and the absolute error of
// a log-factorial becomes the relative error of every term.
class LogFactorialTable {
 public:
  explicit LogFactorialTable(int max_twice) : values_(static_cast<std::size_t>(max_twice) + 1) {
    for (int t = 0; t <= max_twice; ++t) values_[static_cast<std::size_t>(t)] = std::lgamma(0.5L * t + 1.0L);
    values_[0] = 0.0L;
    if (max_twice >= 2) values_[2] = 0.0L;
  }

  bool covers(std::int64_t twice) const { return twice < static_cast<std::int64_t>(values_.size()); }
  long double at(std::int64_t twice) const { return values_[static_cast<std::size_t>(twice)]; }

 private:
  std::vector<long double> values_;
};

const LogFactorialTable& table() {
  // x in [0, 2 l_max + 1] in half steps.
  static const LogFactorialTable t(2 * (2 * kDefaultEllMax + 1));
  return t;
}

long double log_factorial_wide(std::int64_t twice) {
  const auto& t = table();
  if (t.covers(twice)) return t.at(twice);
  return std::lgamma(0.5L * static_cast<long double>(twice) + 1.0L);
}

struct Term {
  long double log_mag;
  int sign;
};

}  // namespace

void check_wigner_indices(HalfInt ell, HalfInt m, HalfInt mprime) {
  if (ell < HalfInt{}) throw DomainError("ell must be non-negative, got " + ell.to_string());
  if (abs(m) > ell || abs(mprime) > ell)
    throw DomainError("|m|, |m'| must not exceed ell (ell=" + ell.to_string() + ", m=" + m.to_string() +
                      ", m'=" + mprime.to_string() + ")");
  if (!(ell - m).is_integer() || !(ell - mprime).is_integer())
    throw DomainError("ell - m and ell - m' must be integers (ell=" + ell.to_string() + ", m=" + m.to_string() +
                      ", m'=" + mprime.to_string() + ")");
}

double log_factorial_half(HalfInt x) {
  if (x < HalfInt{}) throw DomainError("log_factorial_half: negative argument " + x.to_string());
  return static_cast<double>(log_factorial_wide(x.twice()));
}

double wigner_small_d(HalfInt ell, HalfInt m, HalfInt mprime, double beta) {
  check_wigner_indices(ell, m, mprime);
  if (beta == 0.0) return m == mprime ? 1.0 : 0.0;

  const long double half_beta = 0.5L * static_cast<long double>(beta);
  const long double c = std::cos(half_beta);
  const long double s = std::sin(half_beta);
  const long double log_c = std::log(std::abs(c));
  const long double log_s = std::log(std::abs(s));
  const int sign_c = c < 0.0L ? -1 : 1;
  const int sign_s = s < 0.0L ? -1 : 1;

  // Row index m, column index m' (d^l_{1,0} = -sin(beta)/sqrt 2).
  const std::int64_t lpmp = (ell + mprime).as_integer();
  const std::int64_t lmm = (ell - m).as_integer();
  const std::int64_t mpm = (mprime - m).as_integer();  // m' - m

  const long double log_norm =
      0.5L * (log_factorial_wide((ell + m).twice()) + log_factorial_wide((ell - m).twice()) +
              log_factorial_wide((ell + mprime).twice()) + log_factorial_wide((ell - mprime).twice()));

  const std::int64_t k_lo = std::max<std::int64_t>(0, mpm);
  const std::int64_t k_hi = std::min(lpmp, lmm);

  std::vector<Term> terms;
  terms.reserve(static_cast<std::size_t>(std::max<std::int64_t>(0, k_hi - k_lo + 1)));
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    const std::int64_t pow_c = lpmp + lmm - 2 * k;  // 2l - 2k + m' - m
    const std::int64_t pow_s = 2 * k - mpm;         // 2k - m' + m
    if ((pow_c > 0 && c == 0.0L) || (pow_s > 0 && s == 0.0L)) continue;

    long double log_mag = log_norm;
    log_mag -= log_factorial_wide(2 * (lpmp - k));
    log_mag -= log_factorial_wide(2 * k);
    log_mag -= log_factorial_wide(2 * (lmm - k));
    log_mag -= log_factorial_wide(2 * (k - mpm));
    if (pow_c > 0) log_mag += static_cast<long double>(pow_c) * log_c;
    if (pow_s > 0) log_mag += static_cast<long double>(pow_s) * log_s;

    int sign = ((k - mpm) % 2 == 0) ? 1 : -1;
    if (sign_c < 0 && pow_c % 2 != 0) sign = -sign;
    if (sign_s < 0 && pow_s % 2 != 0) sign = -sign;
    terms.push_back({log_mag, sign});
  }

  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.log_mag < b.log_mag; });
  CompensatedSum<long double> acc;
  for (const auto& t : terms) acc += static_cast<long double>(t.sign) * std::exp(t.log_mag);
  return static_cast<double>(acc.value());
}

std::complex<double> wigner_big_D(const WignerArgs& args) {
  const double d = wigner_small_d(args.ell, args.m, args.mprime, args.angles.beta);
  if (args.angles.alpha == 0.0 && args.angles.gamma == 0.0) return {d, 0.0};
  const double phase = -(args.m.value() * args.angles.alpha + args.mprime.value() * args.angles.gamma);
  return d * std::polar(1.0, phase);
}

}  // namespace swsh
