#ifndef SWSH_HALF_INT_HPP
#define SWSH_HALF_INT_HPP

#include <compare>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace swsh {

/// Raised whenever quantum numbers, angles or parameters fall outside
/// the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact integer-or-half-integer number, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt integer(std::int64_t n) { return HalfInt(2 * n); }

  /// Parses "n" or "n/2" (odd n for the latter). Decimal forms are rejected.
  static HalfInt parse(std::string_view token);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr double value() const { return 0.5 * static_cast<double>(twice_); }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }

  constexpr auto operator<=>(const HalfInt&) const = default;

  /// Integer value; throws if this is a genuine half-integer.
  std::int64_t as_integer() const;

  std::string to_string() const;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

constexpr HalfInt abs(HalfInt x) { return x.twice() < 0 ? -x : x; }

constexpr HalfInt operator""_hi(unsigned long long n) {
  return HalfInt::integer(static_cast<std::int64_t>(n));
}

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

/// (-1)^x taken as e^{i pi x}; exact for every half-integer x.
std::complex<double> sign_phase(HalfInt x);

/// (-1)^n for an integer-valued HalfInt.
int parity(HalfInt n);

}  // namespace swsh

#endif  // SWSH_HALF_INT_HPP
