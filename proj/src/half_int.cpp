#include "swsh/half_int.hpp"

#include <charconv>

namespace swsh {

namespace {

std::int64_t parse_signed(std::string_view s, std::string_view whole) {
  if (s.empty()) throw DomainError("empty half-integer token: '" + std::string(whole) + "'");
  std::string_view digits = s;
  if (digits.front() == '+') digits.remove_prefix(1);
  std::int64_t v = 0;
  const char* first = digits.data();
  const char* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || digits.empty())
    throw DomainError("malformed half-integer token: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view token) {
  const auto slash = token.find('/');
  if (slash == std::string_view::npos) return integer(parse_signed(token, token));
  const std::int64_t num = parse_signed(token.substr(0, slash), token);
  const std::string_view den = token.substr(slash + 1);
  if (den != "2") throw DomainError("half-integer denominator must be 2: '" + std::string(token) + "'");
  if (num % 2 == 0)
    throw DomainError("n/2 form requires odd n (write integers plainly): '" + std::string(token) + "'");
  return from_twice(num);
}

std::int64_t HalfInt::as_integer() const {
  if (!is_integer()) throw DomainError("expected an integer, got " + to_string());
  return twice_ / 2;
}

std::string HalfInt::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

std::complex<double> sign_phase(HalfInt x) {
  // e^{i pi t/2} cycles with period 4 in t = 2x.
  switch (((x.twice() % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

int parity(HalfInt n) { return (n.as_integer() % 2 == 0) ? 1 : -1; }

}  // namespace swsh
