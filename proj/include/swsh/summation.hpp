#ifndef SWSH_SUMMATION_HPP
#define SWSH_SUMMATION_HPP

#include <cmath>
#include <complex>

namespace swsh {

/// Neumaier-style compensated accumulator for real floating types and
/// std::complex<double> (real and imaginary parts compensated separately).
template <typename T>
class CompensatedSum {
 public:
  CompensatedSum& operator+=(T x) {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
    return *this;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

template <>
class CompensatedSum<std::complex<double>> {
 public:
  CompensatedSum& operator+=(std::complex<double> z) {
    re_ += z.real();
    im_ += z.imag();
    return *this;
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<double> re_;
  CompensatedSum<double> im_;
};

}  // namespace swsh

#endif  // SWSH_SUMMATION_HPP
