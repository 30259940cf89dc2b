#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

namespace radon {

// An input signal for the bilinear transform: either a finitely supported
// complex sequence on the integers (evaluates to 0 at non-integer
// arguments), or a Cauchy profile amp / (((x-center)/scale)^2 + 1)
// evaluable at any real argument.
class SignalSpec {
 public:
  enum class Kind { compact, cauchy };

  static SignalSpec compact(
      const std::map<std::int64_t, std::complex<double>>& values);
  static SignalSpec cauchy(double center = 0.0, double scale = 1.0,
                           double amplitude = 1.0);

  Kind kind() const noexcept { return kind_; }
  bool is_compact() const noexcept { return kind_ == Kind::compact; }
  bool is_cauchy() const noexcept { return kind_ == Kind::cauchy; }

  std::complex<double> operator()(double x) const;

  double sup_abs() const noexcept { return sup_abs_; }

  // l2 norm over the integers (exact for compact; summed with a negligible
  // certified remainder for cauchy)
  double l2_norm() const;

  // same signal scaled to unit l2 norm over the integers
  SignalSpec normalized() const;

  // compact only: inclusive support hull
  std::int64_t support_lo() const;
  std::int64_t support_hi() const;

  // cauchy only
  double center() const;
  double scale() const;
  double amplitude() const;

  // cauchy only: decreasing bound on |f(y)| valid whenever
  // |y - center| >= dist >= 0
  double majorant(double dist) const;

 private:
  SignalSpec() = default;
  Kind kind_ = Kind::compact;
  // compact: dense values over [lo_, lo_ + vals_.size())
  std::int64_t lo_ = 0;
  std::vector<std::complex<double>> vals_;
  // cauchy parameters
  double center_ = 0.0;
  double scale_ = 1.0;
  double amp_ = 1.0;
  double sup_abs_ = 0.0;
};

}  // namespace radon
