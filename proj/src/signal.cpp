#include "radon/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace radon {

SignalSpec SignalSpec::compact(
    const std::map<std::int64_t, std::complex<double>>& values) {
  SignalSpec s;
  s.kind_ = Kind::compact;
  if (values.empty()) {
    s.lo_ = 0;
    s.vals_ = {std::complex<double>(0.0, 0.0)};
    return s;
  }
  std::int64_t lo = values.begin()->first;
  std::int64_t hi = values.rbegin()->first;
  s.lo_ = lo;
  s.vals_.assign(static_cast<std::size_t>(hi - lo + 1), {0.0, 0.0});
  for (const auto& [n, v] : values) {
    s.vals_[static_cast<std::size_t>(n - lo)] = v;
    s.sup_abs_ = std::max(s.sup_abs_, std::abs(v));
  }
  return s;
}

SignalSpec SignalSpec::cauchy(double center, double scale, double amplitude) {
  if (!(scale > 0.0)) throw std::invalid_argument("cauchy scale must be > 0");
  SignalSpec s;
  s.kind_ = Kind::cauchy;
  s.center_ = center;
  s.scale_ = scale;
  s.amp_ = amplitude;
  s.sup_abs_ = std::abs(amplitude);
  return s;
}

std::complex<double> SignalSpec::operator()(double x) const {
  if (kind_ == Kind::cauchy) {
    double t = (x - center_) / scale_;
    return {amp_ / (t * t + 1.0), 0.0};
  }
  // compact sequences live on the integers only
  if (std::nearbyint(x) != x) return {0.0, 0.0};
  auto n = static_cast<std::int64_t>(x);
  if (n < lo_ || n >= lo_ + static_cast<std::int64_t>(vals_.size()))
    return {0.0, 0.0};
  return vals_[static_cast<std::size_t>(n - lo_)];
}

double SignalSpec::l2_norm() const {
  if (kind_ == Kind::compact) {
    double sum = 0.0;
    for (const auto& v : vals_) sum += std::norm(v);
    return std::sqrt(sum);
  }
  // sum |f(n)|^2 far enough out that the quartic tail is below 1e-18
  // relative; the remainder beyond K is under amp^2 scale^4 / K^3
  auto base = static_cast<std::int64_t>(std::llround(center_));
  std::int64_t k = std::max<std::int64_t>(1000000,
      static_cast<std::int64_t>(1000.0 * scale_));
  double sum = std::norm((*this)(static_cast<double>(base)));
  for (std::int64_t i = 1; i <= k; ++i) {
    sum += std::norm((*this)(static_cast<double>(base + i)));
    sum += std::norm((*this)(static_cast<double>(base - i)));
  }
  return std::sqrt(sum);
}

SignalSpec SignalSpec::normalized() const {
  double norm = l2_norm();
  if (!(norm > 0.0))
    throw std::domain_error("cannot normalize a zero signal");
  SignalSpec s = *this;
  if (kind_ == Kind::cauchy) {
    s.amp_ /= norm;
    s.sup_abs_ = std::abs(s.amp_);
    return s;
  }
  s.sup_abs_ = 0.0;
  for (auto& v : s.vals_) {
    v /= norm;
    s.sup_abs_ = std::max(s.sup_abs_, std::abs(v));
  }
  return s;
}

std::int64_t SignalSpec::support_lo() const {
  if (kind_ != Kind::compact)
    throw std::domain_error("support bounds are for compact signals");
  return lo_;
}

std::int64_t SignalSpec::support_hi() const {
  if (kind_ != Kind::compact)
    throw std::domain_error("support bounds are for compact signals");
  return lo_ + static_cast<std::int64_t>(vals_.size()) - 1;
}

double SignalSpec::center() const {
  if (kind_ != Kind::cauchy) throw std::domain_error("not a cauchy signal");
  return center_;
}

double SignalSpec::scale() const {
  if (kind_ != Kind::cauchy) throw std::domain_error("not a cauchy signal");
  return scale_;
}

double SignalSpec::amplitude() const {
  if (kind_ != Kind::cauchy) throw std::domain_error("not a cauchy signal");
  return amp_;
}

double SignalSpec::majorant(double dist) const {
  if (kind_ != Kind::cauchy)
    throw std::domain_error("majorant is declared for cauchy signals only");
  if (dist < 0.0) dist = 0.0;
  double t = dist / scale_;
  return std::abs(amp_) / (t * t + 1.0);
}

}  // namespace radon
