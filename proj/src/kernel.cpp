#include "radon/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace radon {

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i)
    r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

// exp(-1/t) for t > 0, 0 otherwise; underflows cleanly near t = 0
double bump_half(double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; }

void check_piece_fits(const Piece& piece) {
  KernelStrip s = kernel_strip(piece.j);
  if (s.hi > piece.p.limit() || s.hi > piece.q.limit())
    throw std::out_of_range("kernel strip j = " + std::to_string(piece.j) +
                            " exceeds table limits");
}

std::complex<double> unit_phase(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace

DyadicKernel::DyadicKernel(int order) : order_(order) {
  // locate sup |rho| on (1/2, 2): dense grid, then a ternary refinement
  // around the best point
  constexpr int kGrid = 1 << 15;
  double best_x = 1.0;
  double best = 0.0;
  for (int i = 0; i <= kGrid; ++i) {
    double x = 0.5 + 1.5 * static_cast<double>(i) / kGrid;
    double v = std::abs(rho(x));
    if (v > best) {
      best = v;
      best_x = x;
    }
  }
  double lo = best_x - 1.5 / kGrid;
  double hi = best_x + 1.5 / kGrid;
  for (int it = 0; it < 80; ++it) {
    double a = lo + (hi - lo) / 3.0;
    double b = hi - (hi - lo) / 3.0;
    if (std::abs(rho(a)) < std::abs(rho(b)))
      lo = a;
    else
      hi = b;
  }
  sup_abs_ = std::max(best, std::abs(rho(0.5 * (lo + hi))));
}

DyadicKernel DyadicKernel::bump() { return DyadicKernel(-1); }

DyadicKernel DyadicKernel::smoothstep(int order) {
  if (order < 1) throw std::invalid_argument("smoothstep order must be >= 1");
  return DyadicKernel(order);
}

double DyadicKernel::step(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  if (order_ < 0) {
    double a = bump_half(t);
    double b = bump_half(1.0 - t);
    return a / (a + b);
  }
  // polynomial smoothstep of order k:
  // t^{k+1} sum_{n=0}^{k} C(k+n, n) C(2k+1, k-n) (-t)^n
  int k = order_;
  double acc = 0.0;
  double tn = 1.0;
  for (int n = 0; n <= k; ++n) {
    acc += binom(k + n, n) * binom(2 * k + 1, k - n) * tn;
    tn *= -t;
  }
  return std::pow(t, k + 1) * acc;
}

double DyadicKernel::cutoff(double x) const { return step(2.0 * x - 1.0); }

double DyadicKernel::rho(double x) const {
  double ax = std::abs(x);
  if (ax <= 0.5 || ax >= 2.0) return 0.0;
  double v = (cutoff(ax) - cutoff(ax * 0.5)) / ax;
  return x > 0.0 ? v : -v;
}

KernelStrip kernel_strip(int j) {
  if (j < 0) throw std::invalid_argument("scale index must be >= 0");
  if (j > 61) throw std::out_of_range("scale index too large for int64");
  KernelStrip s;
  if (j == 0) {
    s.lo = 1;
    s.hi = 1;
    return s;
  }
  s.lo = (std::int64_t{1} << (j - 1)) + 1;
  s.hi = (std::int64_t{1} << (j + 1)) - 1;
  return s;
}

std::complex<double> eval_sigma(const Piece& piece, double xi, double eta) {
  check_piece_fits(piece);
  KernelStrip s = kernel_strip(piece.j);
  double inv_scale = std::ldexp(1.0, -piece.j);
  constexpr double tau = 2.0 * std::numbers::pi;
  std::complex<double> acc{0.0, 0.0};
  for (std::int64_t m = s.lo; m <= s.hi; ++m) {
    double w = piece.kernel.rho(static_cast<double>(m) * inv_scale);
    double theta_pos = -tau * (static_cast<double>(piece.p(m)) * xi +
                               static_cast<double>(piece.q(m)) * eta);
    double theta_neg = -tau * (static_cast<double>(piece.p(-m)) * xi +
                               static_cast<double>(piece.q(-m)) * eta);
    acc += w * (unit_phase(theta_pos) - unit_phase(theta_neg));
  }
  return inv_scale * acc;
}

std::complex<double> eval_piece(const Piece& piece, const SignalSpec& f,
                                const SignalSpec& g, double x) {
  check_piece_fits(piece);
  KernelStrip s = kernel_strip(piece.j);
  double inv_scale = std::ldexp(1.0, -piece.j);
  std::complex<double> acc{0.0, 0.0};
  for (std::int64_t m = s.lo; m <= s.hi; ++m) {
    double w = piece.kernel.rho(static_cast<double>(m) * inv_scale);
    std::complex<double> pos = f(x - static_cast<double>(piece.p(m))) *
                               g(x - static_cast<double>(piece.q(m)));
    std::complex<double> neg = f(x - static_cast<double>(piece.p(-m))) *
                               g(x - static_cast<double>(piece.q(-m)));
    acc += w * (pos - neg);
  }
  return inv_scale * acc;
}

std::complex<double> partial_sum(const SignalSpec& f, const SignalSpec& g,
                                 const ArithFn& p, const ArithFn& q,
                                 const DyadicKernel& kernel, double x,
                                 int j_max) {
  if (j_max < 0) throw std::invalid_argument("partial sum needs j_max >= 0");
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j <= j_max; ++j)
    acc += eval_piece(Piece{j, p, q, kernel}, f, g, x);
  return acc;
}

std::unordered_map<std::int64_t, std::complex<double>> piece_values(
    const Piece& piece, const SignalSpec& f, const SignalSpec& g) {
  if (!f.is_compact() || !g.is_compact())
    throw std::domain_error("piece_values needs compact signals");
  check_piece_fits(piece);
  KernelStrip s = kernel_strip(piece.j);
  double inv_scale = std::ldexp(1.0, -piece.j);
  std::unordered_map<std::int64_t, std::complex<double>> out;
  auto scatter = [&](std::int64_t m) {
    double w =
        inv_scale * piece.kernel.rho(static_cast<double>(m) * inv_scale);
    std::int64_t pv = piece.p(m);
    std::int64_t qv = piece.q(m);
    std::int64_t lo = std::max(f.support_lo() + pv, g.support_lo() + qv);
    std::int64_t hi = std::min(f.support_hi() + pv, g.support_hi() + qv);
    for (std::int64_t n = lo; n <= hi; ++n)
      out[n] += w * f(static_cast<double>(n - pv)) *
                g(static_cast<double>(n - qv));
  };
  for (std::int64_t m = s.lo; m <= s.hi; ++m) {
    scatter(m);
    scatter(-m);
  }
  return out;
}

double piece_l1_norm(const Piece& piece, const SignalSpec& f,
                     const SignalSpec& g) {
  double sum = 0.0;
  for (const auto& [n, v] : piece_values(piece, f, g)) sum += std::abs(v);
  return sum;
}

double max_telescoping_error(const DyadicKernel& kernel, int j_max,
                             int samples) {
  if (j_max < 1 || samples < 2)
    throw std::invalid_argument("telescoping check needs j_max >= 1, samples >= 2");
  double hi = std::ldexp(1.0, j_max - 1);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    double x = std::pow(hi, static_cast<double>(i) / (samples - 1));
    for (double sx : {x, -x}) {
      double sum = 0.0;
      for (int j = 0; j <= j_max; ++j)
        sum += std::ldexp(kernel.rho(sx * std::ldexp(1.0, -j)), -j);
      worst = std::max(worst, std::abs(sum - 1.0 / sx));
    }
  }
  return worst;
}

}  // namespace radon
