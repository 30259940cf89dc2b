#pragma once

#include <complex>
#include <cstdint>
#include <unordered_map>

#include "radon/arith.hpp"
#include "radon/signal.hpp"

namespace radon {

// Odd smooth cutoff rho supported in 1/2 < |x| < 2 whose dyadic rescalings
// telescope to 1/x:  sum_j 2^{-j} rho(x/2^j) = 1/x for |x| >= 1.
//
// Built from a cutoff eta with eta = 0 on (-inf, 1/2] and eta = 1 on
// [1, inf): rho(x) = (eta(x) - eta(x/2))/x for x > 0, extended oddly.
// The profile of eta is either the classical exp(-1/t) bump (C-infinity)
// or a polynomial smoothstep of chosen order.
class DyadicKernel {
 public:
  static DyadicKernel bump();
  static DyadicKernel smoothstep(int order);  // C^order, order >= 1

  double cutoff(double x) const;  // eta above
  double rho(double x) const;
  double operator()(double x) const { return rho(x); }

  // numerically located max of |rho| (grid + local refinement)
  double sup_abs() const noexcept { return sup_abs_; }

  int order() const noexcept { return order_; }  // -1 for the bump profile

 private:
  explicit DyadicKernel(int order);
  double step(double t) const;  // 0 for t<=0, 1 for t>=1
  int order_ = -1;
  double sup_abs_ = 0.0;
};

// Integer support of rho(. / 2^j) on the positive side: 2^{j-1} < m < 2^{j+1}
// (open, unlike the closed census strips). j = 0 gives just m = 1.
struct KernelStrip {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};
KernelStrip kernel_strip(int j);

// One scale of the dyadic decomposition, tied to its pair of arithmetic
// functions and the cutoff.
struct Piece {
  int j = 0;
  ArithFn p;
  ArithFn q;
  DyadicKernel kernel;
};

// sigma_j(xi, eta) = 2^{-j} sum_m rho(m/2^j) exp(-2 pi i (P(m) xi + Q(m) eta)),
// summed as +-m pairs so sigma_j(0, 0) = 0 exactly.
std::complex<double> eval_sigma(const Piece& piece, double xi, double eta);

// T_j(f,g)(x) = 2^{-j} sum_m rho(m/2^j) f(x - P(m)) g(x - Q(m)), +-m paired
// so P = Q with even parity cancels to exact zero.
std::complex<double> eval_piece(const Piece& piece, const SignalSpec& f,
                                const SignalSpec& g, double x);

// sum_{j=0}^{j_max} T_j(f,g)(x)
std::complex<double> partial_sum(const SignalSpec& f, const SignalSpec& g,
                                 const ArithFn& p, const ArithFn& q,
                                 const DyadicKernel& kernel, double x,
                                 int j_max);

// All nonzero values of T_j(f,g) over the integers, for compact f, g
// (scatter accumulation; summation order differs from eval_piece by
// floating rounding only).
std::unordered_map<std::int64_t, std::complex<double>> piece_values(
    const Piece& piece, const SignalSpec& f, const SignalSpec& g);

// l1 norm of T_j(f,g) over the integers, compact f, g
double piece_l1_norm(const Piece& piece, const SignalSpec& f,
                     const SignalSpec& g);

// max over a log-spaced sample grid (both signs) of
// |sum_{j<=j_max} 2^{-j} rho(x/2^j) - 1/x| for 1 <= |x| <= 2^{j_max - 1}
double max_telescoping_error(const DyadicKernel& kernel, int j_max,
                             int samples);

}  // namespace radon
