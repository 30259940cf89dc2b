#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "radon/arith.hpp"
#include "radon/census.hpp"
#include "radon/kernel.hpp"
#include "radon/signal.hpp"
#include "radon/transform.hpp"

namespace radon {

// lambda |-> |E_lambda| over a declared integer window, with the weak-norm
// statistic sup_lambda lambda |E_lambda|^{1/(1+epsilon)}.
struct LevelSetProfile {
  std::vector<double> lambdas;      // descending
  std::vector<std::int64_t> sizes;  // |E_lambda| per grid point
  double epsilon = 0.0;
  double weak_norm = 0.0;
};

// geometric grid with ratio 2^{1/4} from hi down to lo, descending
std::vector<double> lambda_grid(double lo, double hi);

// Level sets of the truncated transform B_t0(f,g) counted over the window.
// Callers normalize f, g to unit l2 when reading off weak-norm statistics.
LevelSetProfile level_sets(const SignalSpec& f, const SignalSpec& g,
                           const ArithFn& p, const ArithFn& q, std::int64_t t0,
                           Window window, std::vector<double> lambdas,
                           double epsilon);

struct SplitCounts {
  std::int64_t e1 = 0;  // |{n : |sum_{j < m_cut} T_j| > lambda}|
  std::int64_t e2 = 0;  // |{n : |sum_{m_cut <= j <= j_max} T_j| > lambda}|
};

// Two-piece split of the level set at the cutoff scale m_cut, with the
// triangle step |E_lambda| <= |E^(1)_{lambda/2}| + |E^(2)_{lambda/2}|
// verified internally on the window.
SplitCounts split_level_sets(const SignalSpec& f, const SignalSpec& g,
                             const ArithFn& p, const ArithFn& q,
                             const DyadicKernel& kernel, int m_cut, int j_max,
                             double lambda, Window window);

// integral_0^1 |sum_{j=m_start}^{j_max} sigma_j(xi, eta)|^2 dxi, evaluated
// exactly through the collision-bucket identity; the complex variant
// exposes the raw accumulation whose imaginary part must vanish
std::complex<double> v_exact_complex(const ArithFn& p, const ArithFn& q,
                                     const DyadicKernel& kernel, double eta,
                                     int m_start, int j_max);
double v_exact(const ArithFn& p, const ArithFn& q, const DyadicKernel& kernel,
               double eta, int m_start, int j_max);

// Census majorant sum_{j1,j2 = m_start}^{j_max} 2^{-j1-j2} |S^P| plus a
// separately reported estimate of the discarded j > j_max tail derived
// from the fitted delta'.
struct VCensusBound {
  double bound = 0.0;
  double tail_estimate = 0.0;
  double delta_prime = 0.0;
};
VCensusBound v_census_bound(const ArithFn& p, int m_start, int j_max,
                            double delta);

// Lower estimate of sup_eta V(eta): dense grid plus local refinement
// around the maximizer.
double v_sup_estimate(const ArithFn& p, const ArithFn& q,
                      const DyadicKernel& kernel, int m_start, int j_max,
                      int grid = 1024, int refine_iters = 40);

// Cutoff scale optimizing M/lambda + 1/(lambda^2 M^{2 delta}): 0 for
// lambda >= 1, otherwise round((1/lambda)^{1/(1+2 delta)}) with minimum 1.
int choose_cutoff(double lambda, double delta);

// sup over integer M in [1, m_max] of |M^{-1} sum_{m=1}^{M} f(x-P(m)) g(x-Q(m))|
// (positive m only)
double maximal_operator(const SignalSpec& f, const SignalSpec& g,
                        const ArithFn& p, const ArithFn& q, double x,
                        std::int64_t m_max);

// checks |E^(1)_lambda| <= 4 sup|rho| m_cut / lambda on the window
// (unit-normalized f, g)
bool e1_bound_check(const SignalSpec& f, const SignalSpec& g, const ArithFn& p,
                    const ArithFn& q, const DyadicKernel& kernel, int m_cut,
                    double lambda, Window window);

}  // namespace radon
