#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "radon/arith.hpp"
#include "radon/signal.hpp"

namespace radon {

struct Sample {
  double x = 0.0;
  std::complex<double> value{0.0, 0.0};
};

struct XRange {
  double lo = 0.0;
  double hi = 0.0;
};

// Inclusive integer window.
struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::int64_t size() const noexcept { return hi < lo ? 0 : hi - lo + 1; }
};

// Certified truncation error: |full sum - truncated-at-t0 sum| <= tail_bound
// for the declared x range and signal pair.
struct TruncationBudget {
  std::int64_t t0 = 0;
  double tail_bound = 0.0;
};

// sum over 1 <= |m| <= t0 of f(x - P(m)) g(x - Q(m)) / m, accumulated as
// +-m pairs (innermost) in ascending |m|. The fixed order makes P = Q with
// even parity cancel to exact zero and keeps results bit-reproducible.
std::complex<double> evaluate_truncated(const SignalSpec& f,
                                        const SignalSpec& g, const ArithFn& p,
                                        const ArithFn& q, double x,
                                        std::int64_t t0);

// grid evaluation over x_min, x_min + step, ..., x_max (points computed in
// parallel, emitted in grid order); rejects step <= 0
std::vector<Sample> figure_series(const SignalSpec& f, const SignalSpec& g,
                                  const ArithFn& p, const ArithFn& q,
                                  double x_min, double x_max, double step,
                                  std::int64_t t0);

// Rigorous bound on the discarded |m| > t0 tail over the given x range,
// closed by an integral comparison against the growth minorant of p (or q).
// Throws if neither side has the needed majorant/minorant declarations.
TruncationBudget tail_budget(const SignalSpec& f, const SignalSpec& g,
                             const ArithFn& p, const ArithFn& q, XRange xr,
                             std::int64_t t0);

// The untruncated sum at integer x for compact f, g: enumerates the m with
// both factors nonzero within |m| <= search_bound and certifies via the
// growth minorant that nothing survives beyond it; throws when no side can
// be certified.
std::complex<double> evaluate_exact_compact(const SignalSpec& f,
                                            const SignalSpec& g,
                                            const ArithFn& p, const ArithFn& q,
                                            std::int64_t x,
                                            std::int64_t search_bound);

// Hull of the n with a possibly nonzero term for compact f, g at
// truncation t0 (empty window when the two hulls do not intersect).
Window reachable_window(const SignalSpec& f, const SignalSpec& g,
                        const ArithFn& p, const ArithFn& q, std::int64_t t0);

}  // namespace radon
