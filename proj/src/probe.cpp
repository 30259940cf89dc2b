#include "radon/probe.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "radon/parallel.hpp"

namespace radon {

namespace {

void check_window(Window w) {
  if (w.size() <= 0) throw std::invalid_argument("empty evaluation window");
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0))
    throw std::invalid_argument("level threshold must be > 0");
}

// Collision buckets behind the V integral: the multiplier sum collapses by
// Plancherel to sum over P-values v of z_v w_v with
//   z_v = sum_{P(m)=v} W(m) e^{-2 pi i Q(m) eta},  w_v its mirror,
// where W(m) = sum_{j=m_start}^{j_max} 2^{-j} rho(m/2^j). Building the
// buckets once makes scanning an eta grid cheap.
struct VBuckets {
  struct Term {
    double weight;
    std::int64_t q_value;
  };
  std::vector<std::vector<Term>> buckets;

  VBuckets(const ArithFn& p, const ArithFn& q, const DyadicKernel& kernel,
           int m_start, int j_max) {
    if (m_start < 0) throw std::invalid_argument("m_start must be >= 0");
    if (j_max < m_start) return;  // empty multiplier sum
    KernelStrip outer = kernel_strip(j_max);
    if (outer.hi > p.limit() || outer.hi > q.limit())
      throw std::out_of_range("scale j_max exceeds table limits");
    std::int64_t lo = kernel_strip(m_start).lo;
    std::int64_t hi = outer.hi;

    std::unordered_map<std::int64_t, std::size_t> index;
    auto add = [&](std::int64_t m, double w) {
      auto [it, fresh] = index.try_emplace(p(m), buckets.size());
      if (fresh) buckets.emplace_back();
      buckets[it->second].push_back(Term{w, q(m)});
    };
    for (std::int64_t m = lo; m <= hi; ++m) {
      // rho(m/2^j) is nonzero for at most the two scales around log2(m)
      int k = std::bit_width(static_cast<std::uint64_t>(m)) - 1;
      double w = 0.0;
      for (int j = std::max(k, m_start); j <= std::min(k + 1, j_max); ++j)
        w += std::ldexp(kernel.rho(std::ldexp(static_cast<double>(m), -j)),
                        -j);
      if (w == 0.0) continue;
      add(m, w);
      add(-m, -w);
    }
  }

  std::complex<double> eval(double eta) const {
    constexpr double tau = 2.0 * std::numbers::pi;
    std::complex<double> total{0.0, 0.0};
    for (const auto& bucket : buckets) {
      std::complex<double> z{0.0, 0.0};
      std::complex<double> w{0.0, 0.0};
      for (const Term& t : bucket) {
        double theta = tau * static_cast<double>(t.q_value) * eta;
        double c = std::cos(theta);
        double s = std::sin(theta);
        z += t.weight * std::complex<double>(c, -s);
        w += t.weight * std::complex<double>(c, s);
      }
      total += z * w;
    }
    return total;
  }
};

}  // namespace

std::vector<double> lambda_grid(double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo))
    throw std::invalid_argument("lambda grid needs 0 < lo <= hi");
  const double ratio = std::pow(2.0, 0.25);
  std::vector<double> grid;
  for (double v = hi; v >= lo * (1.0 - 1e-12); v /= ratio) grid.push_back(v);
  return grid;
}

LevelSetProfile level_sets(const SignalSpec& f, const SignalSpec& g,
                           const ArithFn& p, const ArithFn& q, std::int64_t t0,
                           Window window, std::vector<double> lambdas,
                           double epsilon) {
  check_window(window);
  if (lambdas.empty()) throw std::invalid_argument("empty lambda grid");
  for (double l : lambdas) check_lambda(l);
  std::sort(lambdas.begin(), lambdas.end(), std::greater<>());

  std::vector<double> magnitude(static_cast<std::size_t>(window.size()));
  parallel_for(window.size(), [&](std::int64_t i) {
    double x = static_cast<double>(window.lo + i);
    magnitude[static_cast<std::size_t>(i)] =
        std::abs(evaluate_truncated(f, g, p, q, x, t0));
  });

  LevelSetProfile profile;
  profile.lambdas = std::move(lambdas);
  profile.epsilon = epsilon;
  profile.sizes.reserve(profile.lambdas.size());
  for (double lambda : profile.lambdas) {
    std::int64_t count = 0;
    for (double v : magnitude)
      if (v > lambda) ++count;
    profile.sizes.push_back(count);
    if (count > 0) {
      double weight =
          lambda * std::pow(static_cast<double>(count), 1.0 / (1.0 + epsilon));
      profile.weak_norm = std::max(profile.weak_norm, weight);
    }
  }
  return profile;
}

SplitCounts split_level_sets(const SignalSpec& f, const SignalSpec& g,
                             const ArithFn& p, const ArithFn& q,
                             const DyadicKernel& kernel, int m_cut, int j_max,
                             double lambda, Window window) {
  check_window(window);
  check_lambda(lambda);
  if (m_cut < 0) throw std::invalid_argument("cutoff scale must be >= 0");

  std::int64_t n = window.size();
  std::vector<double> low(static_cast<std::size_t>(n));
  std::vector<double> high(static_cast<std::size_t>(n));
  std::vector<double> full(static_cast<std::size_t>(n));
  parallel_for(n, [&](std::int64_t i) {
    double x = static_cast<double>(window.lo + i);
    std::complex<double> sum1{0.0, 0.0};
    for (int j = 0; j < m_cut; ++j)
      sum1 += eval_piece(Piece{j, p, q, kernel}, f, g, x);
    std::complex<double> sum2{0.0, 0.0};
    for (int j = m_cut; j <= j_max; ++j)
      sum2 += eval_piece(Piece{j, p, q, kernel}, f, g, x);
    low[static_cast<std::size_t>(i)] = std::abs(sum1);
    high[static_cast<std::size_t>(i)] = std::abs(sum2);
    full[static_cast<std::size_t>(i)] = std::abs(sum1 + sum2);
  });

  auto count_over = [n](const std::vector<double>& v, double threshold) {
    std::int64_t c = 0;
    for (std::int64_t i = 0; i < n; ++i)
      if (v[static_cast<std::size_t>(i)] > threshold) ++c;
    return c;
  };

  // the triangle step behind the split must hold pointwise on the window
  std::int64_t e_full = count_over(full, lambda);
  std::int64_t e1_half = count_over(low, lambda / 2.0);
  std::int64_t e2_half = count_over(high, lambda / 2.0);
  if (e_full > e1_half + e2_half)
    throw std::logic_error("level-set triangle inequality violated");

  return SplitCounts{count_over(low, lambda), count_over(high, lambda)};
}

std::complex<double> v_exact_complex(const ArithFn& p, const ArithFn& q,
                                     const DyadicKernel& kernel, double eta,
                                     int m_start, int j_max) {
  return VBuckets(p, q, kernel, m_start, j_max).eval(eta);
}

double v_exact(const ArithFn& p, const ArithFn& q, const DyadicKernel& kernel,
               double eta, int m_start, int j_max) {
  std::complex<double> v = v_exact_complex(p, q, kernel, eta, m_start, j_max);
  if (std::abs(v.imag()) > 1e-9)
    throw std::logic_error("collision sum has a non-vanishing imaginary part");
  return v.real();
}

VCensusBound v_census_bound(const ArithFn& p, int m_start, int j_max,
                            double delta) {
  if (m_start < 0) throw std::invalid_argument("m_start must be >= 0");
  if (j_max < m_start)
    throw std::invalid_argument("j_max must be >= m_start");
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");

  VCensusBound out;
  std::vector<CollisionRecord> fit_records;
  for (int j1 = m_start; j1 <= j_max; ++j1) {
    for (int j2 = m_start; j2 <= j_max; ++j2) {
      CollisionRecord rec = count_collisions(p, j1, j2, delta);
      out.bound += std::ldexp(static_cast<double>(rec.count), -(j1 + j2));
      if (j1 >= 1 && j2 >= 1) fit_records.push_back(rec);
    }
  }

  if (!fit_records.empty()) {
    out.delta_prime = fit_delta_prime(fit_records, delta).delta_prime;
    // Condition (**) extrapolation of the discarded region (either index
    // beyond j_max): 2^{-j1-j2} |S| <= delta' / ((j1 j2) (ln 2)^2)^{1+delta},
    // closed with integral comparisons.
    int m_eff = std::max(1, m_start);
    double s_from_m = std::pow(static_cast<double>(m_eff), -delta) / delta +
                      std::pow(static_cast<double>(m_eff), -(1.0 + delta));
    double t_beyond_j =
        std::pow(static_cast<double>(j_max), -delta) / delta;
    out.tail_estimate = out.delta_prime *
                        std::pow(std::numbers::ln2, -2.0 * (1.0 + delta)) *
                        2.0 * s_from_m * t_beyond_j;
  }
  return out;
}

double v_sup_estimate(const ArithFn& p, const ArithFn& q,
                      const DyadicKernel& kernel, int m_start, int j_max,
                      int grid, int refine_iters) {
  if (grid < 2) throw std::invalid_argument("eta grid needs >= 2 points");
  VBuckets buckets(p, q, kernel, m_start, j_max);

  std::vector<double> values(static_cast<std::size_t>(grid));
  parallel_for(grid, [&](std::int64_t i) {
    double eta = static_cast<double>(i) / grid;
    values[static_cast<std::size_t>(i)] = buckets.eval(eta).real();
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;

  // local refinement around the grid maximizer
  double lo = (static_cast<double>(best) - 1.0) / grid;
  double hi = (static_cast<double>(best) + 1.0) / grid;
  double peak = values[best];
  for (int it = 0; it < refine_iters; ++it) {
    double a = lo + (hi - lo) / 3.0;
    double b = hi - (hi - lo) / 3.0;
    double va = buckets.eval(a).real();
    double vb = buckets.eval(b).real();
    peak = std::max({peak, va, vb});
    if (va < vb)
      lo = a;
    else
      hi = b;
  }
  return peak;
}

int choose_cutoff(double lambda, double delta) {
  check_lambda(lambda);
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  if (lambda >= 1.0) return 0;
  double m = std::pow(1.0 / lambda, 1.0 / (1.0 + 2.0 * delta));
  return static_cast<int>(std::max<long long>(1, std::llround(m)));
}

double maximal_operator(const SignalSpec& f, const SignalSpec& g,
                        const ArithFn& p, const ArithFn& q, double x,
                        std::int64_t m_max) {
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  if (m_max > p.limit() || m_max > q.limit())
    throw std::out_of_range("m_max exceeds table limits");
  std::complex<double> sum{0.0, 0.0};
  double best = 0.0;
  for (std::int64_t m = 1; m <= m_max; ++m) {
    sum += f(x - static_cast<double>(p(m))) * g(x - static_cast<double>(q(m)));
    best = std::max(best, std::abs(sum) / static_cast<double>(m));
  }
  return best;
}

bool e1_bound_check(const SignalSpec& f, const SignalSpec& g, const ArithFn& p,
                    const ArithFn& q, const DyadicKernel& kernel, int m_cut,
                    double lambda, Window window) {
  check_window(window);
  check_lambda(lambda);
  if (m_cut < 0) throw std::invalid_argument("cutoff scale must be >= 0");

  std::int64_t n = window.size();
  std::vector<char> over(static_cast<std::size_t>(n), 0);
  parallel_for(n, [&](std::int64_t i) {
    double x = static_cast<double>(window.lo + i);
    std::complex<double> sum{0.0, 0.0};
    for (int j = 0; j < m_cut; ++j)
      sum += eval_piece(Piece{j, p, q, kernel}, f, g, x);
    over[static_cast<std::size_t>(i)] = std::abs(sum) > lambda ? 1 : 0;
  });
  std::int64_t count = 0;
  for (char c : over) count += c;
  double ceiling = 4.0 * kernel.sup_abs() * static_cast<double>(m_cut) / lambda;
  return static_cast<double>(count) <= ceiling;
}

}  // namespace radon
