#include "radon/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "radon/parallel.hpp"

namespace radon {

namespace {

void check_t0(const ArithFn& p, const ArithFn& q, std::int64_t t0) {
  if (t0 < 1) throw std::invalid_argument("truncation t0 must be >= 1");
  if (t0 > p.limit() || t0 > q.limit())
    throw std::out_of_range("truncation t0 = " + std::to_string(t0) +
                            " exceeds table limits");
}

// One-sided tail bound sum_{m > t0} (1/m) majorant_f(dist(x, P(m))) sup|g|
// with P(m) replaced by its declared minorant and the sum closed by an
// integral comparison (the summand is nonincreasing in m). Returns nothing
// when this side lacks the needed declarations.
std::optional<double> side_tail_bound(const SignalSpec& sig,
                                      const SignalSpec& other,
                                      const ArithFn& fn, XRange xr,
                                      std::int64_t t0) {
  if (!fn.has_minorant()) return std::nullopt;
  double x_abs = std::max(std::abs(xr.lo), std::abs(xr.hi));

  if (sig.is_compact()) {
    // every term with minorant above x - support_lo vanishes; sum 1/m over
    // the finitely many m that may still hit the support
    double escape = x_abs - static_cast<double>(sig.support_lo());
    double s_real;  // real bound: all m > s_real are certified zero
    switch (fn.minorant_kind()) {
      case Minorant::sqrt_half:
        s_real = escape <= 0.0 ? 0.0 : 2.0 * escape * escape;
        break;
      case Minorant::log2_minus_1:
        s_real = escape <= 0.0 ? 0.0 : std::exp2(escape + 1.0);
        break;
      default:
        return std::nullopt;
    }
    if (s_real <= static_cast<double>(t0)) return 0.0;
    double harmonic = std::log(s_real / static_cast<double>(t0));
    return 2.0 * sig.sup_abs() * other.sup_abs() * harmonic;
  }

  // cauchy: majorant A/((d/s)^2+1), decreasing in the distance d from the
  // center, with d >= minorant(m) - shift
  double amp = sig.sup_abs();
  double scale = sig.scale();
  double shift = x_abs + std::abs(sig.center());
  double sup_g = other.sup_abs();

  auto majorant = [&](double u) {  // u = minorant value
    double d = std::max(0.0, u - shift);
    double t = d / scale;
    return amp / (t * t + 1.0);
  };

  switch (fn.minorant_kind()) {
    case Minorant::log2_minus_1: {
      // substitute u = log2 t - 1: integral becomes
      // ln 2 * [ A * (cap width) + A * s * (pi/2 - atan((u_c-shift)/s)) ]
      double u0 = std::log2(static_cast<double>(t0)) - 1.0;
      double u_c = std::max(u0, shift);
      double cap = amp * (u_c - u0);
      double main = amp * scale *
                    (std::numbers::pi / 2.0 -
                     std::atan((u_c - shift) / scale));
      return 2.0 * sup_g * std::numbers::ln2 * (cap + main);
    }
    case Minorant::sqrt_half: {
      // substitute u = sqrt(t/2): integrand (2/u) majorant(u), decreasing
      // past max(u0, shift); left Riemann sums overestimate
      double u0 = std::sqrt(static_cast<double>(t0) / 2.0);
      double u_c = std::max(u0, shift);
      double cap = u_c > u0 ? 2.0 * amp * std::log(u_c / u0) : 0.0;
      double u_end = std::max({4.0 * u_c, u_c + 1000.0 * scale, 1.0e4});
      constexpr int kSteps = 200000;
      double dx = (u_end - u_c) / kSteps;
      double main = 0.0;
      for (int i = 0; i < kSteps; ++i) {
        double u = u_c + i * dx;
        main += (2.0 / u) * majorant(u) * dx;
      }
      // beyond u_end: (2/u) A s^2/(u-shift)^2 integrates below
      // 2 A s^2 / (u_end (u_end - shift))
      double rest =
          2.0 * amp * scale * scale / (u_end * (u_end - shift));
      return 2.0 * sup_g * (cap + main + rest);
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::complex<double> evaluate_truncated(const SignalSpec& f,
                                        const SignalSpec& g, const ArithFn& p,
                                        const ArithFn& q, double x,
                                        std::int64_t t0) {
  check_t0(p, q, t0);
  std::complex<double> acc{0.0, 0.0};
  for (std::int64_t m = 1; m <= t0; ++m) {
    std::complex<double> pos = f(x - static_cast<double>(p(m))) *
                               g(x - static_cast<double>(q(m)));
    std::complex<double> neg = f(x - static_cast<double>(p(-m))) *
                               g(x - static_cast<double>(q(-m)));
    acc += (pos - neg) / static_cast<double>(m);
  }
  return acc;
}

std::vector<Sample> figure_series(const SignalSpec& f, const SignalSpec& g,
                                  const ArithFn& p, const ArithFn& q,
                                  double x_min, double x_max, double step,
                                  std::int64_t t0) {
  if (!(step > 0.0))
    throw std::invalid_argument("figure grid step must be > 0");
  check_t0(p, q, t0);
  if (x_max < x_min) return {};
  auto count =
      static_cast<std::int64_t>(std::floor((x_max - x_min) / step + 1e-9)) + 1;
  std::vector<Sample> out(static_cast<std::size_t>(count));
  parallel_for(count, [&](std::int64_t i) {
    double x = x_min + static_cast<double>(i) * step;
    out[static_cast<std::size_t>(i)] =
        Sample{x, evaluate_truncated(f, g, p, q, x, t0)};
  });
  return out;
}

TruncationBudget tail_budget(const SignalSpec& f, const SignalSpec& g,
                             const ArithFn& p, const ArithFn& q, XRange xr,
                             std::int64_t t0) {
  check_t0(p, q, t0);
  if (xr.hi < xr.lo) throw std::invalid_argument("empty x range");
  std::optional<double> bound = side_tail_bound(f, g, p, xr, t0);
  if (!bound) bound = side_tail_bound(g, f, q, xr, t0);
  if (!bound)
    throw std::domain_error(
        "tail budget needs a signal majorant paired with a declared growth "
        "minorant on P or Q");
  return TruncationBudget{t0, *bound};
}

std::complex<double> evaluate_exact_compact(const SignalSpec& f,
                                            const SignalSpec& g,
                                            const ArithFn& p, const ArithFn& q,
                                            std::int64_t x,
                                            std::int64_t search_bound) {
  if (!f.is_compact() || !g.is_compact())
    throw std::domain_error("exact evaluation needs compact signals");
  check_t0(p, q, search_bound);

  auto certified = [&](const SignalSpec& sig, const ArithFn& fn) {
    return fn.has_minorant() &&
           fn.minorant(static_cast<double>(search_bound) + 1.0) >
               static_cast<double>(x - sig.support_lo());
  };
  if (!certified(f, p) && !certified(g, q))
    throw std::domain_error(
        "search bound exhausted without certification: no growth minorant "
        "clears the shifted support");

  auto xd = static_cast<double>(x);
  std::complex<double> acc{0.0, 0.0};
  for (std::int64_t m = 1; m <= search_bound; ++m) {
    std::complex<double> pos = f(xd - static_cast<double>(p(m))) *
                               g(xd - static_cast<double>(q(m)));
    std::complex<double> neg = f(xd - static_cast<double>(p(-m))) *
                               g(xd - static_cast<double>(q(-m)));
    acc += (pos - neg) / static_cast<double>(m);
  }
  return acc;
}

Window reachable_window(const SignalSpec& f, const SignalSpec& g,
                        const ArithFn& p, const ArithFn& q, std::int64_t t0) {
  if (!f.is_compact() || !g.is_compact())
    throw std::domain_error("reachable window needs compact signals");
  check_t0(p, q, t0);
  std::int64_t p_min = p(1), p_max = p(1);
  std::int64_t q_min = q(1), q_max = q(1);
  for (std::int64_t m = 1; m <= t0; ++m) {
    for (std::int64_t s : {m, -m}) {
      std::int64_t pv = p(s), qv = q(s);
      p_min = std::min(p_min, pv);
      p_max = std::max(p_max, pv);
      q_min = std::min(q_min, qv);
      q_max = std::max(q_max, qv);
    }
  }
  Window w;
  w.lo = std::max(p_min + f.support_lo(), q_min + g.support_lo());
  w.hi = std::min(p_max + f.support_hi(), q_max + g.support_hi());
  return w;
}

}  // namespace radon
