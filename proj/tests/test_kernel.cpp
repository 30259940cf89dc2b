#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "testutil.hpp"
#include "radon/arith.hpp"
#include "radon/kernel.hpp"
#include "radon/probe.hpp"
#include "radon/signal.hpp"

using namespace radon;

namespace {

const std::complex<double> kZero{0.0, 0.0};

std::complex<double> phase(double theta) {
  return {std::cos(theta), std::sin(theta)};
}

}  // namespace

TEST_CASE("rho support, oddness, and the value at 1") {
  for (DyadicKernel k : {DyadicKernel::bump(), DyadicKernel::smoothstep(3)}) {
    CHECK(k.rho(0.4) == 0.0);
    CHECK(k.rho(0.5) == 0.0);
    CHECK(k.rho(2.0) == 0.0);
    CHECK(k.rho(3.0) == 0.0);
    CHECK(k.rho(0.0) == 0.0);
    CHECK(k.rho(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    for (int i = 0; i <= 400; ++i) {
      double x = 0.25 + i * 0.005;
      CHECK(k.rho(-x) == -k.rho(x));
    }
    CHECK(k.sup_abs() >= 1.0);  // rho(1) = 1 already
    CHECK(k.cutoff(0.5) == 0.0);
    CHECK(k.cutoff(1.0) == 1.0);
    CHECK(k.cutoff(17.0) == 1.0);
    CHECK(k.cutoff(0.75) > 0.0);
    CHECK(k.cutoff(0.75) < 1.0);
  }
  CHECK_THROWS_AS(DyadicKernel::smoothstep(0), std::invalid_argument);
}

TEST_CASE("dyadic rescalings telescope to 1/x") {
  DyadicKernel k = DyadicKernel::bump();

  double sum = 0.0;
  for (int j = 0; j <= 20; ++j)
    sum += std::ldexp(k.rho(3.0 * std::ldexp(1.0, -j)), -j);
  CHECK(std::abs(sum - 1.0 / 3.0) <= 1e-10);

  CHECK(max_telescoping_error(k, 4, 2000) <= 1e-10);
  CHECK(max_telescoping_error(k, 12, 2000) <= 1e-10);
  CHECK(max_telescoping_error(k, 24, 2000) <= 1e-10);
  CHECK(max_telescoping_error(DyadicKernel::smoothstep(4), 24, 2000) <= 1e-10);
}

TEST_CASE("kernel strips are the open support of the rescaled cutoff") {
  CHECK(kernel_strip(0).lo == 1);
  CHECK(kernel_strip(0).hi == 1);
  CHECK(kernel_strip(3).lo == 5);
  CHECK(kernel_strip(3).hi == 15);
  DyadicKernel k = DyadicKernel::bump();
  for (int j : {0, 1, 4}) {
    KernelStrip s = kernel_strip(j);
    double scale = std::ldexp(1.0, -j);
    CHECK(k.rho((s.lo - 1) * scale) == 0.0);
    CHECK(k.rho((s.hi + 1) * scale) == 0.0);
    CHECK(k.rho(s.lo * scale) != 0.0);
    CHECK(k.rho(s.hi * scale) != 0.0);
  }
}

TEST_CASE("sigma_j vanishes at the origin and matches the two-term formula") {
  const std::int64_t limit = 1 << 9;
  ArithFn p = make_arith_fn("phi", Parity::even, limit);
  ArithFn q = make_arith_fn("d", Parity::sign_odd, limit);
  DyadicKernel k = DyadicKernel::bump();

  for (int j = 0; j <= 7; ++j)
    CHECK(eval_sigma(Piece{j, p, q, k}, 0.0, 0.0) == kZero);

  // j = 0 forces |m| = 1
  constexpr double tau = 2.0 * std::numbers::pi;
  double xi = 0.217, eta = 0.641;
  std::complex<double> expected =
      k.rho(1.0) *
      (phase(-tau * (static_cast<double>(p(1)) * xi +
                     static_cast<double>(q(1)) * eta)) -
       phase(-tau * (static_cast<double>(p(-1)) * xi +
                     static_cast<double>(q(-1)) * eta)));
  std::complex<double> got = eval_sigma(Piece{0, p, q, k}, xi, eta);
  CHECK(std::abs(got - expected) <= 1e-15);

  // triangle-inequality ceiling |sigma_j| <= 3 sup|rho|
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 25; ++trial) {
    int j = trial % 8;
    double bound = 3.0 * k.sup_abs();
    CHECK(std::abs(eval_sigma(Piece{j, p, q, k}, unit(rng), unit(rng))) <=
          bound);
  }

  CHECK_THROWS_AS(eval_sigma(Piece{10, p, q, k}, 0.1, 0.2),
                  std::out_of_range);
}

TEST_CASE("piece application: zero signal, exact cancellation, j = 0 form") {
  const std::int64_t limit = 1 << 9;
  ArithFn p = make_arith_fn("phi", Parity::even, limit);
  ArithFn q = make_arith_fn("d", Parity::sign_odd, limit);
  DyadicKernel k = DyadicKernel::bump();

  SignalSpec zero = SignalSpec::compact({});
  SignalSpec cauchy = SignalSpec::cauchy();
  for (int j = 0; j <= 6; ++j) {
    CHECK(eval_piece(Piece{j, p, q, k}, zero, cauchy, 0.7) == kZero);
    // P = Q with even parity: summand even in m, weight odd, exact zero
    CHECK(eval_piece(Piece{j, p, p, k}, cauchy, cauchy, -2.3) == kZero);
  }

  // m = +-1 hand formula at j = 0
  double x = 0.35;
  std::complex<double> expected =
      k.rho(1.0) * (cauchy(x - static_cast<double>(p(1))) *
                        cauchy(x - static_cast<double>(q(1))) -
                    cauchy(x - static_cast<double>(p(-1))) *
                        cauchy(x - static_cast<double>(q(-1))));
  CHECK(std::abs(eval_piece(Piece{0, p, q, k}, cauchy, cauchy, x) -
                 expected) <= 1e-15);
}

TEST_CASE("partial sums agree with the direct compact sum") {
  const std::int64_t limit = 1 << 13;
  ArithFn p = make_arith_fn("phi", Parity::even, limit);
  ArithFn q = make_arith_fn("d", Parity::sign_odd, limit);
  DyadicKernel k = DyadicKernel::bump();

  // supports small enough that phi escapes them well inside the fully
  // telescoped range: every surviving m carries weight exactly 1/m
  std::mt19937_64 rng(42);
  SignalSpec f = testutil::random_unit_compact(rng, 8, 12);
  SignalSpec g = testutil::random_unit_compact(rng, 8, 12);

  for (double x : {0.0, 1.0, -3.0, 7.0}) {
    std::complex<double> via_pieces = partial_sum(f, g, p, q, k, x, 12);
    // direct oracle: sum f(x-P(m)) g(x-Q(m))/m over every m that can hit
    // the supports (phi(|m|) > 36 for |m| > 2700 kills the f factor)
    std::complex<double> direct{0.0, 0.0};
    for (std::int64_t m = 1; m <= 4096; ++m) {
      direct += (f(x - static_cast<double>(p(m))) *
                     g(x - static_cast<double>(q(m))) -
                 f(x - static_cast<double>(p(-m))) *
                     g(x - static_cast<double>(q(-m)))) /
                static_cast<double>(m);
    }
    CHECK(std::abs(via_pieces - direct) <= 1e-10);
  }

  SignalSpec zero = SignalSpec::compact({});
  CHECK(partial_sum(zero, g, p, q, k, 1.0, 10) == kZero);
  CHECK(partial_sum(f, g, p, p, k, 1.0, 10) == kZero);
}

TEST_CASE("scatter evaluation matches pointwise evaluation") {
  const std::int64_t limit = 1 << 8;
  ArithFn p = make_arith_fn("phi", Parity::even, limit);
  ArithFn q = make_arith_fn("d", Parity::sign_odd, limit);
  DyadicKernel k = DyadicKernel::bump();
  std::mt19937_64 rng(11);
  SignalSpec f = testutil::random_unit_compact(rng, 6, 10);
  SignalSpec g = testutil::random_unit_compact(rng, 6, 10);

  Piece piece{5, p, q, k};
  auto dense = piece_values(piece, f, g);
  CHECK(!dense.empty());
  for (const auto& [n, v] : dense)
    CHECK(std::abs(v - eval_piece(piece, f, g, static_cast<double>(n))) <=
          1e-12);
  CHECK(piece_l1_norm(piece, f, g) >= 0.0);

  SignalSpec cauchy = SignalSpec::cauchy();
  CHECK_THROWS_AS(piece_values(piece, cauchy, g), std::domain_error);
}

TEST_CASE("single-scale Parseval: quadrature meets the collision sum") {
  const int j = 3;
  const std::int64_t limit = 1 << (j + 1);
  ArithFn p = make_arith_fn("phi", Parity::even, limit);
  ArithFn q = make_arith_fn("d", Parity::sign_odd, limit);
  DyadicKernel k = DyadicKernel::bump();
  for (double eta : {0.13, 0.5}) {
    const int n = 1 << 12;
    double quadrature = 0.0;
    for (int i = 0; i < n; ++i) {
      quadrature +=
          std::norm(eval_sigma(Piece{j, p, q, k}, static_cast<double>(i) / n,
                               eta));
    }
    quadrature /= n;
    CHECK(v_exact(p, q, k, eta, j, j) ==
          doctest::Approx(quadrature).epsilon(1e-6));
  }
}

TEST_CASE("per-scale l1 bound surrogate holds with margin") {
  const std::int64_t limit = 1 << 10;
  ArithFn p = make_arith_fn("phi", Parity::even, limit);
  ArithFn q = make_arith_fn("d", Parity::sign_odd, limit);
  DyadicKernel k = DyadicKernel::bump();
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    SignalSpec f = testutil::random_unit_compact(rng, 10, 16);
    SignalSpec g = testutil::random_unit_compact(rng, 10, 16);
    for (int j = 0; j <= 8; ++j)
      CHECK(piece_l1_norm(Piece{j, p, q, k}, f, g) <= 3.5 * k.sup_abs());
  }
}
