#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "radon/arith.hpp"
#include "radon/parallel.hpp"

using namespace radon;

TEST_CASE("parallel_for covers every index under a forced thread count") {
  for (unsigned threads : {0u, 1u, 3u}) {
    set_max_threads(threads);
    std::vector<std::int64_t> slots(1000, 0);
    parallel_for(static_cast<std::int64_t>(slots.size()),
                 [&](std::int64_t i) { slots[static_cast<std::size_t>(i)] = i; });
    std::int64_t expected = 0;
    for (std::size_t i = 0; i < slots.size(); ++i)
      expected += slots[i] == static_cast<std::int64_t>(i);
    CHECK(expected == 1000);
  }
  set_max_threads(0);
}

TEST_CASE("sieve values match the spot examples") {
  CHECK(sieve_totient(1)[1] == 1);
  CHECK(sieve_totient(12)[10] == 4);   // brute gcd count
  CHECK(sieve_totient(13)[13] == 12);  // 13 prime

  ArithTable d = sieve_divisor_count(12);
  CHECK(d[1] == 1);
  CHECK(d[12] == 6);  // {1,2,3,4,6,12}
  CHECK(d[7] == 2);

  ArithTable mu = sieve_mobius(6);
  CHECK(mu[1] == 1);
  CHECK(mu[4] == 0);  // squareful
  CHECK(mu[6] == 1);  // 2*3

  ArithTable omega = sieve_omega(12);
  CHECK(omega[1] == 0);
  CHECK(omega[12] == 3);  // 2*2*3
  CHECK(omega[8] == 3);

  ArithTable pi = sieve_prime_pi(100);
  CHECK(pi[1] == 0);
  CHECK(pi[10] == 4);
  CHECK(pi[100] == 25);
}

TEST_CASE("sieves reject a zero limit") {
  CHECK_THROWS_AS(sieve_totient(0), std::invalid_argument);
  CHECK_THROWS_AS(sieve_divisor_count(0), std::invalid_argument);
  CHECK_THROWS_AS(sieve_mobius(0), std::invalid_argument);
  CHECK_THROWS_AS(sieve_omega(0), std::invalid_argument);
  CHECK_THROWS_AS(sieve_omega_distinct(0), std::invalid_argument);
  CHECK_THROWS_AS(sieve_prime_pi(0), std::invalid_argument);
}

TEST_CASE("sieve-oracle equivalence up to 10^4") {
  const std::int64_t limit = 10000;
  ArithTable phi = sieve_totient(limit);
  ArithTable d = sieve_divisor_count(limit);
  ArithTable mu = sieve_mobius(limit);
  ArithTable omega = sieve_omega(limit);
  ArithTable omega_d = sieve_omega_distinct(limit);
  ArithTable pi = sieve_prime_pi(limit);

  std::int64_t pi_running = 0;
  for (std::int64_t n = 1; n <= limit; ++n) {
    REQUIRE(phi[n] == oracle::totient(n));
    REQUIRE(mu[n] == oracle::mobius(n));
    REQUIRE(omega[n] == oracle::omega_multiplicity(n));
    REQUIRE(omega_d[n] == oracle::omega_distinct(n));
    if (oracle::is_prime(n)) ++pi_running;
    REQUIRE(pi[n] == pi_running);
  }
  // divisor enumeration is the slow oracle, sample it more coarsely
  for (std::int64_t n = 1; n <= limit; n += (n < 200 ? 1 : 7))
    REQUIRE(d[n] == oracle::divisor_count(n));
}

TEST_CASE("multiplicativity spot-check on random coprime pairs") {
  const std::int64_t bound = 1000;
  ArithTable phi = sieve_totient(bound * bound);
  ArithTable d = sieve_divisor_count(bound * bound);
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::int64_t> pick(2, bound);
  int done = 0;
  while (done < 100) {
    std::int64_t m = pick(rng), n = pick(rng);
    if (std::gcd(m, n) != 1) continue;
    CHECK(phi[m * n] == phi[m] * phi[n]);
    CHECK(d[m * n] == d[m] * d[n]);
    ++done;
  }
}

TEST_CASE("phi lower bound phi(n) >= sqrt(n/2) up to 10^6") {
  const std::int64_t limit = 1000000;
  ArithTable phi = sieve_totient(limit);
  for (std::int64_t n = 2; n <= limit; ++n) {
    double bound = std::sqrt(static_cast<double>(n) / 2.0);
    REQUIRE(static_cast<double>(phi[n]) >= bound);
  }
}

TEST_CASE("pi minorant pi(n) >= log2(n) - 1 up to 10^5") {
  const std::int64_t limit = 100000;
  ArithTable pi = sieve_prime_pi(limit);
  for (std::int64_t n = 1; n <= limit; ++n)
    REQUIRE(static_cast<double>(pi[n]) >=
            std::log2(static_cast<double>(n)) - 1.0);
}

TEST_CASE("parity extension rules") {
  const std::int64_t limit = 500;
  ArithFn phi_even(sieve_totient(limit), Parity::even);
  ArithFn d_odd(sieve_divisor_count(limit), Parity::sign_odd);
  for (std::int64_t m = 1; m <= limit; ++m) {
    CHECK(phi_even(-m) == phi_even(m));
    CHECK(d_odd(-m) == -d_odd(m));
  }

  CHECK(phi_even(-3) == 2);
  CHECK(phi_even(3) == 2);
  CHECK(d_odd(-6) == -4);

  ArithFn square = ArithFn::raw("square", 100,
                                [](std::int64_t m) { return m * m; });
  CHECK(square(-5) == 25);
  CHECK(square(5) == 25);
}

TEST_CASE("domain errors at 0 and beyond the limit") {
  ArithFn phi_even(sieve_totient(10), Parity::even);
  CHECK_THROWS_AS(phi_even(0), std::domain_error);
  CHECK_THROWS_AS(phi_even(11), std::domain_error);
  CHECK_THROWS_AS(phi_even(-11), std::domain_error);
  CHECK(phi_even(10) == 4);

  CHECK_THROWS_AS(ArithFn(sieve_totient(4), Parity::raw),
                  std::invalid_argument);
  CHECK_THROWS_AS(ArithFn::raw("bad", 0, [](std::int64_t m) { return m; }),
                  std::invalid_argument);
}

TEST_CASE("minorants are declared and honored") {
  ArithFn phi = make_arith_fn("phi", Parity::even, 2000);
  ArithFn pi = make_arith_fn("pi", Parity::even, 2000);
  ArithFn d = make_arith_fn("d", Parity::sign_odd, 2000);
  CHECK(phi.has_minorant());
  CHECK(pi.has_minorant());
  CHECK_FALSE(d.has_minorant());
  for (std::int64_t m = 1; m <= 2000; ++m) {
    CHECK(static_cast<double>(phi(m)) >=
          phi.minorant(static_cast<double>(m)));
    CHECK(static_cast<double>(pi(m)) >= pi.minorant(static_cast<double>(m)));
  }
  CHECK_THROWS_AS(d.minorant(10.0), std::domain_error);
}

TEST_CASE("table files round-trip and the cache memoizes") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "radon_table_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  ArithTable phi = sieve_totient(1234);
  fs::path file = dir / "phi_manual.tbl";
  save_table(file, phi);
  ArithTable loaded = load_table(file, "phi");
  REQUIRE(loaded.limit() == phi.limit());
  for (std::int64_t n = 1; n <= phi.limit(); ++n)
    REQUIRE(loaded[n] == phi[n]);

  ArithTable first = cached_sieve("d", 777, dir);
  CHECK(fs::exists(dir / "d_777.tbl"));
  ArithTable second = cached_sieve("d", 777, dir);
  for (std::int64_t n = 1; n <= 777; ++n) REQUIRE(first[n] == second[n]);

  // corrupt cache entries fall back to sieving
  {
    std::FILE* f = std::fopen((dir / "mu_50.tbl").string().c_str(), "wb");
    std::fputs("garbage", f);
    std::fclose(f);
  }
  ArithTable mu = cached_sieve("mu", 50, dir);
  CHECK(mu[6] == 1);

  CHECK_THROWS_AS(sieve_by_name("zeta", 10), std::invalid_argument);
  fs::remove_all(dir);
}
