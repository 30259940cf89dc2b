#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace radon {

// Immutable table of an arithmetic function on 1..limit. values[n] is the
// exact mathematical value at n; construction is the only mutation point,
// so lookups are safe from any number of threads.
class ArithTable {
 public:
  // values_from_1[k] = f(k+1); rejects an empty table (limit >= 1).
  ArithTable(std::string name, std::vector<std::int64_t> values_from_1);

  std::int64_t limit() const noexcept {
    return static_cast<std::int64_t>(values_.size());
  }
  const std::string& name() const noexcept { return name_; }

  // checked lookup, 1 <= n <= limit
  std::int64_t at(std::int64_t n) const;

  // unchecked lookup for hot loops
  std::int64_t operator[](std::int64_t n) const noexcept {
    return values_[static_cast<std::size_t>(n - 1)];
  }

  const std::vector<std::int64_t>& values() const noexcept { return values_; }

 private:
  std::string name_;
  std::vector<std::int64_t> values_;
};

// Euler totient phi(n), linear sieve.
ArithTable sieve_totient(std::int64_t limit);

// Divisor count d(n) = number of positive divisors, linear sieve.
ArithTable sieve_divisor_count(std::int64_t limit);

// Mobius mu(n) in {-1, 0, 1}, linear sieve.
ArithTable sieve_mobius(std::int64_t limit);

// Big Omega(n): prime factors counted with multiplicity.
ArithTable sieve_omega(std::int64_t limit);

// Small omega(n): distinct prime factors (omega above counts with
// multiplicity).
ArithTable sieve_omega_distinct(std::int64_t limit);

// pi(n) = number of primes <= n, Eratosthenes + prefix sum.
ArithTable sieve_prime_pi(std::int64_t limit);

// Extension rule from positive arguments to all nonzero integers.
enum class Parity { even, sign_odd, raw };

// Declared growth lower bound used by truncation certificates:
//   sqrt_half:     value(m) >= sqrt(|m|/2)   (holds for phi)
//   log2_minus_1:  value(m) >= log2(|m|) - 1 (holds for pi, via Bertrand)
// The bound must hold for both signs of m, so it is only meaningful for
// even or raw-even-like functions.
enum class Minorant { none, sqrt_half, log2_minus_1 };

// An arithmetic function on nonzero integers: either a sieved table with a
// parity extension rule, or a raw function given directly on signed
// arguments (identity, constants, polynomials). m = 0 is outside the
// domain everywhere in this toolkit.
class ArithFn {
 public:
  ArithFn(ArithTable table, Parity parity, Minorant minorant = Minorant::none);

  static ArithFn raw(std::string name, std::int64_t limit,
                     std::function<std::int64_t(std::int64_t)> fn,
                     Minorant minorant = Minorant::none);

  // value at m; throws std::domain_error for m = 0 or |m| > limit
  std::int64_t operator()(std::int64_t m) const;

  std::int64_t limit() const noexcept { return limit_; }
  Parity parity() const noexcept { return parity_; }
  const std::string& name() const noexcept { return name_; }

  Minorant minorant_kind() const noexcept { return minorant_; }
  bool has_minorant() const noexcept { return minorant_ != Minorant::none; }
  // lower bound for value(m) at |m| = abs_m >= 1, nondecreasing in abs_m
  double minorant(double abs_m) const;

 private:
  ArithFn() = default;
  std::shared_ptr<const ArithTable> table_;
  std::function<std::int64_t(std::int64_t)> raw_;
  std::string name_;
  std::int64_t limit_ = 0;
  Parity parity_ = Parity::raw;
  Minorant minorant_ = Minorant::none;
};

// Flat binary table files: 8-byte magic "RADTBL01", then limit int64 values
// (positions 1..limit), all little-endian.
void save_table(const std::filesystem::path& path, const ArithTable& table);
ArithTable load_table(const std::filesystem::path& path, std::string name);

// Sieve dispatch by CLI name: phi, pi, d, mu, omega.
ArithTable sieve_by_name(const std::string& fn_name, std::int64_t limit);

// Like sieve_by_name, but memoized under cache_dir when it is non-empty
// (files named <fn>_<limit>.tbl; a bad cache file falls back to sieving).
ArithTable cached_sieve(const std::string& fn_name, std::int64_t limit,
                        const std::filesystem::path& cache_dir);

// Sieve + parity + the function's known growth minorant in one step.
ArithFn make_arith_fn(const std::string& fn_name, Parity parity,
                      std::int64_t limit,
                      const std::filesystem::path& cache_dir = {});

}  // namespace radon
