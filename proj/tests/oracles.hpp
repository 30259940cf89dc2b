#pragma once

// Brute-force definitions used as independent oracles. Deliberately naive:
// these must stay decoupled from the sieve and bucket code they check.

#include <cstdint>
#include <numeric>
#include <vector>

#include "radon/arith.hpp"
#include "radon/census.hpp"

namespace oracle {

inline std::int64_t totient(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

inline std::int64_t divisor_count(std::int64_t n) {
  std::int64_t count = 0;
  for (std::int64_t a = 1; a <= n; ++a)
    if (n % a == 0) ++count;
  return count;
}

inline std::int64_t mobius(std::int64_t n) {
  std::int64_t m = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  if (n > 1) m = -m;
  return m;
}

inline std::int64_t omega_multiplicity(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++c;
    }
  if (n > 1) ++c;
  return c;
}

inline std::int64_t omega_distinct(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ++c;
    while (n % p == 0) n /= p;
  }
  if (n > 1) ++c;
  return c;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

inline std::int64_t prime_pi(std::int64_t n) {
  std::int64_t c = 0;
  for (std::int64_t k = 2; k <= n; ++k)
    if (is_prime(k)) ++c;
  return c;
}

// the quadratic double loop the census module is forbidden to use
inline std::int64_t count_collisions(const radon::ArithFn& r, int j1, int j2) {
  radon::CensusStrip s1 = radon::census_strip(j1);
  radon::CensusStrip s2 = radon::census_strip(j2);
  std::vector<std::int64_t> v1, v2;
  for (std::int64_t m = s1.lo; m <= s1.hi; ++m) {
    v1.push_back(r(m));
    v1.push_back(r(-m));
  }
  for (std::int64_t n = s2.lo; n <= s2.hi; ++n) {
    v2.push_back(r(n));
    v2.push_back(r(-n));
  }
  std::int64_t count = 0;
  for (std::int64_t a : v1)
    for (std::int64_t b : v2)
      if (a == b) ++count;
  return count;
}

}  // namespace oracle
