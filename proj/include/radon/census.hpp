#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "radon/arith.hpp"

namespace radon {

// Closed dyadic strip [2^{j-1}, 2^{j+1}] on the positive side (both ends
// inclusive); the signed strip is its union with the mirror image. j = 0
// clips to [1, 2].
struct CensusStrip {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::int64_t signed_size() const noexcept { return 2 * (hi - lo + 1); }
};
CensusStrip census_strip(int j);

// One grid cell of the collision census. count is the number of ordered
// pairs (m, n) of nonzero integers with R(m) = R(n) and |m|, |n| in the
// two strips; the diagonal is included.
struct CollisionRecord {
  int j1 = 0;
  int j2 = 0;
  std::int64_t scale_m = 0;  // 2^j1
  std::int64_t scale_n = 0;  // 2^j2
  std::int64_t count = 0;
  double ratio = 0.0;  // count * (log M log N)^{1+delta} / (M N)
};

// ratio for an arbitrary exponent; j1, j2 >= 1 (log 2^0 = 0 would divide
// by zero, grids start at j = 1)
double collision_ratio(std::int64_t count, int j1, int j2, double delta);

struct ConditionParams {
  double delta = 0.0;
  double delta_prime = 0.0;
};

// Observed Condition-(star) statistics over |m| <= range_limit:
// d1 = max |m1|/|m2| over colliding pairs, d2 = max number of collision
// partners of any single m1 (both orders of a pair are counted, so
// d1 >= 1 and d2 >= 1 whenever the range is nonempty).
struct StarReport {
  double d1 = 0.0;
  std::int64_t d2 = 0;
  std::int64_t range_limit = 0;
};

// |S^R_{M,N}| for M = 2^j1, N = 2^j2 via value buckets (never the
// quadratic double loop). Requires 2^{j1+1}, 2^{j2+1} <= r.limit().
CollisionRecord count_collisions(const ArithFn& r, int j1, int j2,
                                 double delta = 1.0);

// All cells 1 <= j1, j2 <= jmax, ratios computed with the given delta.
// Rows ordered by (j1, j2); cells evaluate in parallel.
std::vector<CollisionRecord> census_grid(const ArithFn& r, int jmax,
                                         double delta);

// Smallest delta' making |S| <= delta' MN/(log M log N)^{1+delta} hold on
// the scanned records, i.e. the max ratio. Rejects an empty list.
ConditionParams fit_delta_prime(const std::vector<CollisionRecord>& records,
                                double delta);

StarReport star_report(const ArithFn& r, std::int64_t range_limit);

// true iff the two strips share no value at all (|S^R_{M,N}| = 0); with
// R = pi this is the Bertrand far-strip vanishing check
bool strip_pair_empty(const ArithFn& r, int j1, int j2);

// Diagonal ratios count(j,j) * (log 2^j)^2 / 4^j for j = 1..jmax (the
// delta = 0 exponent used by the d-function lower-bound test).
std::vector<std::pair<int, double>> diagonal_ratio_series(const ArithFn& r,
                                                          int jmax);

}  // namespace radon
