#include "radon/census.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "radon/parallel.hpp"

namespace radon {

namespace {

using Histogram = std::unordered_map<std::int64_t, std::int64_t>;

void check_strip_fits(const ArithFn& r, int j) {
  if (j < 0) throw std::invalid_argument("strip index must be >= 0");
  if (j > 61 || census_strip(j).hi > r.limit())
    throw std::out_of_range(r.name() + ": strip j = " + std::to_string(j) +
                            " exceeds table limit " +
                            std::to_string(r.limit()));
}

// value -> number of m (both signs) in the signed strip attaining it
Histogram strip_histogram(const ArithFn& r, int j) {
  CensusStrip s = census_strip(j);
  Histogram h;
  h.reserve(static_cast<std::size_t>(2 * (s.hi - s.lo + 1)));
  for (std::int64_t m = s.lo; m <= s.hi; ++m) {
    ++h[r(m)];
    ++h[r(-m)];
  }
  return h;
}

std::int64_t bucket_product(const Histogram& a, const Histogram& b) {
  const Histogram& small = a.size() <= b.size() ? a : b;
  const Histogram& large = a.size() <= b.size() ? b : a;
  std::int64_t total = 0;
  for (const auto& [value, count] : small) {
    auto it = large.find(value);
    if (it != large.end()) total += count * it->second;
  }
  return total;
}

CollisionRecord make_record(int j1, int j2, std::int64_t count, double delta) {
  CollisionRecord rec;
  rec.j1 = j1;
  rec.j2 = j2;
  rec.scale_m = std::int64_t{1} << j1;
  rec.scale_n = std::int64_t{1} << j2;
  rec.count = count;
  rec.ratio = (j1 >= 1 && j2 >= 1) ? collision_ratio(count, j1, j2, delta)
                                   : 0.0;
  return rec;
}

}  // namespace

CensusStrip census_strip(int j) {
  if (j < 0) throw std::invalid_argument("strip index must be >= 0");
  if (j > 61) throw std::out_of_range("strip index too large for int64");
  CensusStrip s;
  s.lo = j == 0 ? 1 : std::int64_t{1} << (j - 1);
  s.hi = std::int64_t{1} << (j + 1);
  return s;
}

double collision_ratio(std::int64_t count, int j1, int j2, double delta) {
  if (j1 < 1 || j2 < 1)
    throw std::invalid_argument("collision ratio needs j1, j2 >= 1");
  double log_m = static_cast<double>(j1) * std::log(2.0);
  double log_n = static_cast<double>(j2) * std::log(2.0);
  double scale = std::ldexp(1.0, j1 + j2);  // M * N
  return static_cast<double>(count) *
         std::pow(log_m * log_n, 1.0 + delta) / scale;
}

CollisionRecord count_collisions(const ArithFn& r, int j1, int j2,
                                 double delta) {
  check_strip_fits(r, j1);
  check_strip_fits(r, j2);
  Histogram h1 = strip_histogram(r, j1);
  std::int64_t count;
  if (j1 == j2) {
    count = 0;
    for (const auto& [value, c] : h1) count += c * c;
  } else {
    count = bucket_product(h1, strip_histogram(r, j2));
  }
  return make_record(j1, j2, count, delta);
}

std::vector<CollisionRecord> census_grid(const ArithFn& r, int jmax,
                                         double delta) {
  if (jmax < 1) throw std::invalid_argument("census grid needs jmax >= 1");
  check_strip_fits(r, jmax);

  std::vector<Histogram> hists(static_cast<std::size_t>(jmax) + 1);
  for (int j = 1; j <= jmax; ++j) hists[static_cast<std::size_t>(j)] =
      strip_histogram(r, j);

  std::vector<CollisionRecord> records(
      static_cast<std::size_t>(jmax) * static_cast<std::size_t>(jmax));
  parallel_for(static_cast<std::int64_t>(records.size()),
               [&](std::int64_t cell) {
                 int j1 = 1 + static_cast<int>(cell / jmax);
                 int j2 = 1 + static_cast<int>(cell % jmax);
                 std::int64_t count =
                     bucket_product(hists[static_cast<std::size_t>(j1)],
                                    hists[static_cast<std::size_t>(j2)]);
                 records[static_cast<std::size_t>(cell)] =
                     make_record(j1, j2, count, delta);
               });
  return records;
}

ConditionParams fit_delta_prime(const std::vector<CollisionRecord>& records,
                                double delta) {
  if (records.empty())
    throw std::invalid_argument("fit_delta_prime needs at least one record");
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be > 0");
  ConditionParams params;
  params.delta = delta;
  for (const auto& rec : records) {
    double ratio = collision_ratio(rec.count, rec.j1, rec.j2, delta);
    if (ratio > params.delta_prime) params.delta_prime = ratio;
  }
  return params;
}

StarReport star_report(const ArithFn& r, std::int64_t range_limit) {
  if (range_limit < 1 || range_limit > r.limit())
    throw std::out_of_range("star_report range exceeds table limit");
  struct Bucket {
    std::int64_t count = 0;
    std::int64_t min_abs = 0;
    std::int64_t max_abs = 0;
  };
  std::unordered_map<std::int64_t, Bucket> buckets;
  buckets.reserve(static_cast<std::size_t>(2 * range_limit));
  auto add = [&](std::int64_t value, std::int64_t abs_m) {
    Bucket& b = buckets[value];
    if (b.count == 0) {
      b.min_abs = b.max_abs = abs_m;
    } else {
      b.min_abs = std::min(b.min_abs, abs_m);
      b.max_abs = std::max(b.max_abs, abs_m);
    }
    ++b.count;
  };
  for (std::int64_t m = 1; m <= range_limit; ++m) {
    add(r(m), m);
    add(r(-m), m);
  }
  StarReport report;
  report.range_limit = range_limit;
  for (const auto& [value, b] : buckets) {
    report.d2 = std::max(report.d2, b.count);
    double spread =
        static_cast<double>(b.max_abs) / static_cast<double>(b.min_abs);
    report.d1 = std::max(report.d1, spread);
  }
  return report;
}

bool strip_pair_empty(const ArithFn& r, int j1, int j2) {
  return count_collisions(r, j1, j2).count == 0;
}

std::vector<std::pair<int, double>> diagonal_ratio_series(const ArithFn& r,
                                                          int jmax) {
  if (jmax < 1) throw std::invalid_argument("diagonal series needs jmax >= 1");
  check_strip_fits(r, jmax);
  std::vector<std::pair<int, double>> out;
  out.reserve(static_cast<std::size_t>(jmax));
  for (int j = 1; j <= jmax; ++j) {
    CollisionRecord rec = count_collisions(r, j, j);
    out.emplace_back(j, collision_ratio(rec.count, j, j, 0.0));
  }
  return out;
}

}  // namespace radon
