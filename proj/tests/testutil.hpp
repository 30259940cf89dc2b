#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <random>

#include "radon/signal.hpp"

namespace testutil {

// random unit-l2 compact signal with the given number of nonzero entries
// scattered over [-radius, radius]
inline radon::SignalSpec random_unit_compact(std::mt19937_64& rng,
                                             int entries, std::int64_t radius) {
  std::uniform_int_distribution<std::int64_t> where(-radius, radius);
  std::normal_distribution<double> coef(0.0, 1.0);
  std::map<std::int64_t, std::complex<double>> values;
  while (static_cast<int>(values.size()) < entries)
    values[where(rng)] = {coef(rng), coef(rng)};
  return radon::SignalSpec::compact(values).normalized();
}

}  // namespace testutil
