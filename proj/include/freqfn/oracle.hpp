#pragma once

#include "freqfn/rational.hpp"
#include "freqfn/step_function.hpp"

#include <cstdint>

namespace freqfn {

/// Brute-force estimate of Mf(x) and Tf(x) from the radius grid
/// r_j = j * r_max / grid_count, j = 1..grid_count.
///
/// The exact maximal value lies in [approx_maximal, approx_maximal + error_bound].
struct OracleResult {
  Rat approx_maximal;
  Rat approx_frequency;
  Rat r_max;
  std::uint64_t grid_count = 0;
  Rat error_bound;
};

/// Only integrate(), one_sided(), breakpoints() and StepFn::max_on() are used.
/// Throws std::invalid_argument if r_max <= 0 or grid_count < 2.
OracleResult oracle_eval(const StepFn& f, const Rat& x, const Rat& r_max,
                         std::uint64_t grid_count);

/// A radius range that covers every breakpoint distance from x with room to spare.
Rat default_oracle_range(const StepFn& f, const Rat& x);

}  // namespace freqfn
