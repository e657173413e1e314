#pragma once

#include "freqfn/rational.hpp"
#include "freqfn/step_function.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace freqfn {

/// Platform-independent draws on top of std::mt19937_64, whose output
/// sequence is fixed by the standard (the std distributions are not).
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform rational p/q with q in [1, max_den] and lo <= p/q <= hi.
  Rat rational_in(const Rat& lo, const Rat& hi, std::uint64_t max_den);

 private:
  std::mt19937_64 engine_;
};

/// Deterministic rational query points for f: three quarters spread over a
/// window around the support, one quarter within 2^-1..2^-20 of a breakpoint.
std::vector<Rat> sample_points(const StepFn& f, std::size_t count, std::uint64_t seed);

}  // namespace freqfn
