#include "freqfn/sampling.hpp"

#include <stdexcept>

namespace freqfn {

std::uint64_t Sampler::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Sampler::below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    const std::uint64_t v = engine_();
    if (v < limit) return v % bound;
  }
}

Rat Sampler::rational_in(const Rat& lo, const Rat& hi, std::uint64_t max_den) {
  const std::uint64_t q = 1 + below(max_den);
  const BigInt qz(std::to_string(q));
  const BigInt first = ceil(lo * qz);
  const BigInt last = floor(hi * qz);
  if (last < first) return lo;
  const BigInt span = last - first + 1;
  // Spans here are far below 2^64.
  const std::uint64_t offset = below(span.get_ui());
  Rat out(first + BigInt(std::to_string(offset)), qz);
  out.canonicalize();
  return out;
}

std::vector<Rat> sample_points(const StepFn& f, std::size_t count, std::uint64_t seed) {
  Sampler rng(seed);
  const std::vector<Rat> bps = breakpoints(f);
  Rat lo = -10;
  Rat hi = 10;
  if (!bps.empty()) {
    const Rat width = bps.back() - bps.front();
    Rat pad = width / 4;
    if (pad < 1) pad = 1;
    lo = bps.front() - pad;
    hi = bps.back() + pad;
  }

  std::vector<Rat> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!bps.empty() && i % 4 == 3) {
      const Rat& b = bps[rng.below(bps.size())];
      const long e = 1 + static_cast<long>(rng.below(20));
      const Rat offset = pow2(-e);
      out.push_back(rng.below(2) == 0 ? Rat(b - offset) : Rat(b + offset));
    } else {
      out.push_back(rng.rational_in(lo, hi, 1000));
    }
  }
  return out;
}

}  // namespace freqfn
