#pragma once

#include "freqfn/rational.hpp"
#include "freqfn/step_function.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace freqfn {

/// On one radius segment the window integral is alpha + beta * r, so the
/// average there is (alpha + beta * r) / (2r).
struct LinearForm {
  Rat alpha;
  Rat beta;

  Rat integral_at(const Rat& r) const { return alpha + beta * r; }
  Rat average_at(const Rat& r) const { return (alpha + beta * r) / (2 * r); }
};

/// Exact piecewise description of r -> A_r f(center).
///
/// cuts are the distinct positive distances d_1 < ... < d_n from the center to
/// the breakpoints of f. Segment 0 covers (0, d_1], segment i covers
/// [d_i, d_{i+1}] and the last segment covers [d_n, inf).
struct Profile {
  Rat center;
  std::vector<Rat> cuts;
  std::vector<LinearForm> segments;
  Rat tail_mass;

  /// Segment whose closed range contains r; at a cut the lower segment wins.
  std::size_t segment_of(const Rat& r) const;
  Rat segment_lo(std::size_t i) const { return i == 0 ? Rat(0) : cuts[i - 1]; }
  std::optional<Rat> segment_hi(std::size_t i) const {
    if (i < cuts.size()) return cuts[i];
    return std::nullopt;
  }
};

Profile build_profile(const StepFn& f, const Rat& x);

/// Exact A_r f(x); throws std::invalid_argument for r <= 0.
Rat eval_average(const Profile& p, const Rat& r);

/// lim_{r -> 0+} A_r f(x), i.e. the mean of the one-sided values.
Rat local_limit(const Profile& p);

}  // namespace freqfn
