#pragma once

#include "freqfn/profile.hpp"
#include "freqfn/rational.hpp"
#include "freqfn/step_function.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace freqfn {

// For step functions the maximizing set E_{f,x} always contains the constant
// first segment or a cut, so it is never empty. There is no status for the
// empty case.
enum class FreqStatus { ZeroFunction, ZeroByLocalLimit, Attained };

std::string_view status_name(FreqStatus s);

struct FreqResult {
  Rat maximal;
  Rat frequency;
  FreqStatus status = FreqStatus::ZeroFunction;
  std::optional<Rat> witness;  // set iff status == Attained
  Rat local_limit;
  std::vector<Rat> argmax_cuts;  // every cut radius whose average equals maximal
};

/// A subset of (0, inf): a point when lo == hi, an unbounded ray when hi is empty.
struct RadiusInterval {
  Rat lo;
  std::optional<Rat> hi;
  bool lo_closed = true;
  bool hi_closed = true;

  friend bool operator==(const RadiusInterval&, const RadiusInterval&) = default;
};

Rat maximal(const StepFn& f, const Rat& x);
Rat maximal(const Profile& p);

FreqResult frequency(const StepFn& f, const Rat& x);
FreqResult frequency(const Profile& p);

/// inf { r in Q : r >= 2^-l, A_r f(x) + 2^-k >= Mf(x) }, or 0 if that set is empty.
Rat aux_frequency(const StepFn& f, const Rat& x, long k, long l);
Rat aux_frequency(const Profile& p, long k, long l);

/// The set of radii attaining Mf(x), as a sorted union of disjoint pieces.
std::vector<RadiusInterval> e_set(const StepFn& f, const Rat& x);

}  // namespace freqfn
