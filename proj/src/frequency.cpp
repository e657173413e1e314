#include "freqfn/frequency.hpp"

#include <stdexcept>

namespace freqfn {

std::string_view status_name(FreqStatus s) {
  switch (s) {
    case FreqStatus::ZeroFunction: return "zero_function";
    case FreqStatus::ZeroByLocalLimit: return "zero_by_local_limit";
    case FreqStatus::Attained: return "attained";
  }
  return "unknown";
}

// Between consecutive cuts A_r = beta/2 + alpha/(2r) is monotone, and it is
// constant on (0, d_1]. The supremum is therefore the largest of the local
// limit and the averages at the cuts.
Rat maximal(const Profile& p) {
  Rat best = local_limit(p);
  for (std::size_t i = 0; i < p.cuts.size(); ++i) {
    Rat a = p.segments[i].average_at(p.cuts[i]);
    if (a > best) best = std::move(a);
  }
  return best;
}

Rat maximal(const StepFn& f, const Rat& x) { return maximal(build_profile(f, x)); }

FreqResult frequency(const Profile& p) {
  FreqResult out;
  out.local_limit = local_limit(p);
  out.maximal = out.local_limit;
  std::vector<Rat> averages;
  averages.reserve(p.cuts.size());
  for (std::size_t i = 0; i < p.cuts.size(); ++i) {
    averages.push_back(p.segments[i].average_at(p.cuts[i]));
    if (averages.back() > out.maximal) out.maximal = averages.back();
  }
  for (std::size_t i = 0; i < p.cuts.size(); ++i)
    if (averages[i] == out.maximal) out.argmax_cuts.push_back(p.cuts[i]);

  if (p.tail_mass == 0) {
    out.status = FreqStatus::ZeroFunction;
    out.frequency = 0;
  } else if (out.local_limit == out.maximal) {
    out.status = FreqStatus::ZeroByLocalLimit;
    out.frequency = 0;
  } else {
    out.status = FreqStatus::Attained;
    out.frequency = out.argmax_cuts.front();
    out.witness = out.frequency;
  }
  return out;
}

FreqResult frequency(const StepFn& f, const Rat& x) { return frequency(build_profile(f, x)); }

Rat aux_frequency(const Profile& p, long k, long l) {
  const Rat floor_radius = pow2(-l);
  const Rat threshold = maximal(p) - pow2(-k);
  if (threshold <= 0) return floor_radius;

  // On segment i the condition A_r >= threshold reads alpha + slope * r >= 0
  // with slope = beta - 2 * threshold; its solution set on the segment is an
  // interval with rational ends, so the least admissible point is exact.
  std::optional<Rat> best;
  for (std::size_t i = 0; i < p.segments.size(); ++i) {
    const LinearForm& seg = p.segments[i];
    Rat lo = p.segment_lo(i);
    if (lo < floor_radius) lo = floor_radius;
    std::optional<Rat> hi = p.segment_hi(i);
    if (hi && *hi < lo) continue;

    const Rat slope = seg.beta - 2 * threshold;
    Rat candidate = lo;
    if (slope > 0) {
      Rat root = -seg.alpha / slope;
      if (root > candidate) candidate = std::move(root);
    } else if (slope < 0) {
      if (-seg.alpha / slope < lo) continue;
    } else if (seg.alpha < 0) {
      continue;
    }
    if (hi && candidate > *hi) continue;
    if (!best || candidate < *best) best = std::move(candidate);
    break;  // segments are ordered by radius; the first hit is the least one
  }
  return best ? *best : Rat(0);
}

Rat aux_frequency(const StepFn& f, const Rat& x, long k, long l) {
  return aux_frequency(build_profile(f, x), k, l);
}

std::vector<RadiusInterval> e_set(const StepFn& f, const Rat& x) {
  const Profile p = build_profile(f, x);
  const Rat top = maximal(p);

  std::vector<RadiusInterval> raw;
  for (std::size_t i = 0; i < p.segments.size(); ++i) {
    const LinearForm& seg = p.segments[i];
    const Rat lo = p.segment_lo(i);
    const std::optional<Rat> hi = p.segment_hi(i);
    if (seg.alpha == 0 && seg.beta / 2 == top) {
      raw.push_back({lo, hi, i != 0, true});
      continue;
    }
    if (i != 0 && seg.average_at(lo) == top) raw.push_back({lo, lo, true, true});
    if (hi && seg.average_at(*hi) == top) raw.push_back({*hi, *hi, true, true});
  }

  // Pieces come out ordered by lo; merge those that touch or overlap.
  std::vector<RadiusInterval> out;
  for (RadiusInterval& iv : raw) {
    if (!out.empty()) {
      RadiusInterval& last = out.back();
      const bool touches = !last.hi || *last.hi > iv.lo ||
                           (*last.hi == iv.lo && (last.hi_closed || iv.lo_closed));
      if (touches) {
        if (last.hi && (!iv.hi || *iv.hi > *last.hi)) {
          last.hi = iv.hi;
          last.hi_closed = iv.hi_closed;
        } else if (last.hi && iv.hi && *iv.hi == *last.hi) {
          last.hi_closed = last.hi_closed || iv.hi_closed;
        }
        continue;
      }
    }
    out.push_back(std::move(iv));
  }
  return out;
}

}  // namespace freqfn
