#include "freqfn/profile.hpp"

#include <algorithm>
#include <stdexcept>

namespace freqfn {

std::size_t Profile::segment_of(const Rat& r) const {
  return static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), r) - cuts.begin());
}

Profile build_profile(const StepFn& f, const Rat& x) {
  Profile p;
  p.center = x;
  p.tail_mass = mass(f);

  for (const Rat& b : breakpoints(f)) {
    Rat d = abs_rat(b - x);
    if (d > 0) p.cuts.push_back(std::move(d));
  }
  std::sort(p.cuts.begin(), p.cuts.end());
  p.cuts.erase(std::unique(p.cuts.begin(), p.cuts.end()), p.cuts.end());

  p.segments.reserve(p.cuts.size() + 1);
  const OneSided near = one_sided(f, x);
  p.segments.push_back({Rat(0), near.left_value + near.right_value});

  // Interior segments: slope from the values at the segment midpoint, offset
  // from a fresh integral at the segment's lower cut.
  for (std::size_t i = 0; i + 1 < p.cuts.size(); ++i) {
    const Rat& lo = p.cuts[i];
    const Rat mid = (lo + p.cuts[i + 1]) / 2;
    Rat beta = f.value_at(x + mid) + f.value_at(x - mid);
    Rat alpha = integrate(f, x - lo, x + lo) - beta * lo;
    p.segments.push_back({std::move(alpha), std::move(beta)});
  }
  if (!p.cuts.empty()) p.segments.push_back({p.tail_mass, Rat(0)});
  return p;
}

Rat eval_average(const Profile& p, const Rat& r) {
  if (r <= 0) throw std::invalid_argument("radius must be positive");
  return p.segments[p.segment_of(r)].average_at(r);
}

Rat local_limit(const Profile& p) { return p.segments.front().beta / 2; }

}  // namespace freqfn
