#include "freqfn/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace freqfn {

OracleResult oracle_eval(const StepFn& f, const Rat& x, const Rat& r_max,
                         std::uint64_t grid_count) {
  if (r_max <= 0) throw std::invalid_argument("oracle: r_max must be positive");
  if (grid_count < 2) throw std::invalid_argument("oracle: grid_count must be at least 2");

  OracleResult out;
  out.r_max = r_max;
  out.grid_count = grid_count;

  const Rat h = r_max / Rat(BigInt(std::to_string(grid_count)));
  const OneSided sides = one_sided(f, x);
  const Rat c0 = (sides.left_value + sides.right_value) / 2;

  std::vector<Rat> dist;
  for (const Rat& b : breakpoints(f)) {
    Rat d = abs_rat(b - x);
    if (d > 0) dist.push_back(std::move(d));
  }
  std::sort(dist.begin(), dist.end());

  std::vector<Rat> integral(grid_count + 1);
  std::vector<Rat> average(grid_count + 1);
  integral[0] = 0;
  Rat best = c0;
  for (std::uint64_t j = 1; j <= grid_count; ++j) {
    const Rat r = h * static_cast<unsigned long>(j);
    integral[j] = integrate(f, x - r, x + r);
    average[j] = integral[j] / (2 * r);
    if (average[j] > best) best = average[j];
  }
  out.approx_maximal = best;

  // Certified upper bound for the supremum over each grid cell. A cell with
  // no breakpoint distance strictly inside is monotone, so its endpoints
  // bound it. Otherwise the window integral grows at rate at most g (the local
  // sup on both sides) and never exceeds its value at r_{j+1}.
  Rat upper = best;
  auto next_cut = dist.begin();
  for (std::uint64_t j = 0; j < grid_count; ++j) {
    const Rat lo = h * static_cast<unsigned long>(j);
    const Rat hi = lo + h;
    while (next_cut != dist.end() && *next_cut <= lo) ++next_cut;
    const bool has_interior_cut = next_cut != dist.end() && *next_cut < hi;
    if (j == 0) {
      // (0, h]: constant c0 up to the first cut, then every average is at most
      // the largest value f takes within distance h.
      if (has_interior_cut) {
        const Rat cap = f.max_on(x - hi, x + hi);
        if (cap > upper) upper = cap;
      }
      continue;
    }
    if (!has_interior_cut) continue;
    // The window integral on [lo, hi] is at most min(I_{j+1}, I_j + (r - lo) * g).
    // Divided by 2r, the second term is monotone and the first decreasing, so
    // the supremum sits at lo or where the two terms cross.
    const Rat g = f.max_on(x - hi, x - lo) + f.max_on(x + lo, x + hi);
    Rat cap;
    if (integral[j] >= lo * g) {
      cap = average[j];
    } else {
      const Rat cross = lo + (integral[j + 1] - integral[j]) / g;
      cap = integral[j + 1] / (2 * std::min<Rat>(cross, hi));
    }
    if (cap > upper) upper = std::move(cap);
  }
  // Beyond r_max the average is at most ||f||_1 / (2 r_max).
  const Rat tail = mass(f) / (2 * r_max);
  if (tail > upper) upper = tail;
  out.error_bound = upper - best;

  const Rat accept = best - out.error_bound;
  if (c0 >= accept) {
    out.approx_frequency = 0;
  } else {
    for (std::uint64_t j = 1; j <= grid_count; ++j)
      if (average[j] >= accept) {
        out.approx_frequency = h * static_cast<unsigned long>(j);
        break;
      }
  }
  return out;
}

Rat default_oracle_range(const StepFn& f, const Rat& x) {
  Rat far = 1;
  for (const Rat& b : breakpoints(f)) {
    Rat d = abs_rat(b - x);
    if (d > far) far = std::move(d);
  }
  return 2 * far;
}

}  // namespace freqfn
