#include "freqfn/analysis.hpp"

#include "freqfn/corpus.hpp"
#include "freqfn/profile.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace freqfn {

LebesgueClass lebesgue_classify(const StepFn& f, const Rat& x) {
  const OneSided s = one_sided(f, x);
  LebesgueClass out{x, std::nullopt};
  if (s.left_value == s.right_value) out.common_value = s.left_value;
  return out;
}

namespace {

// Assumes b is a breakpoint of f.
std::optional<DiscontinuityCertificate> certify(const StepFn& f, const Rat& b) {
  const OneSided s = one_sided(f, b);
  const Rat side = std::max(s.left_value, s.right_value);
  Rat m = maximal(f, b);
  if (side > m) return DiscontinuityCertificate{b, m, side, side - m};
  return std::nullopt;
}

}  // namespace

std::vector<DiscontinuityCertificate> discontinuities(const StepFn& f) {
  std::vector<DiscontinuityCertificate> out;
  for (const Rat& b : breakpoints(f))
    if (auto c = certify(f, b)) out.push_back(std::move(*c));
  return out;
}

const Rat& ScanReport::aggregate(const std::string& name) const {
  for (const auto& [key, value] : aggregates)
    if (key == name) return value;
  throw std::out_of_range("no aggregate named " + name);
}

std::vector<Rat> scan_grid(const Rat& N, const Rat& step) {
  if (N <= 0) throw std::invalid_argument("domain bound N must be positive");
  if (step <= 0) throw std::invalid_argument("grid step must be positive");
  const BigInt last = floor(2 * N / step);
  if (!last.fits_ulong_p()) throw std::invalid_argument("grid too large");
  std::vector<Rat> xs;
  xs.reserve(last.get_ui() + 1);
  for (unsigned long j = 0; j <= last.get_ui(); ++j) xs.push_back(-N + step * j);
  return xs;
}

namespace {

ScanReport evaluate_grid(const StepFn& f, const Rat& N, const Rat& step) {
  ScanReport report;
  report.domain_bound = N;
  report.grid_step = step;
  const std::vector<Rat> xs = scan_grid(N, step);
  report.entries.resize(xs.size());
  detail::parallel_for(xs.size(), [&](std::size_t i) {
    const FreqResult r = frequency(f, xs[i]);
    report.entries[i] = {xs[i], r.maximal, r.frequency, false};
  });
  return report;
}

Rat count_rat(std::size_t n) { return Rat(BigInt(std::to_string(n))); }

}  // namespace

ScanReport scan(const StepFn& f, const Rat& N, const Rat& step) {
  return evaluate_grid(f, N, step);
}

ScanReport band_extent(const StepFn& f, const Rat& C, const Rat& N, const Rat& step) {
  if (C <= 1) throw std::invalid_argument("band constant C must exceed 1");
  ScanReport report = evaluate_grid(f, N, step);
  std::size_t count = 0;
  Rat extent = 0;
  for (ScanEntry& e : report.entries) {
    const Rat ax = abs_rat(e.x);
    e.selected = ax / (2 * C) <= e.frequency && e.frequency <= ax / C;
    if (!e.selected) continue;
    ++count;
    if (ax > extent) extent = ax;
  }
  report.aggregates = {{"band_count", count_rat(count)}, {"band_extent", extent}};
  return report;
}

ScanReport level_density(const StepFn& f, const Rat& C, const Rat& N, const Rat& step) {
  if (C <= 1) throw std::invalid_argument("level constant C must exceed 1");
  ScanReport report = evaluate_grid(f, N, step);
  std::size_t count = 0;
  for (ScanEntry& e : report.entries) {
    e.selected = e.frequency <= abs_rat(e.x) / C;
    if (e.selected) ++count;
  }
  const Rat measure = count_rat(count) * step;
  report.aggregates = {{"count", count_rat(count)}, {"measure", measure}, {"density", measure / N}};
  return report;
}

bool DensityTrend::non_increasing_with_slack() const {
  for (std::size_t i = 1; i < points.size(); ++i)
    if (points[i].density > points[i - 1].density + grid_step / points[i - 1].N) return false;
  return true;
}

DensityTrend density_trend(const StepFn& f, const Rat& C, const std::vector<Rat>& Ns,
                           const Rat& step) {
  DensityTrend trend{C, step, {}};
  for (const Rat& N : Ns) {
    const ScanReport r = level_density(f, C, N, step);
    trend.points.push_back({N, r.aggregate("count").get_num().get_ui(), r.aggregate("measure"),
                            r.aggregate("density")});
  }
  return trend;
}

ScanReport zero_set_fraction(const StepFn& f, const Rat& N, const Rat& step) {
  ScanReport report = evaluate_grid(f, N, step);
  std::size_t count = 0;
  for (ScanEntry& e : report.entries) {
    e.selected = e.frequency == 0;
    if (e.selected) ++count;
  }
  const Rat measure = count_rat(count) * step;
  report.aggregates = {{"zero_count", count_rat(count)},
                       {"zero_measure", measure},
                       {"zero_fraction", measure / (2 * N)}};
  return report;
}

Rat BumpZeroReport::logged_fraction() const {
  if (sampled == 0) return 0;
  return count_rat(logged.size()) / count_rat(sampled);
}

BumpZeroReport bump_zero_scan(const StepFn& f, const Rat& eps, long m_max, long m_from,
                              long samples_per_bump) {
  if (samples_per_bump < 1) throw std::invalid_argument("need at least one sample per bump");
  std::vector<std::pair<long, Rat>> points;
  for (const Thm4Bump& b : thm4_bumps(eps, m_max)) {
    if (b.m < m_from) continue;
    for (long j = 1; j <= samples_per_bump; ++j)
      points.emplace_back(b.m, b.left + ratio(j, samples_per_bump + 1));
  }
  std::vector<Rat> freq(points.size());
  detail::parallel_for(points.size(),
                       [&](std::size_t i) { freq[i] = frequency(f, points[i].second).frequency; });

  BumpZeroReport report;
  report.sampled = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (freq[i] == 0)
      ++report.zero;
    else
      report.logged.push_back({points[i].first, points[i].second, freq[i]});
  }
  return report;
}

namespace {

DiscontinuityCertificate require_certified(const StepFn& f, const Rat& b) {
  const std::vector<Rat> bps = breakpoints(f);
  if (std::binary_search(bps.begin(), bps.end(), b))
    if (auto c = certify(f, b)) return *c;
  throw std::invalid_argument(to_string(b) + " is not a certified discontinuity");
}

// +1 when the right-hand value is the larger one, -1 otherwise.
int high_side(const StepFn& f, const Rat& b) {
  const OneSided s = one_sided(f, b);
  return s.right_value > s.left_value ? 1 : -1;
}

}  // namespace

std::vector<Witness> neighborhood_check_thm5(const StepFn& f, const Rat& b,
                                             const std::vector<Rat>& radii) {
  require_certified(f, b);
  const int side = high_side(f, b);
  std::vector<Witness> out;
  for (const Rat& r : radii) {
    Witness w{r, std::nullopt};
    auto try_point = [&](const Rat& y) {
      if (!w.y && frequency(f, y).frequency == 0) w.y = y;
    };
    // Approach b geometrically from both sides, high side first, then
    // sweep a dyadic sub-grid of the neighbourhood.
    for (long m = 1; m <= 60 && !w.y; ++m) {
      const Rat step = r * pow2(-m);
      try_point(side > 0 ? Rat(b + step) : Rat(b - step));
      try_point(side > 0 ? Rat(b - step) : Rat(b + step));
    }
    for (long depth = 2; depth <= 6 && !w.y; ++depth) {
      const long cells = 1L << depth;
      for (long j = 1; j < cells && !w.y; j += 2) {
        const Rat off = r * ratio(j, cells);
        try_point(b + off);
        try_point(b - off);
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Witness> neighborhood_check_thm6(const StepFn& f, const Rat& b,
                                             const std::vector<Rat>& radii) {
  require_certified(f, b);
  const std::vector<Rat> jumps = jump_breakpoints(f);
  std::vector<Witness> out;
  for (const Rat& r : radii) {
    Witness w{r, std::nullopt};
    if (!lebesgue_classify(f, b).is_lebesgue()) {
      w.y = b;
    } else {
      // Nearest jump breakpoint strictly inside the neighbourhood.
      for (const Rat& j : jumps) {
        if (abs_rat(j - b) >= r) continue;
        if (!w.y || abs_rat(j - b) < abs_rat(*w.y - b)) w.y = j;
      }
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<Lemma3Entry> lemma3_check(const StepFn& f, const Rat& b, const Rat& eps, long n_max) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  const OneSided s = one_sided(f, b);
  std::vector<int> sides;
  if (s.left_value > s.right_value)
    sides = {-1, 1};
  else
    sides = {1, -1};
  const Rat target = maximal(f, b) + eps;

  std::vector<Lemma3Entry> out;
  bool last_found = false;
  for (long n = 1; n <= n_max; ++n) {
    last_found = false;
    const Rat reach = pow2(-n);
    for (int side : sides) {
      for (long k = 0; k <= 64 && !last_found; ++k) {
        const Rat offset = k == 0 ? reach : Rat(reach - pow2(-n - k));
        const Rat x = side > 0 ? Rat(b + offset) : Rat(b - offset);
        const FreqResult r = frequency(f, x);
        if (r.maximal < target) continue;
        Rat running = out.empty() ? r.frequency : std::min(out.back().running_min, r.frequency);
        out.push_back({n, x, r.maximal, r.frequency, std::move(running)});
        last_found = true;
      }
      if (last_found) break;
    }
  }
  if (!last_found)
    throw std::runtime_error("no point within 2^-" + std::to_string(n_max) + " of " +
                             to_string(b) + " reaches Mf(b) + eps");
  return out;
}

WeakTypeReport weak_type_check(const StepFn& f, const Rat& lambda, const Rat& N, const Rat& step) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  const std::vector<Rat> xs = scan_grid(N, step);
  std::vector<char> above(xs.size());
  detail::parallel_for(xs.size(), [&](std::size_t i) { above[i] = maximal(f, xs[i]) > lambda; });

  WeakTypeReport report;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (above[i]) ++report.count;
    if (i > 0 && above[i] != above[i - 1]) ++report.crossings;
  }
  report.estimated_measure = count_rat(report.count) * step;
  report.bound = 3 * mass(f) / lambda + 2 * step * count_rat(report.crossings);
  return report;
}

bool certificate_is_sound(const StepFn& f, const DiscontinuityCertificate& cert) {
  const int side = high_side(f, cert.point);
  // Length of the piece adjacent to the certificate on its high side.
  Rat length = 1;
  for (const Piece& p : f.pieces())
    if ((side > 0 && p.left == cert.point) || (side < 0 && p.right == cert.point))
      length = p.right - p.left;
  long j_end = 20;
  while (pow2(-(j_end - 5)) >= length) ++j_end;

  const Rat target = cert.maximal_at + cert.jump_lower_bound / 2;
  for (long j = j_end - 4; j <= j_end; ++j) {
    const Rat x = side > 0 ? Rat(cert.point + pow2(-j)) : Rat(cert.point - pow2(-j));
    if (!(maximal(f, x) > target)) return false;
  }
  return true;
}

std::vector<Rat> uncertified_jumps(const StepFn& f, const Rat& lo, const Rat& hi,
                                   const Rat& step, const Rat& threshold) {
  if (!(lo < hi) || step <= 0 || threshold <= 0)
    throw std::invalid_argument("uncertified_jumps: invalid parameters");
  std::vector<Rat> certified;
  for (const auto& c : discontinuities(f)) certified.push_back(c.point);
  auto straddles = [&](const Rat& a, const Rat& b) {
    for (const Rat& p : certified)
      if (a <= p && p <= b) return true;
    return false;
  };

  std::vector<Rat> xs;
  for (Rat x = lo; x <= hi; x += step) xs.push_back(x);
  std::vector<Rat> values(xs.size());
  detail::parallel_for(xs.size(), [&](std::size_t i) { values[i] = maximal(f, xs[i]); });

  std::vector<Rat> suspicious;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (abs_rat(values[i] - values[i - 1]) <= threshold || straddles(xs[i - 1], xs[i])) continue;
    Rat a = xs[i - 1], b = xs[i], va = values[i - 1], vb = values[i];
    bool persistent = true;
    for (int level = 0; level < 40; ++level) {
      const Rat mid = (a + b) / 2;
      const Rat vm = maximal(f, mid);
      if (abs_rat(vm - va) >= abs_rat(vb - vm)) {
        b = mid;
        vb = vm;
      } else {
        a = mid;
        va = vm;
      }
      if (straddles(a, b) || abs_rat(vb - va) <= threshold / 2) {
        persistent = false;
        break;
      }
    }
    if (persistent) suspicious.push_back(xs[i - 1]);
  }
  return suspicious;
}

}  // namespace freqfn
