#pragma once

#include "freqfn/frequency.hpp"
#include "freqfn/rational.hpp"
#include "freqfn/step_function.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace freqfn {

/// common_value is set iff the point is a Lebesgue point; it is then the
/// constant c with vanishing shrinking averages of |f - c|.
struct LebesgueClass {
  Rat point;
  std::optional<Rat> common_value;

  bool is_lebesgue() const { return common_value.has_value(); }
};

LebesgueClass lebesgue_classify(const StepFn& f, const Rat& x);

/// side_value > maximal_at certifies that limsup of Mf near point exceeds Mf(point).
struct DiscontinuityCertificate {
  Rat point;
  Rat maximal_at;
  Rat side_value;
  Rat jump_lower_bound;
};

/// Breakpoints b with max(f(b-), f(b+)) > Mf(b), in increasing order.
std::vector<DiscontinuityCertificate> discontinuities(const StepFn& f);

struct ScanEntry {
  Rat x;
  Rat maximal;
  Rat frequency;
  bool selected = false;  // membership in the set the scan measures
};

struct ScanReport {
  Rat domain_bound;
  Rat grid_step;
  std::vector<ScanEntry> entries;
  std::vector<std::pair<std::string, Rat>> aggregates;

  /// Throws std::out_of_range if the aggregate is missing.
  const Rat& aggregate(const std::string& name) const;
};

/// Grid {-N, -N + step, ..., <= N}. Throws std::invalid_argument unless N, step > 0.
std::vector<Rat> scan_grid(const Rat& N, const Rat& step);

/// Mf and Tf at every grid point; nothing selected.
ScanReport scan(const StepFn& f, const Rat& N, const Rat& step);

/// Selects |x|/(2C) <= Tf(x) <= |x|/C; aggregates band_count, band_extent.
ScanReport band_extent(const StepFn& f, const Rat& C, const Rat& N, const Rat& step);

/// Selects Tf(x) <= |x|/C; aggregates count, measure (= count * step), density (= measure / N).
ScanReport level_density(const StepFn& f, const Rat& C, const Rat& N, const Rat& step);

struct DensityPoint {
  Rat N;
  std::size_t count = 0;
  Rat measure;
  Rat density;
};

struct DensityTrend {
  Rat C;
  Rat grid_step;
  std::vector<DensityPoint> points;

  /// density(N_{i+1}) <= density(N_i) + step / N_i for every consecutive pair.
  bool non_increasing_with_slack() const;
};

DensityTrend density_trend(const StepFn& f, const Rat& C, const std::vector<Rat>& Ns,
                           const Rat& step);

/// Selects Tf(x) = 0; aggregates zero_count, zero_measure, zero_fraction (= measure / 2N).
ScanReport zero_set_fraction(const StepFn& f, const Rat& N, const Rat& step);

struct Thm4Sample {
  long m;
  Rat x;
  Rat frequency;
};

/// Bump-interior sampling of the sparse construction: for every bump m with
/// m >= m_from, the points m'' + j/(samples + 1), j = 1..samples.
struct BumpZeroReport {
  std::size_t sampled = 0;
  std::size_t zero = 0;
  std::vector<Thm4Sample> logged;  // samples where Tf != 0

  Rat logged_fraction() const;
};

BumpZeroReport bump_zero_scan(const StepFn& f, const Rat& eps, long m_max, long m_from,
                              long samples_per_bump);

struct Witness {
  Rat radius;
  std::optional<Rat> y;
};

/// Points with Tf(y) = 0 inside (b - r, b + r) for each r.
/// Throws std::invalid_argument if b is not a certified discontinuity.
std::vector<Witness> neighborhood_check_thm5(const StepFn& f, const Rat& b,
                                             const std::vector<Rat>& radii);

/// Non-Lebesgue points inside (b - r, b + r) for each r.
/// Throws std::invalid_argument if b is not a certified discontinuity.
std::vector<Witness> neighborhood_check_thm6(const StepFn& f, const Rat& b,
                                             const std::vector<Rat>& radii);

struct Lemma3Entry {
  long n;
  Rat x;
  Rat maximal;
  Rat frequency;
  Rat running_min;  // min of frequency over entries so far
};

/// Points x_n within 2^-n of b, on the high side when there is one, with
/// Mf(x_n) >= Mf(b) + eps. Throws std::runtime_error if no such point is
/// found at n = n_max.
std::vector<Lemma3Entry> lemma3_check(const StepFn& f, const Rat& b, const Rat& eps, long n_max);

struct WeakTypeReport {
  std::size_t count = 0;  // grid points with Mf > lambda
  std::size_t crossings = 0;
  Rat estimated_measure;
  Rat bound;  // 3 ||f||_1 / lambda + 2 * step * crossings

  bool holds() const { return estimated_measure <= bound; }
};

WeakTypeReport weak_type_check(const StepFn& f, const Rat& lambda, const Rat& N, const Rat& step);

/// Samples Mf at b +- 2^-j on the high side of a certificate. Sound when the
/// last five samples all exceed Mf(b) + jump/2; the range of j extends past
/// 20 when the adjacent piece is shorter than 2^-15.
bool certificate_is_sound(const StepFn& f, const DiscontinuityCertificate& cert);

/// Grid pairs in [lo, hi] (spacing step) where |Mf(x) - Mf(x')| > threshold
/// and bisection towards the larger half keeps the gap above threshold / 2
/// for 40 levels without meeting a certified point. Returns the left ends.
std::vector<Rat> uncertified_jumps(const StepFn& f, const Rat& lo, const Rat& hi,
                                   const Rat& step, const Rat& threshold);

}  // namespace freqfn
