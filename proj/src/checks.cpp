#include "freqfn/checks.hpp"

#include "freqfn/analysis.hpp"
#include "freqfn/frequency.hpp"
#include "freqfn/oracle.hpp"
#include "freqfn/profile.hpp"
#include "freqfn/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace freqfn {

std::string SuiteResult::summary() const {
  const bool exact = suite == "prop1" || suite == "prop2" || suite == "scale";
  return suite + ": " + std::to_string(passed) + "/" + std::to_string(total) +
         (exact ? " exact" : " passed");
}

std::vector<std::string_view> suite_names() {
  return {"prop1", "prop2", "monotone", "scale", "oracle", "disc", "thm5", "thm6", "weak"};
}

namespace {

void record(SuiteResult& r, bool ok, const std::string& detail) {
  ++r.total;
  if (ok)
    ++r.passed;
  else
    r.failures.push_back("fail " + r.suite + " " + detail);
}

void suite_prop1(SuiteResult& r, const StepFn& f, const std::vector<Rat>& xs) {
  for (const Rat& x : xs) {
    const Profile p = build_profile(f, x);
    const FreqResult fr = frequency(p);
    const bool ok = fr.frequency == 0 || eval_average(p, fr.frequency) == fr.maximal;
    record(r, ok, "x=" + to_string(x) + " witness=" + to_string(fr.frequency));
  }
}

void suite_prop2(SuiteResult& r, const StepFn& f, const std::vector<Rat>& xs) {
  for (const Rat& x : xs) {
    const FreqResult fr = frequency(f, x);
    const bool ok = fr.frequency != 0 || f.is_zero() || fr.local_limit == fr.maximal;
    record(r, ok, "x=" + to_string(x));
  }
}

void suite_monotone(SuiteResult& r, const StepFn& f, const std::vector<Rat>& xs) {
  constexpr long l = 30;
  const Rat floor_radius = pow2(-l);
  for (const Rat& x : xs) {
    const Profile p = build_profile(f, x);
    const FreqResult fr = frequency(p);
    bool ok = true;
    Rat previous = 0;
    for (long k = 1; k <= 30; ++k) {
      const Rat v = aux_frequency(p, k, l);
      if (v != 0 && previous != 0 && v < previous) ok = false;
      if (fr.status == FreqStatus::ZeroFunction && v != floor_radius) ok = false;
      if (fr.status == FreqStatus::Attained && floor_radius <= fr.frequency && v > fr.frequency)
        ok = false;
      previous = v;
    }
    if (fr.status == FreqStatus::Attained && floor_radius < fr.frequency / 2) {
      const Rat limit = aux_frequency(p, 200, l);
      if (limit < fr.frequency * (1 - pow2(-20))) ok = false;
    }
    if (fr.status == FreqStatus::ZeroByLocalLimit && !p.cuts.empty() && floor_radius <= p.cuts.front())
      ok = ok && aux_frequency(p, 200, l) == floor_radius;
    record(r, ok, "x=" + to_string(x));
  }
}

void suite_scale(SuiteResult& r, const StepFn& f, const std::vector<Rat>& xs) {
  const Rat factors[] = {Rat(2, 3), Rat(5), Rat(7, 2)};
  const Rat shift = Rat(13, 7);
  const StepFn moved = translate(f, shift);
  const StepFn mirrored = reflect(f);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Rat& x = xs[i];
    const Rat& c = factors[i % 3];
    const FreqResult base = frequency(f, x);
    const FreqResult scaled = frequency(scale(f, c), x);
    bool ok = scaled.frequency == base.frequency && scaled.maximal == c * base.maximal;
    ok = ok && frequency(moved, x + shift).frequency == base.frequency;
    ok = ok && frequency(mirrored, -x).frequency == base.frequency;
    record(r, ok, "x=" + to_string(x) + " c=" + to_string(c));
  }
}

void suite_oracle(SuiteResult& r, const StepFn& f, const std::vector<Rat>& xs) {
  for (const Rat& x : xs) {
    const Rat exact = maximal(f, x);
    const OracleResult o = oracle_eval(f, x, default_oracle_range(f, x), 1024);
    const bool ok = o.approx_maximal <= exact && exact <= o.approx_maximal + o.error_bound;
    record(r, ok, "x=" + to_string(x) + " exact=" + to_string(exact) + " approx=" +
                      to_string(o.approx_maximal) + " bound=" + to_string(o.error_bound));
  }
}

void suite_disc(SuiteResult& r, const StepFn& f) {
  const std::vector<Rat> jumps = jump_breakpoints(f);
  for (const auto& c : discontinuities(f)) {
    const bool is_jump = std::binary_search(jumps.begin(), jumps.end(), c.point);
    record(r, is_jump && certificate_is_sound(f, c), "b=" + to_string(c.point));
  }
}

std::vector<Rat> dyadic_radii() {
  std::vector<Rat> radii;
  for (long j = 1; j <= 20; ++j) radii.push_back(pow2(-j));
  return radii;
}

void suite_neighborhood(SuiteResult& r, const StepFn& f, bool zeros) {
  const std::vector<Rat> radii = dyadic_radii();
  for (const auto& c : discontinuities(f)) {
    const auto ws = zeros ? neighborhood_check_thm5(f, c.point, radii)
                          : neighborhood_check_thm6(f, c.point, radii);
    for (const Witness& w : ws)
      record(r, w.y.has_value(), "b=" + to_string(c.point) + " r=" + to_string(w.radius));
  }
}

void suite_weak(SuiteResult& r, const StepFn& f) {
  const std::vector<Rat> bps = breakpoints(f);
  Rat N = 4;
  for (const Rat& b : bps) N = std::max<Rat>(N, abs_rat(b) + 2);
  // Keep the grid near 2^14 points.
  Rat step = Rat(1, 64);
  while (2 * N / step > 16384) step *= 2;
  for (const Rat& lambda : {Rat(1, 4), Rat(1, 2), Rat(1), Rat(2)}) {
    const WeakTypeReport w = weak_type_check(f, lambda, N, step);
    record(r, w.holds(), "lambda=" + to_string(lambda) + " measure=" + to_string(w.estimated_measure) +
                             " bound=" + to_string(w.bound));
  }
}

}  // namespace

SuiteResult run_suite(std::string_view suite, const StepFn& f, std::size_t samples,
                      std::uint64_t seed) {
  SuiteResult r;
  r.suite = std::string(suite);
  const auto xs = [&] { return sample_points(f, samples, seed); };
  if (suite == "prop1")
    suite_prop1(r, f, xs());
  else if (suite == "prop2")
    suite_prop2(r, f, xs());
  else if (suite == "monotone")
    suite_monotone(r, f, xs());
  else if (suite == "scale")
    suite_scale(r, f, xs());
  else if (suite == "oracle")
    suite_oracle(r, f, xs());
  else if (suite == "disc")
    suite_disc(r, f);
  else if (suite == "thm5")
    suite_neighborhood(r, f, true);
  else if (suite == "thm6")
    suite_neighborhood(r, f, false);
  else if (suite == "weak")
    suite_weak(r, f);
  else
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
  return r;
}

}  // namespace freqfn
