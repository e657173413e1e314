#pragma once

#include "freqfn/rational.hpp"
#include "freqfn/step_function.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace freqfn {

enum class CorpusId { F1, F2, F3, F4, F5, F7, F8, F9, Thm4 };

/// Parameters by name: k (f4), K (truncation level of f3, f5, f8, f9),
/// n_min (first index of f3, default 1), eps and M_max (thm4).
struct CorpusSpec {
  CorpusId id = CorpusId::F1;
  std::map<std::string, Rat> params;

  Rat get(const std::string& name, const Rat& fallback) const;
  long get_int(const std::string& name, long fallback) const;
};

CorpusId parse_corpus_id(std::string_view name);
std::string_view corpus_name(CorpusId id);

/// Throws std::invalid_argument for out-of-range parameters.
StepFn generate(const CorpusSpec& spec);

/// Partial sums a_0 = 0, a_1 = 1, a_{k+1} = a_k + 2^{-k(k+1)/2}, for k = 0..count-1.
std::vector<Rat> f9_nodes(long count);

/// Nearest multiple of 2^-40 (ties to even) of m * ln(m)^power.
Rat thm4_scaled_point(long m, long double power);

/// The bump index range [10, M_max] and its rounded endpoints m''.
struct Thm4Bump {
  long m;
  Rat left;   // m''
  Rat value;  // 1 / m', nearest multiple of 2^-40
};
std::vector<Thm4Bump> thm4_bumps(const Rat& eps, long m_max);

/// Closed forms for f2 and f4 (maximal), and f2, f4, f5 (frequency).
/// Throws std::invalid_argument for any other id.
Rat closed_form_maximal(const CorpusSpec& spec, const Rat& x);
/// For f5 only the points x = 2^{-n+1} - 2^{-n-1}, n >= 2, have a value.
std::optional<Rat> closed_form_frequency(const CorpusSpec& spec, const Rat& x);

}  // namespace freqfn
