#pragma once

#include "freqfn/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace freqfn {

/// f takes `value` on the half-open interval [left, right).
struct Piece {
  Rat left;
  Rat right;
  Rat value;

  friend bool operator==(const Piece&, const Piece&) = default;
};

struct OneSided {
  Rat left_value;
  Rat right_value;
};

/// Raised by parse_stepfn; carries the 1-based line of the offending input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Canonical finite nonnegative rational step function.
///
/// Pieces are sorted, pairwise disjoint, strictly positive valued, and no two
/// touching pieces carry the same value. The zero function has no pieces.
/// Instances are immutable after construction.
class StepFn {
 public:
  StepFn() = default;

  /// Validates and canonicalizes. Throws std::invalid_argument on an empty
  /// interval, a negative value or overlapping pieces.
  static StepFn from_pieces(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  bool is_zero() const noexcept { return pieces_.empty(); }

  /// Value at a point under the half-open convention.
  Rat value_at(const Rat& x) const;

  /// Integral of f over (-inf, t].
  Rat cumulative(const Rat& t) const;

  /// Largest value f takes on a set of positive measure inside [a, b].
  Rat max_on(const Rat& a, const Rat& b) const;

  friend bool operator==(const StepFn&, const StepFn&) = default;

 private:
  std::vector<Piece> pieces_;
  std::vector<Rat> prefix_mass_;  // mass of pieces_[0..i)
};

StepFn parse_stepfn(std::string_view text);
std::string serialize(const StepFn& f);

/// Exact integral of f over [a, b]. Throws std::invalid_argument if a > b.
Rat integrate(const StepFn& f, const Rat& a, const Rat& b);

/// Essential values of f immediately left and right of x.
OneSided one_sided(const StepFn& f, const Rat& x);

Rat mass(const StepFn& f);
std::vector<Rat> breakpoints(const StepFn& f);
std::vector<Rat> jump_breakpoints(const StepFn& f);

/// c * f for c > 0 (throws std::invalid_argument otherwise).
StepFn scale(const StepFn& f, const Rat& c);
/// x -> f(x - t).
StepFn translate(const StepFn& f, const Rat& t);
/// x -> f(-x), re-expressed with half-open pieces.
StepFn reflect(const StepFn& f);

}  // namespace freqfn
