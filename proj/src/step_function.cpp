#include "freqfn/step_function.hpp"

#include <algorithm>
#include <sstream>

namespace freqfn {

namespace {

// First piece whose right end lies strictly beyond t.
std::vector<Piece>::const_iterator first_ending_after(const std::vector<Piece>& pieces,
                                                      const Rat& t) {
  return std::upper_bound(pieces.begin(), pieces.end(), t,
                          [](const Rat& v, const Piece& p) { return v < p.right; });
}

}  // namespace

StepFn StepFn::from_pieces(std::vector<Piece> pieces) {
  for (const Piece& p : pieces) {
    if (!(p.left < p.right))
      throw std::invalid_argument("empty interval [" + to_string(p.left) + ", " +
                                  to_string(p.right) + ")");
    if (p.value < 0) throw std::invalid_argument("negative value " + to_string(p.value));
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.left < b.left; });
  for (std::size_t i = 1; i < pieces.size(); ++i)
    if (pieces[i].left < pieces[i - 1].right)
      throw std::invalid_argument("overlapping pieces at " + to_string(pieces[i].left));

  StepFn f;
  for (Piece& p : pieces) {
    if (p.value == 0) continue;
    if (!f.pieces_.empty()) {
      Piece& last = f.pieces_.back();
      if (last.right == p.left && last.value == p.value) {
        last.right = p.right;
        continue;
      }
    }
    f.pieces_.push_back(std::move(p));
  }
  f.prefix_mass_.reserve(f.pieces_.size() + 1);
  f.prefix_mass_.emplace_back(0);
  for (const Piece& p : f.pieces_)
    f.prefix_mass_.push_back(f.prefix_mass_.back() + p.value * (p.right - p.left));
  return f;
}

Rat StepFn::value_at(const Rat& x) const {
  auto it = first_ending_after(pieces_, x);
  if (it != pieces_.end() && it->left <= x) return it->value;
  return 0;
}

Rat StepFn::cumulative(const Rat& t) const {
  auto it = first_ending_after(pieces_, t);
  const auto idx = static_cast<std::size_t>(it - pieces_.begin());
  Rat total = prefix_mass_.empty() ? Rat(0) : prefix_mass_[idx];
  if (it != pieces_.end() && it->left < t) total += it->value * (t - it->left);
  return total;
}

Rat StepFn::max_on(const Rat& a, const Rat& b) const {
  Rat best = 0;
  for (auto it = first_ending_after(pieces_, a); it != pieces_.end() && it->left < b; ++it)
    if (it->value > best) best = it->value;
  return best;
}

StepFn parse_stepfn(std::string_view text) {
  struct Numbered {
    Piece piece;
    std::size_t line;
  };
  std::vector<Numbered> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::vector<std::string> fields;
    for (std::string tok; in >> tok;) fields.push_back(tok);
    if (fields.empty()) continue;
    if (fields.size() != 3)
      throw ParseError(line_no, "expected '<left> <right> <value>', got " +
                                    std::to_string(fields.size()) + " fields");
    Piece p;
    try {
      p.left = parse_rat(fields[0]);
      p.right = parse_rat(fields[1]);
      p.value = parse_rat(fields[2]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (!(p.left < p.right)) throw ParseError(line_no, "left endpoint must be below right");
    if (p.value < 0) throw ParseError(line_no, "negative value " + to_string(p.value));
    rows.push_back({std::move(p), line_no});
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const Numbered& a, const Numbered& b) { return a.piece.left < b.piece.left; });
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].piece.left < rows[i - 1].piece.right)
      throw ParseError(std::max(rows[i].line, rows[i - 1].line),
                       "interval overlaps the piece on line " +
                           std::to_string(std::min(rows[i].line, rows[i - 1].line)));

  std::vector<Piece> pieces;
  pieces.reserve(rows.size());
  for (Numbered& r : rows) pieces.push_back(std::move(r.piece));
  return StepFn::from_pieces(std::move(pieces));
}

std::string serialize(const StepFn& f) {
  std::string out;
  for (const Piece& p : f.pieces())
    out += to_string(p.left) + ' ' + to_string(p.right) + ' ' + to_string(p.value) + '\n';
  return out;
}

Rat integrate(const StepFn& f, const Rat& a, const Rat& b) {
  if (a > b) throw std::invalid_argument("integrate: lower limit exceeds upper limit");
  return f.cumulative(b) - f.cumulative(a);
}

OneSided one_sided(const StepFn& f, const Rat& x) {
  OneSided out{0, 0};
  const auto& pieces = f.pieces();
  // Piece covering (x - d, x): left < x <= right.
  auto it = std::lower_bound(pieces.begin(), pieces.end(), x,
                             [](const Piece& p, const Rat& v) { return p.right < v; });
  if (it != pieces.end() && it->left < x) out.left_value = it->value;
  out.right_value = f.value_at(x);
  return out;
}

Rat mass(const StepFn& f) {
  return f.pieces().empty() ? Rat(0) : f.cumulative(f.pieces().back().right);
}

std::vector<Rat> breakpoints(const StepFn& f) {
  std::vector<Rat> out;
  for (const Piece& p : f.pieces()) {
    if (out.empty() || out.back() != p.left) out.push_back(p.left);
    out.push_back(p.right);
  }
  return out;
}

std::vector<Rat> jump_breakpoints(const StepFn& f) {
  // Canonical form merges equal neighbours, so every endpoint is a jump.
  return breakpoints(f);
}

StepFn scale(const StepFn& f, const Rat& c) {
  if (c <= 0) throw std::invalid_argument("scale factor must be positive");
  std::vector<Piece> pieces = f.pieces();
  for (Piece& p : pieces) p.value *= c;
  return StepFn::from_pieces(std::move(pieces));
}

StepFn translate(const StepFn& f, const Rat& t) {
  std::vector<Piece> pieces = f.pieces();
  for (Piece& p : pieces) {
    p.left += t;
    p.right += t;
  }
  return StepFn::from_pieces(std::move(pieces));
}

StepFn reflect(const StepFn& f) {
  std::vector<Piece> pieces;
  pieces.reserve(f.pieces().size());
  for (const Piece& p : f.pieces()) pieces.push_back({-p.right, -p.left, p.value});
  return StepFn::from_pieces(std::move(pieces));
}

}  // namespace freqfn
