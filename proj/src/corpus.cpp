#include "freqfn/corpus.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace freqfn {

Rat CorpusSpec::get(const std::string& name, const Rat& fallback) const {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

long CorpusSpec::get_int(const std::string& name, long fallback) const {
  auto it = params.find(name);
  if (it == params.end()) return fallback;
  if (it->second.get_den() != 1 || !it->second.get_num().fits_slong_p())
    throw std::invalid_argument("parameter " + name + " must be an integer");
  return it->second.get_num().get_si();
}

CorpusId parse_corpus_id(std::string_view name) {
  if (name == "f1") return CorpusId::F1;
  if (name == "f2") return CorpusId::F2;
  if (name == "f3") return CorpusId::F3;
  if (name == "f4") return CorpusId::F4;
  if (name == "f5") return CorpusId::F5;
  if (name == "f7") return CorpusId::F7;
  if (name == "f8") return CorpusId::F8;
  if (name == "f9") return CorpusId::F9;
  if (name == "thm4") return CorpusId::Thm4;
  throw std::invalid_argument("unknown corpus id '" + std::string(name) + "'");
}

std::string_view corpus_name(CorpusId id) {
  switch (id) {
    case CorpusId::F1: return "f1";
    case CorpusId::F2: return "f2";
    case CorpusId::F3: return "f3";
    case CorpusId::F4: return "f4";
    case CorpusId::F5: return "f5";
    case CorpusId::F7: return "f7";
    case CorpusId::F8: return "f8";
    case CorpusId::F9: return "f9";
    case CorpusId::Thm4: return "thm4";
  }
  return "?";
}

std::vector<Rat> f9_nodes(long count) {
  std::vector<Rat> a;
  a.reserve(static_cast<std::size_t>(count));
  a.emplace_back(0);
  if (count > 1) a.emplace_back(1);
  for (long k = 1; static_cast<long>(a.size()) < count; ++k)
    a.push_back(a.back() + pow2(-(k * (k + 1) / 2)));
  return a;
}

namespace {

Rat dyadic_round(long double v) {
  const long double scaled = std::ldexp(v, 40);
  const long long n = std::llrint(scaled);  // default rounding: nearest, ties to even
  Rat out(BigInt(std::to_string(n)), BigInt(1));
  return out * pow2(-40);
}

long double scaled_log_power(long m, long double power) {
  return static_cast<long double>(m) * std::pow(std::log(static_cast<long double>(m)), power);
}

}  // namespace

Rat thm4_scaled_point(long m, long double power) { return dyadic_round(scaled_log_power(m, power)); }

std::vector<Thm4Bump> thm4_bumps(const Rat& eps, long m_max) {
  if (eps <= 0 || eps >= 1) throw std::invalid_argument("thm4: eps must lie in (0, 1)");
  if (m_max < 10) throw std::invalid_argument("thm4: M_max must be at least 10");
  const long double e = static_cast<long double>(eps.get_d());
  std::vector<Thm4Bump> out;
  out.reserve(static_cast<std::size_t>(m_max - 9));
  for (long m = 10; m <= m_max; ++m) {
    // Values are rounded on the same 2^-40 lattice as the positions so that
    // masses and window integrals keep a bounded denominator.
    const Rat value = dyadic_round(1.0L / scaled_log_power(m, 1.0L + e / 2));
    out.push_back({m, thm4_scaled_point(m, 1.0L + e), value});
  }
  return out;
}

namespace {

long require_level(const CorpusSpec& spec) {
  const long K = spec.get_int("K", 10);
  if (K < 1) throw std::invalid_argument("truncation level K must be at least 1");
  return K;
}

Piece unit_piece(Rat left, Rat right, Rat value = 1) {
  return {std::move(left), std::move(right), std::move(value)};
}

}  // namespace

StepFn generate(const CorpusSpec& spec) {
  std::vector<Piece> pieces;
  switch (spec.id) {
    case CorpusId::F1:
      break;
    case CorpusId::F2:
      pieces.push_back(unit_piece(-1, 1));
      break;
    case CorpusId::F3: {
      const long K = require_level(spec);
      const long n_min = spec.get_int("n_min", 1);
      if (n_min < 1 || n_min > K) throw std::invalid_argument("f3: need 1 <= n_min <= K");
      for (long n = n_min; n <= K; ++n) {
        const Rat start = pow2(n);
        pieces.push_back(unit_piece(start, start + 1, Rat(1, n * n)));
      }
      break;
    }
    case CorpusId::F4: {
      const long k = spec.get_int("k", 1);
      if (k < 1) throw std::invalid_argument("f4: k must be at least 1");
      pieces.push_back(unit_piece(-1, 1, Rat(1, k)));
      break;
    }
    case CorpusId::F5: {
      const long K = require_level(spec);
      pieces.push_back(unit_piece(-1, 0));
      for (long n = 1; n <= K; ++n)
        pieces.push_back(unit_piece(pow2(-n + 1) - pow2(-n - 1), pow2(-n + 1)));
      break;
    }
    case CorpusId::F7:
      pieces.push_back(unit_piece(-1, 0));
      pieces.push_back(unit_piece(1, 2, 100));
      break;
    case CorpusId::F8: {
      const long K = require_level(spec);
      for (long k = 1; k <= K; ++k)
        pieces.push_back(unit_piece(pow2(-k) - pow2(-2 * k - 1), pow2(-k)));
      break;
    }
    case CorpusId::F9: {
      const long K = require_level(spec);
      const std::vector<Rat> a = f9_nodes(K + 2);
      for (long k = 0; k <= K; ++k) {
        const auto i = static_cast<std::size_t>(k);
        pieces.push_back(unit_piece((a[i] + a[i + 1]) / 2, a[i + 1]));
      }
      const Rat& limit = a.back();
      pieces.push_back(unit_piece(limit, limit + 1));
      break;
    }
    case CorpusId::Thm4: {
      const Rat eps = spec.get("eps", Rat(1, 2));
      const long m_max = spec.get_int("M_max", 2000);
      for (Thm4Bump& b : thm4_bumps(eps, m_max))
        pieces.push_back(unit_piece(b.left, b.left + 1, std::move(b.value)));
      break;
    }
  }
  return StepFn::from_pieces(std::move(pieces));
}

namespace {

Rat f4_scale(const CorpusSpec& spec) {
  if (spec.id == CorpusId::F2) return 1;
  const long k = spec.get_int("k", 1);
  if (k < 1) throw std::invalid_argument("f4: k must be at least 1");
  return Rat(1, k);
}

}  // namespace

Rat closed_form_maximal(const CorpusSpec& spec, const Rat& x) {
  if (spec.id != CorpusId::F2 && spec.id != CorpusId::F4)
    throw std::invalid_argument("no closed-form maximal function for " +
                                std::string(corpus_name(spec.id)));
  const Rat c = f4_scale(spec);
  const Rat ax = abs_rat(x);
  if (ax < 1) return c;
  return c / (ax + 1);
}

std::optional<Rat> closed_form_frequency(const CorpusSpec& spec, const Rat& x) {
  switch (spec.id) {
    case CorpusId::F2:
    case CorpusId::F4: {
      f4_scale(spec);
      const Rat ax = abs_rat(x);
      if (ax <= 1) return Rat(0);
      return Rat(ax + 1);
    }
    case CorpusId::F5: {
      // x = 2^{-n+1} - 2^{-n-1} = 3 * 2^{-n-1}
      if (x <= 0) return std::nullopt;
      const Rat q = x / 3;
      if (q.get_num() != 1) return std::nullopt;
      const BigInt& den = q.get_den();
      if (mpz_popcount(den.get_mpz_t()) != 1) return std::nullopt;
      const auto n_plus_1 = static_cast<long>(mpz_scan1(den.get_mpz_t(), 0));
      if (n_plus_1 - 1 < 2) return std::nullopt;
      return Rat(1 - x);
    }
    default:
      throw std::invalid_argument("no closed-form frequency function for " +
                                  std::string(corpus_name(spec.id)));
  }
}

}  // namespace freqfn
