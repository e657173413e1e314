#include "freqfn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace freqfn {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");

  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rat out(n, d);
  out.canonicalize();
  return out;
}

std::string to_string(const Rat& value) { return value.get_str(10); }

Rat ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat out(num, den);
  out.canonicalize();
  return out;
}

Rat pow2(long exponent) {
  BigInt p;
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
  return exponent < 0 ? Rat(BigInt(1), p) : Rat(p);
}

BigInt floor(const Rat& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt ceil(const Rat& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

double to_double(const Rat& value) { return value.get_d(); }

}  // namespace freqfn
