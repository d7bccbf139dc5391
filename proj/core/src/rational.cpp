#include "hvlie/rational.hpp"

#include <cctype>

namespace hvlie {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  return Rational(num) / Rational(den);
}

Rational parse_rational(const std::string& text) {
  auto fail = [&] {
    throw std::invalid_argument("malformed rational: \"" + text + "\"");
  };
  std::size_t pos = 0;
  auto read_integer = [&](bool sign_allowed) -> BigInt {
    std::size_t start = pos;
    if (sign_allowed && pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail();
    return BigInt(text.substr(start, pos - start));
  };
  BigInt num = read_integer(true);
  BigInt den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_integer(false);
  }
  if (pos != text.size()) fail();
  if (den == 0) fail();
  return make_rational(num, den);
}

std::string rational_to_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/" + denominator(q).str();
  }
  return s;
}

std::string numerator_string(const Rational& q) { return numerator(q).str(); }

std::string denominator_string(const Rational& q) { return denominator(q).str(); }

BigInt ipow(const BigInt& base, std::int64_t exp) {
  if (exp < 0) throw std::invalid_argument("ipow with negative exponent");
  BigInt out = 1;
  for (std::int64_t i = 0; i < exp; ++i) out *= base;
  return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    out = out * (n - k + i) / i;
  }
  return out;
}

std::int64_t Rng::next_int(std::int64_t lo, std::int64_t hi) {
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(gen_() % span);
}

Rational Rng::next_rational() {
  BigInt num = next_int(-999, 999);
  BigInt den = next_int(101, 999);
  return make_rational(num, den);
}

Rational Rng::next_nonzero_rational() {
  for (;;) {
    Rational q = next_rational();
    if (q != 0) return q;
  }
}

Rational Rng::next_non_integer_rational() {
  for (;;) {
    Rational q = next_rational();
    if (denominator(q) != 1) return q;
  }
}

}  // namespace hvlie
