#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace hvlie {

using BigInt = boost::multiprecision::cpp_int;

/// Raised when a requested window (N, G, ...) violates a routine's
/// soundness requirements. The CLI maps this to its own exit code.
struct WindowError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Exact rational scalar. Always reduced, denominator always positive.
using Rational = boost::multiprecision::cpp_rational;

/// num/den with sign normalization. The raw two-argument cpp_rational
/// constructor aborts on a negative denominator, so route through division.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Accepts "n", "-n", "n/d", "-n/d" with decimal digits. Throws
/// std::invalid_argument on anything else (including zero denominators).
Rational parse_rational(const std::string& text);

/// "n" when the denominator is 1, otherwise "n/d". Inverse of parse_rational.
std::string rational_to_string(const Rational& q);

std::string numerator_string(const Rational& q);
std::string denominator_string(const Rational& q);

/// base^exp with the 0^0 = 1 convention used throughout the anomaly sums.
BigInt ipow(const BigInt& base, std::int64_t exp);

BigInt binomial(std::int64_t n, std::int64_t k);

/// Deterministic sampling helper. All randomness in the engine flows through
/// this so a fixed seed reproduces every suite byte for byte. Draws avoid
/// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t next_int(std::int64_t lo, std::int64_t hi);

  /// Generic parameter sample: denominator drawn from (100, 1000).
  Rational next_rational();
  Rational next_nonzero_rational();

  /// A rational that is not an integer (for "a not in Z" cells).
  Rational next_non_integer_rational();

 private:
  std::mt19937_64 gen_;
};

}  // namespace hvlie
