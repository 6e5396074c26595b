#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vilenkin {

/// Arbitrary-precision unsigned integer, little-endian 32-bit limbs.
///
/// Sized for exact inequality certificates between quantities of the form
/// M^a * n^b with M up to ~2^200 and integer exponents in the hundreds;
/// only the operations needed for that job are provided.
class BigUInt {
 public:
  BigUInt() = default;
  explicit BigUInt(std::uint64_t v);

  static BigUInt from_pow2(unsigned exponent);

  bool is_zero() const { return limbs_.empty(); }

  BigUInt& operator+=(const BigUInt& rhs);
  BigUInt& operator-=(const BigUInt& rhs);  // throws std::underflow_error if rhs > *this
  BigUInt operator+(const BigUInt& rhs) const { BigUInt r = *this; r += rhs; return r; }
  BigUInt operator-(const BigUInt& rhs) const { BigUInt r = *this; r -= rhs; return r; }
  BigUInt operator*(const BigUInt& rhs) const;

  BigUInt& mul_small(std::uint64_t f);
  /// Divides by a small divisor in place, returning the remainder.
  std::uint64_t div_small(std::uint32_t divisor);

  BigUInt pow(unsigned exponent) const;

  /// -1, 0, +1 as *this <, ==, > rhs.
  int compare(const BigUInt& rhs) const;
  bool operator==(const BigUInt& rhs) const { return compare(rhs) == 0; }
  bool operator!=(const BigUInt& rhs) const { return compare(rhs) != 0; }
  bool operator<(const BigUInt& rhs) const { return compare(rhs) < 0; }
  bool operator<=(const BigUInt& rhs) const { return compare(rhs) <= 0; }
  bool operator>(const BigUInt& rhs) const { return compare(rhs) > 0; }
  bool operator>=(const BigUInt& rhs) const { return compare(rhs) >= 0; }

  std::size_t bit_length() const;
  /// log2 of the value as a double; -inf for zero.
  double log2() const;
  /// Exact value if it fits in 64 bits, otherwise throws std::overflow_error.
  std::uint64_t to_u64() const;

  std::string to_string() const;

  /// lcm(1, 2, ..., n) via prime powers; common denominator for exact
  /// harmonic-sum identities.
  static BigUInt lcm_range(std::uint32_t n);

 private:
  void trim();
  std::vector<std::uint32_t> limbs_;
};

/// Exact rational on 64-bit words with overflow detection; carries cylinder
/// measures and other small exact quantities.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d);

  Rational operator+(const Rational& rhs) const;
  Rational operator-(const Rational& rhs) const;
  Rational operator*(const Rational& rhs) const;
  bool operator==(const Rational& rhs) const { return num == rhs.num && den == rhs.den; }
  bool operator!=(const Rational& rhs) const { return !(*this == rhs); }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  /// Parses "3/4", "0.75" or "1" exactly.
  static Rational parse(const std::string& text);
};

/// a*b with an explicit failure instead of wraparound.
std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b);

}  // namespace vilenkin
