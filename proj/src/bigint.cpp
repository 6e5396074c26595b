#include "vilenkin/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace vilenkin {

BigUInt::BigUInt(std::uint64_t v) {
  if (v) {
    limbs_.push_back(static_cast<std::uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
  }
}

BigUInt BigUInt::from_pow2(unsigned exponent) {
  BigUInt r;
  r.limbs_.assign(exponent / 32 + 1, 0);
  r.limbs_.back() = 1u << (exponent % 32);
  return r;
}

void BigUInt::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigUInt& BigUInt::operator+=(const BigUInt& rhs) {
  if (limbs_.size() < rhs.limbs_.size()) limbs_.resize(rhs.limbs_.size(), 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t s = carry + limbs_[i];
    if (i < rhs.limbs_.size()) s += rhs.limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
  return *this;
}

BigUInt& BigUInt::operator-=(const BigUInt& rhs) {
  if (compare(rhs) < 0) throw std::underflow_error("BigUInt: negative difference");
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(limbs_[i]) - borrow -
                     (i < rhs.limbs_.size() ? rhs.limbs_[i] : 0);
    borrow = 0;
    if (d < 0) {
      d += (std::int64_t{1} << 32);
      borrow = 1;
    }
    limbs_[i] = static_cast<std::uint32_t>(d);
  }
  trim();
  return *this;
}

BigUInt BigUInt::operator*(const BigUInt& rhs) const {
  if (is_zero() || rhs.is_zero()) return BigUInt();
  BigUInt r;
  r.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    const std::uint64_t a = limbs_[i];
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = r.limbs_[i + j] + a * rhs.limbs_[j] + carry;
      r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + rhs.limbs_.size();
    while (carry) {
      std::uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  r.trim();
  return r;
}

BigUInt& BigUInt::mul_small(std::uint64_t f) {
  *this = *this * BigUInt(f);
  return *this;
}

std::uint64_t BigUInt::div_small(std::uint32_t divisor) {
  if (divisor == 0) throw std::invalid_argument("BigUInt: division by zero");
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return rem;
}

BigUInt BigUInt::pow(unsigned exponent) const {
  BigUInt base = *this;
  BigUInt r(1);
  while (exponent) {
    if (exponent & 1) r = r * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return r;
}

int BigUInt::compare(const BigUInt& rhs) const {
  if (limbs_.size() != rhs.limbs_.size())
    return limbs_.size() < rhs.limbs_.size() ? -1 : 1;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != rhs.limbs_[i]) return limbs_[i] < rhs.limbs_[i] ? -1 : 1;
  }
  return 0;
}

std::size_t BigUInt::bit_length() const {
  if (limbs_.empty()) return 0;
  std::size_t bits = (limbs_.size() - 1) * 32;
  std::uint32_t top = limbs_.back();
  while (top) {
    ++bits;
    top >>= 1;
  }
  return bits;
}

double BigUInt::log2() const {
  if (limbs_.empty()) return -std::numeric_limits<double>::infinity();
  // Top 96 bits are plenty for a double mantissa.
  long double x = 0;
  std::size_t n = limbs_.size();
  for (std::size_t i = n; i-- > 0 && i + 3 >= n;) {
    x = x * 4294967296.0L + limbs_[i];
  }
  std::size_t skipped = n > 3 ? n - 3 : 0;
  return static_cast<double>(std::log2(x)) + 32.0 * static_cast<double>(skipped);
}

std::uint64_t BigUInt::to_u64() const {
  if (limbs_.size() > 2) throw std::overflow_error("BigUInt: value exceeds 64 bits");
  std::uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

std::string BigUInt::to_string() const {
  if (is_zero()) return "0";
  BigUInt tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    std::uint64_t chunk = tmp.div_small(1000000000u);
    std::string part = std::to_string(chunk);
    if (!tmp.is_zero()) part.insert(0, 9 - part.size(), '0');
    out.insert(0, part);
  }
  return out;
}

BigUInt BigUInt::lcm_range(std::uint32_t n) {
  BigUInt r(1);
  if (n < 2) return r;
  std::vector<bool> composite(n + 1, false);
  for (std::uint32_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t q = std::uint64_t{p} * p; q <= n; q += p) composite[q] = true;
    std::uint64_t pk = p;
    while (pk * p <= n) pk *= p;
    r.mul_small(pk);
  }
  return r;
}

namespace {

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("Rational: 64-bit overflow");
  return static_cast<std::int64_t>(v);
}

Rational make_rational(__int128 n, __int128 d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = n < 0 ? -n : n;
  __int128 b = d;
  while (b) {
    __int128 t = g % b;
    g = b;
    b = t;
  }
  if (g == 0) g = 1;
  return Rational(narrow(n / g), narrow(d / g));
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = gcd64(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator+(const Rational& rhs) const {
  return make_rational(static_cast<__int128>(num) * rhs.den +
                           static_cast<__int128>(rhs.num) * den,
                       static_cast<__int128>(den) * rhs.den);
}

Rational Rational::operator-(const Rational& rhs) const {
  return make_rational(static_cast<__int128>(num) * rhs.den -
                           static_cast<__int128>(rhs.num) * den,
                       static_cast<__int128>(den) * rhs.den);
}

Rational Rational::operator*(const Rational& rhs) const {
  return make_rational(static_cast<__int128>(num) * rhs.num,
                       static_cast<__int128>(den) * rhs.den);
}

std::string Rational::to_string() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(std::stoll(text), 1);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t places = text.size() - dot - 1;
  if (places > 18) throw std::invalid_argument("Rational: too many decimal places");
  std::int64_t den = 1;
  for (std::size_t i = 0; i < places; ++i) den *= 10;
  return Rational(std::stoll(digits), den);
}

std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("64-bit multiply overflow");
  return r;
}

std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("64-bit add overflow");
  return r;
}

}  // namespace vilenkin
