#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vilenkin {

/// A complex value stored as a unit phase plus log2 of its magnitude, for
/// quantities far outside double range.  Multiplication adds logs; addition
/// of nonnegative values goes through log-sum-exp with relative error well
/// below 1e-12.
struct LogMagnitude {
  double log2mag = -std::numeric_limits<double>::infinity();
  std::complex<double> phase = {0.0, 0.0};

  LogMagnitude() = default;

  static LogMagnitude zero() { return LogMagnitude(); }

  static LogMagnitude from_log2(double lg, std::complex<double> ph = {1.0, 0.0}) {
    LogMagnitude v;
    v.log2mag = lg;
    v.phase = ph;
    return v;
  }

  static LogMagnitude from_double(double x) {
    if (x == 0.0) return zero();
    return from_log2(std::log2(std::abs(x)), {x > 0 ? 1.0 : -1.0, 0.0});
  }

  static LogMagnitude from_complex(std::complex<double> z) {
    double a = std::abs(z);
    if (a == 0.0) return zero();
    return from_log2(std::log2(a), z / a);
  }

  bool is_zero() const { return std::isinf(log2mag) && log2mag < 0; }
  bool is_nonneg_real() const { return is_zero() || (phase.imag() == 0.0 && phase.real() > 0.0); }

  LogMagnitude operator*(const LogMagnitude& rhs) const {
    if (is_zero() || rhs.is_zero()) return zero();
    LogMagnitude r;
    r.log2mag = log2mag + rhs.log2mag;
    r.phase = phase * rhs.phase;
    double a = std::abs(r.phase);
    r.phase /= a;
    r.log2mag += std::log2(a);
    return r;
  }

  LogMagnitude operator/(const LogMagnitude& rhs) const {
    if (rhs.is_zero()) throw std::domain_error("LogMagnitude: division by zero");
    if (is_zero()) return zero();
    LogMagnitude r;
    r.log2mag = log2mag - rhs.log2mag;
    r.phase = phase / rhs.phase;
    double a = std::abs(r.phase);
    r.phase /= a;
    r.log2mag += std::log2(a);
    return r;
  }

  LogMagnitude abs() const {
    if (is_zero()) return zero();
    return from_log2(log2mag);
  }

  /// |x|^t for nonnegative real x.
  LogMagnitude pow(double t) const {
    if (is_zero()) return zero();
    if (!is_nonneg_real()) throw std::domain_error("LogMagnitude::pow: value not nonnegative");
    return from_log2(log2mag * t);
  }

  double to_double() const {
    if (is_zero()) return 0.0;
    return std::exp2(log2mag) * phase.real();
  }

  std::complex<double> to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    return std::exp2(log2mag) * phase;
  }
};

/// a + b for nonnegative reals, exact in log domain via log-sum-exp.
inline LogMagnitude log_add(const LogMagnitude& a, const LogMagnitude& b) {
  if (!a.is_nonneg_real() || !b.is_nonneg_real())
    throw std::domain_error("log_add: operands must be nonnegative");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  double hi = a.log2mag, lo = b.log2mag;
  if (hi < lo) std::swap(hi, lo);
  return LogMagnitude::from_log2(hi + std::log1p(std::exp2(lo - hi)) / std::numbers::ln2);
}

/// max(a - b, 0) for nonnegative reals a, b.
inline LogMagnitude log_sub_floor(const LogMagnitude& a, const LogMagnitude& b) {
  if (!a.is_nonneg_real() || !b.is_nonneg_real())
    throw std::domain_error("log_sub_floor: operands must be nonnegative");
  if (b.is_zero()) return a;
  if (a.is_zero() || b.log2mag >= a.log2mag) return LogMagnitude::zero();
  double r = -std::expm1((b.log2mag - a.log2mag) * std::numbers::ln2);  // 1 - 2^(lb-la)
  if (r <= 0.0) return LogMagnitude::zero();
  return LogMagnitude::from_log2(a.log2mag + std::log2(r));
}

inline bool log_less(const LogMagnitude& a, const LogMagnitude& b) {
  return a.log2mag < b.log2mag;
}

}  // namespace vilenkin
