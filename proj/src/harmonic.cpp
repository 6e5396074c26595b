#include "vilenkin/harmonic.hpp"

#include <cmath>
#include <vector>

namespace vilenkin {

namespace {

constexpr std::uint64_t kTableLimit = 100000;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

const std::vector<double>& table() {
  static const std::vector<double> t = [] {
    std::vector<double> v(kTableLimit + 1, 0.0);
    double sum = 0.0, comp = 0.0;  // Neumaier compensation
    for (std::uint64_t n = 1; n <= kTableLimit; ++n) {
      double term = 1.0 / static_cast<double>(n);
      double next = sum + term;
      if (std::abs(sum) >= term)
        comp += (sum - next) + term;
      else
        comp += (term - next) + sum;
      sum = next;
      v[n] = sum + comp;
    }
    return v;
  }();
  return t;
}

double asymptotic(double n) {
  double inv = 1.0 / n;
  double inv2 = inv * inv;
  return std::log(n) + kEulerGamma + 0.5 * inv - inv2 / 12.0 + inv2 * inv2 / 120.0;
}

}  // namespace

double HarmonicTable::at(std::uint64_t n) const {
  if (n == 0) return 0.0;
  if (n <= kTableLimit) return table()[n];
  return asymptotic(static_cast<double>(n));
}

double harmonic(std::uint64_t n) {
  static const HarmonicTable t;
  return t.at(n);
}

double harmonic_diff(std::uint64_t b, std::uint64_t a) {
  if (b < a) return -harmonic_diff(a, b);
  if (b == a) return 0.0;
  if (b <= kTableLimit) return table()[b] - (a ? table()[a] : 0.0);
  if (a <= kTableLimit) return harmonic(b) - harmonic(a);
  // Both large: pairwise form avoids cancellation when b/a is near 1.
  double ad = static_cast<double>(a);
  double bd = static_cast<double>(b);
  double diff = std::log1p(static_cast<double>(b - a) / ad);
  diff += 0.5 * (1.0 / bd - 1.0 / ad);
  diff -= (1.0 / (bd * bd) - 1.0 / (ad * ad)) / 12.0;
  return diff;
}

double harmonic_from_log2(double log2n) {
  return log2n * std::log(2.0) + kEulerGamma;
}

double one_minus_log_ratio(double y) {
  if (y >= 0.5) return y - std::log1p(y);
  // Alternating series y^2/2 - y^3/3 + ...; direct form cancels for small y.
  double term = y * y / 2.0;
  double acc = term;
  double yk = y * y;
  for (int t = 3; t < 64; ++t) {
    yk *= y;
    term = yk / t;
    acc += (t % 2 == 0) ? term : -term;
    if (term < acc * 1e-18) break;
  }
  return acc;
}

double one_minus_log_ratio_log2(double log2y) {
  if (log2y < -500.0) return 2.0 * log2y - 1.0;  // y^2/2 dominates utterly
  return std::log2(one_minus_log_ratio(std::exp2(log2y)));
}

}  // namespace vilenkin
