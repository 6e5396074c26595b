#pragma once

#include <cstdint>

namespace vilenkin {

/// Harmonic numbers l_n = 1 + 1/2 + ... + 1/n.
///
/// Small arguments come from a compensated-summation table; large ones from
/// the asymptotic expansion ln n + gamma + 1/(2n) - 1/(12n^2) + 1/(120n^4),
/// whose truncation error is below 1e-12 everywhere past the switch point
/// (and below 1e-20 for n >= 1e4).
class HarmonicTable {
 public:
  double at(std::uint64_t n) const;
};

/// Shared-table convenience wrapper around HarmonicTable::at.
double harmonic(std::uint64_t n);

/// l_b - l_a for b >= a, computed without cancellation even when a and b are
/// huge and close.
double harmonic_diff(std::uint64_t b, std::uint64_t a);

/// l_n for n given only as log2(n); valid in the asymptotic regime
/// (log2n >= 14), where the 1/n corrections are negligible.
double harmonic_from_log2(double log2n);

/// y - ln(1+y) for y >= 0, accurate for small y (series) and large y alike.
double one_minus_log_ratio(double y);

/// log2(y - ln(1+y)) given log2(y), robust when y underflows a double.
double one_minus_log_ratio_log2(double log2y);

}  // namespace vilenkin
