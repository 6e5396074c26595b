#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "vilenkin/bigint.hpp"

namespace vilenkin {

/// A root of unity exp(2*pi*i * num/den), angle kept reduced mod 1.
struct RootOfUnity {
  std::uint32_t num = 0;
  std::uint32_t den = 1;

  RootOfUnity() = default;
  RootOfUnity(std::uint64_t n, std::uint64_t d);

  RootOfUnity operator*(const RootOfUnity& rhs) const;
  RootOfUnity conj() const;
  RootOfUnity pow(std::uint64_t e) const;
  bool operator==(const RootOfUnity& rhs) const { return num == rhs.num && den == rhs.den; }

  std::complex<double> to_complex() const;
  bool is_one() const { return num == 0; }
  /// Angle as a fraction of a full turn, e.g. "2/3".
  std::string to_string() const;
};

/// Element of Z[zeta_L] stored as an integer multiplicity per L-th root of
/// unity.  Two elements are equal as complex numbers iff their difference is
/// divisible by the L-th cyclotomic polynomial; equality and zero tests here
/// are exact in that sense.
class Cyclotomic {
 public:
  explicit Cyclotomic(std::uint32_t order);

  std::uint32_t order() const { return static_cast<std::uint32_t>(counts_.size()); }

  /// Adds w * zeta_L^k.
  void add_root(std::uint32_t k, std::int64_t w = 1);
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic& scale(std::int64_t f);
  Cyclotomic conj() const;

  /// Exact: the represented complex number is zero.
  bool is_zero() const;
  bool equals(const Cyclotomic& rhs) const;

  std::complex<double> to_complex() const;

  /// The L-th cyclotomic polynomial, integer coefficients, degree phi(L).
  static std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t order);

 private:
  std::vector<std::int64_t> counts_;
};

}  // namespace vilenkin
