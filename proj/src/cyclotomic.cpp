#include "vilenkin/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace vilenkin {

RootOfUnity::RootOfUnity(std::uint64_t n, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("RootOfUnity: zero denominator");
  n %= d;
  std::uint64_t g = std::gcd(n, d);
  if (n == 0) g = d;
  num = static_cast<std::uint32_t>(n / g);
  den = static_cast<std::uint32_t>(d / g);
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& rhs) const {
  std::uint64_t d = std::lcm<std::uint64_t>(den, rhs.den);
  std::uint64_t n = static_cast<std::uint64_t>(num) * (d / den) +
                    static_cast<std::uint64_t>(rhs.num) * (d / rhs.den);
  return RootOfUnity(n, d);
}

RootOfUnity RootOfUnity::conj() const {
  return RootOfUnity(den - num, den);
}

RootOfUnity RootOfUnity::pow(std::uint64_t e) const {
  // num*e can exceed 64 bits only for absurd exponents; reduce e mod den first.
  return RootOfUnity(static_cast<std::uint64_t>(num) * (e % den), den);
}

std::complex<double> RootOfUnity::to_complex() const {
  if (num == 0) return {1.0, 0.0};
  if (2 * num == den) return {-1.0, 0.0};
  double a = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(den);
  return {std::cos(a), std::sin(a)};
}

std::string RootOfUnity::to_string() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Cyclotomic::Cyclotomic(std::uint32_t order) : counts_(order, 0) {
  if (order == 0) throw std::invalid_argument("Cyclotomic: zero order");
}

void Cyclotomic::add_root(std::uint32_t k, std::int64_t w) {
  counts_[k % order()] += w;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (order() != rhs.order()) throw std::invalid_argument("Cyclotomic: order mismatch");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += rhs.counts_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) {
  if (order() != rhs.order()) throw std::invalid_argument("Cyclotomic: order mismatch");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] -= rhs.counts_[i];
  return *this;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  if (order() != rhs.order()) throw std::invalid_argument("Cyclotomic: order mismatch");
  Cyclotomic r(order());
  const std::uint32_t L = order();
  for (std::uint32_t i = 0; i < L; ++i) {
    if (!counts_[i]) continue;
    for (std::uint32_t j = 0; j < L; ++j) {
      if (!rhs.counts_[j]) continue;
      r.counts_[(i + j) % L] += counts_[i] * rhs.counts_[j];
    }
  }
  return r;
}

Cyclotomic& Cyclotomic::scale(std::int64_t f) {
  for (auto& c : counts_) c *= f;
  return *this;
}

Cyclotomic Cyclotomic::conj() const {
  Cyclotomic r(order());
  const std::uint32_t L = order();
  for (std::uint32_t i = 0; i < L; ++i) r.counts_[(L - i) % L] = counts_[i];
  return r;
}

namespace {

// Quotient of integer polynomials, exact (divisor monic up to sign of its
// leading coefficient, which is 1 for every cyclotomic polynomial).
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num,
                                         const std::vector<std::int64_t>& den) {
  if (num.size() < den.size()) throw std::logic_error("poly_div_exact: degree underflow");
  std::vector<std::int64_t> q(num.size() - den.size() + 1, 0);
  for (std::size_t shift = q.size(); shift-- > 0;) {
    std::int64_t c = num[shift + den.size() - 1];
    q[shift] = c;
    if (c) {
      for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
  }
  for (std::int64_t c : num)
    if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

}  // namespace

std::vector<std::int64_t> Cyclotomic::cyclotomic_polynomial(std::uint32_t order) {
  static std::map<std::uint32_t, std::vector<std::int64_t>> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
  std::vector<std::int64_t> result{-1, 1};  // Phi_1 = x - 1
  if (order > 1) {
    std::vector<std::int64_t> num(order + 1, 0);
    num[0] = -1;
    num[order] = 1;
    for (std::uint32_t d = 1; d < order; ++d) {
      if (order % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    result = std::move(num);
  }
  cache[order] = result;
  return result;
}

bool Cyclotomic::is_zero() const {
  bool all_zero = true;
  for (auto c : counts_)
    if (c) {
      all_zero = false;
      break;
    }
  if (all_zero) return true;
  // Remainder of the multiplicity polynomial mod Phi_L; zero complex value
  // iff the remainder vanishes.
  const auto phi = cyclotomic_polynomial(order());
  std::vector<std::int64_t> rem = counts_;
  const std::size_t dphi = phi.size() - 1;
  for (std::size_t i = rem.size(); i-- > dphi;) {
    std::int64_t c = rem[i];
    if (c == 0) continue;
    std::size_t shift = i - dphi;
    for (std::size_t j = 0; j < phi.size(); ++j) rem[shift + j] -= c * phi[j];
  }
  for (std::size_t i = 0; i < dphi && i < rem.size(); ++i)
    if (rem[i] != 0) return false;
  return true;
}

bool Cyclotomic::equals(const Cyclotomic& rhs) const {
  Cyclotomic d = *this;
  d -= rhs;
  return d.is_zero();
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> r = 0;
  const std::uint32_t L = order();
  for (std::uint32_t i = 0; i < L; ++i) {
    if (counts_[i])
      r += static_cast<double>(counts_[i]) * RootOfUnity(i, L).to_complex();
  }
  return r;
}

}  // namespace vilenkin
