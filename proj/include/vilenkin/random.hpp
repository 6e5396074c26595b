#pragma once

#include <cmath>
#include <random>

#include "vilenkin/grid.hpp"

namespace vilenkin {

/// The one generator used for every randomized suite; seed recorded by
/// callers that emit artifacts.
using Rng = std::mt19937_64;

inline Eigen::VectorXcd random_complex_vector(Eigen::Index n, Rng& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = std::complex<double>(u(rng), u(rng));
  return v;
}

inline GridFunction random_grid(const GroupSpec& spec, Rng& rng) {
  GridFunction f = GridFunction::zeros(spec);
  f.values = random_complex_vector(f.values.size(), rng);
  return f;
}

inline Spectrum random_spectrum(const GroupSpec& spec, Rng& rng) {
  Spectrum s = Spectrum::zeros(spec);
  s.coeffs = random_complex_vector(s.coeffs.size(), rng);
  return s;
}

/// A random p-atom: zero mean on a random cylinder I of rank <= max_rank,
/// supported there, sup-norm at most measure(I)^(-1/p).
inline GridFunction random_atom(const GroupSpec& spec, double p, Rng& rng,
                                std::size_t max_rank) {
  const CellLayout layout = cell_layout(spec);
  std::uniform_int_distribution<std::size_t> rank_dist(0, std::min(max_rank, spec.depth()));
  const std::size_t rank = rank_dist(rng);
  const std::uint64_t Mr = layout.bases.M[rank];
  const std::uint64_t block = layout.size() / Mr;
  std::uniform_int_distribution<std::uint64_t> base_dist(0, Mr - 1);
  const std::uint64_t start = base_dist(rng) * block;

  std::uniform_real_distribution<double> u(-1.0, 1.0);
  GridFunction a = GridFunction::zeros(spec);
  std::complex<double> mean = 0;
  for (std::uint64_t c = 0; c < block; ++c) {
    std::complex<double> v(u(rng), u(rng));
    a.values(static_cast<Eigen::Index>(start + c)) = v;
    mean += v;
  }
  mean /= static_cast<double>(block);
  double sup = 0;
  for (std::uint64_t c = 0; c < block; ++c) {
    auto& v = a.values(static_cast<Eigen::Index>(start + c));
    v -= mean;
    sup = std::max(sup, std::abs(v));
  }
  if (sup == 0) {  // all values collapsed; use a two-cell split instead
    if (block < 2) return a;
    a.values(static_cast<Eigen::Index>(start)) = 1.0;
    a.values(static_cast<Eigen::Index>(start + 1)) = -1.0;
    sup = 1.0;
  }
  std::uniform_real_distribution<double> theta(0.5, 1.0);
  const double target = std::pow(static_cast<double>(Mr), 1.0 / p) * theta(rng);
  a.values *= target / sup;
  return a;
}

}  // namespace vilenkin
