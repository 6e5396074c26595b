#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

/// Complex values on all M_N depth-N cells, digit-lexicographic order with
/// coordinate 0 most significant (so rank-n cylinders are contiguous blocks).
struct GridFunction {
  GroupSpec spec;
  Eigen::VectorXcd values;

  GridFunction(GroupSpec s, Eigen::VectorXcd v);
  static GridFunction zeros(const GroupSpec& spec);
};

/// The M_N Fourier coefficients, indexed by the mixed-radix index value.
struct Spectrum {
  GroupSpec spec;
  Eigen::VectorXcd coeffs;

  Spectrum(GroupSpec s, Eigen::VectorXcd c);
  static Spectrum zeros(const GroupSpec& spec);
};

/// The character psi_k sampled on every cell.
Eigen::VectorXcd psi_grid(std::uint64_t k, const GroupSpec& spec);

/// Coefficients hat f(k) = (1/M_N) sum_cells f psi_k-bar, by direct inner
/// products; the O(M_N^2) reference path.
Spectrum analyze(const GridFunction& f);

/// Inverse: value at x = sum_k coeff_k psi_k(x); O(M_N^2) reference path.
GridFunction synthesize(const Spectrum& s);

/// Same transforms via per-coordinate factor stages, O(M_N sum_j m_j).
/// Stages run coordinate 0 upward with a fixed sequential reduction order,
/// so results are bitwise deterministic.
Spectrum fast_analyze(const GridFunction& f);
GridFunction fast_synthesize(const Spectrum& s);

/// (integral of |f|^p)^(1/p) with exact cell measure 1/M_N; p > 0.
double lp_quasinorm(const GridFunction& f, double p);

/// Martingale maximal function: at each cell the max over ranks n = 0..N of
/// the modulus of the average over the containing rank-n cylinder.
GridFunction dyadic_maximal(const GridFunction& f);

/// Quasi-norm of the maximal function.
double hardy_quasinorm(const GridFunction& f, double p);

/// Conditional-expectation levels f^(0), ..., f^(N): level n is the rank-n
/// cylinder average of f, materialized on the full grid.
struct MartingaleSeq {
  GroupSpec spec;
  std::vector<Eigen::VectorXcd> levels;
};

MartingaleSeq martingale_of(const GridFunction& f);

}  // namespace vilenkin
