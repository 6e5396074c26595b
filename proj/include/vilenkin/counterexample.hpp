#pragma once

#include <optional>

#include "vilenkin/grid.hpp"
#include "vilenkin/logmag.hpp"

namespace vilenkin {

/// Exponents alpha_0 < alpha_1 < ... steering the divergence construction,
/// together with the integrability exponent p in (0, 1].
struct AlphaSequence {
  std::vector<std::uint32_t> alphas;
  Rational p;

  AlphaSequence(std::vector<std::uint32_t> a, Rational p_);
};

/// Per-index verdicts for the three admissibility conditions.  decay is the
/// finite-truncation proxy for summability of alpha_k^(-p/2): the terms must
/// shrink geometrically with ratio at most 16^(-p/2), which reduces to the
/// exact requirement alpha_k >= 16 alpha_{k-1}.  dominance: the prior
/// blocks' coefficient mass stays below the next block's.  separation: the
/// prior mass is small even against M_{alpha_k}/alpha_k^(3/2).
struct AlphaReport {
  std::vector<bool> decay;
  std::vector<bool> dominance;
  std::vector<bool> separation;
  bool ok = false;
};

/// Exact-arithmetic validation (big-integer comparisons after clearing the
/// fractional powers; a high-precision summed comparison only in the narrow
/// band where the exact necessary and sufficient tests disagree).
AlphaReport validate_alphas(const AlphaSequence& a, const GroupSpec& spec);

/// Greedy minimal admissible sequence: alpha_0 = 4, then each alpha_k is the
/// least value passing validate_alphas for the extended prefix.  The group
/// must be deep enough for 2*alpha_k + 1 coordinates.
AlphaSequence make_alphas(const Rational& p, std::size_t count, const GroupSpec& spec);

/// The whole construction: group, exponent sequence, and the derived
/// coefficient ladder.  Weights lambda_k = m_{2 alpha_k} / sqrt(alpha_k);
/// atom k has amplitude M_{2 alpha_k}^{1/p-1} / m_{2 alpha_k} on the rank
/// 2 alpha_k cylinder at zero.
class CounterexampleSpec {
 public:
  CounterexampleSpec(GroupSpec group, AlphaSequence alphas);

  const GroupSpec& group() const { return group_; }
  const AlphaSequence& alpha_seq() const { return alphas_; }
  std::size_t terms() const { return alphas_.alphas.size(); }
  std::uint32_t alpha(std::size_t k) const { return alphas_.alphas.at(k); }
  double p() const { return alphas_.p.to_double(); }
  const Rational& p_exact() const { return alphas_.p; }

  double log2_base(std::size_t rank) const { return log2M_.at(rank); }
  const BigUInt& base(std::size_t rank) const { return bigM_.at(rank); }

  LogMagnitude lambda(std::size_t k) const;
  LogMagnitude amplitude(std::size_t k) const;
  /// lambda_k * amplitude_k: the Fourier coefficient on block k.
  LogMagnitude block_coeff(std::size_t k) const;
  /// block width (M_{2a+1} - M_{2a}) times block_coeff: the block's total
  /// coefficient mass.
  LogMagnitude block_mass(std::size_t k) const;

  /// True when the full depth-N grid is materializable densely.
  bool dense_feasible() const;

 private:
  GroupSpec group_;
  AlphaSequence alphas_;
  std::vector<double> log2M_;
  std::vector<BigUInt> bigM_;
};

struct AtomSpec {
  Rational p;
  std::size_t k = 0;
  std::uint32_t alpha = 0;
  std::size_t support_rank = 0;  // 2 * alpha
  LogMagnitude amplitude;
};

AtomSpec atom(const CounterexampleSpec& cs, std::size_t k);

/// Dense materialization of atom k (requires a materializable grid).
GridFunction atom_grid(const CounterexampleSpec& cs, std::size_t k);

/// Dense f^(A): the weighted sum of the atoms with 2 alpha_k < A.
GridFunction f_grid(const CounterexampleSpec& cs, std::size_t A);

/// Spectrum of f on the dense grid, filled directly from f_coeff.
Spectrum f_spectrum(const CounterexampleSpec& cs);

/// Fourier coefficient of f at index j: block_coeff(k) on the k-th block
/// [M_{2 alpha_k}, M_{2 alpha_k + 1}), zero between blocks.
LogMagnitude f_coeff(const CounterexampleSpec& cs, std::uint64_t j);

/// Whether S_{M_A} reproduces atom k (2 alpha_k < A) or annihilates it.
bool partial_sum_keeps_atom(const CounterexampleSpec& cs, std::size_t k, std::size_t A);

/// q_A^s = M_{2A} + M_{2s} - 1 for A >= s, exact.
BigUInt q_index(const CounterexampleSpec& cs, std::uint32_t A, std::uint32_t s);

/// Sharp triangle-inequality bound on |S_j f| for every j < M_{2 alpha_k}:
/// the total coefficient mass of blocks 0..k-1, with explicit constants.
LogMagnitude partial_sum_bound(const CounterexampleSpec& cs, std::size_t k);

/// S_j f(x) evaluated pointwise through the block structure and the lazy
/// kernel; no grid required.  Magnitudes must fit a double.
std::complex<double> partial_sum_at_point(const CounterexampleSpec& cs, std::uint64_t j,
                                          const Point& x);

/// Kernel sums that appear on the annuli.
/// sum_{u < T} u / (u + c); exact summation at small T, analytic form beyond.
double riesz_kernel_sum(double T, double c);
/// sum_{j < M} j / (M - j) = M l_{M-1} - (M - 1).
double norlund_kernel_sum(double M);

enum class MaximalOperator { riesz, norlund };

/// Certified evaluation of the chosen logarithmic mean at index q_{alpha_k}^s
/// on the annulus of rank 2s: the main closed-form term minus explicit
/// bounds on everything else.
struct AnnulusEstimate {
  LogMagnitude main_term;    // exact modulus of the dominant closed-form piece
  LogMagnitude prior_bound;  // bound on the partial sums below the k-th block
  LogMagnitude tail_bound;   // bound on the earlier blocks' kernel interference
  LogMagnitude certified;    // max(main - prior - tail, 0), a true lower bound
  std::optional<double> exact_dense;  // |mean_q f(x)| when the grid is materializable
};

AnnulusEstimate riesz_at_annulus(const CounterexampleSpec& cs, std::size_t k,
                                 std::uint32_t s, const Point& x);
AnnulusEstimate norlund_at_annulus(const CounterexampleSpec& cs, std::size_t k,
                                   std::uint32_t s, const Point& x);

/// Certified lower bound for the integral of |maximal operator applied to
/// f|^p over the annuli s = ceil(2 alpha_k / 3) .. alpha_k: each annulus
/// contributes its measure times the certified pointwise bound to the p.
LogMagnitude lower_bound_integral(const CounterexampleSpec& cs, std::size_t k,
                                  MaximalOperator op);

/// Atomic-decomposition upper bound (sum over 2 alpha_k < A of
/// lambda_k^p)^(1/p).
double hp_norm_upper(const CounterexampleSpec& cs, std::size_t A);

}  // namespace vilenkin
