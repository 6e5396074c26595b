#pragma once

#include <optional>
#include <vector>

#include "vilenkin/grid.hpp"
#include "vilenkin/harmonic.hpp"

namespace vilenkin {

/// Nonnegative Norlund weights q_1, q_2, ... with cumulative sums
/// Q_n = q_1 + ... + q_n.  q_0 is fixed to zero so that the reversed
/// weighting never touches an undefined term.
struct WeightSeq {
  std::vector<double> q;  // q[0] == 0
  std::vector<double> Q;  // Q[n] = q[1] + ... + q[n]

  /// weights[i] supplies q_{i+1}.
  explicit WeightSeq(const std::vector<double>& weights);

  static WeightSeq constant(std::size_t count, double value = 1.0);
  static WeightSeq reciprocal(std::size_t count);  // q_k = 1/k

  std::size_t max_n() const { return q.size() - 1; }
};

enum class MeanTag { partial, fejer, riesz_log, norlund_log, norlund_general };

struct MeanKind {
  MeanTag tag = MeanTag::partial;
  std::optional<WeightSeq> weights;  // set iff tag == norlund_general

  static MeanKind partial() { return {MeanTag::partial, std::nullopt}; }
  static MeanKind fejer() { return {MeanTag::fejer, std::nullopt}; }
  static MeanKind riesz_log() { return {MeanTag::riesz_log, std::nullopt}; }
  static MeanKind norlund_log() { return {MeanTag::norlund_log, std::nullopt}; }
  static MeanKind norlund_general(WeightSeq w) { return {MeanTag::norlund_general, std::move(w)}; }

  /// Smallest index at which the mean is defined.
  std::uint64_t min_n() const { return tag == MeanTag::norlund_log ? 2 : 1; }
};

/// Per-coefficient multiplier row: every mean here collapses to a spectral
/// reweighting hat f(v) -> w_n(v) hat f(v); this exposes the weights that the
/// apply path uses.
Eigen::VectorXd mean_weights(const MeanKind& kind, std::uint64_t n, std::uint64_t length);

/// S_n f: truncated synthesis, S_0 = 0.
GridFunction partial_sum(const Spectrum& s, std::uint64_t n);

/// Fejer mean (1/n) sum_{k=0}^{n-1} S_k f, n >= 1.
GridFunction fejer(const Spectrum& s, std::uint64_t n);

/// Logarithmic mean (1/l_n) sum_{k=1}^{n} S_k f / k, n >= 1.
GridFunction riesz_log(const Spectrum& s, std::uint64_t n);

/// Norlund mean (1/Q_n) sum_{k=1}^{n} q_{n-k} S_k f; requires Q_n > 0.
GridFunction norlund_general(const Spectrum& s, const WeightSeq& w, std::uint64_t n);

/// Reverse logarithmic mean (1/l_n) sum_{k=1}^{n-1} S_k f / (n-k), n >= 2.
/// The k = n term is excluded: its weight 1/(n-k) is undefined.
GridFunction norlund_log(const Spectrum& s, std::uint64_t n);

/// Applies the mean of the given kind at index n.
GridFunction apply_mean(const Spectrum& s, const MeanKind& kind, std::uint64_t n);

/// Reference path: accumulates the partial sums S_k f one character at a
/// time and combines them with the defining weights.  Slow; used to
/// cross-check the reweighting path.
GridFunction mean_direct_oracle(const Spectrum& s, const MeanKind& kind, std::uint64_t n);

/// Pointwise sup of |mean_n f| over the kind's valid indices n <= cap.
GridFunction maximal_mean(const Spectrum& s, const MeanKind& kind, std::uint64_t cap);

/// The logarithmic mean computed purely from Fejer means via the Abel
/// rearrangement
///   R_n f = (1/l_n) [ sum_{k=1}^{n-1} sigma_{k+1} f / k + ((n+1)/n) sigma_{n+1} f ],
/// an exact identity (checked symbolically at small n and against riesz_log
/// in the tests).  Requires n + 1 <= M_N.
GridFunction riesz_abel_form(const Spectrum& s, std::uint64_t n);

/// max over cells of maximal riesz_log (cap) divided by maximal fejer
/// (cap+1); bounded by 3 via the Abel rearrangement.  Cells where both
/// maxima vanish contribute 0; a zero Fejer maximal against a nonzero
/// logarithmic-mean maximal yields +infinity.
double riesz_fejer_domination(const Spectrum& s, std::uint64_t cap);

}  // namespace vilenkin
