#include "vilenkin/means.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace vilenkin {

WeightSeq::WeightSeq(const std::vector<double>& weights) {
  q.assign(weights.size() + 1, 0.0);
  Q.assign(weights.size() + 1, 0.0);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) throw std::invalid_argument("WeightSeq: negative weight");
    q[i + 1] = weights[i];
    Q[i + 1] = Q[i] + weights[i];
  }
}

WeightSeq WeightSeq::constant(std::size_t count, double value) {
  return WeightSeq(std::vector<double>(count, value));
}

WeightSeq WeightSeq::reciprocal(std::size_t count) {
  std::vector<double> w(count);
  for (std::size_t i = 0; i < count; ++i) w[i] = 1.0 / static_cast<double>(i + 1);
  return WeightSeq(w);
}

namespace {

std::uint64_t grid_size(const Spectrum& s) {
  return static_cast<std::uint64_t>(s.coeffs.size());
}

GridFunction reweighted(const Spectrum& s, const Eigen::VectorXd& w) {
  Spectrum scaled(s.spec, s.coeffs.cwiseProduct(w.cast<std::complex<double>>()));
  return fast_synthesize(scaled);
}

}  // namespace

Eigen::VectorXd mean_weights(const MeanKind& kind, std::uint64_t n, std::uint64_t length) {
  Eigen::VectorXd w = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(length));
  const std::uint64_t top = std::min(n, length);
  switch (kind.tag) {
    case MeanTag::partial:
      for (std::uint64_t v = 0; v < top; ++v) w(v) = 1.0;
      break;
    case MeanTag::fejer:
      // sigma_n = (1/n) sum_{k=0}^{n-1} S_k; coefficient v sits in S_k for k > v.
      if (n < 1) throw std::invalid_argument("fejer: requires n >= 1");
      for (std::uint64_t v = 0; v < top; ++v)
        w(v) = static_cast<double>(n - 1 - v) / static_cast<double>(n);
      break;
    case MeanTag::riesz_log: {
      if (n < 1) throw std::invalid_argument("riesz_log: requires n >= 1");
      const double ln = harmonic(n);
      for (std::uint64_t v = 0; v < top; ++v) w(v) = harmonic_diff(n, v) / ln;
      break;
    }
    case MeanTag::norlund_log: {
      if (n < 2) throw std::invalid_argument("norlund_log: requires n >= 2");
      const double ln = harmonic(n);
      for (std::uint64_t v = 0; v < top; ++v) w(v) = harmonic(n - 1 - v) / ln;
      break;
    }
    case MeanTag::norlund_general: {
      if (!kind.weights) throw std::invalid_argument("norlund_general: missing weights");
      const auto& W = *kind.weights;
      if (n > W.max_n()) throw std::out_of_range("norlund_general: n beyond weight table");
      const double Qn = W.Q[n];
      if (!(Qn > 0)) throw std::invalid_argument("norlund_general: Q_n must be positive");
      for (std::uint64_t v = 0; v < top; ++v) w(v) = W.Q[n - 1 - v] / Qn;
      break;
    }
  }
  return w;
}

GridFunction partial_sum(const Spectrum& s, std::uint64_t n) {
  if (n > grid_size(s)) throw std::out_of_range("partial_sum: n exceeds M_N");
  if (n == 0) return GridFunction::zeros(s.spec);
  return reweighted(s, mean_weights(MeanKind::partial(), n, grid_size(s)));
}

GridFunction fejer(const Spectrum& s, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("fejer: requires n >= 1");
  if (n > grid_size(s)) throw std::out_of_range("fejer: n exceeds M_N");
  return reweighted(s, mean_weights(MeanKind::fejer(), n, grid_size(s)));
}

GridFunction riesz_log(const Spectrum& s, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("riesz_log: requires n >= 1");
  if (n > grid_size(s)) throw std::out_of_range("riesz_log: n exceeds M_N");
  return reweighted(s, mean_weights(MeanKind::riesz_log(), n, grid_size(s)));
}

GridFunction norlund_general(const Spectrum& s, const WeightSeq& w, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("norlund_general: requires n >= 1");
  if (n > grid_size(s)) throw std::out_of_range("norlund_general: n exceeds M_N");
  return reweighted(s, mean_weights(MeanKind::norlund_general(w), n, grid_size(s)));
}

GridFunction norlund_log(const Spectrum& s, std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("norlund_log: requires n >= 2");
  if (n > grid_size(s)) throw std::out_of_range("norlund_log: n exceeds M_N");
  return reweighted(s, mean_weights(MeanKind::norlund_log(), n, grid_size(s)));
}

GridFunction apply_mean(const Spectrum& s, const MeanKind& kind, std::uint64_t n) {
  switch (kind.tag) {
    case MeanTag::partial: return partial_sum(s, n);
    case MeanTag::fejer: return fejer(s, n);
    case MeanTag::riesz_log: return riesz_log(s, n);
    case MeanTag::norlund_log: return norlund_log(s, n);
    case MeanTag::norlund_general: return norlund_general(s, *kind.weights, n);
  }
  throw std::logic_error("apply_mean: unknown kind");
}

GridFunction mean_direct_oracle(const Spectrum& s, const MeanKind& kind, std::uint64_t n) {
  const std::uint64_t size = grid_size(s);
  if (n > size) throw std::out_of_range("mean_direct_oracle: n exceeds M_N");
  if (kind.tag == MeanTag::norlund_general) {
    if (!kind.weights) throw std::invalid_argument("norlund_general: missing weights");
    if (n > kind.weights->max_n()) throw std::out_of_range("norlund_general: n beyond weight table");
    if (!(kind.weights->Q[n] > 0))
      throw std::invalid_argument("norlund_general: Q_n must be positive");
  }
  // Running partial sum S_k, advanced one character at a time.
  Eigen::VectorXcd Sk = Eigen::VectorXcd::Zero(s.coeffs.size());
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(s.coeffs.size());
  auto weight_of_Sk = [&](std::uint64_t k) -> double {
    switch (kind.tag) {
      case MeanTag::partial: return k == n ? 1.0 : 0.0;
      case MeanTag::fejer: return k < n ? 1.0 / static_cast<double>(n) : 0.0;
      case MeanTag::riesz_log:
        return (k >= 1 && k <= n) ? 1.0 / (static_cast<double>(k) * harmonic(n)) : 0.0;
      case MeanTag::norlund_log:
        return (k >= 1 && k + 1 <= n) ? 1.0 / (static_cast<double>(n - k) * harmonic(n)) : 0.0;
      case MeanTag::norlund_general:
        return (k >= 1 && k <= n) ? kind.weights->q[n - k] / kind.weights->Q[n] : 0.0;
    }
    return 0.0;
  };
  for (std::uint64_t k = 0; k <= n; ++k) {
    double w = weight_of_Sk(k);
    if (w != 0.0) acc += w * Sk;
    if (k < n) Sk += s.coeffs(static_cast<Eigen::Index>(k)) * psi_grid(k, s.spec);
  }
  return GridFunction(s.spec, std::move(acc));
}

GridFunction maximal_mean(const Spectrum& s, const MeanKind& kind, std::uint64_t cap) {
  if (cap > grid_size(s)) throw std::out_of_range("maximal_mean: cap exceeds M_N");
  Eigen::VectorXd best = Eigen::VectorXd::Zero(s.coeffs.size());
  for (std::uint64_t n = kind.min_n(); n <= cap; ++n) {
    if (kind.tag == MeanTag::norlund_general &&
        (n > kind.weights->max_n() || !(kind.weights->Q[n] > 0)))
      continue;
    GridFunction g = apply_mean(s, kind, n);
    best = best.cwiseMax(g.values.cwiseAbs());
  }
  return GridFunction(s.spec, best.cast<std::complex<double>>());
}

GridFunction riesz_abel_form(const Spectrum& s, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("riesz_abel_form: requires n >= 1");
  if (n + 1 > grid_size(s)) throw std::out_of_range("riesz_abel_form: needs n + 1 <= M_N");
  Eigen::VectorXcd acc = Eigen::VectorXcd::Zero(s.coeffs.size());
  for (std::uint64_t k = 1; k + 1 <= n; ++k)
    acc += fejer(s, k + 1).values / static_cast<double>(k);
  acc += (static_cast<double>(n + 1) / static_cast<double>(n)) * fejer(s, n + 1).values;
  return GridFunction(s.spec, acc / harmonic(n));
}

double riesz_fejer_domination(const Spectrum& s, std::uint64_t cap) {
  if (cap + 1 > grid_size(s)) throw std::out_of_range("riesz_fejer_domination: cap + 1 exceeds M_N");
  GridFunction r = maximal_mean(s, MeanKind::riesz_log(), cap);
  GridFunction f = maximal_mean(s, MeanKind::fejer(), cap + 1);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < r.values.size(); ++i) {
    const double num = std::abs(r.values(i));
    const double den = std::abs(f.values(i));
    if (den == 0.0) {
      if (num == 0.0) continue;
      return std::numeric_limits<double>::infinity();
    }
    worst = std::max(worst, num / den);
  }
  return worst;
}

}  // namespace vilenkin
