#include "vilenkin/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "vilenkin/harmonic.hpp"
#include "vilenkin/means.hpp"
#include "vilenkin/system.hpp"

namespace vilenkin {

namespace {

constexpr double kLn2 = std::numbers::ln2;
// Multiplicative safety applied to every certified piece: rounds the main
// term down and the subtracted bounds up past all floating error here.
constexpr double kGuard = 1e-9;
constexpr std::uint64_t kDirectKernelLimit = std::uint64_t{1} << 20;

// A base size that may exceed 64 bits: exact value when it fits, log2 always.
struct Wide {
  bool fits = false;
  std::uint64_t v = 0;
  double lg = 0.0;
};

Wide wide_of(const BigUInt& b, double lg) {
  Wide w;
  w.lg = lg;
  w.fits = b.bit_length() <= 62;
  if (w.fits) w.v = b.to_u64();
  return w;
}

double wide_harmonic(const Wide& w) {
  return w.fits ? harmonic(w.v) : harmonic_from_log2(w.lg);
}

// H_{c+T-1} - H_{c-1} for T <= c, safe against cancellation.
double harmonic_span(const Wide& c, const Wide& T) {
  if (c.fits && T.fits) return harmonic_diff(c.v + T.v - 1, c.v - 1);
  const double y = std::exp2(T.lg - c.lg);
  return std::log1p(y);  // 1/(2n) corrections are ~2^-60 relative here
}

LogMagnitude scale_up(const LogMagnitude& v) {
  return v * LogMagnitude::from_double(1.0 + kGuard);
}

LogMagnitude scale_down(const LogMagnitude& v) {
  return v * LogMagnitude::from_double(1.0 - kGuard);
}

}  // namespace

AlphaSequence::AlphaSequence(std::vector<std::uint32_t> a, Rational p_)
    : alphas(std::move(a)), p(p_) {
  if (alphas.empty()) throw std::invalid_argument("AlphaSequence: empty");
  for (std::size_t k = 0; k + 1 < alphas.size(); ++k)
    if (alphas[k] >= alphas[k + 1])
      throw std::invalid_argument("AlphaSequence: not strictly increasing");
  for (auto v : alphas)
    if (v == 0) throw std::invalid_argument("AlphaSequence: exponents must be positive");
  if (p.num <= 0 || p.num > p.den)
    throw std::invalid_argument("AlphaSequence: p must lie in (0, 1]");
}

namespace {

// All three admissibility conditions compare quantities of the form
// M^(1/p) / sqrt(alpha); raising to the power 2*num (p = num/den) clears
// every fractional exponent, so the comparisons below are exact.
struct AlphaChecker {
  const std::vector<std::uint32_t>& alphas;
  const std::vector<BigUInt>& bigM;
  unsigned num, den;
  std::vector<double> log2T;  // log2 of M_{2a_k}^{1/p} / sqrt(alpha_k)

  AlphaChecker(const AlphaSequence& a, const std::vector<BigUInt>& M,
               const std::vector<double>& log2M)
      : alphas(a.alphas), bigM(M) {
    num = static_cast<unsigned>(a.p.num);
    den = static_cast<unsigned>(a.p.den);
    log2T.resize(alphas.size());
    const double inv_p = static_cast<double>(den) / static_cast<double>(num);
    for (std::size_t k = 0; k < alphas.size(); ++k)
      log2T[k] = inv_p * log2M[2 * alphas[k]] - 0.5 * std::log2(double(alphas[k]));
  }

  // mult * T_i < T_j, exactly.
  bool scaled_term_less(std::uint64_t mult, std::size_t i, std::size_t j) const {
    BigUInt lhs = BigUInt(mult).pow(2 * num) * bigM[2 * alphas[i]].pow(2 * den) *
                  BigUInt(alphas[j]).pow(num);
    BigUInt rhs = bigM[2 * alphas[j]].pow(2 * den) * BigUInt(alphas[i]).pow(num);
    return lhs < rhs;
  }

  bool decay_at(std::size_t k) const {
    // Geometric decay of the terms alpha_k^(-p/2) with ratio r = 16^(-p/2):
    // the exponent cancels, leaving a 16-fold growth requirement.
    return 16 * static_cast<std::uint64_t>(alphas[k - 1]) <= alphas[k];
  }

  bool separation_at(std::size_t k) const {
    // M_{2a_{k-1}}^(1/p) / sqrt(a_{k-1}) < M_{a_k} / a_k^(3/2)
    BigUInt lhs = bigM[2 * alphas[k - 1]].pow(2 * den) * BigUInt(alphas[k]).pow(3 * num);
    BigUInt rhs = bigM[alphas[k]].pow(2 * num) * BigUInt(alphas[k - 1]).pow(num);
    return lhs < rhs;
  }

  bool dominance_at(std::size_t k, bool prev_ok) const {
    if (k == 1) return scaled_term_less(1, 0, 1);
    // With the prefix valid, the prior sum is below 2 T_{k-1}; that gives an
    // exact sufficient test and an exact necessary one, with a summed
    // high-precision comparison only in the band between them.
    if (prev_ok && scaled_term_less(2, k - 1, k)) return true;
    if (!scaled_term_less(1, k - 1, k)) return false;
    long double sum = 0;
    for (std::size_t e = 0; e < k; ++e)
      sum += std::exp2l(static_cast<long double>(log2T[e]) - log2T[k - 1]);
    return std::log2l(sum) + log2T[k - 1] < log2T[k];
  }
};

std::vector<double> log2_bases(const GroupSpec& spec) {
  std::vector<double> lg(spec.depth() + 1, 0.0);
  double sum = 0.0, comp = 0.0;
  for (std::size_t j = 0; j < spec.depth(); ++j) {
    double term = std::log2(static_cast<double>(spec.radices[j]));
    double next = sum + term;
    comp += (sum - next) + term;
    sum = next;
    lg[j + 1] = sum + comp;
  }
  return lg;
}

}  // namespace

AlphaReport validate_alphas(const AlphaSequence& a, const GroupSpec& spec) {
  const std::size_t n = a.alphas.size();
  const std::uint32_t top = a.alphas.back();
  if (2 * top > spec.depth())
    throw std::out_of_range("validate_alphas: group too shallow for the sequence");
  if (a.p.den > 1000)
    throw std::invalid_argument("validate_alphas: p denominator too large for exact checks");
  const auto bigM = base_sizes_big(spec, 2 * top);
  const auto lg = log2_bases(spec);
  AlphaChecker chk(a, bigM, lg);
  AlphaReport rep;
  rep.decay.assign(n, true);
  rep.dominance.assign(n, true);
  rep.separation.assign(n, true);
  rep.ok = true;
  for (std::size_t k = 1; k < n; ++k) {
    rep.decay[k] = chk.decay_at(k);
    rep.dominance[k] = chk.dominance_at(k, rep.dominance[k - 1]);
    rep.separation[k] = chk.separation_at(k);
    rep.ok = rep.ok && rep.decay[k] && rep.dominance[k] && rep.separation[k];
  }
  return rep;
}

AlphaSequence make_alphas(const Rational& p, std::size_t count, const GroupSpec& spec) {
  if (count == 0) throw std::invalid_argument("make_alphas: count must be positive");
  std::vector<std::uint32_t> a;
  for (std::size_t k = 0; k < count; ++k) {
    std::uint32_t cand = k == 0 ? 4 : a.back() + 1;
    for (;; ++cand) {
      if (2 * static_cast<std::size_t>(cand) + 1 > spec.depth())
        throw std::out_of_range("make_alphas: group too shallow for the requested terms");
      // cheap integer screen before the big-integer comparisons
      if (k > 0 && 16 * static_cast<std::uint64_t>(a.back()) > cand) continue;
      a.push_back(cand);
      AlphaReport rep = validate_alphas(AlphaSequence(a, p), spec);
      if (rep.ok) break;
      a.pop_back();
    }
  }
  return AlphaSequence(a, p);
}

CounterexampleSpec::CounterexampleSpec(GroupSpec group, AlphaSequence alphas)
    : group_(std::move(group)), alphas_(std::move(alphas)) {
  const std::uint32_t top = alphas_.alphas.back();
  if (2 * static_cast<std::size_t>(top) + 1 > group_.depth())
    throw std::invalid_argument("CounterexampleSpec: group depth must reach 2*alpha_max + 1");
  log2M_ = log2_bases(group_);
  bigM_ = base_sizes_big(group_, group_.depth());
}

LogMagnitude CounterexampleSpec::lambda(std::size_t k) const {
  const std::uint32_t a = alpha(k);
  const double m = static_cast<double>(group_.radices[2 * a]);
  return LogMagnitude::from_log2(std::log2(m) - 0.5 * std::log2(double(a)));
}

LogMagnitude CounterexampleSpec::amplitude(std::size_t k) const {
  const std::uint32_t a = alpha(k);
  const double inv_p_minus_1 =
      static_cast<double>(alphas_.p.den - alphas_.p.num) / static_cast<double>(alphas_.p.num);
  const double m = static_cast<double>(group_.radices[2 * a]);
  return LogMagnitude::from_log2(inv_p_minus_1 * log2M_[2 * a] - std::log2(m));
}

LogMagnitude CounterexampleSpec::block_coeff(std::size_t k) const {
  return lambda(k) * amplitude(k);
}

LogMagnitude CounterexampleSpec::block_mass(std::size_t k) const {
  const std::uint32_t a = alpha(k);
  const double m = static_cast<double>(group_.radices[2 * a]);
  // (M_{2a+1} - M_{2a}) = M_{2a} (m - 1)
  return block_coeff(k) *
         LogMagnitude::from_log2(log2M_[2 * a] + std::log2(m - 1.0));
}

bool CounterexampleSpec::dense_feasible() const {
  std::uint64_t M = 1;
  for (auto r : group_.radices) {
    M *= r;
    if (M > (std::uint64_t{1} << 20)) return false;
  }
  return true;
}

AtomSpec atom(const CounterexampleSpec& cs, std::size_t k) {
  AtomSpec a;
  a.p = cs.p_exact();
  a.k = k;
  a.alpha = cs.alpha(k);
  a.support_rank = 2 * static_cast<std::size_t>(a.alpha);
  a.amplitude = cs.amplitude(k);
  return a;
}

GridFunction atom_grid(const CounterexampleSpec& cs, std::size_t k) {
  const GroupSpec& g = cs.group();
  const CellLayout layout = cell_layout(g);
  const std::uint64_t n = layout.size();
  const std::size_t rank = 2 * static_cast<std::size_t>(cs.alpha(k));
  const std::uint64_t M_lo = layout.bases.M[rank];
  const std::uint64_t M_hi = layout.bases.M[rank + 1];
  const double amp = cs.amplitude(k).to_double();
  Eigen::VectorXcd values = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  const std::uint64_t inner = n / M_hi;  // cells in the rank-(2a+1) cylinder at 0
  const std::uint64_t outer = n / M_lo;  // cells in the rank-2a cylinder at 0
  for (std::uint64_t c = 0; c < inner; ++c)
    values(static_cast<Eigen::Index>(c)) = amp * static_cast<double>(M_hi - M_lo);
  for (std::uint64_t c = inner; c < outer; ++c)
    values(static_cast<Eigen::Index>(c)) = -amp * static_cast<double>(M_lo);
  return GridFunction(g, std::move(values));
}

GridFunction f_grid(const CounterexampleSpec& cs, std::size_t A) {
  GridFunction f = GridFunction::zeros(cs.group());
  for (std::size_t k = 0; k < cs.terms(); ++k) {
    if (2 * static_cast<std::size_t>(cs.alpha(k)) < A) {
      const double lam = cs.lambda(k).to_double();
      f.values += lam * atom_grid(cs, k).values;
    }
  }
  return f;
}

Spectrum f_spectrum(const CounterexampleSpec& cs) {
  Spectrum s = Spectrum::zeros(cs.group());
  const auto bases = base_sizes(cs.group());
  for (std::size_t k = 0; k < cs.terms(); ++k) {
    const std::size_t rank = 2 * static_cast<std::size_t>(cs.alpha(k));
    const double coeff = cs.block_coeff(k).to_double();
    for (std::uint64_t j = bases.M[rank]; j < bases.M[rank + 1]; ++j)
      s.coeffs(static_cast<Eigen::Index>(j)) = coeff;
  }
  return s;
}

LogMagnitude f_coeff(const CounterexampleSpec& cs, std::uint64_t j) {
  const BigUInt J(j);
  for (std::size_t k = 0; k < cs.terms(); ++k) {
    const std::size_t rank = 2 * static_cast<std::size_t>(cs.alpha(k));
    if (J < cs.base(rank)) break;  // blocks are increasing; j is below all later ones
    if (J < cs.base(rank + 1)) return cs.block_coeff(k);
  }
  return LogMagnitude::zero();
}

bool partial_sum_keeps_atom(const CounterexampleSpec& cs, std::size_t k, std::size_t A) {
  if (k >= cs.terms()) throw std::out_of_range("partial_sum_keeps_atom: bad atom index");
  return 2 * static_cast<std::size_t>(cs.alpha(k)) < A;
}

BigUInt q_index(const CounterexampleSpec& cs, std::uint32_t A, std::uint32_t s) {
  if (A < s) throw std::invalid_argument("q_index: requires A >= s");
  if (2 * static_cast<std::size_t>(A) > cs.group().depth())
    throw std::out_of_range("q_index: 2A exceeds the group depth");
  BigUInt q = cs.base(2 * A) + cs.base(2 * s);
  q -= BigUInt(1);
  return q;
}

LogMagnitude partial_sum_bound(const CounterexampleSpec& cs, std::size_t k) {
  if (k == 0) throw std::invalid_argument("partial_sum_bound: no blocks below k = 0");
  if (k > cs.terms()) throw std::out_of_range("partial_sum_bound: bad index");
  LogMagnitude b = LogMagnitude::zero();
  for (std::size_t e = 0; e < k; ++e) b = log_add(b, cs.block_mass(e));
  return b;
}

std::complex<double> partial_sum_at_point(const CounterexampleSpec& cs, std::uint64_t j,
                                          const Point& x) {
  std::complex<double> sum = 0;
  const BigUInt J(j);
  for (std::size_t k = 0; k < cs.terms(); ++k) {
    const std::size_t rank = 2 * static_cast<std::size_t>(cs.alpha(k));
    if (J <= cs.base(rank)) break;
    const std::uint64_t lo = cs.base(rank).to_u64();
    const std::uint64_t end = J < cs.base(rank + 1) ? j : cs.base(rank + 1).to_u64();
    const std::complex<double> seg =
        dirichlet_lazy(end, x, cs.group()) - dirichlet_lazy(lo, x, cs.group());
    sum += cs.block_coeff(k).to_double() * seg;
  }
  return sum;
}

namespace {

// sum_{u<T} u/(u+c) by compensated summation.
double riesz_kernel_direct(std::uint64_t T, double c) {
  double sum = 0.0, comp = 0.0;
  for (std::uint64_t u = 1; u < T; ++u) {
    double term = static_cast<double>(u) / (static_cast<double>(u) + c);
    double next = sum + term;
    comp += (sum - next) + term;
    sum = next;
  }
  return sum + comp;
}

// sum_{j<M} j/(M-j) by compensated summation.
double norlund_kernel_direct(std::uint64_t M) {
  double sum = 0.0, comp = 0.0;
  for (std::uint64_t j = 1; j < M; ++j) {
    double term = static_cast<double>(j) / static_cast<double>(M - j);
    double next = sum + term;
    comp += (sum - next) + term;
    sum = next;
  }
  return sum + comp;
}

// sum_{u<T} u/(u+c) = T - c (H_{c+T-1} - H_{c-1}); evaluated through
// y - ln(1+y) to dodge the cancellation.
LogMagnitude riesz_kernel_lm(const Wide& T, const Wide& c) {
  if (T.fits && T.v <= kDirectKernelLimit && c.fits)
    return LogMagnitude::from_double(riesz_kernel_direct(T.v, static_cast<double>(c.v)));
  if (c.lg <= 900.0 && T.lg <= 900.0) {
    const double cd = c.fits ? static_cast<double>(c.v) : std::exp2(c.lg);
    const double Td = T.fits ? static_cast<double>(T.v) : std::exp2(T.lg);
    const double y = Td / (cd - 1.0);
    const double value = (cd - 1.0) * one_minus_log_ratio(y) - std::log1p(y) +
                         0.5 * y / (1.0 + y);
    return LogMagnitude::from_double(value);
  }
  // Pure log domain; the dropped correction terms are below 2^-19 relative.
  const double lg = c.lg + one_minus_log_ratio_log2(T.lg - c.lg);
  return LogMagnitude::from_log2(lg) * LogMagnitude::from_double(1.0 - 1e-5);
}

// sum_{j<M} j/(M-j) = M l_{M-1} - (M-1).
LogMagnitude norlund_kernel_lm(const Wide& M) {
  if (M.fits && M.v <= kDirectKernelLimit)
    return LogMagnitude::from_double(norlund_kernel_direct(M.v));
  const double H = M.fits ? harmonic(M.v - 1) : harmonic_from_log2(M.lg);  // l_{M-1}
  if (M.lg <= 900.0) {
    const double Md = M.fits ? static_cast<double>(M.v) : std::exp2(M.lg);
    return LogMagnitude::from_double(Md * (H - 1.0) + 1.0);
  }
  return LogMagnitude::from_log2(M.lg + std::log2(H - 1.0));
}

struct AnnulusContext {
  const CounterexampleSpec& cs;
  std::size_t k;
  std::uint32_t s;
  Wide T, c, q;
  double l_q;
  std::vector<LogMagnitude> mass_prefix;  // cumulative block masses
};

AnnulusContext annulus_context(const CounterexampleSpec& cs, std::size_t k, std::uint32_t s,
                               const Point& x) {
  if (k >= cs.terms()) throw std::out_of_range("annulus: bad block index");
  const std::uint32_t a = cs.alpha(k);
  const std::uint32_t s_min = (2 * a + 2) / 3;
  if (s < s_min || s > a)
    throw std::invalid_argument("annulus: s outside [ceil(2 alpha_k / 3), alpha_k]");
  if (k > 0 && 2 * s <= 2 * cs.alpha(k - 1) + 1)
    throw std::invalid_argument("annulus: rank 2s does not clear the previous block");
  check_point(x, cs.group());
  for (std::uint32_t j = 0; j < 2 * s; ++j)
    if (x.digits[j] != 0) throw std::invalid_argument("annulus: point not in the rank-2s cylinder");
  if (x.digits[2 * s] == 0)
    throw std::invalid_argument("annulus: point lies in the deeper cylinder");

  AnnulusContext ctx{cs, k, s, {}, {}, {}, 0.0, {}};
  ctx.T = wide_of(cs.base(2 * s), cs.log2_base(2 * s));
  ctx.c = wide_of(cs.base(2 * a), cs.log2_base(2 * a));
  BigUInt qb = cs.base(2 * a) + cs.base(2 * s);
  qb -= BigUInt(1);
  Wide q;
  q.fits = qb.bit_length() <= 62;
  q.v = q.fits ? qb.to_u64() : 0;
  q.lg = q.fits ? qb.log2()
                : ctx.c.lg + std::log1p(std::exp2(ctx.T.lg - ctx.c.lg)) / kLn2;
  ctx.q = q;
  ctx.l_q = q.fits ? harmonic(q.v) : harmonic_from_log2(q.lg);
  ctx.mass_prefix.resize(k + 1);
  ctx.mass_prefix[0] = LogMagnitude::zero();
  for (std::size_t e = 0; e < k; ++e)
    ctx.mass_prefix[e + 1] = log_add(ctx.mass_prefix[e], cs.block_mass(e));
  return ctx;
}

// H_b - H_a for block-boundary arguments (b/a far from 1 or both exact).
double boundary_harmonic_diff(const Wide& b, const Wide& a) {
  if (b.fits && a.fits) return harmonic_diff(b.v, a.v);
  return wide_harmonic(b) - wide_harmonic(a);
}

std::optional<double> dense_exact(const AnnulusContext& ctx, MaximalOperator op, const Point& x) {
  if (!ctx.cs.dense_feasible() || !ctx.q.fits) return std::nullopt;
  const CellLayout layout = cell_layout(ctx.cs.group());
  if (ctx.q.v > layout.size()) return std::nullopt;
  Spectrum spec = f_spectrum(ctx.cs);
  GridFunction g = op == MaximalOperator::riesz ? riesz_log(spec, ctx.q.v)
                                                : norlund_log(spec, ctx.q.v);
  return std::abs(g.values(static_cast<Eigen::Index>(cell_of_point(x, layout))));
}

}  // namespace

double riesz_kernel_sum(double T, double c) {
  if (T <= kDirectKernelLimit)
    return riesz_kernel_direct(static_cast<std::uint64_t>(T), c);
  Wide Tw{false, 0, std::log2(T)}, cw{false, 0, std::log2(c)};
  return riesz_kernel_lm(Tw, cw).to_double();
}

double norlund_kernel_sum(double M) {
  if (M <= kDirectKernelLimit) return norlund_kernel_direct(static_cast<std::uint64_t>(M));
  Wide Mw{false, 0, std::log2(M)};
  return norlund_kernel_lm(Mw).to_double();
}

AnnulusEstimate riesz_at_annulus(const CounterexampleSpec& cs, std::size_t k,
                                 std::uint32_t s, const Point& x) {
  AnnulusContext ctx = annulus_context(cs, k, s, x);
  const LogMagnitude inv_lq = LogMagnitude::from_double(1.0 / ctx.l_q);

  AnnulusEstimate est;
  est.main_term = inv_lq * cs.block_coeff(k) * riesz_kernel_lm(ctx.T, ctx.c);

  // Partial sums below the k-th block: piecewise-constant coefficient-mass
  // bound, harmonic weight 1/j.
  LogMagnitude prior = LogMagnitude::zero();
  for (std::size_t e = 0; e < k; ++e) {
    const std::size_t lo_rank = 2 * static_cast<std::size_t>(cs.alpha(e));
    Wide lo = wide_of(cs.base(lo_rank), cs.log2_base(lo_rank));
    Wide hi;
    if (e + 1 < k) {
      const std::size_t hi_rank = 2 * static_cast<std::size_t>(cs.alpha(e + 1));
      hi = wide_of(cs.base(hi_rank), cs.log2_base(hi_rank));
    } else {
      hi = ctx.c;
      if (hi.fits) hi.v -= 1;  // up to M_{2 alpha_k} - 1
    }
    const double weight = boundary_harmonic_diff(hi, lo);
    prior = log_add(prior, ctx.mass_prefix[e + 1] * LogMagnitude::from_double(weight));
  }
  est.prior_bound = inv_lq * prior;

  // Earlier blocks' kernels riding along the top range of indices.
  const double span = harmonic_span(ctx.c, ctx.T);
  est.tail_bound = inv_lq * ctx.mass_prefix[k] * LogMagnitude::from_double(span);

  est.certified = log_sub_floor(
      log_sub_floor(scale_down(est.main_term), scale_up(est.prior_bound)),
      scale_up(est.tail_bound));
  est.exact_dense = dense_exact(ctx, MaximalOperator::riesz, x);
  return est;
}

AnnulusEstimate norlund_at_annulus(const CounterexampleSpec& cs, std::size_t k,
                                   std::uint32_t s, const Point& x) {
  AnnulusContext ctx = annulus_context(cs, k, s, x);
  const LogMagnitude inv_lq = LogMagnitude::from_double(1.0 / ctx.l_q);

  AnnulusEstimate est;
  // The reverse weighting pairs D_u with denominator M_{2s}-1-u, so the
  // kernel is the reflected sum at M_{2s}-1.
  Wide Tm1 = ctx.T;
  if (Tm1.fits) {
    Tm1.v -= 1;
    Tm1.lg = std::log2(static_cast<double>(Tm1.v));
  }
  est.main_term = inv_lq * cs.block_coeff(k) * norlund_kernel_lm(Tm1);

  LogMagnitude prior = LogMagnitude::zero();
  for (std::size_t e = 0; e < k; ++e) {
    const std::size_t lo_rank = 2 * static_cast<std::size_t>(cs.alpha(e));
    Wide lo = wide_of(cs.base(lo_rank), cs.log2_base(lo_rank));
    Wide hi;
    if (e + 1 < k) {
      const std::size_t hi_rank = 2 * static_cast<std::size_t>(cs.alpha(e + 1));
      hi = wide_of(cs.base(hi_rank), cs.log2_base(hi_rank));
    } else {
      hi = ctx.c;
      if (hi.fits) hi.v -= 1;
    }
    // sum over j in (lo, hi] of 1/(q-j) = H_{q-lo-1} - H_{q-hi-1}
    double weight;
    if (ctx.q.fits) {
      weight = harmonic_diff(ctx.q.v - lo.v - 1, ctx.q.v - hi.v - 1);
    } else {
      // q dwarfs every prior boundary; both arguments are ~q except the top
      // piece, whose lower end is T-1.
      Wide qa, qb;
      qa.fits = false;
      qa.lg = ctx.q.lg + std::log1p(-std::exp2(lo.lg - ctx.q.lg)) / kLn2;
      if (e + 1 < k) {
        qb.fits = false;
        qb.lg = ctx.q.lg + std::log1p(-std::exp2(hi.lg - ctx.q.lg)) / kLn2;
      } else {
        qb = Tm1;
      }
      weight = wide_harmonic(qa) - wide_harmonic(qb);
    }
    prior = log_add(prior, ctx.mass_prefix[e + 1] * LogMagnitude::from_double(weight));
  }
  est.prior_bound = inv_lq * prior;

  // sum_{j=M}^{q-1} 1/(q-j) = l_{T-1}
  const double span = wide_harmonic(Tm1);
  est.tail_bound = inv_lq * ctx.mass_prefix[k] * LogMagnitude::from_double(span);

  est.certified = log_sub_floor(
      log_sub_floor(scale_down(est.main_term), scale_up(est.prior_bound)),
      scale_up(est.tail_bound));
  est.exact_dense = dense_exact(ctx, MaximalOperator::norlund, x);
  return est;
}

LogMagnitude lower_bound_integral(const CounterexampleSpec& cs, std::size_t k,
                                  MaximalOperator op) {
  if (k >= cs.terms()) throw std::out_of_range("lower_bound_integral: bad block index");
  const std::uint32_t a = cs.alpha(k);
  const std::uint32_t s_min = (2 * a + 2) / 3;
  const double p = cs.p();
  LogMagnitude total = LogMagnitude::zero();
  for (std::uint32_t s = s_min; s <= a; ++s) {
    // The annulus decomposition needs rank 2s past the previous block.
    if (k > 0 && 2 * s <= 2 * cs.alpha(k - 1) + 1) continue;
    Point x = zero_point(cs.group());
    x.digits[2 * s] = 1;
    AnnulusEstimate est = op == MaximalOperator::riesz ? riesz_at_annulus(cs, k, s, x)
                                                       : norlund_at_annulus(cs, k, s, x);
    if (est.certified.is_zero()) continue;
    const double m2s = static_cast<double>(cs.group().radices[2 * s]);
    const LogMagnitude measure =
        LogMagnitude::from_log2(std::log2(m2s - 1.0) - cs.log2_base(2 * s + 1));
    total = log_add(total, measure * est.certified.pow(p));
  }
  return total;
}

double hp_norm_upper(const CounterexampleSpec& cs, std::size_t A) {
  const double p = cs.p();
  double sum = 0.0;
  for (std::size_t k = 0; k < cs.terms(); ++k) {
    if (2 * static_cast<std::size_t>(cs.alpha(k)) < A)
      sum += std::pow(cs.lambda(k).to_double(), p);
  }
  return std::pow(sum, 1.0 / p);
}

}  // namespace vilenkin
