#include "vilenkin/grid.hpp"

#include <numbers>
#include <stdexcept>

#include "vilenkin/cyclotomic.hpp"

namespace vilenkin {

namespace {

constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;

std::uint64_t dense_size(const GroupSpec& spec) {
  std::uint64_t n = base_sizes(spec).total();
  if (n > kDenseLimit) throw std::length_error("dense grid too large for this group");
  return n;
}

// exp(sign * 2*pi*i * k*d / m) tables, one row per digit k.
Eigen::MatrixXcd stage_kernel(std::uint32_t m, int sign) {
  Eigen::MatrixXcd K(m, m);
  for (std::uint32_t k = 0; k < m; ++k) {
    for (std::uint32_t d = 0; d < m; ++d) {
      K(k, d) = RootOfUnity(static_cast<std::uint64_t>(k) * d, m).to_complex();
      if (sign < 0) K(k, d) = std::conj(K(k, d));
    }
  }
  return K;
}

// One DFT stage along coordinate j of a grid-layout array.
void apply_stage(Eigen::VectorXcd& a, const CellLayout& layout, std::size_t j,
                 const Eigen::MatrixXcd& K) {
  const std::uint64_t stride = layout.strides[j];
  const std::uint32_t m = static_cast<std::uint32_t>(K.rows());
  const std::uint64_t block = stride * m;
  Eigen::VectorXcd scratch(m);
  for (std::uint64_t base = 0; base < static_cast<std::uint64_t>(a.size()); base += block) {
    for (std::uint64_t off = 0; off < stride; ++off) {
      for (std::uint32_t d = 0; d < m; ++d) scratch(d) = a(base + off + d * stride);
      for (std::uint32_t k = 0; k < m; ++k) {
        std::complex<double> acc = 0;
        for (std::uint32_t d = 0; d < m; ++d) acc += K(k, d) * scratch(d);
        a(base + off + k * stride) = acc;
      }
    }
  }
}

// Grid-layout digit position <-> mixed-radix index value permutation.
std::vector<std::uint64_t> digit_to_index_map(const GroupSpec& spec, const CellLayout& layout) {
  const std::uint64_t n = layout.size();
  std::vector<std::uint64_t> map(n);
  std::vector<std::uint32_t> digits(spec.depth(), 0);
  std::uint64_t grid_pos = 0, index_val = 0;
  for (std::uint64_t c = 0; c < n; ++c) {
    map[grid_pos] = index_val;
    // odometer increment, least significant coordinate last
    for (std::size_t j = spec.depth(); j-- > 0;) {
      ++digits[j];
      grid_pos += layout.strides[j];
      index_val += layout.bases.M[j];
      if (digits[j] < spec.radices[j]) break;
      grid_pos -= static_cast<std::uint64_t>(digits[j]) * layout.strides[j];
      index_val -= static_cast<std::uint64_t>(digits[j]) * layout.bases.M[j];
      digits[j] = 0;
    }
  }
  return map;
}

}  // namespace

GridFunction::GridFunction(GroupSpec s, Eigen::VectorXcd v) : spec(std::move(s)), values(std::move(v)) {
  if (static_cast<std::uint64_t>(values.size()) != dense_size(spec))
    throw std::invalid_argument("GridFunction: value count differs from M_N");
}

GridFunction GridFunction::zeros(const GroupSpec& spec) {
  return GridFunction(spec, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dense_size(spec))));
}

Spectrum::Spectrum(GroupSpec s, Eigen::VectorXcd c) : spec(std::move(s)), coeffs(std::move(c)) {
  if (static_cast<std::uint64_t>(coeffs.size()) != dense_size(spec))
    throw std::invalid_argument("Spectrum: coefficient count differs from M_N");
}

Spectrum Spectrum::zeros(const GroupSpec& spec) {
  return Spectrum(spec, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dense_size(spec))));
}

Eigen::VectorXcd psi_grid(std::uint64_t k, const GroupSpec& spec) {
  const std::uint64_t n = dense_size(spec);
  Idx idx = digits_of(k, spec);
  Eigen::VectorXcd out(1);
  out(0) = 1.0;
  // Expand coordinate by coordinate, coordinate 0 outermost.
  for (std::size_t j = 0; j < spec.depth(); ++j) {
    const std::uint32_t m = spec.radices[j];
    Eigen::VectorXcd digit_vals(m);
    for (std::uint32_t d = 0; d < m; ++d)
      digit_vals(d) = RootOfUnity(static_cast<std::uint64_t>(idx.digits[j]) * d, m).to_complex();
    Eigen::VectorXcd next(out.size() * m);
    for (Eigen::Index a = 0; a < out.size(); ++a)
      for (std::uint32_t d = 0; d < m; ++d) next(a * m + d) = out(a) * digit_vals(d);
    out.swap(next);
  }
  if (static_cast<std::uint64_t>(out.size()) != n)
    throw std::logic_error("psi_grid: size mismatch");
  return out;
}

Spectrum analyze(const GridFunction& f) {
  const std::uint64_t n = dense_size(f.spec);
  Eigen::VectorXcd coeffs(static_cast<Eigen::Index>(n));
  const double scale = 1.0 / static_cast<double>(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    coeffs(static_cast<Eigen::Index>(k)) =
        psi_grid(k, f.spec).dot(f.values) * scale;  // dot conjugates its left factor
  }
  return Spectrum(f.spec, std::move(coeffs));
}

GridFunction synthesize(const Spectrum& s) {
  const std::uint64_t n = dense_size(s.spec);
  Eigen::VectorXcd values = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(n));
  for (std::uint64_t k = 0; k < n; ++k) {
    const std::complex<double> c = s.coeffs(static_cast<Eigen::Index>(k));
    if (c != std::complex<double>(0.0, 0.0)) values += c * psi_grid(k, s.spec);
  }
  return GridFunction(s.spec, std::move(values));
}

Spectrum fast_analyze(const GridFunction& f) {
  const CellLayout layout = cell_layout(f.spec);
  Eigen::VectorXcd work = f.values;
  for (std::size_t j = 0; j < f.spec.depth(); ++j)
    apply_stage(work, layout, j, stage_kernel(f.spec.radices[j], -1));
  const auto map = digit_to_index_map(f.spec, layout);
  Eigen::VectorXcd coeffs(work.size());
  const double scale = 1.0 / static_cast<double>(layout.size());
  for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(work.size()); ++c)
    coeffs(static_cast<Eigen::Index>(map[c])) = work(static_cast<Eigen::Index>(c)) * scale;
  return Spectrum(f.spec, std::move(coeffs));
}

GridFunction fast_synthesize(const Spectrum& s) {
  const CellLayout layout = cell_layout(s.spec);
  const auto map = digit_to_index_map(s.spec, layout);
  Eigen::VectorXcd work(s.coeffs.size());
  for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(work.size()); ++c)
    work(static_cast<Eigen::Index>(c)) = s.coeffs(static_cast<Eigen::Index>(map[c]));
  for (std::size_t j = 0; j < s.spec.depth(); ++j)
    apply_stage(work, layout, j, stage_kernel(s.spec.radices[j], +1));
  return GridFunction(s.spec, std::move(work));
}

double lp_quasinorm(const GridFunction& f, double p) {
  if (!(p > 0)) throw std::invalid_argument("lp_quasinorm: requires p > 0");
  const double n = static_cast<double>(f.values.size());
  double sum = 0;
  for (Eigen::Index i = 0; i < f.values.size(); ++i)
    sum += std::pow(std::abs(f.values(i)), p);
  return std::pow(sum / n, 1.0 / p);
}

GridFunction dyadic_maximal(const GridFunction& f) {
  const std::size_t depth = f.spec.depth();
  const Eigen::Index n = f.values.size();
  Eigen::VectorXd best = f.values.cwiseAbs();  // rank-N averages are f itself
  Eigen::VectorXcd level = f.values;
  for (std::size_t rank = depth; rank-- > 0;) {
    const std::uint32_t m = f.spec.radices[rank];
    Eigen::VectorXcd coarser(level.size() / m);
    for (Eigen::Index b = 0; b < coarser.size(); ++b) {
      std::complex<double> acc = 0;
      for (std::uint32_t t = 0; t < m; ++t) acc += level(b * m + t);
      coarser(b) = acc / static_cast<double>(m);
    }
    const Eigen::Index block = n / coarser.size();
    for (Eigen::Index b = 0; b < coarser.size(); ++b) {
      const double a = std::abs(coarser(b));
      for (Eigen::Index t = 0; t < block; ++t)
        best(b * block + t) = std::max(best(b * block + t), a);
    }
    level.swap(coarser);
  }
  return GridFunction(f.spec, best.cast<std::complex<double>>());
}

double hardy_quasinorm(const GridFunction& f, double p) {
  return lp_quasinorm(dyadic_maximal(f), p);
}

MartingaleSeq martingale_of(const GridFunction& f) {
  const std::size_t depth = f.spec.depth();
  MartingaleSeq seq{f.spec, {}};
  seq.levels.resize(depth + 1);
  seq.levels[depth] = f.values;
  Eigen::VectorXcd level = f.values;
  for (std::size_t rank = depth; rank-- > 0;) {
    const std::uint32_t m = f.spec.radices[rank];
    Eigen::VectorXcd coarser(level.size() / m);
    for (Eigen::Index b = 0; b < coarser.size(); ++b) {
      std::complex<double> acc = 0;
      for (std::uint32_t t = 0; t < m; ++t) acc += level(b * m + t);
      coarser(b) = acc / static_cast<double>(m);
    }
    // broadcast back onto the full grid
    const Eigen::Index block = f.values.size() / coarser.size();
    Eigen::VectorXcd full(f.values.size());
    for (Eigen::Index b = 0; b < coarser.size(); ++b)
      for (Eigen::Index t = 0; t < block; ++t) full(b * block + t) = coarser(b);
    seq.levels[rank] = std::move(full);
    level.swap(coarser);
  }
  return seq;
}

}  // namespace vilenkin
