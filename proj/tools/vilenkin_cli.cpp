// Command-line surface for the Vilenkin-Fourier toolkit: transforms, means,
// verification suites, and divergence lower-bound tables, all emitting CSV.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vilenkin/counterexample.hpp"
#include "vilenkin/csv.hpp"
#include "vilenkin/means.hpp"
#include "vilenkin/random.hpp"
#include "vilenkin/system.hpp"

using namespace vilenkin;

namespace {

struct OutputTarget {
  std::string path;  // empty = stdout

  template <typename Fn>
  void write(Fn&& fn) const {
    if (path.empty()) {
      fn(std::cout);
    } else {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot open output file: " + path);
      fn(out);
    }
  }
};

Eigen::VectorXcd load_vector(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return read_vector_csv(in);
}

// ---------------------------------------------------------------------------
// verify: named property suites, one CSV row per check, nonzero exit on any
// failure.

class SuiteRunner {
 public:
  SuiteRunner(std::ostream& out, std::uint64_t seed) : out_(out), seed_(seed) {
    out_ << "# generator=mt19937_64 seed=" << seed << "\n";
    out_ << "suite,check,status,detail\n";
  }

  void record(const std::string& suite, const std::string& check, bool pass,
              double detail = 0.0) {
    out_ << suite << ',' << check << ',' << (pass ? "PASS" : "FAIL") << ','
         << format_double(detail) << '\n';
    if (!pass) failed_ = true;
  }

  bool failed() const { return failed_; }
  Rng rng() const { return Rng(seed_); }

 private:
  std::ostream& out_;
  std::uint64_t seed_;
  bool failed_ = false;
};

void run_kernel_suite(SuiteRunner& r, const GroupSpec& g, KernelBackend backend) {
  const CellLayout layout = cell_layout(g);
  const std::uint64_t M = layout.size();
  const bool exact = backend == KernelBackend::exact;

  bool closed_ok = true;
  const std::uint32_t L = root_order(g);
  for (std::size_t n = 0; n <= g.depth() && closed_ok; ++n) {
    for (std::uint64_t c = 0; c < M; ++c) {
      Point x = point_of_cell(c, g, layout);
      const std::uint64_t expect = dirichlet_base_closed(n, x, g);
      if (exact) {
        Cyclotomic brute = dirichlet_naive_exact(layout.bases.M[n], x, g);
        Cyclotomic closed(L);
        closed.add_root(0, static_cast<std::int64_t>(expect));
        if (!brute.equals(closed)) {
          closed_ok = false;
          break;
        }
      } else if (std::abs(dirichlet_naive(layout.bases.M[n], x, g) - double(expect)) > 1e-12 * std::max<double>(1, double(expect))) {
        closed_ok = false;
        break;
      }
    }
  }
  r.record("kernels", exact ? "base_size_closed_form_exact" : "base_size_closed_form_float",
           closed_ok);

  bool shift_ok = true;
  for (std::size_t k = 0; k <= g.depth() && shift_ok; ++k) {
    const std::uint64_t Mk = layout.bases.M[k];
    for (std::uint64_t j = 0; j < Mk && shift_ok; ++j) {
      if (j + Mk > M) break;
      for (std::uint64_t c = 0; c < M; ++c) {
        Point x = point_of_cell(c, g, layout);
        if (!dirichlet_shift_check(j, k, x, g, backend)) {
          shift_ok = false;
          break;
        }
      }
    }
  }
  r.record("kernels", exact ? "shift_identity_exact" : "shift_identity_float", shift_ok);

  bool lazy_ok = true;
  double worst = 0;
  Rng rng = r.rng();
  std::uniform_int_distribution<std::uint64_t> cells(0, M - 1), idx(0, M - 1);
  for (int t = 0; t < 200; ++t) {
    const std::uint64_t n = idx(rng);
    Point x = point_of_cell(cells(rng), g, layout);
    const double dev = std::abs(dirichlet_lazy(n, x, g) - dirichlet_naive(n, x, g));
    worst = std::max(worst, dev);
    if (dev > 1e-9) lazy_ok = false;
    if (std::abs(dirichlet_lazy(n, x, g)) > double(n) + 1e-9) lazy_ok = false;
  }
  r.record("kernels", "lazy_equals_brute_force", lazy_ok, worst);
}

void run_transform_suite(SuiteRunner& r, const GroupSpec& g) {
  const std::uint64_t M = cell_layout(g).size();
  double worst = 0;
  for (std::uint64_t i = 0; i < M; ++i) {
    Eigen::VectorXcd row = psi_grid(i, g);
    Spectrum s = fast_analyze(GridFunction(g, row));
    for (Eigen::Index j = 0; j < s.coeffs.size(); ++j) {
      const double expect = (static_cast<std::uint64_t>(j) == i) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(s.coeffs(j) - expect));
    }
  }
  r.record("transforms", "orthonormality", worst <= 1e-12, worst);

  Rng rng = r.rng();
  double parseval = 0, roundtrip = 0, fastdev = 0;
  for (int t = 0; t < 5; ++t) {
    GridFunction f = random_grid(g, rng);
    Spectrum s = fast_analyze(f);
    parseval = std::max(parseval,
                        std::abs(s.coeffs.squaredNorm() - f.values.squaredNorm() / double(M)));
    roundtrip = std::max(roundtrip,
                         (fast_synthesize(s).values - f.values).cwiseAbs().maxCoeff());
    fastdev = std::max(fastdev, (analyze(f).coeffs - s.coeffs).cwiseAbs().maxCoeff());
  }
  r.record("transforms", "parseval", parseval <= 1e-12, parseval);
  r.record("transforms", "round_trip", roundtrip <= 1e-12, roundtrip);
  r.record("transforms", "fast_equals_direct", fastdev <= 1e-10, fastdev);
}

void run_martingale_suite(SuiteRunner& r, const GroupSpec& g) {
  Rng rng = r.rng();
  const CellLayout layout = cell_layout(g);
  double worst = 0;
  for (int t = 0; t < 5; ++t) {
    GridFunction f = random_grid(g, rng);
    MartingaleSeq seq = martingale_of(f);
    Spectrum s = fast_analyze(f);
    for (std::size_t n = 0; n <= g.depth(); ++n) {
      GridFunction level = partial_sum(s, layout.bases.M[n]);
      worst = std::max(worst, (level.values - seq.levels[n]).cwiseAbs().maxCoeff());
    }
  }
  r.record("martingale", "base_partial_sums_equal_averages", worst <= 1e-12, worst);
}

void run_means_suite(SuiteRunner& r, const GroupSpec& g) {
  Rng rng = r.rng();
  const std::uint64_t M = cell_layout(g).size();
  const std::uint64_t top = std::min<std::uint64_t>(M - 1, 32);

  double abel = 0;
  for (int t = 0; t < 5; ++t) {
    Spectrum s = random_spectrum(g, rng);
    for (std::uint64_t n = 1; n <= top; ++n)
      abel = std::max(abel,
                      (riesz_abel_form(s, n).values - riesz_log(s, n).values)
                          .cwiseAbs()
                          .maxCoeff());
  }
  r.record("means", "abel_form_equals_direct", abel <= 1e-12, abel);

  double ratio = 0;
  for (int t = 0; t < 5; ++t) {
    Spectrum s = random_spectrum(g, rng);
    ratio = std::max(ratio, riesz_fejer_domination(s, top));
  }
  r.record("means", "log_mean_dominated_by_fejer", ratio <= 3.0, ratio);

  Spectrum s = random_spectrum(g, rng);
  double dev = 0;
  WeightSeq rec = WeightSeq::reciprocal(top + 1);
  for (std::uint64_t n = 2; n <= top; ++n)
    dev = std::max(dev, (norlund_general(s, rec, n).values - norlund_log(s, n).values)
                            .cwiseAbs()
                            .maxCoeff());
  r.record("means", "norlund_reciprocal_specializes", dev <= 1e-12, dev);

  double oracle = 0;
  for (std::uint64_t n : {std::uint64_t{3}, std::uint64_t{9}, top}) {
    oracle = std::max(oracle, (riesz_log(s, n).values -
                               mean_direct_oracle(s, MeanKind::riesz_log(), n).values)
                                  .cwiseAbs()
                                  .maxCoeff());
  }
  r.record("means", "reweighting_matches_double_sum", oracle <= 1e-12, oracle);
}

void run_counterexample_suite(SuiteRunner& r) {
  for (auto pr : {Rational(1, 2), Rational(1, 1)}) {
    AlphaSequence a = make_alphas(pr, 2, GroupSpec::walsh(130));
    r.record("counterexample",
             "greedy_alphas_validate_p=" + pr.to_string(),
             validate_alphas(a, GroupSpec::walsh(130)).ok);
  }

  CounterexampleSpec toy(GroupSpec::walsh(7), AlphaSequence({1, 3}, Rational(1, 2)));
  GridFunction f = f_grid(toy, 7);
  Spectrum dense = fast_analyze(f);
  Spectrum ladder = f_spectrum(toy);
  const double scale = ladder.coeffs.cwiseAbs().maxCoeff();
  const double coeff_dev = (dense.coeffs - ladder.coeffs).cwiseAbs().maxCoeff();
  r.record("counterexample", "coefficient_ladder_matches_dense", coeff_dev <= 1e-10 * scale,
           coeff_dev);

  bool atoms_ok = true;
  const auto bases = base_sizes(toy.group());
  for (std::size_t k = 0; k < 2; ++k) {
    GridFunction a = atom_grid(toy, k);
    const double bound = std::pow(double(bases.M[2 * toy.alpha(k)]), 2.0);
    if (std::abs(a.values.mean()) > 1e-12 * bound) atoms_ok = false;
    if (a.values.cwiseAbs().maxCoeff() > bound * (1 + 1e-12)) atoms_ok = false;
  }
  r.record("counterexample", "atom_axioms", atoms_ok);

  bool certified_ok = true;
  for (std::size_t k = 0; k < 2; ++k) {
    const std::uint32_t a = toy.alpha(k);
    for (std::uint32_t s = (2 * a + 2) / 3; s <= a; ++s) {
      if (k > 0 && 2 * s <= 2 * toy.alpha(k - 1) + 1) continue;
      Point x = zero_point(toy.group());
      x.digits[2 * s] = 1;
      for (auto op : {MaximalOperator::riesz, MaximalOperator::norlund}) {
        AnnulusEstimate est = op == MaximalOperator::riesz
                                  ? riesz_at_annulus(toy, k, s, x)
                                  : norlund_at_annulus(toy, k, s, x);
        if (!est.exact_dense || est.certified.to_double() > *est.exact_dense * (1 + 1e-9))
          certified_ok = false;
      }
    }
  }
  r.record("counterexample", "certified_bounds_below_dense", certified_ok);

  bool kernel_ok = true;
  for (std::uint32_t s = 1; s <= 4; ++s) {
    const double M = std::pow(4.0, s);
    const double direct = norlund_kernel_sum(M);
    const double closed = M * harmonic(std::uint64_t(M) - 1) - (M - 1);
    if (std::abs(direct - closed) > 1e-10 * closed) kernel_ok = false;
  }
  r.record("counterexample", "reverse_kernel_identity", kernel_ok);
}

int cmd_verify(const std::string& suite, const GroupSpec& g, std::uint64_t seed,
               const std::string& precision, const OutputTarget& target) {
  const KernelBackend backend =
      precision == "float" ? KernelBackend::floating : KernelBackend::exact;
  bool failed = false;
  target.write([&](std::ostream& out) {
    SuiteRunner r(out, seed);
    if (suite == "kernels" || suite == "all") run_kernel_suite(r, g, backend);
    if (suite == "transforms" || suite == "all") run_transform_suite(r, g);
    if (suite == "martingale" || suite == "all") run_martingale_suite(r, g);
    if (suite == "means" || suite == "all") run_means_suite(r, g);
    if (suite == "counterexample" || suite == "all") run_counterexample_suite(r);
    failed = r.failed();
  });
  return failed ? 1 : 0;
}

// ---------------------------------------------------------------------------

MeanKind parse_kind(const std::string& name, const std::string& weights_arg) {
  if (name == "partial") return MeanKind::partial();
  if (name == "fejer") return MeanKind::fejer();
  if (name == "riesz_log") return MeanKind::riesz_log();
  if (name == "norlund_log") return MeanKind::norlund_log();
  if (name == "norlund_general") {
    if (weights_arg.empty())
      throw CLI::ValidationError("--weights is required for norlund_general");
    std::vector<double> w;
    std::stringstream ss(weights_arg);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(std::stod(item));
    return MeanKind::norlund_general(WeightSeq(w));
  }
  throw CLI::ValidationError("unknown mean kind: " + name);
}

int cmd_counterexample(const Rational& p, const std::string& op_name, std::size_t terms,
                       const std::string& alphas_arg, const OutputTarget& target) {
  const MaximalOperator op =
      op_name == "riesz" ? MaximalOperator::riesz : MaximalOperator::norlund;

  std::vector<std::uint32_t> alphas;
  if (!alphas_arg.empty()) {
    std::stringstream ss(alphas_arg);
    std::string item;
    while (std::getline(ss, item, ',')) alphas.push_back(std::uint32_t(std::stoul(item)));
  } else {
    // search depth grows geometrically until the greedy run fits
    for (std::size_t depth = 64;; depth *= 2) {
      if (depth > 65536) throw std::runtime_error("alpha search exceeded depth 65536");
      try {
        alphas = make_alphas(p, terms, GroupSpec::walsh(depth)).alphas;
        break;
      } catch (const std::out_of_range&) {
      }
    }
  }
  const std::size_t depth = 2 * static_cast<std::size_t>(alphas.back()) + 1;
  CounterexampleSpec cs(GroupSpec::walsh(depth), AlphaSequence(alphas, p));

  target.write([&](std::ostream& out) {
    out << "k,alpha_k,s_min,s_max,cert_log2_min,cert_log2_max,"
           "lower_bound_integral,lower_bound_log2,hp_norm_upper\n";
    for (std::size_t k = 0; k < cs.terms(); ++k) {
      const std::uint32_t a = cs.alpha(k);
      const std::uint32_t s_min = (2 * a + 2) / 3;
      double cmin = std::numeric_limits<double>::infinity(), cmax = -cmin;
      for (std::uint32_t s = s_min; s <= a; ++s) {
        if (k > 0 && 2 * s <= 2 * cs.alpha(k - 1) + 1) continue;
        Point x = zero_point(cs.group());
        x.digits[2 * s] = 1;
        AnnulusEstimate est = op == MaximalOperator::riesz ? riesz_at_annulus(cs, k, s, x)
                                                           : norlund_at_annulus(cs, k, s, x);
        cmin = std::min(cmin, est.certified.log2mag);
        cmax = std::max(cmax, est.certified.log2mag);
      }
      LogMagnitude lb = lower_bound_integral(cs, k, op);
      out << k << ',' << a << ',' << s_min << ',' << a << ',' << format_double(cmin) << ','
          << format_double(cmax) << ',' << format_double(lb.to_double()) << ','
          << format_double(lb.log2mag) << ','
          << format_double(hp_norm_upper(cs, 2 * static_cast<std::size_t>(a) + 1)) << '\n';
    }
  });
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vilenkin-Fourier analysis toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string group_arg = "walsh(8)";
  std::string input_path, output_path, direction = "analyze", backend = "fast";
  std::string kind_name = "fejer", weights_arg, suite = "all", op_name = "riesz";
  std::string alphas_arg, p_arg = "0.5", precision = "exact";
  std::uint64_t n_value = 1, cap_value = 0, seed = 42;
  std::size_t terms = 3;
  bool compare_oracle = false, print_config = false;

  auto* t = app.add_subcommand("transform", "forward/inverse transform of CSV data");
  t->add_option("--group", group_arg, "group spec, e.g. walsh(8) or radices=[2,3],depth=4");
  t->add_option("--input", input_path, "input CSV (cell or index, real, imag)")->required();
  t->add_option("--direction", direction, "analyze | synthesize")
      ->check(CLI::IsMember({"analyze", "synthesize"}));
  t->add_option("--backend", backend, "naive | fast")->check(CLI::IsMember({"naive", "fast"}));
  t->add_option("--output", output_path, "output CSV path (default stdout)");

  auto* m = app.add_subcommand("means", "summability means of a spectrum");
  m->add_option("--group", group_arg, "group spec");
  m->add_option("--input", input_path, "spectrum CSV")->required();
  m->add_option("--kind", kind_name, "partial|fejer|riesz_log|norlund_log|norlund_general");
  m->add_option("--n", n_value, "mean index");
  m->add_option("--cap", cap_value, "emit the maximal mean up to this cap instead");
  m->add_option("--weights", weights_arg, "comma list of q_1,q_2,... for norlund_general");
  m->add_flag("--compare-oracle", compare_oracle,
              "also run the direct-sum path and print the max deviation");
  m->add_option("--output", output_path, "output CSV path (default stdout)");

  auto* v = app.add_subcommand("verify", "run a property suite; nonzero exit on failure");
  v->add_option("--suite", suite, "kernels|transforms|martingale|means|counterexample|all");
  v->add_option("--group", group_arg, "group spec");
  v->add_option("--seed", seed, "seed for the randomized checks");
  v->add_option("--output", output_path, "output CSV path (default stdout)");

  auto* c = app.add_subcommand("counterexample", "divergence lower-bound table");
  c->add_option("--p", p_arg, "exponent p in (0,1], e.g. 0.5 or 1/2");
  c->add_option("--operator", op_name, "riesz | norlund")
      ->check(CLI::IsMember({"riesz", "norlund"}));
  c->add_option("--terms", terms, "number of alpha terms to construct");
  c->add_option("--alphas", alphas_arg, "explicit comma list overriding the greedy search");
  c->add_option("--output", output_path, "output CSV path (default stdout)");

  app.add_flag("--print-config", print_config, "echo the canonical parsed config and exit");
  app.add_option("--precision", precision,
                 "arithmetic mode for identity checks: exact (root-of-unity), float, or "
                 "log-domain (the counterexample pipeline always runs log-domain)")
      ->check(CLI::IsMember({"exact", "float", "log-domain"}));
  app.set_config("--config");

  CLI11_PARSE(app, argc, argv);

  try {
    const OutputTarget target{output_path};
    if (print_config) {
      std::cout << app.config_to_str(false, false);
      return 0;
    }
    if (t->parsed()) {
      GroupSpec g = GroupSpec::parse(group_arg);
      Eigen::VectorXcd data = load_vector(input_path);
      if (direction == "analyze") {
        GridFunction f(g, std::move(data));
        Spectrum s = backend == "fast" ? fast_analyze(f) : analyze(f);
        target.write([&](std::ostream& out) { write_spectrum_csv(out, s); });
      } else {
        Spectrum s(g, std::move(data));
        GridFunction f = backend == "fast" ? fast_synthesize(s) : synthesize(s);
        target.write([&](std::ostream& out) { write_grid_csv(out, f); });
      }
      return 0;
    }
    if (m->parsed()) {
      GroupSpec g = GroupSpec::parse(group_arg);
      Spectrum s(g, load_vector(input_path));
      MeanKind kind = parse_kind(kind_name, weights_arg);
      GridFunction result = cap_value > 0 ? maximal_mean(s, kind, cap_value)
                                          : apply_mean(s, kind, n_value);
      if (compare_oracle && cap_value == 0) {
        GridFunction oracle = mean_direct_oracle(s, kind, n_value);
        std::cout << "max_deviation_from_oracle,"
                  << format_double((result.values - oracle.values).cwiseAbs().maxCoeff())
                  << "\n";
      }
      target.write([&](std::ostream& out) { write_grid_csv(out, result); });
      return 0;
    }
    if (v->parsed())
      return cmd_verify(suite, GroupSpec::parse(group_arg), seed, precision, target);
    if (c->parsed())
      return cmd_counterexample(Rational::parse(p_arg), op_name, terms, alphas_arg, target);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
