#include <doctest.h>

#include "vilenkin/means.hpp"
#include "vilenkin/random.hpp"
#include "vilenkin/system.hpp"

using namespace vilenkin;

namespace {

double max_dev(const GridFunction& a, const GridFunction& b) {
  return (a.values - b.values).cwiseAbs().maxCoeff();
}

Spectrum delta0(const GroupSpec& g) {
  Spectrum s = Spectrum::zeros(g);
  s.coeffs(0) = 1.0;
  return s;
}

}  // namespace

TEST_CASE("harmonic numbers: anchors, monotonicity, asymptotic continuity") {
  CHECK(harmonic(0) == 0.0);
  CHECK(harmonic(1) == 1.0);
  CHECK(harmonic(2) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(harmonic(4) == doctest::Approx(25.0 / 12.0).epsilon(1e-15));
  for (std::uint64_t n = 1; n < 2000; ++n) CHECK(harmonic(n) < harmonic(n + 1));
  // table-to-asymptotic seam: recompute the table value by brute force
  double brute = 0;
  for (std::uint64_t k = 100001; k >= 1; --k) brute += 1.0 / double(k);
  CHECK(harmonic(100001) == doctest::Approx(brute).epsilon(1e-13));
  // growth matches ln within the classical band
  CHECK(harmonic(1u << 20) - std::log(double(1u << 20)) ==
        doctest::Approx(0.5772156649).epsilon(1e-6));
  CHECK(harmonic_diff(2000, 1000) == doctest::Approx(harmonic(2000) - harmonic(1000)).epsilon(1e-13));
  // huge close arguments: against the exact telescoped sum
  std::uint64_t base = (std::uint64_t{1} << 40);
  double direct = 0;
  for (std::uint64_t k = 1; k <= 16; ++k) direct += 1.0 / double(base + k);
  CHECK(harmonic_diff(base + 16, base) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("partial sums: characters, endpoints, error cases") {
  GroupSpec g = GroupSpec::walsh(6);
  Rng rng(41);
  Spectrum s = random_spectrum(g, rng);
  CHECK(max_dev(partial_sum(s, 0), GridFunction::zeros(g)) == 0.0);
  CHECK(max_dev(partial_sum(s, 64), fast_synthesize(s)) < 1e-12);
  CHECK_THROWS_AS(partial_sum(s, 65), std::out_of_range);

  // S_n psi_k = psi_k if k < n else 0
  Spectrum dk = Spectrum::zeros(g);
  dk.coeffs(5) = 1.0;
  CHECK(max_dev(partial_sum(dk, 6), GridFunction(g, psi_grid(5, g))) < 1e-13);
  CHECK(partial_sum(dk, 5).values.cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("Fejer mean: closed forms and the double-sum oracle") {
  GroupSpec g = GroupSpec::walsh(6);
  Spectrum d0 = delta0(g);
  for (std::uint64_t n : {1ull, 2ull, 7ull, 33ull}) {
    GridFunction m = fejer(d0, n);
    const double expect = double(n - 1) / double(n);
    CHECK((m.values.array() - expect).abs().maxCoeff() < 1e-13);
  }
  Rng rng(42);
  Spectrum s = random_spectrum(g, rng);
  CHECK(fejer(s, 1).values.cwiseAbs().maxCoeff() < 1e-13);  // sigma_1 = S_0 = 0
  for (std::uint64_t n : {2ull, 9ull, 31ull})
    CHECK(max_dev(fejer(s, n), mean_direct_oracle(s, MeanKind::fejer(), n)) < 1e-12);
  CHECK_THROWS_AS(fejer(s, 0), std::invalid_argument);
}

TEST_CASE("logarithmic mean: closed forms and the oracle") {
  GroupSpec g = GroupSpec::walsh(6);
  Spectrum d0 = delta0(g);
  for (std::uint64_t n : {1ull, 5ull, 20ull})
    CHECK((riesz_log(d0, n).values.array() - 1.0).abs().maxCoeff() < 1e-13);
  Rng rng(43);
  Spectrum s = random_spectrum(g, rng);
  CHECK(max_dev(riesz_log(s, 1), partial_sum(s, 1)) < 1e-13);
  CHECK(max_dev(riesz_log(s, 7), mean_direct_oracle(s, MeanKind::riesz_log(), 7)) < 1e-12);
  CHECK_THROWS_AS(riesz_log(s, 0), std::invalid_argument);
}

TEST_CASE("reverse logarithmic mean: closed forms and the oracle") {
  GroupSpec g = GroupSpec::walsh(6);
  Spectrum d0 = delta0(g);
  for (std::uint64_t n : {2ull, 6ull, 24ull}) {
    const double expect = harmonic(n - 1) / harmonic(n);
    CHECK((norlund_log(d0, n).values.array() - expect).abs().maxCoeff() < 1e-13);
  }
  Rng rng(44);
  Spectrum s = random_spectrum(g, rng);
  GridFunction L2 = norlund_log(s, 2);
  GridFunction S1(g, partial_sum(s, 1).values / harmonic(2));
  CHECK(max_dev(L2, S1) < 1e-13);
  CHECK(max_dev(norlund_log(s, 9), mean_direct_oracle(s, MeanKind::norlund_log(), 9)) < 1e-12);
  CHECK_THROWS_AS(norlund_log(s, 1), std::invalid_argument);
}

TEST_CASE("general Norlund means specialize correctly") {
  GroupSpec g = GroupSpec::walsh(6);
  Rng rng(45);
  Spectrum s = random_spectrum(g, rng);

  // constant weights reproduce the Fejer mean (the k = n term carries q_0 = 0)
  WeightSeq ones = WeightSeq::constant(40);
  for (std::uint64_t n : {3ull, 12ull})
    CHECK(max_dev(norlund_general(s, ones, n), fejer(s, n)) < 1e-12);

  // reciprocal weights reproduce the reverse logarithmic mean
  WeightSeq rec = WeightSeq::reciprocal(40);
  for (std::uint64_t n : {2ull, 17ull})
    CHECK(max_dev(norlund_general(s, rec, n), norlund_log(s, n)) < 1e-12);

  // a single late weight picks out S_1
  std::vector<double> single(30, 0.0);
  single[10] = 2.0;  // q_11 = 2
  WeightSeq w(single);
  GridFunction m = norlund_general(s, w, 12);
  CHECK(max_dev(m, partial_sum(s, 1)) < 1e-12);
  CHECK(max_dev(m, mean_direct_oracle(s, MeanKind::norlund_general(w), 12)) < 1e-12);
  CHECK_THROWS_AS(norlund_general(s, w, 5), std::invalid_argument);  // Q_5 = 0
}

TEST_CASE("maximal means: fixed points, cap monotonicity, brute force") {
  GroupSpec g = GroupSpec::walsh(6);
  Spectrum d0 = delta0(g);
  GridFunction sup = maximal_mean(d0, MeanKind::riesz_log(), 50);
  CHECK((sup.values.array() - 1.0).abs().maxCoeff() < 1e-13);

  Rng rng(46);
  Spectrum s = random_spectrum(g, rng);
  GridFunction small = maximal_mean(s, MeanKind::fejer(), 10);
  GridFunction large = maximal_mean(s, MeanKind::fejer(), 40);
  for (Eigen::Index i = 0; i < small.values.size(); ++i)
    CHECK(small.values(i).real() <= large.values(i).real() + 1e-13);

  GridFunction atom = random_atom(g, 0.75, rng, 4);
  Spectrum as = fast_analyze(atom);
  GridFunction sup_f = maximal_mean(as, MeanKind::fejer(), 20);
  Eigen::VectorXd brute = Eigen::VectorXd::Zero(sup_f.values.size());
  for (std::uint64_t n = 1; n <= 20; ++n)
    brute = brute.cwiseMax(mean_direct_oracle(as, MeanKind::fejer(), n).values.cwiseAbs());
  CHECK((sup_f.values.real() - brute).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Abel rearrangement reproduces the logarithmic mean") {
  GroupSpec g = GroupSpec::walsh(6);
  Rng rng(47);
  Spectrum d0 = delta0(g);
  CHECK(max_dev(riesz_abel_form(d0, 5), riesz_log(d0, 5)) < 1e-13);
  for (int t = 0; t < 5; ++t) {
    Spectrum s = random_spectrum(g, rng);
    // n = 1 reduces to 2 sigma_2 = S_1
    CHECK(max_dev(riesz_abel_form(s, 1), partial_sum(s, 1)) < 1e-13);
    for (std::uint64_t n : {2ull, 5ull, 17ull})
      CHECK(max_dev(riesz_abel_form(s, n), riesz_log(s, n)) < 1e-12);
  }
}

TEST_CASE("maximal logarithmic mean is dominated by three Fejer maximals") {
  GroupSpec g = GroupSpec::walsh(6);
  Rng rng(48);
  for (int t = 0; t < 20; ++t) {
    Spectrum s = random_spectrum(g, rng);
    CHECK(riesz_fejer_domination(s, 50) <= 3.0 + 1e-9);
  }
  CHECK(riesz_fejer_domination(delta0(g), 50) <= 3.0);
  CHECK(riesz_fejer_domination(Spectrum::zeros(g), 50) == 0.0);
}

TEST_CASE("mean weights sum as the definitions force") {
  GroupSpec g = GroupSpec::walsh(6);
  for (std::uint64_t n : {2ull, 9ull, 30ull}) {
    // Fejer weights over S_k sum to 1 for k >= 1; spectral weight at v = 0
    // is (n-1)/n and the logarithmic one is 1.
    Eigen::VectorXd wf = mean_weights(MeanKind::fejer(), n, 64);
    CHECK(wf(0) == doctest::Approx((double(n) - 1.0) / double(n)));
    Eigen::VectorXd wr = mean_weights(MeanKind::riesz_log(), n, 64);
    CHECK(wr(0) == doctest::Approx(1.0));
    Eigen::VectorXd wl = mean_weights(MeanKind::norlund_log(), n, 64);
    CHECK(wl(0) == doctest::Approx(harmonic(n - 1) / harmonic(n)));
  }
}
