#include <doctest.h>

#include <random>
#include <sstream>

#include "vilenkin/csv.hpp"
#include "vilenkin/grid.hpp"
#include "vilenkin/random.hpp"
#include "vilenkin/system.hpp"

using namespace vilenkin;

TEST_CASE("analyze picks out characters and constants") {
  GroupSpec g({2, 3, 2});
  GridFunction f(g, psi_grid(5, g));
  Spectrum s = analyze(f);
  for (Eigen::Index k = 0; k < s.coeffs.size(); ++k)
    CHECK(std::abs(s.coeffs(k) - (k == 5 ? 1.0 : 0.0)) < 1e-13);

  GridFunction c = GridFunction::zeros(g);
  c.values.setConstant(std::complex<double>(2.5, -1.0));
  Spectrum sc = analyze(c);
  CHECK(std::abs(sc.coeffs(0) - std::complex<double>(2.5, -1.0)) < 1e-13);
  for (Eigen::Index k = 1; k < sc.coeffs.size(); ++k) CHECK(std::abs(sc.coeffs(k)) < 1e-13);
}

TEST_CASE("synthesize inverts analyze; Parseval holds") {
  Rng rng(21);
  for (const auto& g : {GroupSpec({2, 3, 4, 2}), GroupSpec::walsh(6), GroupSpec({5, 5})}) {
    for (int t = 0; t < 4; ++t) {
      GridFunction f = random_grid(g, rng);
      Spectrum s = analyze(f);
      GridFunction back = synthesize(s);
      CHECK((back.values - f.values).cwiseAbs().maxCoeff() < 1e-12);
      double lhs = s.coeffs.squaredNorm();
      double rhs = f.values.squaredNorm() / double(f.values.size());
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    // delta spectrum reproduces the character grid
    Spectrum d = Spectrum::zeros(g);
    d.coeffs(3) = 1.0;
    CHECK((synthesize(d).values - psi_grid(3, g)).cwiseAbs().maxCoeff() < 1e-13);
    CHECK(synthesize(Spectrum::zeros(g)).values.cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("fast transform equals the direct one, both directions") {
  Rng rng(22);
  for (const auto& g : {GroupSpec({2, 3, 4, 2}), GroupSpec::walsh(7), GroupSpec({3, 5, 2})}) {
    for (int t = 0; t < 6; ++t) {
      GridFunction f = random_grid(g, rng);
      Spectrum a = analyze(f);
      Spectrum b = fast_analyze(f);
      CHECK((a.coeffs - b.coeffs).cwiseAbs().maxCoeff() < 1e-11);
      GridFunction s1 = synthesize(a);
      GridFunction s2 = fast_synthesize(a);
      CHECK((s1.values - s2.values).cwiseAbs().maxCoeff() < 1e-11);
    }
  }
}

TEST_CASE("fast transform is linear") {
  Rng rng(23);
  GroupSpec g({2, 3, 4, 2});
  GridFunction f = random_grid(g, rng), h = random_grid(g, rng);
  std::complex<double> a(0.7, -0.3), b(-1.2, 0.4);
  GridFunction combo(g, a * f.values + b * h.values);
  Eigen::VectorXcd lhs = fast_analyze(combo).coeffs;
  Eigen::VectorXcd rhs = a * fast_analyze(f).coeffs + b * fast_analyze(h).coeffs;
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("quasi-norm closed forms") {
  GroupSpec g = GroupSpec::walsh(6);
  GridFunction one = GridFunction::zeros(g);
  one.values.setOnes();
  for (double p : {0.4, 1.0, 2.0, 3.5}) CHECK(lp_quasinorm(one, p) == doctest::Approx(1.0));

  // D at a base size: norm M_n^(1 - 1/p)
  const CellLayout layout = cell_layout(g);
  for (std::size_t n : {std::size_t{1}, std::size_t{3}}) {
    GridFunction D = GridFunction::zeros(g);
    for (std::uint64_t c = 0; c < layout.size() / layout.bases.M[n]; ++c)
      D.values(static_cast<Eigen::Index>(c)) = double(layout.bases.M[n]);
    for (double p : {0.5, 1.0, 2.0})
      CHECK(lp_quasinorm(D, p) ==
            doctest::Approx(std::pow(double(layout.bases.M[n]), 1.0 - 1.0 / p)));
  }

  Rng rng(31);
  GridFunction f = random_grid(g, rng);
  GridFunction cf(g, std::complex<double>(-2.0, 1.5) * f.values);
  CHECK(lp_quasinorm(cf, 0.7) ==
        doctest::Approx(std::abs(std::complex<double>(-2.0, 1.5)) * lp_quasinorm(f, 0.7)));
  CHECK_THROWS_AS(lp_quasinorm(f, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(lp_quasinorm(f, -1.0), std::invalid_argument);
}

TEST_CASE("quasi-norm triangle and p-triangle inequalities on random pairs") {
  Rng rng(32);
  GroupSpec g({2, 3, 2, 2});
  for (int t = 0; t < 20; ++t) {
    GridFunction f = random_grid(g, rng), h = random_grid(g, rng);
    GridFunction sum(g, f.values + h.values);
    for (double p : {1.0, 1.5, 2.0})
      CHECK(lp_quasinorm(sum, p) <= lp_quasinorm(f, p) + lp_quasinorm(h, p) + 1e-12);
    for (double p : {0.3, 0.5, 0.8}) {
      double lhs = std::pow(lp_quasinorm(sum, p), p);
      double rhs = std::pow(lp_quasinorm(f, p), p) + std::pow(lp_quasinorm(h, p), p);
      CHECK(lhs <= rhs + 1e-12);
    }
  }
}

TEST_CASE("maximal function: two-case kernel example, domination, homogeneity") {
  GroupSpec g = GroupSpec::walsh(5);
  const CellLayout layout = cell_layout(g);
  // f = D_2: equals 2 on the rank-1 cylinder at zero, 0 elsewhere.
  GridFunction f = GridFunction::zeros(g);
  for (std::uint64_t c = 0; c < layout.size() / 2; ++c)
    f.values(static_cast<Eigen::Index>(c)) = 2.0;
  GridFunction star = dyadic_maximal(f);
  for (std::uint64_t c = 0; c < layout.size(); ++c) {
    const double expect = c < layout.size() / 2 ? 2.0 : 1.0;
    CHECK(star.values(static_cast<Eigen::Index>(c)).real() == doctest::Approx(expect));
  }

  Rng rng(33);
  GridFunction r = random_grid(g, rng);
  GridFunction rstar = dyadic_maximal(r);
  for (Eigen::Index i = 0; i < r.values.size(); ++i)
    CHECK(rstar.values(i).real() >= std::abs(r.values(i)) - 1e-13);
  GridFunction scaled(g, std::complex<double>(0.0, -3.0) * r.values);
  CHECK((dyadic_maximal(scaled).values - 3.0 * rstar.values).cwiseAbs().maxCoeff() < 1e-12);

  GridFunction c0 = GridFunction::zeros(g);
  c0.values.setConstant(1.7);
  CHECK((dyadic_maximal(c0).values - c0.values).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("Hardy quasi-norm dominates the plain one and is 1 on constants") {
  Rng rng(34);
  GroupSpec g({2, 3, 2, 2});
  GridFunction one = GridFunction::zeros(g);
  one.values.setOnes();
  CHECK(hardy_quasinorm(one, 0.5) == doctest::Approx(1.0));
  for (int t = 0; t < 10; ++t) {
    GridFunction f = random_grid(g, rng);
    for (double p : {0.5, 1.0})
      CHECK(hardy_quasinorm(f, p) >= lp_quasinorm(f, p) - 1e-12);
  }
}

TEST_CASE("atoms have uniformly bounded Hardy quasi-norm") {
  Rng rng(35);
  GroupSpec g = GroupSpec::walsh(7);
  for (double p : {0.4, 0.6, 0.75, 1.0}) {
    for (int t = 0; t < 12; ++t) {
      GridFunction a = random_atom(g, p, rng, 5);
      CHECK(hardy_quasinorm(a, p) <= 2.0);
    }
  }
}

TEST_CASE("martingale levels: endpoints, consistency, spectral agreement") {
  Rng rng(36);
  for (const auto& g : {GroupSpec({2, 3, 2, 2}), GroupSpec::walsh(6)}) {
    GridFunction f = random_grid(g, rng);
    MartingaleSeq seq = martingale_of(f);
    REQUIRE(seq.levels.size() == g.depth() + 1);
    CHECK((seq.levels.back() - f.values).cwiseAbs().maxCoeff() == 0.0);
    std::complex<double> mean = f.values.mean();
    CHECK(std::abs(seq.levels[0](0) - mean) < 1e-13);

    // consistency: averaging level n+1 over rank-n cells reproduces level n
    const CellLayout layout = cell_layout(g);
    for (std::size_t n = 0; n < g.depth(); ++n) {
      const std::uint64_t block = layout.size() / layout.bases.M[n];
      for (std::uint64_t b = 0; b < layout.bases.M[n]; ++b) {
        std::complex<double> acc = 0;
        for (std::uint64_t t = 0; t < block; ++t)
          acc += seq.levels[n + 1](static_cast<Eigen::Index>(b * block + t));
        acc /= double(block);
        CHECK(std::abs(acc - seq.levels[n](static_cast<Eigen::Index>(b * block))) < 1e-12);
      }
    }

    // spectral route: truncating the spectrum at M_n gives the same levels
    Spectrum s = fast_analyze(f);
    for (std::size_t n = 0; n <= g.depth(); ++n) {
      Spectrum trunc = s;
      for (Eigen::Index k = static_cast<Eigen::Index>(layout.bases.M[n]); k < trunc.coeffs.size(); ++k)
        trunc.coeffs(k) = 0.0;
      GridFunction level = fast_synthesize(trunc);
      CHECK((level.values - seq.levels[n]).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("csv round trip is bit-faithful") {
  Rng rng(37);
  GroupSpec g({2, 3, 2});
  GridFunction f = random_grid(g, rng);
  std::stringstream ss;
  write_grid_csv(ss, f);
  GridFunction back = read_grid_csv(ss, g);
  CHECK((back.values - f.values).cwiseAbs().maxCoeff() == 0.0);
}
