#include <doctest.h>

#include <random>

#include "vilenkin/bigint.hpp"
#include "vilenkin/cyclotomic.hpp"

using namespace vilenkin;

TEST_CASE("BigUInt arithmetic agrees with 128-bit reference") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << 62) - 1);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t a = dist(rng), b = dist(rng);
    CHECK((BigUInt(a) + BigUInt(b)).to_string() ==
          std::to_string(static_cast<unsigned long long>(a + b)));
    unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    std::string expect;
    if (prod == 0) expect = "0";
    for (unsigned __int128 t = prod; t; t /= 10)
      expect.insert(expect.begin(), static_cast<char>('0' + int(t % 10)));
    CHECK((BigUInt(a) * BigUInt(b)).to_string() == expect);
    CHECK(BigUInt(a).compare(BigUInt(b)) == (a < b ? -1 : (a == b ? 0 : 1)));
  }
}

TEST_CASE("BigUInt subtraction, division, pow") {
  BigUInt a(1000000007);
  BigUInt b = a.pow(5);
  CHECK(b.to_string() == "1000000035000000490000003430000012005000016807");
  BigUInt c = b;
  CHECK(c.div_small(1000000007u) == 0);
  CHECK(c == a.pow(4));
  BigUInt d = BigUInt(1) + BigUInt(2);
  d -= BigUInt(3);
  CHECK(d.is_zero());
  CHECK_THROWS_AS(BigUInt(1) - BigUInt(2), std::underflow_error);
  CHECK(BigUInt::from_pow2(100).log2() == doctest::Approx(100.0));
  CHECK(BigUInt::from_pow2(62).to_u64() == (std::uint64_t{1} << 62));
  CHECK_THROWS_AS(BigUInt::from_pow2(70).to_u64(), std::overflow_error);
}

TEST_CASE("lcm_range matches the direct lcm") {
  auto gcd = [](std::uint64_t x, std::uint64_t y) {
    while (y) { std::uint64_t t = x % y; x = y; y = t; }
    return x;
  };
  std::uint64_t l = 1;
  for (std::uint32_t n = 2; n <= 40; ++n) {
    l = l / gcd(l, n) * n;
    CHECK(BigUInt::lcm_range(n).to_string() == std::to_string(static_cast<unsigned long long>(l)));
  }
}

TEST_CASE("Rational arithmetic is exact and normalized") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK((Rational(1, 2) - Rational(1, 2)).num == 0);
  CHECK(Rational::parse("0.75") == Rational(3, 4));
  CHECK(Rational::parse("3/10") == Rational(3, 10));
  CHECK(Rational::parse("1") == Rational(1, 1));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("roots of unity multiply by angle addition") {
  RootOfUnity a(1, 3), b(1, 6);
  CHECK((a * b) == RootOfUnity(1, 2));
  CHECK(a.conj() == RootOfUnity(2, 3));
  CHECK(a.pow(3).is_one());
  CHECK(std::abs(RootOfUnity(1, 4).to_complex() - std::complex<double>(0, 1)) < 1e-15);
}

TEST_CASE("cyclotomic zero detection knows vanishing root sums") {
  // 1 + w + w^2 = 0 for the cube root w.
  Cyclotomic z(12);
  z.add_root(0);
  z.add_root(4);
  z.add_root(8);
  CHECK(z.is_zero());
  Cyclotomic nz(12);
  nz.add_root(0);
  nz.add_root(4);
  CHECK(!nz.is_zero());
  // Full sum of all 12th roots vanishes.
  Cyclotomic full(12);
  for (std::uint32_t t = 0; t < 12; ++t) full.add_root(t);
  CHECK(full.is_zero());
  // Phi_12 = x^4 - x^2 + 1.
  auto phi = Cyclotomic::cyclotomic_polynomial(12);
  CHECK(phi == std::vector<std::int64_t>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic equality is equality of complex values") {
  // zeta_6 = -zeta_3^2: different multisets of roots, same complex number.
  Cyclotomic lhs(6);
  lhs.add_root(1);
  Cyclotomic m1(6), z32(6);
  m1.add_root(3);   // -1
  z32.add_root(4);  // zeta_3^2 at order 6
  Cyclotomic prod = m1 * z32;
  CHECK(lhs.equals(prod));
  CHECK(std::abs(lhs.to_complex() - prod.to_complex()) < 1e-15);
}
