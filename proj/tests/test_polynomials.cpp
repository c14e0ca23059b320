#include <gtest/gtest.h>

#include <random>

#include "qstirling/core.hpp"
#include "qstirling/errors.hpp"
#include "qstirling/eulerian.hpp"
#include "qstirling/polynomial.hpp"
#include "support.hpp"

namespace qstirling {
namespace {

Polynomial X() { return Polynomial::variable(vars_xy(), 0); }
Polynomial Y() { return Polynomial::variable(vars_xy(), 1); }

TEST(Polynomial, Arithmetic) {
  const Polynomial sq = (X() + Y()).pow(2);
  EXPECT_EQ(sq.coefficient({2, 0}), BigInt(1));
  EXPECT_EQ(sq.coefficient({1, 1}), BigInt(2));
  EXPECT_EQ(sq.coefficient({0, 2}), BigInt(1));
  EXPECT_EQ(sq.size(), 3u);
  EXPECT_TRUE((sq - sq).is_zero());
  EXPECT_EQ(sq.homogeneous_degree(), std::optional<int>(2));
  EXPECT_EQ((sq + Polynomial::constant(vars_xy(), 1)).homogeneous_degree(), std::nullopt);
  EXPECT_EQ(sq.evaluate({BigInt(2), BigInt(3)}), BigInt(25));
  EXPECT_EQ(sq.specialize(1, BigInt(1)).univariate(), (std::vector<BigInt>{1, 2, 1}));
  EXPECT_EQ(sq.slice(0, 1).coefficient({1}), BigInt(2));
  EXPECT_THROW(X() + Polynomial::variable(vars_t(), 0), InvalidInput);
  Polynomial p(vars_xy());
  EXPECT_THROW(p.add_term({1}, BigInt(1)), InvalidInput);
  EXPECT_THROW(p.add_term({-1, 0}, BigInt(1)), InvalidInput);
}

TEST(Polynomial, BigCoefficientsStayExact) {
  const Polynomial p = (X() + Y()).pow(60);
  EXPECT_EQ(p.coefficient({30, 30}), BigInt("118264581564861424"));
  EXPECT_EQ(p.evaluate({BigInt(1), BigInt(1)}), BigInt(1) << 60);
}

// Multiplication is commutative and distributes over addition.
TEST(Polynomial, RandomRingLaws) {
  std::mt19937 rng(5);
  auto random_poly = [&] {
    Polynomial p(vars_xyz());
    for (int i = 0; i < 5; ++i) {
      p.add_term({std::uniform_int_distribution<int>(0, 3)(rng), std::uniform_int_distribution<int>(0, 3)(rng),
                  std::uniform_int_distribution<int>(0, 3)(rng)},
                 BigInt(std::uniform_int_distribution<int>(-9, 9)(rng)));
    }
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly();
    const auto b = random_poly();
    const auto c = random_poly();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    const std::vector<BigInt> pt{BigInt(2), BigInt(-3), BigInt(5)};
    EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
  }
}

TEST(Series, ExpAndInverse) {
  using RS = TruncatedSeries<BigRational>;
  RS u(6, BigRational(0));
  u[1] = 1;
  const RS e = u.exp();
  BigInt f = 1;
  for (int j = 0; j <= 6; ++j) {
    if (j > 0) f *= j;
    EXPECT_EQ(e[static_cast<std::size_t>(j)], BigRational(BigInt(1), f));
  }
  RS one_minus_u(6, BigRational(0));
  one_minus_u[0] = 1;
  one_minus_u[1] = -1;
  const RS geo = one_minus_u.inverse();
  for (int j = 0; j <= 6; ++j) EXPECT_EQ(geo[static_cast<std::size_t>(j)], BigRational(1));
  EXPECT_EQ(geo * one_minus_u, RS::from_coefficients(6, BigRational(0), {BigRational(1)}));
  EXPECT_THROW(u + RS(5, BigRational(0)), InvalidInput);
  EXPECT_THROW(u.inverse(), InvalidInput);
  EXPECT_THROW(one_minus_u.exp(), InvalidInput);
}

TEST(Eulerian, EnumerationAgreesWithRecurrence) {
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(eulerian_t(n, Route::enumeration), eulerian_t(n, Route::recurrence)) << n;
    EXPECT_EQ(eulerian_xy(n, Route::enumeration), eulerian_xy(n, Route::recurrence)) << n;
    EXPECT_EQ(eulerian_egf_coefficient(n), eulerian_t(n)) << n;
    BigInt sum = 0;
    for (int k = 0; k <= n + 1; ++k) sum += eulerian_number(n, k);
    EXPECT_EQ(sum, factorial(n));
  }
  // A_3(t) = t + 4t^2 + t^3 with the final descent counted.
  EXPECT_EQ(eulerian_t(3).univariate(), (std::vector<BigInt>{0, 1, 4, 1}));
}

TEST(Eulerian, CyclicPolynomialByBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    Polynomial brute(vars_xy());
    for (const auto& w : testing::all_arrangements(MultisetSpec(std::vector<int>(static_cast<std::size_t>(n), 1)))) {
      int d = 0;
      for (int i = 0; i < n; ++i) d += w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>((i + 1) % n)] ? 1 : 0;
      brute.add_term({d, n == 1 ? 0 : n - d}, BigInt(1));
    }
    EXPECT_EQ(cyclic_eulerian_xy(n), brute) << n;
  }
}

TEST(Numbers, ClassicalValues) {
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
  EXPECT_EQ(binomial(10, 3), BigInt(120));
  EXPECT_EQ(binomial(3, 5), BigInt(0));
  EXPECT_EQ(stirling2(5, 2), BigInt(15));
  EXPECT_EQ(stirling2(7, 3), BigInt(301));
  EXPECT_EQ(stirling2(0, 0), BigInt(1));
  EXPECT_EQ(eulerian_number(4, 2), BigInt(11));
}

// sum_m m^n t^m computed directly against A_n(t)/(1-t)^{n+1}.
TEST(Series, OverOneMinusT) {
  for (int n = 1; n <= 6; ++n) {
    const auto s = series_over_one_minus_t(eulerian_t(n), n + 1, 12);
    ASSERT_EQ(s.size(), 13u);
    for (int m = 0; m <= 12; ++m) EXPECT_EQ(s[static_cast<std::size_t>(m)], boost::multiprecision::pow(BigInt(m), n));
  }
}

TEST(QStirling, SmallMultiset) {
  // Words of {1^2,2^2}: 1122, 1221, 2112, 2211.
  const Polynomial q = qstirling_poly(MultisetSpec({2, 2}));
  Polynomial expected(vars_xyz());
  expected.add_term({1, 2, 2}, BigInt(1));
  expected.add_term({2, 1, 2}, BigInt(1));
  expected.add_term({2, 2, 1}, BigInt(2));
  EXPECT_EQ(q, expected);
  EXPECT_EQ(qstirling_t(MultisetSpec({2, 2})).univariate(), (std::vector<BigInt>{0, 1, 3}));
}

TEST(QStirling, PolynomialMatchesBruteForceTally) {
  for (const auto& m : multisets_up_to(6)) {
    Polynomial brute(vars_xyz());
    for (const auto& w : testing::naive_quasi_stirling_words(m)) {
      const auto s = testing::naive_stats(w);
      brute.add_term({s[0], s[1], s[2]}, BigInt(1));
    }
    EXPECT_EQ(qstirling_poly(m), brute) << m;
    EXPECT_EQ(qstirling_poly(m, {kDefaultMaxTotal, 2}), brute) << m;
    EXPECT_EQ(rhs_multiset_eulerian(m), rhs_multiset_eulerian_series(m)) << m;
  }
}

TEST(Gamma, ExtractionOfEulerianPolynomials) {
  for (int n = 1; n <= 7; ++n) {
    const auto a = eulerian_xy(n);
    const auto g = gamma_extract(a, n + 1);
    EXPECT_TRUE(g.exact);
    EXPECT_TRUE(g.nonnegative);
    EXPECT_EQ(gamma_expand(g.gamma, n + 1), a);
  }
  // (x+y)^2 - 3xy has gamma (1, -3).
  const auto g = gamma_extract((X() + Y()).pow(2) - X() * Y() * BigInt(3), 2);
  EXPECT_TRUE(g.exact);
  EXPECT_FALSE(g.nonnegative);
  EXPECT_EQ(g.gamma, (std::vector<BigInt>{1, -3}));
  // x^2 is not symmetric, so no expansion reproduces it.
  EXPECT_FALSE(gamma_extract(X().pow(2), 2).exact);
  EXPECT_THROW(gamma_extract(X() + Y().pow(2), 2), InvalidInput);
}

TEST(Gamma, PartialGammaSmallMultisets) {
  for (const auto& m : multisets_up_to(5)) {
    const auto r = partial_gamma(m);
    EXPECT_TRUE(r.extraction_ok) << m << " " << r.failure;
    EXPECT_TRUE(r.nonnegative) << m;
    EXPECT_TRUE(r.agree) << m << " " << r.failure;
    EXPECT_EQ(r.slices, r.words);
    EXPECT_EQ(r.words, r.partitions);
  }
}

}  // namespace
}  // namespace qstirling
