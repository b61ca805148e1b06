#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "oracles.hpp"
#include "qseries/error.hpp"
#include "qseries/qproducts.hpp"

using namespace qseries;
using oracle::series;

namespace {

PochhammerFactor P(std::size_t a, std::size_t b, long e, int sign = 1)
{
    return PochhammerFactor{sign, a, b, e};
}

Series product(std::initializer_list<PochhammerFactor> fs, std::size_t order, Integer c = 1, std::size_t t = 0)
{
    return expand_product(ProductExpr{std::move(c), t, fs}, order);
}

} // namespace

TEST(Pochhammer, EulerProductIsPentagonalSum)
{
    const Series e = expand_pochhammer(P(1, 1, 1), 12);
    EXPECT_EQ(oracle::coeffs_of(e), oracle::pentagonal_series(12));
    EXPECT_EQ(e, series({1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1}));
    EXPECT_EQ(oracle::coeffs_of(expand_pochhammer(P(1, 1, 1), 400)), oracle::pentagonal_series(400));
}

TEST(Pochhammer, NegatedArgumentCountsDistinctOddParts)
{
    const Series s = expand_pochhammer(P(1, 2, 1, -1), 8);
    EXPECT_EQ(oracle::coeffs_of(s), oracle::distinct_odd_parts(8));
    EXPECT_EQ(s, series({1, 1, 0, 1, 1, 1, 1, 1, 2}));
    EXPECT_EQ(oracle::coeffs_of(expand_pochhammer(P(1, 2, 1, -1), 60)), oracle::distinct_odd_parts(60));
}

TEST(Pochhammer, NegativeExponentGivesPartitions)
{
    EXPECT_EQ(expand_pochhammer(P(1, 1, -1), 6), series({1, 1, 2, 3, 5, 7, 11}));
    EXPECT_EQ(oracle::coeffs_of(expand_pochhammer(P(1, 1, -1), 200)), oracle::partitions_dp(200));
}

TEST(Pochhammer, Validation)
{
    EXPECT_THROW(expand_pochhammer(P(0, 1, 1), 5), ContractViolation);
    EXPECT_THROW(expand_pochhammer(P(1, 0, 1), 5), ContractViolation);
    EXPECT_THROW(expand_pochhammer(P(1, 1, 0), 5), ContractViolation);
    EXPECT_THROW(expand_pochhammer(P(1, 1, 1, 2), 5), ContractViolation);
    // an offset beyond the order leaves only the constant term
    EXPECT_EQ(expand_pochhammer(P(9, 3, -2), 5), Series::one(5));
}

TEST(ProductExpr, OddTimesEvenIsFullProduct)
{
    EXPECT_EQ(product({P(1, 2, 1), P(2, 2, 1)}, 6), expand_pochhammer(P(1, 1, 1), 6));
    EXPECT_EQ(product({P(1, 2, 1), P(2, 2, 1)}, 300), expand_pochhammer(P(1, 1, 1), 300));
}

TEST(ProductExpr, PureMonomial)
{
    EXPECT_EQ(product({}, 3, 48, 1), series({0, 48, 0, 0}));
    EXPECT_EQ(product({}, 3, 48, 4), Series(3));
}

TEST(ProductExpr, FirstEvenPartTermVanishesModFiveOnFivePlusThree)
{
    const Series s = product({P(2, 2, 29), P(1, 1, -20), P(4, 4, -10)}, 20);
    for (std::size_t n = 3; n <= 20; n += 5) {
        EXPECT_TRUE(mpz_divisible_ui_p(s[n].get_mpz_t(), 5)) << "exponent " << n << ": " << s[n];
    }
}

TEST(Theta, PhiAndPsi)
{
    EXPECT_EQ(theta_phi(1, 9), series({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
    EXPECT_EQ(theta_psi(1, 10), series({1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1}));
    EXPECT_EQ(theta_phi(2, 8), series({1, 0, 2, 0, 0, 0, 0, 0, 2}));
    EXPECT_EQ(theta_phi(2, 300), substitute_power(theta_phi(1, 300), 2));
    EXPECT_EQ(theta_psi(4, 300), substitute_power(theta_psi(1, 300), 4));
    EXPECT_THROW(theta_phi(0, 3), ContractViolation);
    EXPECT_THROW(theta_psi(0, 3), ContractViolation);
}

TEST(Theta, ProductForms)
{
    const std::size_t n = 500;
    EXPECT_EQ(theta_phi(1, n), product({P(2, 2, 5), P(1, 1, -2), P(4, 4, -2)}, n));
    EXPECT_EQ(theta_psi(1, n), product({P(2, 2, 2), P(1, 1, -1)}, n));
}

TEST(Theta, QuarticSumAndDifference)
{
    const std::size_t n = 500;
    const Series plus4 = expand_pochhammer(P(1, 2, 4, -1), n);
    const Series minus4 = expand_pochhammer(P(1, 2, 4), n);
    const Series inv = expand_pochhammer(P(2, 2, -2), n);
    EXPECT_EQ(plus4 + minus4, scale(mul(pow(theta_phi(2, n), 2), inv), 2));
    EXPECT_EQ(plus4 - minus4, scale(shift(mul(pow(theta_psi(4, n), 2), inv), 1), 8));
}

TEST(DoubleSum, SmallCoefficients)
{
    EXPECT_EQ(weighted_double_sum({2, 2}, 4), series({1, 0, -4, 0, 2}));
    EXPECT_EQ(weighted_double_sum({2, 2}, 4), expand_pochhammer(P(2, 2, 4), 4));
    EXPECT_EQ(weighted_double_sum({1, 4}, 0), Series::one(0));
    EXPECT_EQ(weighted_double_sum({1, 4}, 10), product({P(1, 1, 3), P(4, 4, 1)}, 10));
}

TEST(DoubleSum, ProductEquivalences)
{
    EXPECT_EQ(weighted_double_sum({2, 2}, 500), expand_pochhammer(P(2, 2, 4), 500));
    EXPECT_EQ(weighted_double_sum({1, 4}, 500), product({P(1, 1, 3), P(4, 4, 1)}, 500));
    // alpha = beta = 1 is Euler times Jacobi
    EXPECT_EQ(weighted_double_sum({1, 1}, 300), expand_pochhammer(P(1, 1, 4), 300));
}

TEST(DoubleSum, TermsCoverEveryPairOnce)
{
    const auto terms = double_sum_terms({1, 4}, 200);
    std::set<std::pair<long, long>> seen;
    for (const auto& t : terms) {
        EXPECT_TRUE(seen.emplace(t.k, t.m).second);
        EXPECT_LE(t.exponent, 200u);
    }
    // brute force over a generous box
    std::size_t expected = 0;
    for (long k = 0; k < 40; ++k) {
        for (long m = -20; m <= 20; ++m) {
            if (k * (k + 1) / 2 + 4 * (m * (3 * m - 1) / 2) <= 200) {
                ++expected;
            }
        }
    }
    EXPECT_EQ(terms.size(), expected);
    EXPECT_THROW(double_sum_terms({0, 1}, 5), ContractViolation);
}

TEST(FifthPower, CollapsesModFive)
{
    EXPECT_EQ(reduce_mod(expand_pochhammer(P(1, 1, 5), 500), 5), reduce_mod(expand_pochhammer(P(5, 5, 1), 500), 5));
}

TEST(ExpansionCache, SharedAcrossThreads)
{
    ExpansionCache cache;
    std::vector<std::thread> workers;
    std::vector<Series> results(8, Series(0));
    for (std::size_t i = 0; i < results.size(); ++i) {
        workers.emplace_back([&, i] { results[i] = expand_pochhammer(P(1, 1, -3), 200, &cache); });
    }
    for (auto& w : workers) {
        w.join();
    }
    for (const auto& r : results) {
        EXPECT_EQ(r, expand_pochhammer(P(1, 1, -3), 200));
    }
    EXPECT_EQ(cache.size(), 1u);
}
