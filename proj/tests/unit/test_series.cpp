#include <qpart/partition.hpp>
#include <qpart/series.hpp>

#include <gtest/gtest.h>

using namespace qpart;

namespace
{

QSeries poly(std::initializer_list<long> coeffs, Exponent start = 0)
{
    QSeries out;
    Exponent e = start;
    for (long c : coeffs) {
        out += QSeries::monomial(Integer(c), e++);
    }
    return out;
}

bool all_parts_distinct_and_odd(const Partition &p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.part(i) % 2 == 0 || (i > 0 && p.part(i) == p.part(i - 1))) {
            return false;
        }
    }
    return true;
}

QSeries geometric(Exponent order)
{
    QSeries out = QSeries::zero(order);
    for (Exponent e = 0; e <= order; ++e) {
        out += QSeries::monomial(Integer(1), e);
    }
    return out;
}

} // namespace

TEST(Series, AddKeepsSmallerOrderAndCancels)
{
    const QSeries x = poly({1, 1}).with_order(5);
    const QSeries s = x + poly({-1});
    EXPECT_EQ(s.terms().size(), 1U);
    EXPECT_EQ(s.coefficient(1), 1);
    EXPECT_EQ(s.order(), std::optional<Exponent>(5));
}

TEST(Series, AddZeroAndLaurentSupport)
{
    const QSeries x = poly({3, 0, -2});
    EXPECT_EQ(x + QSeries(), x);
    const QSeries y = QSeries::monomial(Integer(1), -2);
    const QSeries s = y + y;
    EXPECT_TRUE(s.is_exact());
    EXPECT_EQ(s, QSeries::monomial(Integer(2), -2));
}

TEST(Series, MultiplyGeometricByOneMinusQ)
{
    const QSeries prod = QSeries::one_minus({1, 1}) * geometric(10);
    EXPECT_EQ(prod.order(), std::optional<Exponent>(10));
    EXPECT_EQ(prod, QSeries::one().with_order(10));
    const QSeries x = poly({1, -2, 5});
    EXPECT_EQ(x * QSeries::one(), x);
}

TEST(Series, PochhammerFactorisation)
{
    // (1-q)(1-q^2) = (1-q)^2 (1+q)
    const QSeries lhs = pochhammer({1, 1}, 1, 2);
    EXPECT_EQ(lhs, poly({1, -1, -1, 1}));
    EXPECT_EQ(lhs, QSeries::one_minus({1, 1}) * QSeries::one_minus({1, 1}) * poly({1, 1}));
}

TEST(Series, PochhammerEmptyProduct)
{
    EXPECT_EQ(pochhammer({-1, 7}, 3, 0), QSeries::one());
    EXPECT_EQ(pochhammer({1, -4}, 1, 0), QSeries::one());
}

TEST(Series, PochhammerCountsDistinctOddParts)
{
    const QSeries prod = pochhammer({-1, 1}, 2, std::nullopt, 12);
    const long expected[] = {1, 1, 0, 1, 1, 1, 1, 1, 2};
    for (long n = 0; n <= 8; ++n) {
        EXPECT_EQ(prod.coefficient(n), expected[n]) << "n=" << n;
    }
    EnumerationOptions opts;
    opts.filter = all_parts_distinct_and_odd;
    for (long n = 0; n <= 12; ++n) {
        EXPECT_EQ(prod.coefficient(n), static_cast<long>(enumerate_partitions(n, opts).size())) << "n=" << n;
    }
}

TEST(Series, PochhammerNonpositiveFactorsExpandExactly)
{
    // (q^-2;q)_3 = (1-q^-2)(1-q^-1)(1-1) = 0
    EXPECT_TRUE(pochhammer({1, -2}, 1, 3).is_zero());
    // (q^-1;q)_1 = 1 - q^-1
    EXPECT_EQ(pochhammer({1, -1}, 1, 1), poly({-1, 1}, -1));
}

TEST(Series, InfinitePochhammerNeedsPositiveStep)
{
    EXPECT_ANY_THROW(pochhammer({1, 1}, 0, std::nullopt, 10));
}

TEST(Series, InvertEulerProductGivesPartitionNumbers)
{
    const QSeries p = invert(q_factorial(10), 10);
    const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long n = 0; n <= 10; ++n) {
        EXPECT_EQ(p.coefficient(n), expected[n]);
    }
}

TEST(Series, InvertTrivialCases)
{
    EXPECT_EQ(invert(QSeries::one(), 8), QSeries::one().with_order(8));
    EXPECT_EQ(invert(QSeries::one_minus({1, 1}), 9), geometric(9));
    EXPECT_ANY_THROW(invert(poly({2, 1}), 5));
}

TEST(Series, InvertIsTwoSidedInverse)
{
    const QSeries xs[] = {pochhammer({1, 1}, 1, std::nullopt, 30), pochhammer({-1, 1}, 2, std::nullopt, 30),
                          poly({1, 3, -7, 0, 2}), poly({-1, 4}).shifted(-3)};
    for (const QSeries &x : xs) {
        const QSeries y = invert(x, 30);
        const QSeries d = x * y - QSeries::one();
        const Exponent top = *d.order();
        for (const auto &[e, c] : d.terms()) {
            EXPECT_GT(e, top) << "x*invert(x) - 1 nonzero at q^" << e;
        }
        EXPECT_GE(top, 20);
    }
}

TEST(Series, InvertMatchesPartitionCensusToForty)
{
    const QSeries p = invert(pochhammer({1, 1}, 1, std::nullopt, 40), 40);
    for (long n = 0; n <= 40; ++n) {
        long count = 0;
        for_each_partition(n, {}, [&](const Partition &) { ++count; });
        EXPECT_EQ(p.coefficient(n), count) << "n=" << n;
    }
}

TEST(Series, DivideExact)
{
    EXPECT_EQ(divide_exact(pochhammer({1, 1}, 1, 4), pochhammer({1, 1}, 1, 2)), pochhammer({1, 3}, 1, 2));
    EXPECT_ANY_THROW(divide_exact(poly({1, 1}), poly({1, -1})));
}

TEST(Series, QBinomSmallBox)
{
    EXPECT_EQ(qbinom(2, 2), poly({1, 1, 2, 1, 1}));
    long count = 0;
    for (long w = 0; w <= 4; ++w) {
        const auto n = enumerate_partitions(w, {2, 2, {}}).size();
        EXPECT_EQ(qbinom(2, 2).coefficient(w), static_cast<long>(n));
        count += static_cast<long>(n);
    }
    EXPECT_EQ(count, 6);
}

TEST(Series, QBinomNegativeArgumentsVanish)
{
    EXPECT_TRUE(qbinom(-1, 3).is_zero());
    EXPECT_TRUE(qbinom(3, -1).is_zero());
    EXPECT_TRUE(gauss_binomial(4, 5).is_zero());
    EXPECT_TRUE(gauss_binomial(4, -1).is_zero());
}

TEST(Series, QBinomCentralSymmetry)
{
    for (long L = 0; L <= 10; ++L) {
        for (long a = -L; a <= L; ++a) {
            EXPECT_EQ(gauss_binomial(2 * L, L + a), gauss_binomial(2 * L, L - a));
        }
    }
}

TEST(Series, QBinomPascalRecurrence)
{
    // [n+m over n] = q^n [n+m-1 over n] + [n+m-1 over n-1]
    for (long n = 0; n <= 12; ++n) {
        for (long m = 0; m <= 12; ++m) {
            if (n + m == 0) {
                continue;
            }
            EXPECT_EQ(qbinom(n, m), qbinom(n, m - 1).shifted(n) + qbinom(n - 1, m)) << n << "," << m;
        }
    }
}

TEST(Series, QBinomDegreeAndPalindrome)
{
    for (long n = 0; n <= 9; ++n) {
        for (long m = 0; m <= 9; ++m) {
            const QSeries b = qbinom(n, m);
            EXPECT_EQ(b.max_exponent(), std::optional<Exponent>(n * m));
            for (long e = 0; e <= n * m; ++e) {
                EXPECT_EQ(b.coefficient(e), b.coefficient(n * m - e));
            }
        }
    }
}

TEST(Series, GaussBinomialBaseTwo)
{
    // [2 over 1]_{q^2} = 1 + q^2
    EXPECT_EQ(gauss_binomial(2, 1, 2), poly({1, 0, 1}));
}

TEST(Series, CompareTruncatedRange)
{
    const QSeries a = geometric(10);
    const QSeries b = geometric(20);
    const SeriesComparison c = compare(a, b, CompareMode::truncated_series);
    EXPECT_TRUE(c.equal);
    EXPECT_EQ(c.lo, 0);
    EXPECT_EQ(c.hi, 10);

    const QSeries d = geometric(20) + QSeries::monomial(Integer(5), 7);
    const SeriesComparison m = compare(a, d, CompareMode::truncated_series);
    EXPECT_FALSE(m.equal);
    ASSERT_TRUE(m.first_mismatch);
    EXPECT_EQ(m.first_mismatch->exponent, 7);
    EXPECT_EQ(m.first_mismatch->lhs, 1);
    EXPECT_EQ(m.first_mismatch->rhs, 6);
}

TEST(Series, CompareExactDemandsFullSupport)
{
    const SeriesComparison c = compare(poly({1, 2}), poly({1, 2, 0, 0, 1}), CompareMode::exact_polynomial);
    EXPECT_FALSE(c.equal);
    ASSERT_TRUE(c.first_mismatch);
    EXPECT_EQ(c.first_mismatch->exponent, 4);
    EXPECT_ANY_THROW(compare(geometric(3), poly({1}), CompareMode::exact_polynomial));
}

TEST(Series, Rendering)
{
    EXPECT_EQ((poly({1, -1, -1}) + QSeries::monomial(Integer(2), -3)).with_order(11).to_string(),
              "2*q^-3 + 1 - q - q^2 + O(q^12)");
    EXPECT_EQ(QSeries().to_string(), "0");
}

TEST(Series, NegateVariableAndShift)
{
    EXPECT_EQ(poly({1, 1, 1}).negate_variable(), poly({1, -1, 1}));
    EXPECT_EQ(poly({1, 1}).shifted(-1), poly({1, 1}, -1));
}
