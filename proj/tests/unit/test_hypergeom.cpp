#include <qpart/hypergeom.hpp>

#include <gtest/gtest.h>

using namespace qpart;

TEST(Au, Branches)
{
    EXPECT_EQ(au(1, 5), -5);
    for (long j = -10; j <= 10; ++j) {
        EXPECT_EQ(au(2, j), 0);
    }
    EXPECT_EQ(au(3, 4), 1);
    for (long j = 0; j <= 12; ++j) {
        EXPECT_EQ(au(4, -j), -au(4, j));
    }
    EXPECT_THROW(au(0, 1), std::domain_error);
}

TEST(Au, StabilisesToJMinusOne)
{
    for (long j = 1; j <= 6; ++j) {
        for (long n = j + 1; n <= j + 12; ++n) {
            EXPECT_EQ(au(n, j), j - 1) << "n=" << n << " j=" << j;
        }
    }
}

TEST(Au, FloorSumByHand)
{
    // n = 5, j = 7: floor(8/5) + floor(9/5) + floor(10/5) = 1 + 1 + 2
    EXPECT_EQ(au(5, 7), 4);
}

TEST(PentagonalSum, Examples)
{
    EXPECT_EQ(pentagonal_sum_general(2, 0, 3), QSeries::one());
    EXPECT_EQ(pentagonal_sum_general(1, 0, 4), QSeries::one());
    EXPECT_TRUE(pentagonal_sum_general(3, -1, 5).is_zero());
}

TEST(PentagonalSum, WholeGrid)
{
    for (long n = 1; n <= 6; ++n) {
        for (int sigma = -1; sigma <= 1; ++sigma) {
            for (long L = 0; L <= 12; ++L) {
                const QSeries s = pentagonal_sum_general(n, sigma, L);
                EXPECT_TRUE(s.is_exact());
                EXPECT_EQ(s, sigma == -1 ? QSeries() : QSeries::one()) << n << " " << sigma << " " << L;
            }
        }
    }
}

TEST(Phi21, SingleTermIsOne)
{
    EXPECT_EQ(phi21_partial({1, 3}, {-1, 2}, QMonomial{1, 5}, {1, 1}, 1, 10), QSeries::one().with_order(10));
    EXPECT_EQ(phi21_partial({1, 3}, {-1, 2}, LimitZero{}, {1, 1}, 1, 10), QSeries::one().with_order(10));
}

TEST(Phi21, TerminatesAtNegativePower)
{
    // b = q^{1-L} kills every term from n = L on.
    const long L = 4;
    const QSeries a = phi21_partial({1, 2}, {1, 1 - L}, LimitZero{}, {1, L + 1}, L, 40);
    const QSeries b = phi21_partial({1, 2}, {1, 1 - L}, LimitZero{}, {1, L + 1}, L + 6, 40);
    EXPECT_EQ(a, b);
}

TEST(Phi21, SpecialisationMatchesAlternatingSum)
{
    // q^k (1-q)/(q)_{L-1} * phi equals sum_j (-1)^{j-1} q^{T_{j-1}+kj} (1-q^j)/(q)_{L-j}, L = 3, k = 1.
    const long L = 3;
    const long k = 1;
    const Exponent T = 30;
    const QSeries phi = phi21_partial({1, 2}, {1, 1 - L}, LimitZero{}, {1, L + k}, L, T);
    const QSeries lhs = divide(QSeries::one_minus({1, 1}).shifted(k) * phi, q_factorial(L - 1), T);
    QSeries rhs = QSeries::zero(T);
    for (long j = 1; j <= L; ++j) {
        const QSeries num =
            QSeries::monomial(Integer(j % 2 == 1 ? 1 : -1), (j - 1) * j / 2 + k * j) * QSeries::one_minus({1, j});
        rhs += divide(num, q_factorial(L - j), T);
    }
    EXPECT_TRUE(compare(lhs, rhs, CompareMode::truncated_series).equal);
}

TEST(Phi21, VanishingDenominatorThrows)
{
    EXPECT_THROW(phi21_partial({1, 1}, {1, 1}, QMonomial{1, 0}, {1, 1}, 3, 10), std::domain_error);
}

TEST(CubicSum, Examples)
{
    EXPECT_EQ(cubic_sum(0), QSeries::one());
    EXPECT_TRUE(cubic_sum(2).is_zero());
    EXPECT_EQ(cubic_sum(3), QSeries::monomial(Integer(-1), -1));
}

TEST(CubicSum, ClosedFormToThirty)
{
    for (long N = 0; N <= 30; ++N) {
        const QSeries s = cubic_sum(N);
        EXPECT_TRUE(s.is_exact());
        EXPECT_EQ(s, cubic_sum_closed_form(N)) << "N=" << N;
        if (N % 3 == 2) {
            EXPECT_TRUE(s.is_zero());
        } else {
            EXPECT_EQ(s.terms().size(), 1U);
        }
    }
}
