#include "certify.hpp"

#include <qpart/bijection.hpp>
#include <qpart/genfun.hpp>

#include <gtest/gtest.h>

using namespace qpart;

namespace
{

Partition P(const char *text)
{
    return Partition::parse(text);
}

} // namespace

TEST(DysonAdjoint, Examples)
{
    EXPECT_EQ(dyson_adjoint(P("4+3+1"), 1), P("2+2+1+1"));
    for (long m = 0; m <= 4; ++m) {
        const Partition single({static_cast<Part>(m + 1)});
        EXPECT_TRUE(dyson_adjoint(single, m).empty());
        EXPECT_EQ(dyson_adjoint_inverse(Partition(), m), single);
    }
    EXPECT_THROW(dyson_adjoint(P("2+2+1"), 1), std::domain_error);
    EXPECT_THROW(dyson_adjoint(Partition(), 0), std::domain_error);
}

TEST(DysonAdjoint, BoundedLargestPart)
{
    for (long m = 0; m <= 4; ++m) {
        for (long n = 1; n <= 14; ++n) {
            for (const Partition &p : partitions_of(n)) {
                if (rank(p) < m) {
                    continue;
                }
                for (long L = largest_part(p); L <= 8; ++L) {
                    EXPECT_LE(largest_part(dyson_adjoint(p, m)), L - 1 - m);
                }
            }
        }
    }
}

TEST(DysonAdjoint, Exhaustive)
{
    EXPECT_EQ(certify::dyson_adjoint(14, 4), "");
}

TEST(RankSetInsertion, Examples)
{
    EXPECT_EQ(rank_set_insertion(P("2+1"), 0), P("3"));
    EXPECT_FALSE(rank_set_contains(P("3"), -1));
    EXPECT_TRUE(rank_set_insertion(Partition(), 0).empty());
    EXPECT_THROW(rank_set_insertion(P("2+1"), 1), std::domain_error);
}

TEST(RankSetInsertion, Exhaustive)
{
    EXPECT_EQ(certify::rank_set_insertion(12, 5), "");
}

TEST(CrankMap, CaseExamples)
{
    EXPECT_EQ(crank_map_case(P("2+1+1"), 0), CrankCase::remove_row);
    EXPECT_EQ(crank_map(P("2+1+1"), 0), P("2+1+1"));
    EXPECT_EQ(crank(P("2+1+1")), -2);

    EXPECT_EQ(crank_map_case(P("3"), 2), CrankCase::shift_largest);
    EXPECT_EQ(crank_map(P("3"), 2), P("2+1"));
    EXPECT_EQ(crank(P("2+1")), 0);

    EXPECT_EQ(crank_map_case(P("2+2"), 2), CrankCase::conjugate_graph);
    EXPECT_EQ(crank_map(P("2+2"), 2), P("2+2"));
    EXPECT_EQ(crank(P("2+2")), 2);

    EXPECT_THROW(crank_map(P("2+1"), 1), std::domain_error);
}

TEST(CrankMap, ExceptionAtOne)
{
    // The partition 1 has crank -1 <= 0 but no preimage with 0 in its rank-set.
    EXPECT_FALSE(rank_set_contains(P("1"), 0));
    EXPECT_THROW(crank_map_inverse(P("1"), 0), std::domain_error);
}

TEST(CrankMap, Exhaustive)
{
    EXPECT_EQ(certify::crank_map(16, 5), "");
}

TEST(PseudoConjugate, Examples)
{
    EXPECT_EQ(pseudo_conjugate(P("2")), P("1+1"));
    EXPECT_EQ(pseudo_conjugate(P("1+1")), P("2"));
    EXPECT_EQ(pseudo_conjugate(P("2+1")), P("2+1"));
    EXPECT_EQ(pseudo_conjugate(P("1")), P("1"));
    EXPECT_TRUE(pseudo_conjugate(Partition()).empty());
}

TEST(PseudoConjugate, Trace)
{
    Trace trace;
    pseudo_conjugate(P("5+4+2+1+1"), &trace);
    ASSERT_GE(trace.size(), 2U);
    EXPECT_EQ(trace.front().label, "input: 5+4+2+1+1");
}

TEST(PseudoConjugate, InvolutionNegatingCrank)
{
    EXPECT_EQ(certify::pseudo_conjugate(18), "");
}

TEST(PseudoConjugate, FixedPoints)
{
    EXPECT_EQ(certify::pseudo_conjugate_fixed_points(30), "");
}

TEST(Mod2Adjoint, SmallExamples)
{
    EXPECT_EQ(mod2_adjoint(Mod2Graph(P("7+5+2")), 0), Mod2Graph(P("6+4+2+1")));
    EXPECT_EQ(mod2_adjoint(Mod2Graph(P("8+5+2")), 0), Mod2Graph(P("7+4+2+1")));
    EXPECT_EQ(mod2_adjoint_inverse(Mod2Graph(), 2), Mod2Graph(P("5")));
}

TEST(Mod2Adjoint, Exhaustive)
{
    EXPECT_EQ(certify::mod2_adjoint(18, 3), "");
}
