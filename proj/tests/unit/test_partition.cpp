#include <qpart/genfun.hpp>
#include <qpart/partition.hpp>

#include <gtest/gtest.h>

#include <map>

using namespace qpart;

namespace
{

Partition P(const char *text)
{
    return Partition::parse(text);
}

} // namespace

TEST(Partition, ParseNormalisesOrder)
{
    EXPECT_EQ(P("1+5+2").parts(), (std::vector<Part>{5, 2, 1}));
    EXPECT_EQ(P("2+6+6+7+5").to_string(), "7+6+6+5+2");
    EXPECT_TRUE(P("0").empty());
    EXPECT_TRUE(P("").empty());
    EXPECT_EQ(Partition().to_string(), "0");
}

TEST(Partition, ParseRejectsMalformedText)
{
    EXPECT_THROW(P("3+x"), std::invalid_argument);
    EXPECT_THROW(P("3++1"), std::invalid_argument);
    EXPECT_THROW(P("-2+1"), std::invalid_argument);
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
}

TEST(Partition, Conjugate)
{
    EXPECT_EQ(conjugate(P("5+2+1")), P("3+2+1+1+1"));
    EXPECT_TRUE(conjugate(Partition()).empty());
    for (long n = 0; n <= 15; ++n) {
        for (const Partition &p : partitions_of(n)) {
            EXPECT_EQ(conjugate(conjugate(p)), p);
            EXPECT_EQ(conjugate(p).weight(), n);
        }
    }
}

TEST(Partition, RankAndCrankExamples)
{
    EXPECT_EQ(crank(P("4")), 4);
    EXPECT_EQ(crank(P("1+1+1+1")), -4);
    EXPECT_EQ(rank(P("7+6+6+5+2")), 2);
    EXPECT_EQ(crank(P("3+1")), 0);
    EXPECT_EQ(crank(P("1")), -1);
    EXPECT_THROW(crank(Partition()), std::domain_error);
    EXPECT_THROW(gamma_stat(Partition()), std::domain_error);
}

TEST(Partition, Stats)
{
    const PartitionStats s = stats(P("5+3+1+1"));
    EXPECT_EQ(s.largest, 5);
    EXPECT_EQ(s.parts, 4);
    EXPECT_EQ(s.ones, 2);
    EXPECT_EQ(s.above_ones, 2);
    EXPECT_EQ(s.gamma, std::optional<long>(2));
    EXPECT_EQ(s.rank, 1);
    EXPECT_EQ(s.crank, std::optional<long>(0));
    // One part above the ones: gamma = lambda - mu - 1.
    EXPECT_EQ(gamma_stat(P("6+2+1+1+1")), 6 - 3 - 1);
    EXPECT_FALSE(stats(Partition()).crank);
}

TEST(Partition, RankSetExamples)
{
    EXPECT_TRUE(rank_set_contains(P("3+2+1+1"), 2));
    EXPECT_FALSE(rank_set_contains(P("2+1"), 1));
    EXPECT_TRUE(rank_set_contains(Partition(), 0));
    EXPECT_FALSE(rank_set_contains(Partition(), -1));
    EXPECT_TRUE(boundary_segment_vertical(P("3+2+1+1"), 2));
    EXPECT_FALSE(boundary_segment_vertical(P("2+1"), 1));
}

TEST(Partition, RankSetDescriptorMatchesDefinition)
{
    for (long n = 0; n <= 10; ++n) {
        for (const Partition &p : partitions_of(n)) {
            const RankSetDescriptor d = rank_set(p);
            EXPECT_EQ(d.tail_from, num_parts(p));
            for (long k = -12; k <= 12; ++k) {
                bool member = k >= d.tail_from;
                for (long v : d.prefix) {
                    member = member || v == k;
                }
                EXPECT_EQ(member, rank_set_contains(p, k));
            }
        }
    }
}

TEST(Partition, BoundaryCriterionAgreesWithRankSet)
{
    for (long n = 0; n <= 12; ++n) {
        for (const Partition &p : partitions_of(n)) {
            for (long k = -8; k <= 8; ++k) {
                EXPECT_EQ(boundary_segment_vertical(p, k), rank_set_contains(p, k)) << p.to_string() << " k=" << k;
            }
        }
    }
}

TEST(Partition, RankSetExcludesOnePlusK)
{
    for (long n = 0; n <= 14; ++n) {
        for (const Partition &p : partitions_of(n)) {
            for (long k = -8; k <= 8; ++k) {
                if (rank_set_contains(p, k)) {
                    EXPECT_NE(num_parts(p), k + 1) << p.to_string() << " k=" << k;
                }
            }
            // Eventually true from the number of parts on.
            for (long k = num_parts(p); k <= num_parts(p) + 5; ++k) {
                EXPECT_TRUE(rank_set_contains(p, k));
            }
        }
    }
}

TEST(Partition, Enumerate)
{
    EXPECT_EQ(enumerate_partitions(4).size(), 5U);
    const auto zero = enumerate_partitions(0);
    ASSERT_EQ(zero.size(), 1U);
    EXPECT_TRUE(zero.front().empty());
    EnumerationOptions small_parts;
    small_parts.max_part = 2;
    EXPECT_EQ(enumerate_partitions(6, small_parts).size(), 4U);
    const auto four = enumerate_partitions(4);
    const std::vector<std::string> order = {"4", "3+1", "2+2", "2+1+1", "1+1+1+1"};
    for (std::size_t i = 0; i < order.size(); ++i) {
        EXPECT_EQ(four[i].to_string(), order[i]);
    }
}

TEST(Partition, EnumerationCountsMatchEulerProduct)
{
    const QSeries p = partition_generating(25);
    for (long n = 0; n <= 25; ++n) {
        EXPECT_EQ(p.coefficient(n), static_cast<long>(enumerate_partitions(n).size()));
    }
}

TEST(Partition, DurfeeAndKRank)
{
    const Partition p = P("6+5+4+2+2+1");
    const DurfeeDissection d = durfee_dissection(p);
    ASSERT_GE(d.sizes.size(), 2U);
    EXPECT_EQ(d.sizes[0], 3);
    EXPECT_EQ(d.sizes[1], 2);
    EXPECT_EQ(k_rank(p, 3), 1);
    EXPECT_EQ(durfee_dissection(P("1")).sizes, std::vector<long>{1});
    EXPECT_EQ(k_rank(P("1"), 2), 0);
    EXPECT_THROW(k_rank(P("1"), 3), std::domain_error);
    EXPECT_THROW(k_rank(p, 1), std::domain_error);
}

TEST(Partition, DurfeeSizesAreDecreasingAndCoverWeight)
{
    for (long n = 1; n <= 14; ++n) {
        for (const Partition &p : partitions_of(n)) {
            const auto s = durfee_dissection(p).sizes;
            ASSERT_FALSE(s.empty());
            EXPECT_EQ(s.front(), durfee_side(p));
            long area = 0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                area += s[i] * s[i];
                if (i > 0) {
                    EXPECT_LE(s[i], s[i - 1]);
                }
            }
            EXPECT_LE(area, n);
        }
    }
}

TEST(Partition, TwoRankIsRank)
{
    for (long n = 1; n <= 14; ++n) {
        for (const Partition &p : partitions_of(n)) {
            EXPECT_EQ(k_rank(p, 2), rank(p)) << p.to_string();
        }
    }
}

TEST(Partition, ConjugationNegatesRank)
{
    for (long n = 0; n <= 14; ++n) {
        for (const Partition &p : partitions_of(n)) {
            EXPECT_EQ(rank(conjugate(p)), -rank(p));
        }
    }
}

TEST(Partition, CrankDistributionIsSymmetricAboveOne)
{
    for (long n = 2; n <= 18; ++n) {
        std::map<long, long> count;
        for (const Partition &p : partitions_of(n)) {
            ++count[crank(p)];
        }
        for (const auto &[c, v] : count) {
            EXPECT_EQ(count[-c], v) << "n=" << n << " crank=" << c;
        }
    }
}

TEST(Partition, FerrersDiagram)
{
    EXPECT_EQ(ferrers_diagram(P("3+1")), "***\n*\n");
    EXPECT_EQ(ferrers_diagram(Partition()), "(empty)\n");
}
