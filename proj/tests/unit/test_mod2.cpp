#include <qpart/genfun.hpp>
#include <qpart/mod2.hpp>

#include <gtest/gtest.h>

using namespace qpart;

namespace
{

Mod2Graph G(const char *text)
{
    return Mod2Graph(Partition::parse(text));
}

std::vector<Partition> class_e(long n)
{
    std::vector<Partition> out;
    for (const Partition &p : partitions_of(n)) {
        if (has_distinct_odd_parts(p)) {
            out.push_back(p);
        }
    }
    return out;
}

// Rows of cells must shrink weakly, and a row ending in 1 may only sit
// directly above a strictly shorter row.
bool valid_grid(const std::vector<std::vector<int>> &cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto &row = cells[i];
        if (row.empty()) {
            return false;
        }
        for (std::size_t c = 0; c + 1 < row.size(); ++c) {
            if (row[c] != 2) {
                return false;
            }
        }
        if (i + 1 < cells.size()) {
            const auto &next = cells[i + 1];
            if (next.size() > row.size() || (row.back() == 1 && next.size() == row.size())) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST(Mod2, GridOfSampleGraph)
{
    const Mod2Graph g = G("7+6+6+5+2");
    const std::vector<std::vector<int>> cells = {{2, 2, 2, 1}, {2, 2, 2}, {2, 2, 2}, {2, 2, 1}, {2}};
    EXPECT_EQ(g.cells(), cells);
    EXPECT_EQ(mod2_diagram(g), "2 2 2 1\n2 2 2\n2 2 2\n2 2 1\n2\n");
}

TEST(Mod2, ClassMembership)
{
    EXPECT_TRUE(Mod2Graph(Partition()).empty());
    EXPECT_THROW(G("5+5+2"), std::invalid_argument);
    EXPECT_NO_THROW(G("4+4+3+1"));
    EXPECT_FALSE(has_distinct_odd_parts(Partition::parse("3+3")));
}

TEST(Mod2, ConjugateOfSampleGraph)
{
    EXPECT_EQ(conjugate_mod2(G("7+6+6+5+2")), G("10+8+7+1"));
    EXPECT_EQ(conjugate_mod2(G("1")), G("1"));
}

TEST(Mod2, M2Rank)
{
    EXPECT_EQ(m2_rank(G("7+6+6+5+2")), -1);
    EXPECT_EQ(m2_rank(G("2")), 0);
    EXPECT_THROW(m2_rank(Mod2Graph()), std::domain_error);
}

TEST(Mod2, ConjugationPropertiesToTwenty)
{
    for (long n = 0; n <= 20; ++n) {
        for (const Partition &p : class_e(n)) {
            const Mod2Graph g(p);
            const Mod2Graph c = conjugate_mod2(g);
            EXPECT_EQ(conjugate_mod2(c), g) << p.to_string();
            EXPECT_EQ(c.weight(), n);
            EXPECT_TRUE(has_distinct_odd_parts(c.partition()));
            EXPECT_TRUE(valid_grid(c.cells())) << p.to_string();
            if (n > 0) {
                EXPECT_EQ(m2_rank(c), -m2_rank(g)) << p.to_string();
            }
        }
    }
}

TEST(Mod2, ClassCountMatchesProduct)
{
    const QSeries e = distinct_odd_generating(30);
    for (long n = 0; n <= 30; ++n) {
        EXPECT_EQ(e.coefficient(n), static_cast<long>(class_e(n).size())) << "n=" << n;
    }
}
