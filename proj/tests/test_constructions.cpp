#include <gtest/gtest.h>

#include <algorithm>

#include "ewi/canonical.hpp"
#include "ewi/constructions.hpp"
#include "ewi/distance.hpp"
#include "ewi/graph6.hpp"
#include "ewi/structure.hpp"
#include "oracles.hpp"

using namespace ewi;

namespace {

std::int64_t oracle_wiener(const Graph& g) { return *oracle::wiener(g.order(), g.edges()); }

std::size_t count_degree(const Graph& g, std::size_t d)
{
    std::size_t c = 0;
    for (Vertex v = 0; v < g.order(); ++v) c += g.degree(v) == d;
    return c;
}

}  // namespace

TEST(Cycle, PathComplete)
{
    EXPECT_EQ(oracle_wiener(cycle(8)), 64);
    EXPECT_EQ(oracle_wiener(path(4)), 10);
    EXPECT_EQ(oracle_wiener(complete(5)), 10);
    EXPECT_THROW(cycle(2), std::invalid_argument);
    EXPECT_THROW(path(0), std::invalid_argument);
    for (std::size_t n = 3; n <= 40; ++n) {
        const Graph c = cycle(n);
        EXPECT_EQ(c.size(), n);
        EXPECT_EQ(count_degree(c, 2), n);
        EXPECT_TRUE(structural_predicates(c).eulerian);
        EXPECT_EQ(path(n).size(), n - 1);
        EXPECT_EQ(complete(n).size(), n * (n - 1) / 2);
        EXPECT_EQ(structural_predicates(complete(n)).eulerian, n % 2 == 1);
    }
}

TEST(CompleteMinusMatching, Basics)
{
    EXPECT_EQ(oracle_wiener(complete_minus_perfect_matching(6)), 18);
    EXPECT_TRUE(isomorphic(complete_minus_perfect_matching(4), cycle(4)));
    const auto p8 = structural_predicates(complete_minus_perfect_matching(8));
    EXPECT_TRUE(p8.eulerian);
    EXPECT_EQ(p8.diameter, 2u);
    EXPECT_THROW(complete_minus_perfect_matching(7), std::invalid_argument);
    EXPECT_THROW(complete_minus_perfect_matching(2), std::invalid_argument);
    for (std::size_t n = 4; n <= 40; n += 2) {
        const Graph g = complete_minus_perfect_matching(n);
        EXPECT_EQ(count_degree(g, n - 2), n);
        EXPECT_EQ(g.size(), n * (n - 1) / 2 - n / 2);
    }
}

TEST(CNA, SpotValues)
{
    EXPECT_EQ(oracle_wiener(c_na(5, 3)), 14);
    EXPECT_EQ(oracle_wiener(c_na(7, 4)), 40);
    EXPECT_EQ(oracle_wiener(c_na(8, 3)), 58);
    EXPECT_THROW(c_na(6, 2), std::invalid_argument);
    EXPECT_THROW(c_na(6, 5), std::invalid_argument);
}

TEST(CNA, InvariantsForAllParameters)
{
    for (std::size_t n = 5; n <= 40; ++n) {
        for (std::size_t a = 3; a + 2 <= n; ++a) {
            const Graph g = c_na(n, a);
            ASSERT_EQ(g.order(), n);
            ASSERT_EQ(g.size(), n + 1);
            ASSERT_EQ(count_degree(g, 4), 1u);
            ASSERT_EQ(count_degree(g, 2), n - 1);
            ASSERT_TRUE(structural_predicates(g).eulerian);
            const auto b = block_decomposition(g);
            ASSERT_EQ(b.blocks.size(), 2u);
            ASSERT_EQ(b.endblock_count(), 2u);
            std::vector<std::size_t> sizes = {b.blocks[0].size(), b.blocks[1].size()};
            std::sort(sizes.begin(), sizes.end());
            ASSERT_EQ(sizes, (std::vector<std::size_t>{std::min(a, n + 1 - a), std::max(a, n + 1 - a)}));
            ASSERT_EQ(canonical_form(g), canonical_form(c_na(n, n + 1 - a)));
        }
    }
}

TEST(FNA, SpotValues)
{
    EXPECT_EQ(oracle_wiener(f_na(6, 4)), 25);
    EXPECT_EQ(oracle_wiener(f_na(7, 4)), 38);
    EXPECT_EQ(oracle_wiener(f_na(7, 4)), oracle_wiener(c_na(7, 3)));
    EXPECT_THROW(f_na(8, 3), std::invalid_argument);
    EXPECT_THROW(f_na(8, 7), std::invalid_argument);
    EXPECT_THROW(f_na(5, 4), std::invalid_argument);
}

TEST(FNA, InvariantsForAllParameters)
{
    for (std::size_t n = 6; n <= 40; ++n) {
        for (std::size_t a = 4; a + 2 <= n; ++a) {
            const Graph g = f_na(n, a);
            ASSERT_EQ(g.size(), n + 1);
            ASSERT_EQ(count_degree(g, 3), 2u);
            ASSERT_EQ(count_degree(g, 2), n - 2);
            ASSERT_TRUE(g.adjacent(0, 1));
            ASSERT_EQ(g.degree(0), 3u);
            ASSERT_EQ(g.degree(1), 3u);
            const auto p = structural_predicates(g);
            ASSERT_FALSE(p.eulerian);
            ASSERT_TRUE(p.two_connected);
            ASSERT_EQ(canonical_form(g), canonical_form(f_na(n, n + 2 - a)));
        }
    }
}

TEST(PartnerCatalog, Shapes)
{
    for (std::size_t n : {7u, 8u, 9u, 10u, 11u, 13u}) {
        const auto gs = figure1_exceptions(n);
        ASSERT_FALSE(gs.empty());
        for (const auto& g : gs) {
            EXPECT_EQ(g.order(), n);
            EXPECT_TRUE(structural_predicates(g).eulerian);
            EXPECT_FALSE(is_cycle(g));
            EXPECT_FALSE(isomorphic(g, c_na(n, 3)));
        }
    }
    EXPECT_TRUE(isomorphic(figure1_exceptions(7).front(), c_na(7, 4)));
    EXPECT_EQ(oracle_wiener(figure1_exceptions(8).front()), 58);
    EXPECT_EQ(oracle_wiener(figure1_exceptions(13).front()), oracle_wiener(c_na(13, 3)));
    EXPECT_THROW(figure1_exceptions(12), std::invalid_argument);
    EXPECT_FALSE(has_figure1_exceptions(12));
}

TEST(MinDiam2, Constructions)
{
    const Graph g9 = min_diam2_eulerian(9);
    EXPECT_EQ(g9.size(), 12u);
    EXPECT_EQ(oracle_wiener(g9), 60);
    const Graph g10 = min_diam2_eulerian(10);
    EXPECT_EQ(g10.size(), 15u);
    EXPECT_TRUE(isomorphic(min_diam2_eulerian(3), cycle(3)));
    EXPECT_THROW(min_diam2_eulerian(8), std::invalid_argument);
    EXPECT_THROW(min_diam2_eulerian(1), std::invalid_argument);
    for (std::size_t n = 3; n <= 40; ++n) {
        if (n % 2 == 0 && n < 10) continue;
        const Graph g = min_diam2_eulerian(n);
        const auto p = structural_predicates(g);
        ASSERT_TRUE(p.eulerian) << n;
        ASSERT_EQ(p.diameter, n == 3 ? 1u : 2u) << n;
        ASSERT_EQ(g.size(), n % 2 ? 3 * (n - 1) / 2 : 2 * n - 5) << n;
    }
}

TEST(Family, ParseAndConstruct)
{
    EXPECT_EQ(parse_family("cna"), Family::c_na);
    EXPECT_EQ(parse_family("kpm"), Family::complete_minus_pm);
    EXPECT_THROW(parse_family("wheel"), std::invalid_argument);
    const auto gs = construct(FamilyId{Family::f_na, 9, 5});
    ASSERT_EQ(gs.size(), 1u);
    EXPECT_EQ(gs[0], f_na(9, 5));
    EXPECT_EQ(graph6_encode(construct(FamilyId{Family::cycle, 5, 0}).front()), "Dhc");
}
