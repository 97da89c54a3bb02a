#include <gtest/gtest.h>

#include "ewi/closed_forms.hpp"
#include "oracles.hpp"

using namespace ewi;
using namespace ewi::closed;

namespace {

// Edge lists built here rather than through the constructions module.
std::vector<Edge> ring(std::vector<Vertex> vs)
{
    std::vector<Edge> e;
    for (std::size_t i = 0; i < vs.size(); ++i) e.emplace_back(vs[i], vs[(i + 1) % vs.size()]);
    return e;
}

std::int64_t brute_cycle(std::size_t n)
{
    std::vector<Vertex> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    return *oracle::wiener(n, ring(vs));
}

// Cycle of length a glued to a cycle of length n+1-a at vertex 0.
std::int64_t brute_two_cycles_at_vertex(std::size_t n, std::size_t a)
{
    std::vector<Vertex> first(a), second{0};
    std::iota(first.begin(), first.end(), 0);
    for (Vertex v = static_cast<Vertex>(a); v < n; ++v) second.push_back(v);
    auto e = ring(first);
    const auto f = ring(second);
    e.insert(e.end(), f.begin(), f.end());
    return *oracle::wiener(n, e);
}

// Cycle of length a and cycle of length n+2-a sharing the edge {0,1}.
std::int64_t brute_two_cycles_at_edge(std::size_t n, std::size_t a)
{
    std::vector<Vertex> first(a), second{1, 0};
    std::iota(first.begin(), first.end(), 0);
    for (Vertex v = static_cast<Vertex>(a); v < n; ++v) second.push_back(v);
    auto e = ring(first);
    for (std::size_t i = 1; i < second.size(); ++i) e.emplace_back(second[i], second[(i + 1) % second.size()]);
    return *oracle::wiener(n, e);
}

}  // namespace

TEST(ClosedForms, CycleAgreesWithBruteForce)
{
    for (std::int64_t n = 3; n <= 60; ++n) ASSERT_EQ(w_cycle(n), brute_cycle(n)) << n;
    EXPECT_EQ(w_cycle(6), 27);
    EXPECT_EQ(w_cycle(5), 15);
    EXPECT_EQ(w_cycle(3), 3);
}

TEST(ClosedForms, CN3AgreesWithBruteForce)
{
    for (std::int64_t n = 5; n <= 60; ++n) ASSERT_EQ(w_cn3(n), brute_two_cycles_at_vertex(n, 3)) << n;
    EXPECT_EQ(w_cn3(5), 14);
    EXPECT_EQ(w_cn3(8), 58);
    EXPECT_EQ(w_cn3(26), 2065);
}

TEST(ClosedForms, FNAAgreesWithBruteForce)
{
    for (std::int64_t n = 6; n <= 40; ++n) {
        for (std::int64_t a = 4; a <= n - 2; ++a) ASSERT_EQ(w_fna(n, a), brute_two_cycles_at_edge(n, a)) << n << "," << a;
    }
    EXPECT_EQ(w_fna(6, 4), 25);
    EXPECT_EQ(w_fna(7, 4), 38);
    EXPECT_EQ(w_fna(26, 4), 2065);
}

TEST(ClosedForms, PathMax)
{
    EXPECT_EQ(path_max(4), 10);
    EXPECT_EQ(path_max(1), 0);
    EXPECT_EQ(path_max(10), 165);
    for (std::int64_t n = 1; n <= 30; ++n) {
        std::vector<Edge> e;
        for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
        ASSERT_EQ(path_max(n), *oracle::wiener(n, e));
    }
}

TEST(ClosedForms, SmallBounds)
{
    const auto p = plesnik_bounds(6);
    EXPECT_EQ(p.w_2edge_max, 27);
    EXPECT_EQ(p.sigma_2conn_max, 9);
    EXPECT_EQ(p.sigma_2edge_max, 10);
    EXPECT_EQ(min_w_eulerian(7), 21);
    EXPECT_EQ(min_w_eulerian(8), 32);
    EXPECT_EQ(min_w_eulerian(5), 10);
    EXPECT_EQ(w_lower_given_size(4, 3), 9);
    EXPECT_EQ(w_lower_given_size(9, 12), 60);
    EXPECT_EQ(min_size_diam2(9), 12);
    EXPECT_EQ(min_size_diam2(10), 15);
    EXPECT_EQ(min_size_diam2(11), 15);
    EXPECT_EQ(diam2_eulerian_size_bound(5), 6);
}

TEST(ClosedForms, Gap)
{
    // 2*26^2 + (9-54+8)*26 - 54 + 117 + 75 - 39
    EXPECT_EQ(theorem2_gap(26, 3).numerator, 489);
    EXPECT_EQ(theorem2_gap(26, 3).str(), "489/24");
    EXPECT_THROW(theorem2_gap(25, 3), std::invalid_argument);
    EXPECT_THROW(theorem2_gap(30, 16), std::invalid_argument);
}

TEST(ClosedForms, CN3EnvelopeAndExactness)
{
    for (std::int64_t n = 5; n <= 500; ++n) {
        const auto r = w_cn3_envelope_times8(n);
        const i128 v = w_cn3_times8(n);
        ASSERT_TRUE(r.lower <= v && v <= r.upper);
        ASSERT_TRUE(v == (n % 2 ? r.lower : r.upper));
        ASSERT_EQ(v % 8, 0);
        ASSERT_NO_THROW(w_cycle(n));
        for (std::int64_t a = 4; a <= std::min<std::int64_t>(n - 2, 12); ++a) {
            if (n >= 6) { ASSERT_NO_THROW(w_fna(n, a)); }
        }
    }
    EXPECT_NO_THROW(w_cn3(kMaxFormulaOrder));
}

TEST(ClosedForms, DomainErrors)
{
    EXPECT_THROW(w_cycle(2), std::invalid_argument);
    EXPECT_THROW(w_cn3(4), std::invalid_argument);
    EXPECT_THROW(w_fna(8, 3), std::invalid_argument);
    EXPECT_THROW(w_fna(8, 7), std::invalid_argument);
    EXPECT_THROW(w_lower_given_size(4, 7), std::invalid_argument);
    EXPECT_THROW(min_size_diam2(8), std::invalid_argument);
    EXPECT_THROW(w_cycle(kMaxFormulaOrder + 1), std::invalid_argument);
}

TEST(ClosedForms, EvaluateByName)
{
    EXPECT_EQ(evaluate(parse_bound_kind("w_cn3"), 26, 0, 0), "2065");
    EXPECT_EQ(evaluate(parse_bound_kind("theorem2_gap"), 26, 3, 0), "489/24");
    EXPECT_EQ(evaluate(parse_bound_kind("w_lower_given_size"), 9, 0, 12), "60");
    EXPECT_EQ(evaluate(parse_bound_kind("w_fna"), 7, 4, 0), "38");
    EXPECT_THROW(parse_bound_kind("w_star"), std::invalid_argument);
}
