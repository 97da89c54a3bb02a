/// @file constructions.hpp
/// @brief Named graph families with fixed, documented vertex labellings.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace ewi {

namespace detail {

inline void require(bool ok, const std::string& what)
{
    if (!ok) throw std::invalid_argument(what);
}

inline void add_cycle(std::vector<Edge>& e, std::initializer_list<Vertex> cyc)
{
    const Vertex* first = cyc.begin();
    for (const Vertex* it = cyc.begin(); it != cyc.end(); ++it) {
        const Vertex* nx = (it + 1 == cyc.end()) ? first : it + 1;
        e.emplace_back(*it, *nx);
    }
}

}  // namespace detail

/// C_n: edges i -- (i+1 mod n).
inline Graph cycle(std::size_t n)
{
    detail::require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
    return Graph::from_edges(n, e);
}

/// P_n: edges i -- i+1.
inline Graph path(std::size_t n)
{
    detail::require(n >= 1, "path needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n)
{
    detail::require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    }
    return Graph::from_edges(n, e);
}

/// K_n without the matching edges (2i, 2i+1).
inline Graph complete_minus_perfect_matching(std::size_t n)
{
    detail::require(n >= 4 && n % 2 == 0, "complete_minus_perfect_matching needs even n >= 4");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            if (!(i % 2 == 0 && j == i + 1)) e.emplace_back(i, j);
        }
    }
    return Graph::from_edges(n, e);
}

/// C_{n,a}: a cycle of length a on 0..a-1 and a cycle of length n+1-a on
/// 0, a, a+1, ..., n-1, sharing the cutvertex 0.
inline Graph c_na(std::size_t n, std::size_t a)
{
    detail::require(a >= 3 && n >= 5 && a + 2 <= n, "c_na needs 3 <= a <= n-2");
    std::vector<Edge> e;
    for (Vertex i = 0; i < a; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % a));
    Vertex prev = 0;
    for (Vertex v = static_cast<Vertex>(a); v < n; ++v) {
        e.emplace_back(prev, v);
        prev = v;
    }
    e.emplace_back(prev, 0);
    return Graph::from_edges(n, e);
}

/// F_{n,a}: a cycle of length a on 0..a-1 and a cycle of length n+2-a on
/// 1, 0, a, a+1, ..., n-1, sharing the edge 0--1. Vertices 0 and 1 have
/// degree 3.
inline Graph f_na(std::size_t n, std::size_t a)
{
    detail::require(n >= 6 && a >= 4 && a + 2 <= n, "f_na needs n >= 6 and 4 <= a <= n-2");
    std::vector<Edge> e;
    for (Vertex i = 0; i < a; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % a));
    Vertex prev = 0;
    for (Vertex v = static_cast<Vertex>(a); v < n; ++v) {
        e.emplace_back(prev, v);
        prev = v;
    }
    e.emplace_back(prev, 1);
    return Graph::from_edges(n, e);
}

/// Eulerian graphs other than C_{n,3} that reach the second largest Wiener
/// index at the exceptional orders, as drawn:
///   7: two 4-cycles sharing a vertex (isomorphic to C_{7,4});
///   8: triangle, 4-cycle, triangle chained at opposite square corners;
///   9: 4-cycle, 4-cycle, triangle;
///  10: three 4-cycles;
///  11: triangle, 4-cycle, 4-cycle, triangle;
///  13: four 4-cycles.
/// Consecutive blocks share one vertex, and inside a 4-cycle the two shared
/// vertices are opposite.
inline std::vector<Graph> figure1_exceptions(std::size_t n)
{
    std::vector<Edge> e;
    switch (n) {
    case 7:
        detail::add_cycle(e, {0, 1, 2, 3});
        detail::add_cycle(e, {0, 4, 5, 6});
        break;
    case 8:
        detail::add_cycle(e, {0, 1, 2});
        detail::add_cycle(e, {2, 3, 4, 5});
        detail::add_cycle(e, {4, 6, 7});
        break;
    case 9:
        detail::add_cycle(e, {0, 1, 2, 3});
        detail::add_cycle(e, {2, 4, 5, 6});
        detail::add_cycle(e, {5, 7, 8});
        break;
    case 10:
        detail::add_cycle(e, {0, 1, 2, 3});
        detail::add_cycle(e, {2, 4, 5, 6});
        detail::add_cycle(e, {5, 7, 8, 9});
        break;
    case 11:
        detail::add_cycle(e, {0, 1, 2});
        detail::add_cycle(e, {2, 3, 4, 5});
        detail::add_cycle(e, {4, 6, 7, 8});
        detail::add_cycle(e, {7, 9, 10});
        break;
    case 13:
        detail::add_cycle(e, {0, 1, 2, 3});
        detail::add_cycle(e, {2, 4, 5, 6});
        detail::add_cycle(e, {5, 7, 8, 9});
        detail::add_cycle(e, {8, 10, 11, 12});
        break;
    default:
        throw std::invalid_argument("figure1_exceptions is defined for n in {7,8,9,10,11,13}");
    }
    return {Graph::from_edges(n, e)};
}

inline bool has_figure1_exceptions(std::size_t n)
{
    return n == 7 || n == 8 || n == 9 || n == 10 || n == 11 || n == 13;
}

/// Eulerian graph of diameter 2 with the fewest edges.
///   odd n >= 3: (n-1)/2 triangles sharing hub 0; triangle i is {0, 2i-1, 2i}.
///   even n >= 10: triangle {0,1,2}, star centre 3 with leaves 4..n-1;
///                 leaves 4,5 joined to 0, leaves 6,7 to 1, the rest to 2.
inline Graph min_diam2_eulerian(std::size_t n)
{
    std::vector<Edge> e;
    if (n % 2 == 1) {
        detail::require(n >= 3, "min_diam2_eulerian needs odd n >= 3 or even n >= 10");
        for (Vertex i = 1; 2 * i < n; ++i) {
            detail::add_cycle(e, {0, 2 * i - 1, 2 * i});
        }
    } else {
        detail::require(n >= 10, "min_diam2_eulerian needs odd n >= 3 or even n >= 10");
        detail::add_cycle(e, {0, 1, 2});
        for (Vertex leaf = 4; leaf < n; ++leaf) {
            e.emplace_back(3, leaf);
            const Vertex anchor = leaf < 6 ? 0 : (leaf < 8 ? 1 : 2);
            e.emplace_back(anchor, leaf);
        }
    }
    return Graph::from_edges(n, e);
}

enum class Family { cycle, path, complete, complete_minus_pm, c_na, f_na, figure1, min_diam2 };

struct FamilyId {
    Family tag = Family::cycle;
    std::size_t n = 0;
    std::size_t a = 0;  ///< used by c_na and f_na only
};

inline Family parse_family(std::string_view name)
{
    if (name == "cycle") return Family::cycle;
    if (name == "path") return Family::path;
    if (name == "complete") return Family::complete;
    if (name == "kpm" || name == "complete_minus_pm") return Family::complete_minus_pm;
    if (name == "cna" || name == "c_na") return Family::c_na;
    if (name == "fna" || name == "f_na") return Family::f_na;
    if (name == "figure1") return Family::figure1;
    if (name == "mind2" || name == "min_diam2") return Family::min_diam2;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

inline std::vector<Graph> construct(const FamilyId& id)
{
    switch (id.tag) {
    case Family::cycle: return {cycle(id.n)};
    case Family::path: return {path(id.n)};
    case Family::complete: return {complete(id.n)};
    case Family::complete_minus_pm: return {complete_minus_perfect_matching(id.n)};
    case Family::c_na: return {c_na(id.n, id.a)};
    case Family::f_na: return {f_na(id.n, id.a)};
    case Family::figure1: return figure1_exceptions(id.n);
    case Family::min_diam2: return {min_diam2_eulerian(id.n)};
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace ewi
