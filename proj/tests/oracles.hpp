// Brute-force reference implementations used only by the tests. Nothing here
// shares code with the library beyond the Edge type.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ewi/graph.hpp"

namespace oracle {

using ewi::Edge;
using Matrix = std::vector<std::vector<int>>;

inline constexpr int kInf = 1 << 28;

inline Matrix adjacency(std::size_t n, const std::vector<Edge>& edges)
{
    Matrix a(n, std::vector<int>(n, 0));
    for (auto [u, v] : edges) a[u][v] = a[v][u] = 1;
    return a;
}

// Floyd-Warshall all-pairs distances.
inline Matrix distances(const Matrix& adj)
{
    const std::size_t n = adj.size();
    Matrix d(n, std::vector<int>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (adj[i][j]) d[i][j] = 1;
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

// Sum over unordered pairs; nullopt when some pair is unreachable.
inline std::optional<std::int64_t> wiener(const Matrix& adj)
{
    const Matrix d = distances(adj);
    std::int64_t w = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            if (d[i][j] >= kInf) return std::nullopt;
            w += d[i][j];
        }
    return w;
}

inline std::optional<std::int64_t> wiener(std::size_t n, const std::vector<Edge>& edges)
{
    return wiener(adjacency(n, edges));
}

inline std::int64_t sigma(const Matrix& adj, std::size_t v)
{
    const Matrix d = distances(adj);
    return std::accumulate(d[v].begin(), d[v].end(), std::int64_t{0});
}

// sum over x outside A of min_{a in A} d(x,a)
inline std::int64_t sigma_set(const Matrix& adj, const std::vector<std::size_t>& set)
{
    const Matrix d = distances(adj);
    std::int64_t total = 0;
    for (std::size_t x = 0; x < adj.size(); ++x) {
        int best = kInf;
        for (std::size_t a : set) best = std::min(best, d[x][a]);
        total += best;
    }
    return total;
}

inline bool connected_without(const Matrix& adj, std::size_t skip)
{
    const std::size_t n = adj.size();
    std::vector<bool> seen(n, false);
    std::size_t start = n, alive = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (v == skip) continue;
        ++alive;
        if (start == n) start = v;
    }
    if (alive == 0) return true;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w = 0; w < n; ++w) {
            if (w != skip && adj[v][w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == alive;
}

inline bool connected(const Matrix& adj) { return connected_without(adj, adj.size()); }

inline bool even(const Matrix& adj)
{
    for (const auto& row : adj) {
        if (std::accumulate(row.begin(), row.end(), 0) % 2) return false;
    }
    return true;
}

inline bool two_connected(const Matrix& adj)
{
    if (adj.size() < 3 || !connected(adj)) return false;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (!connected_without(adj, v)) return false;
    }
    return true;
}

inline bool two_edge_connected(Matrix adj)
{
    if (adj.size() == 2 || !connected(adj)) return false;
    for (std::size_t u = 0; u < adj.size(); ++u)
        for (std::size_t v = u + 1; v < adj.size(); ++v) {
            if (!adj[u][v]) continue;
            adj[u][v] = adj[v][u] = 0;
            const bool ok = connected(adj);
            adj[u][v] = adj[v][u] = 1;
            if (!ok) return false;
        }
    return true;
}

inline int diameter(const Matrix& adj)
{
    const Matrix d = distances(adj);
    int best = 0;
    for (const auto& row : d)
        for (int x : row) best = std::max(best, x);
    return best;
}

// Calls fn(edges) for each of the 2^C(n,2) labelled graphs on n vertices.
inline void for_each_labeled(std::size_t n, const std::function<void(const std::vector<Edge>&)>& fn)
{
    std::vector<Edge> slots;
    for (ewi::Vertex j = 1; j < n; ++j)
        for (ewi::Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    std::vector<Edge> e;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        e.clear();
        for (std::size_t b = 0; b < slots.size(); ++b) {
            if ((mask >> b) & 1) e.push_back(slots[b]);
        }
        fn(e);
    }
}

// Lexicographically smallest upper-triangle bit string (graph6 column order)
// over all n! relabellings. Feasible for n <= 7.
inline std::string min_certificate(std::size_t n, const std::vector<Edge>& edges)
{
    const Matrix adj = adjacency(n, edges);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) s.push_back(adj[perm[i]][perm[j]] ? '1' : '0');
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n < 2) best = "";
    return best;
}

}  // namespace oracle
