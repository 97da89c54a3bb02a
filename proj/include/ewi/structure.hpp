/// @file structure.hpp
/// @brief Connectivity predicates, blocks, cutvertices and branches.

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "distance.hpp"
#include "graph.hpp"

namespace ewi {

struct StructuralPredicates {
    bool connected = false;
    bool even_degrees = false;
    bool eulerian = false;            ///< connected and every degree even
    bool two_connected = false;       ///< false for orders 1 and 2
    bool two_edge_connected = false;  ///< true for K_1, false for K_2
    std::uint32_t diameter = 0;       ///< kUnreachable when disconnected
};

struct BlockDecomposition {
    std::vector<Vertex> cutvertices;           ///< sorted
    std::vector<std::vector<Vertex>> blocks;   ///< each sorted; ordered by smallest member
    std::vector<bool> endblock;                ///< block contains exactly one cutvertex

    std::size_t endblock_count() const
    {
        return static_cast<std::size_t>(std::count(endblock.begin(), endblock.end(), true));
    }
};

namespace detail {

struct DfsLowpoint {
    std::vector<bool> articulation;
    std::size_t bridges = 0;
    std::size_t components = 0;
    std::vector<std::vector<Vertex>> blocks;
};

/// Iterative Hopcroft-Tarjan over every component.
inline DfsLowpoint lowpoint_search(const Graph& g)
{
    const std::size_t n = g.order();
    constexpr std::uint32_t kUnset = kUnreachable;
    DfsLowpoint out;
    out.articulation.assign(n, false);
    std::vector<std::uint32_t> disc(n, kUnset), low(n, 0);
    std::vector<Vertex> parent(n, 0);
    std::vector<std::size_t> next(n, 0);
    std::vector<Edge> edge_stack;
    std::vector<Vertex> stack;
    std::vector<bool> in_block(n, false);
    std::uint32_t clock = 0;

    for (Vertex root = 0; root < n; ++root) {
        if (disc[root] != kUnset) continue;
        ++out.components;
        disc[root] = low[root] = clock++;
        parent[root] = root;
        if (g.degree(root) == 0) {
            out.blocks.push_back({root});
            continue;
        }
        std::size_t root_children = 0;
        stack.assign(1, root);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            const auto nbrs = g.neighbors(u);
            if (next[u] < nbrs.size()) {
                const Vertex w = nbrs[next[u]++];
                if (disc[w] == kUnset) {
                    parent[w] = u;
                    disc[w] = low[w] = clock++;
                    edge_stack.emplace_back(u, w);
                    stack.push_back(w);
                    if (u == root) ++root_children;
                } else if (w != parent[u] && disc[w] < disc[u]) {
                    edge_stack.emplace_back(u, w);
                    low[u] = std::min(low[u], disc[w]);
                }
                continue;
            }
            stack.pop_back();
            if (u == root) break;
            const Vertex p = parent[u];
            low[p] = std::min(low[p], low[u]);
            if (low[u] > disc[p]) ++out.bridges;
            if (low[u] >= disc[p]) {
                if (p != root) out.articulation[p] = true;
                std::vector<Vertex> block;
                while (true) {
                    const Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    for (Vertex x : {e.first, e.second}) {
                        if (!in_block[x]) {
                            in_block[x] = true;
                            block.push_back(x);
                        }
                    }
                    if (e.first == p && e.second == u) break;
                }
                for (Vertex x : block) in_block[x] = false;
                std::sort(block.begin(), block.end());
                out.blocks.push_back(std::move(block));
            }
        }
        if (root_children >= 2) out.articulation[root] = true;
    }
    return out;
}

}  // namespace detail

inline bool is_connected(const Graph& g)
{
    std::vector<std::uint32_t> dist;
    std::vector<Vertex> queue;
    const Vertex src[1] = {0};
    return detail::bfs(g, src, dist, queue) == g.order();
}

/// Largest eccentricity, or kUnreachable when the graph is disconnected.
inline std::uint32_t diameter(const Graph& g)
{
    std::vector<std::uint32_t> dist;
    std::vector<Vertex> queue;
    std::uint32_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const Vertex src[1] = {v};
        if (detail::bfs(g, src, dist, queue) != g.order()) return kUnreachable;
        best = std::max(best, dist[queue.back()]);
    }
    return best;
}

inline StructuralPredicates structural_predicates(const Graph& g)
{
    StructuralPredicates p;
    p.even_degrees = true;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) % 2 != 0) {
            p.even_degrees = false;
            break;
        }
    }
    const auto dfs = detail::lowpoint_search(g);
    p.connected = dfs.components == 1;
    p.eulerian = p.connected && p.even_degrees;
    const bool any_cut = std::find(dfs.articulation.begin(), dfs.articulation.end(), true) != dfs.articulation.end();
    p.two_connected = p.connected && g.order() >= 3 && !any_cut;
    p.two_edge_connected = p.connected && g.order() != 2 && dfs.bridges == 0;
    p.diameter = p.connected ? diameter(g) : kUnreachable;
    return p;
}

inline BlockDecomposition block_decomposition(const Graph& g)
{
    auto dfs = detail::lowpoint_search(g);
    if (dfs.components != 1) throw disconnected_error("block decomposition needs a connected graph");
    BlockDecomposition bd;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (dfs.articulation[v]) bd.cutvertices.push_back(v);
    }
    bd.blocks = std::move(dfs.blocks);
    std::sort(bd.blocks.begin(), bd.blocks.end());
    for (const auto& block : bd.blocks) {
        std::size_t cuts = 0;
        for (Vertex v : block) cuts += dfs.articulation[v] ? 1 : 0;
        bd.endblock.push_back(cuts == 1);
    }
    return bd;
}

/// Branches at a vertex set S: for every component H of G - S, the sorted
/// vertex set V(H) u S. When S is not a cutset the result has one entry.
inline std::vector<std::vector<Vertex>> branches(const Graph& g, std::span<const Vertex> cutset)
{
    const std::size_t n = g.order();
    std::vector<bool> removed(n, false);
    for (Vertex s : cutset) {
        if (s >= n) throw std::invalid_argument("vertex out of range");
        removed[s] = true;
    }
    std::vector<Vertex> sorted_cut(cutset.begin(), cutset.end());
    std::sort(sorted_cut.begin(), sorted_cut.end());
    sorted_cut.erase(std::unique(sorted_cut.begin(), sorted_cut.end()), sorted_cut.end());
    if (sorted_cut.empty() || sorted_cut.size() >= n) {
        throw std::invalid_argument("branches need a nonempty proper vertex subset");
    }

    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> queue;
    for (Vertex start = 0; start < n; ++start) {
        if (removed[start] || seen[start]) continue;
        queue.assign(1, start);
        seen[start] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            for (Vertex w : g.neighbors(queue[head])) {
                if (!removed[w] && !seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        queue.insert(queue.end(), sorted_cut.begin(), sorted_cut.end());
        std::sort(queue.begin(), queue.end());
        out.push_back(queue);
    }
    return out;
}

inline std::vector<std::vector<Vertex>> branches(const Graph& g, Vertex cutvertex)
{
    const Vertex s[1] = {cutvertex};
    return branches(g, s);
}

/// True for a connected 2-regular graph, i.e. a cycle.
inline bool is_cycle(const Graph& g)
{
    if (g.order() < 3 || g.size() != g.order()) return false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2) return false;
    }
    return is_connected(g);
}

}  // namespace ewi
