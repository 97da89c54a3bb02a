/// @file distance.hpp
/// @brief Breadth-first distance layers, total distance and the Wiener index.

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace ewi {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Distances from one source vertex, grouped into breadth-first layers.
struct DistanceProfile {
    Vertex source = 0;
    std::vector<std::uint32_t> dist;        ///< kUnreachable for vertices in other components
    std::vector<std::size_t> layer_sizes;   ///< layer_sizes[i] = number of vertices at distance i
    std::int64_t sigma = 0;                 ///< sum of finite distances
    std::uint32_t eccentricity = 0;         ///< largest finite distance
    std::size_t reachable = 0;

    bool all_reachable() const noexcept { return reachable == dist.size(); }
};

namespace detail {

/// Multi-source BFS; fills `dist` and returns the number of reached vertices.
inline std::size_t bfs(const Graph& g, std::span<const Vertex> sources, std::vector<std::uint32_t>& dist,
                       std::vector<Vertex>& queue)
{
    dist.assign(g.order(), kUnreachable);
    queue.clear();
    for (Vertex s : sources) {
        if (dist[s] == kUnreachable) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex u = queue[head];
        const std::uint32_t next = dist[u] + 1;
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] == kUnreachable) {
                dist[w] = next;
                queue.push_back(w);
            }
        }
    }
    return queue.size();
}

}  // namespace detail

inline DistanceProfile distance_profile(const Graph& g, Vertex v)
{
    if (v >= g.order()) throw std::invalid_argument("vertex out of range");
    DistanceProfile p;
    p.source = v;
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    const Vertex src[1] = {v};
    p.reachable = detail::bfs(g, src, p.dist, queue);
    for (Vertex x : queue) {
        const auto d = p.dist[x];
        if (d >= p.layer_sizes.size()) p.layer_sizes.resize(d + 1, 0);
        ++p.layer_sizes[d];
        p.sigma += d;
    }
    p.eccentricity = static_cast<std::uint32_t>(p.layer_sizes.size() - 1);
    return p;
}

/// Total distance of `v`. Requires every vertex to be reachable from v.
inline std::int64_t total_distance(const Graph& g, Vertex v)
{
    auto p = distance_profile(g, v);
    if (!p.all_reachable()) throw disconnected_error("total distance is infinite: graph is disconnected");
    return p.sigma;
}

/// Wiener index: half the sum of all total distances, computed with n
/// breadth-first searches and O(n) working memory.
inline std::int64_t wiener(const Graph& g)
{
    std::vector<std::uint32_t> dist;
    std::vector<Vertex> queue;
    queue.reserve(g.order());
    std::int64_t twice = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const Vertex src[1] = {v};
        if (detail::bfs(g, src, dist, queue) != g.order()) {
            throw disconnected_error("Wiener index is infinite: graph is disconnected");
        }
        for (Vertex x : queue) twice += dist[x];
    }
    return twice / 2;
}

/// Sum over vertices outside `set` of their distance to the nearest member.
inline std::int64_t sigma_set(const Graph& g, std::span<const Vertex> set)
{
    if (set.empty()) throw std::invalid_argument("sigma_set needs a nonempty vertex set");
    for (Vertex v : set) {
        if (v >= g.order()) throw std::invalid_argument("vertex out of range");
    }
    std::vector<std::uint32_t> dist;
    std::vector<Vertex> queue;
    if (detail::bfs(g, set, dist, queue) != g.order()) {
        throw disconnected_error("sigma_set is infinite: graph is disconnected");
    }
    std::int64_t total = 0;
    for (auto d : dist) total += d;
    return total;
}

inline std::int64_t sigma_set(const Graph& g, std::initializer_list<Vertex> set)
{
    return sigma_set(g, std::span<const Vertex>(set.begin(), set.size()));
}

}  // namespace ewi
