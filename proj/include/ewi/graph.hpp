/// @file graph.hpp
/// @brief Immutable simple undirected graph with O(1) adjacency tests.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ewi {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised when a distance sum is requested on a graph that is not connected.
class disconnected_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised when a request falls outside the supported computational envelope.
class envelope_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// A simple undirected graph on vertices 0..n-1.
///
/// Rows are stored twice: as sorted neighbour lists (compressed, for
/// traversal) and as packed bit rows (for constant-time adjacency tests and
/// for canonical labelling). The object never changes after construction.
class Graph {
public:
    /// Builds a graph from an edge list. Duplicate edges collapse; endpoints
    /// out of range and self-loops are rejected.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges)
    {
        if (n == 0) {
            throw std::invalid_argument("graph order must be at least 1");
        }
        if (n > kMaxOrder) {
            throw std::invalid_argument("graph order " + std::to_string(n) + " exceeds limit " +
                                        std::to_string(kMaxOrder));
        }
        Graph g;
        g.n_ = n;
        g.words_ = (n + 63) / 64;
        g.bits_.assign(n * g.words_, 0);
        for (const auto& [u, v] : edges) {
            if (u >= n || v >= n) {
                throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") has an endpoint outside 0.." + std::to_string(n - 1));
            }
            if (u == v) {
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            }
            g.set_bit(u, v);
            g.set_bit(v, u);
        }
        g.rebuild_lists();
        return g;
    }

    /// Builds a graph from packed bit rows (`words` 64-bit words per row,
    /// bit j of row i set when i~j). The rows must be symmetric and loop-free.
    static Graph from_bit_rows(std::size_t n, std::size_t words, std::span<const std::uint64_t> rows)
    {
        if (n == 0 || words * 64 < n || rows.size() < n * words) {
            throw std::invalid_argument("malformed bit rows");
        }
        Graph g;
        g.n_ = n;
        g.words_ = (n + 63) / 64;
        g.bits_.assign(n * g.words_, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t w = 0; w < g.words_; ++w) {
                g.bits_[i * g.words_ + w] = rows[i * words + w];
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(i))) {
                throw std::invalid_argument("self-loop in bit rows");
            }
            for (std::size_t j = i + 1; j < n; ++j) {
                if (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) !=
                    g.adjacent(static_cast<Vertex>(j), static_cast<Vertex>(i))) {
                    throw std::invalid_argument("asymmetric bit rows");
                }
            }
        }
        g.rebuild_lists();
        return g;
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t size() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept
    {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }

    std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

    bool adjacent(Vertex u, Vertex v) const noexcept
    {
        return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    /// Packed adjacency row of `v`: words_per_row() words, bit j set when v~j.
    std::span<const std::uint64_t> bit_row(Vertex v) const noexcept
    {
        return {bits_.data() + v * words_, words_};
    }
    std::span<const std::uint64_t> bit_rows() const noexcept { return bits_; }
    std::size_t words_per_row() const noexcept { return words_; }

    /// Edges (u,v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v : neighbors(u)) {
                if (u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

    std::vector<std::size_t> degree_sequence() const
    {
        std::vector<std::size_t> d(n_);
        for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
        std::sort(d.begin(), d.end());
        return d;
    }

    /// Returns the graph with vertex v renamed to new_label[v].
    Graph relabeled(std::span<const Vertex> new_label) const
    {
        if (new_label.size() != n_) throw std::invalid_argument("relabeling has wrong length");
        std::vector<bool> seen(n_, false);
        for (Vertex x : new_label) {
            if (x >= n_ || seen[x]) throw std::invalid_argument("relabeling is not a permutation");
            seen[x] = true;
        }
        std::vector<Edge> e;
        e.reserve(m_);
        for (const auto& [u, v] : edges()) e.emplace_back(new_label[u], new_label[v]);
        return from_edges(n_, e);
    }

    /// Same labelled graph (not isomorphism).
    friend bool operator==(const Graph& a, const Graph& b) noexcept
    {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

    static constexpr std::size_t kMaxOrder = 10000;

private:
    Graph() = default;

    void set_bit(Vertex u, Vertex v) noexcept
    {
        bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    }

    void rebuild_lists()
    {
        offsets_.assign(n_ + 1, 0);
        std::size_t total = 0;
        for (std::size_t v = 0; v < n_; ++v) {
            std::size_t d = 0;
            for (std::size_t w = 0; w < words_; ++w) d += std::popcount(bits_[v * words_ + w]);
            offsets_[v] = total;
            total += d;
        }
        offsets_[n_] = total;
        targets_.resize(total);
        for (std::size_t v = 0; v < n_; ++v) {
            std::size_t pos = offsets_[v];
            for (std::size_t w = 0; w < words_; ++w) {
                std::uint64_t word = bits_[v * words_ + w];
                while (word) {
                    targets_[pos++] = static_cast<Vertex>(w * 64 + std::countr_zero(word));
                    word &= word - 1;
                }
            }
        }
        m_ = total / 2;
    }

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> targets_;
};

/// Validating constructor; equivalent to Graph::from_edges.
inline Graph build_graph(std::size_t n, std::span<const Edge> edges)
{
    return Graph::from_edges(n, edges);
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges)
{
    return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

}  // namespace ewi
