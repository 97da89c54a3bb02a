/// @file enumerator.hpp
/// @brief Isomorph-free generation of small graphs by canonical augmentation.
///
/// Graphs grow one vertex at a time: the new vertex is joined to any subset
/// of the existing vertices. A child is kept only when the new vertex lies in
/// the canonically chosen deletion class (maximum degree invariant, last in
/// canonical order), so every isomorphism class has exactly one parent class;
/// children of the same parent are deduplicated by canonical certificate.
///
/// Predicates are pushed into the tree: the size range bounds every level,
/// minimum-degree requirements (connected, 2-connected, Eulerian) bound the
/// degree a vertex can still reach, and with even degrees required the last
/// vertex has exactly one admissible neighbourhood (the odd-degree vertices).

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "distance.hpp"
#include "graph.hpp"
#include "structure.hpp"

namespace ewi {

/// Hard cap on the order accepted by the generator.
inline constexpr std::size_t kEnumerationCap = 12;

struct EnumFilter {
    std::size_t order = 1;
    bool require_connected = false;
    bool require_even_degrees = false;
    bool require_two_connected = false;
    bool require_two_edge_connected = false;
    std::optional<std::pair<std::size_t, std::size_t>> size_range;
    std::optional<std::uint32_t> diameter_max;

    /// Connected graphs with every degree even.
    static EnumFilter eulerian(std::size_t n)
    {
        EnumFilter f;
        f.order = n;
        f.require_connected = true;
        f.require_even_degrees = true;
        return f;
    }

    static EnumFilter connected(std::size_t n)
    {
        EnumFilter f;
        f.order = n;
        f.require_connected = true;
        return f;
    }

    void validate() const
    {
        if (order < 1) throw std::invalid_argument("filter order must be at least 1");
        if (order > kEnumerationCap) {
            throw envelope_error("enumeration order " + std::to_string(order) + " exceeds the hard cap of " +
                                 std::to_string(kEnumerationCap));
        }
        if (size_range) {
            const auto [lo, hi] = *size_range;
            if (lo > hi || hi > order * (order - 1) / 2) {
                throw std::invalid_argument("size range must satisfy m_lo <= m_hi <= C(n,2)");
            }
        }
    }
};

struct EnumPartition {
    std::size_t total_shards = 1;
    std::size_t shard_index = 0;

    void validate() const
    {
        if (total_shards == 0 || shard_index >= total_shards) {
            throw std::invalid_argument("shard index must satisfy 0 <= index < total shards");
        }
    }
};

namespace detail::small {

using Row = std::uint64_t;
inline constexpr std::size_t kMax = kEnumerationCap;

struct Node {
    std::size_t n = 0;
    std::size_t m = 0;
    std::array<Row, kMax> rows{};
    std::array<std::uint64_t, 2> cert{};  // canonical certificate (<= 66 bits for n <= 12)
};

inline Row full_mask(std::size_t n) { return n >= 64 ? ~Row{0} : (Row{1} << n) - 1; }

inline bool connected(const Row* rows, Row alive)
{
    if (alive == 0) return true;
    Row seen = alive & (~alive + 1);
    Row frontier = seen;
    while (frontier) {
        Row next = 0;
        for (Row f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
        next &= alive & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen == alive;
}

inline bool two_connected(const Row* rows, std::size_t n)
{
    if (n < 3) return false;
    const Row all = full_mask(n);
    if (!connected(rows, all)) return false;
    for (std::size_t v = 0; v < n; ++v) {
        if (!connected(rows, all & ~(Row{1} << v))) return false;
    }
    return true;
}

inline bool two_edge_connected(const Row* rows, std::size_t n)
{
    if (n == 2) return false;
    const Row all = full_mask(n);
    if (!connected(rows, all)) return false;
    std::array<Row, kMax> tmp{};
    std::copy(rows, rows + n, tmp.begin());
    for (std::size_t u = 0; u < n; ++u) {
        for (Row r = rows[u] & ~full_mask(u + 1); r; r &= r - 1) {
            const std::size_t v = std::countr_zero(r);
            tmp[u] &= ~(Row{1} << v);
            tmp[v] &= ~(Row{1} << u);
            const bool ok = connected(tmp.data(), all);
            tmp[u] |= Row{1} << v;
            tmp[v] |= Row{1} << u;
            if (!ok) return false;
        }
    }
    return true;
}

/// Diameter of a connected graph (caller checks connectivity).
inline std::uint32_t diameter(const Row* rows, std::size_t n)
{
    const Row all = full_mask(n);
    std::uint32_t best = 0;
    for (std::size_t s = 0; s < n; ++s) {
        Row seen = Row{1} << s, frontier = seen;
        std::uint32_t d = 0;
        while (seen != all) {
            Row next = 0;
            for (Row f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
            next &= ~seen;
            if (!next) return kUnreachable;
            seen |= next;
            frontier = next;
            ++d;
        }
        best = std::max(best, d);
    }
    return best;
}

inline std::array<std::uint64_t, 2> pack_cert(const std::vector<std::uint64_t>& c)
{
    std::array<std::uint64_t, 2> out{};
    for (std::size_t i = 0; i < c.size() && i < 2; ++i) out[i] = c[i];
    return out;
}

}  // namespace detail::small

namespace detail {

template <class Visitor>
class Generator {
public:
    Generator(const EnumFilter& filter, const EnumPartition& partition, Visitor& visit)
        : f_(filter), part_(partition), visit_(visit)
    {
        const std::size_t n = f_.order;
        const bool needs_two = f_.require_two_connected || f_.require_two_edge_connected ||
                               (f_.require_connected && f_.require_even_degrees);
        min_degree_ = (n >= 3 && needs_two) ? 2 : ((n >= 2 && f_.require_connected) ? 1 : 0);
        m_lo_ = f_.size_range ? f_.size_range->first : 0;
        m_hi_ = f_.size_range ? f_.size_range->second : n * (n - 1) / 2;
        split_level_ = n > 4 ? n - 3 : 1;
    }

    void run()
    {
        small::Node root;
        root.n = 1;
        root.m = 0;
        root.rows[0] = 0;
        root.cert = {0, 0};
        if (!take_shard_slot(1)) return;
        if (f_.order == 1) {
            if (final_ok(root)) emit(root);
            return;
        }
        extend(root);
    }

private:
    bool take_shard_slot(std::size_t level)
    {
        if (level != split_level_) return true;
        return (split_counter_++ % part_.total_shards) == part_.shard_index;
    }

    static std::uint32_t invariant(const small::Node& g, std::size_t v)
    {
        std::uint32_t nbr = 0;
        for (small::Row r = g.rows[v]; r; r &= r - 1) nbr += std::popcount(g.rows[std::countr_zero(r)]);
        return static_cast<std::uint32_t>(std::popcount(g.rows[v])) * 256u + nbr;
    }

    bool final_ok(const small::Node& g) const
    {
        const std::size_t n = g.n;
        if (g.m < m_lo_ || g.m > m_hi_) return false;
        if (f_.require_even_degrees) {
            for (std::size_t v = 0; v < n; ++v) {
                if (std::popcount(g.rows[v]) % 2 != 0) return false;
            }
        }
        const bool conn = small::connected(g.rows.data(), small::full_mask(n));
        if (f_.require_connected && !conn) return false;
        if (f_.require_two_connected && !small::two_connected(g.rows.data(), n)) return false;
        if (f_.require_two_edge_connected && !small::two_edge_connected(g.rows.data(), n)) return false;
        if (f_.diameter_max) {
            if (!conn) return false;
            if (small::diameter(g.rows.data(), n) > *f_.diameter_max) return false;
        }
        return true;
    }

    bool degrees_feasible(const small::Node& g) const
    {
        const std::size_t remaining = f_.order - g.n;
        if (remaining >= min_degree_) return true;
        const std::size_t need = min_degree_ - remaining;
        for (std::size_t v = 0; v < g.n; ++v) {
            if (static_cast<std::size_t>(std::popcount(g.rows[v])) < need) return false;
        }
        return true;
    }

    // Canonical relabelling of `g` using `order` (order[p] = old vertex at p).
    static void relabel(const small::Node& g, const std::vector<Vertex>& order, small::Node& out)
    {
        out.n = g.n;
        out.m = g.m;
        std::array<Vertex, small::kMax> pos{};
        for (std::size_t p = 0; p < g.n; ++p) pos[order[p]] = static_cast<Vertex>(p);
        for (std::size_t p = 0; p < g.n; ++p) {
            small::Row r = 0;
            for (small::Row x = g.rows[order[p]]; x; x &= x - 1) r |= small::Row{1} << pos[std::countr_zero(x)];
            out.rows[p] = r;
        }
    }

    // Accepts `child` (new vertex = child.n - 1) when that vertex is in the
    // canonical deletion class; fills `canon` with the relabelled child.
    bool accept(const small::Node& parent, const small::Node& child, small::Node& canon)
    {
        const std::size_t n = child.n;
        const std::size_t v = n - 1;
        std::array<std::uint32_t, small::kMax> inv{};
        std::uint32_t best = 0;
        for (std::size_t x = 0; x < n; ++x) {
            inv[x] = invariant(child, x);
            best = std::max(best, inv[x]);
        }
        if (inv[v] != best) return false;

        search_.search_graph(n, 1, std::span<const std::uint64_t>(child.rows.data(), n));
        const auto& order = search_.best_order();
        std::size_t w = n;
        for (std::size_t p = n; p-- > 0;) {
            if (inv[order[p]] == best) {
                w = order[p];
                break;
            }
        }
        const auto cert = small::pack_cert(search_.best_certificate());
        relabel(child, order, canon);
        canon.cert = cert;
        if (w == v) return true;
        const auto orbit = search_.orbits();
        if (orbit[w] == orbit[v]) return true;

        // Same parent class if deleting w yields a graph isomorphic to parent.
        small::Node reduced;
        reduced.n = n - 1;
        const small::Row keep = small::full_mask(n) & ~(small::Row{1} << w);
        std::size_t q = 0;
        for (std::size_t x = 0; x < n; ++x) {
            if (x == w) continue;
            small::Row r = child.rows[x] & keep;
            small::Row low = r & small::full_mask(w);
            small::Row high = (r >> (w + 1)) << w;
            reduced.rows[q++] = low | high;
        }
        side_.search_graph(n - 1, 1, std::span<const std::uint64_t>(reduced.rows.data(), n - 1));
        return small::pack_cert(side_.best_certificate()) == parent.cert;
    }

    void emit(const small::Node& g)
    {
        Graph graph = Graph::from_bit_rows(g.n, 1, std::span<const std::uint64_t>(g.rows.data(), g.n));
        const std::string canon = detail::certificate_graph6(g.n, std::span<const std::uint64_t>(g.cert.data(), 2));
        visit_(graph, std::string_view(canon));
    }

    void extend(const small::Node& parent)
    {
        const std::size_t k = parent.n;
        const std::size_t n = f_.order;
        const bool last = k + 1 == n;
        const std::size_t max_future = (n * (n - 1) - (k + 1) * k) / 2;

        std::vector<small::Node> children;
        std::set<std::array<std::uint64_t, 2>> seen;

        auto consider = [&](small::Row s) {
            small::Node child;
            child.n = k + 1;
            child.m = parent.m + static_cast<std::size_t>(std::popcount(s));
            if (child.m > m_hi_) return;
            if (child.m + max_future < m_lo_) return;
            for (std::size_t i = 0; i < k; ++i) child.rows[i] = parent.rows[i] | (((s >> i) & 1u) << k);
            child.rows[k] = s;
            if (last) {
                if (!final_ok(child)) return;
            } else if (!degrees_feasible(child)) {
                return;
            }
            small::Node canon;
            if (!accept(parent, child, canon)) return;
            if (!seen.insert(canon.cert).second) return;
            if (last) {
                if (take_shard_slot(k + 1)) emit(canon);
            } else {
                children.push_back(canon);
            }
        };

        if (last && f_.require_even_degrees) {
            small::Row odd = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if (std::popcount(parent.rows[i]) % 2 != 0) odd |= small::Row{1} << i;
            }
            consider(odd);
        } else {
            const small::Row limit = small::Row{1} << k;
            for (small::Row s = 0; s < limit; ++s) consider(s);
        }

        for (const auto& child : children) {
            if (!take_shard_slot(child.n)) continue;
            extend(child);
        }
    }

    const EnumFilter& f_;
    EnumPartition part_;
    Visitor& visit_;
    std::size_t min_degree_ = 0;
    std::size_t m_lo_ = 0;
    std::size_t m_hi_ = 0;
    std::size_t split_level_ = 1;
    std::size_t split_counter_ = 0;
    CanonSearch search_;
    CanonSearch side_;
};

}  // namespace detail

/// Calls visit(const Graph&, std::string_view canonical_graph6) once per
/// isomorphism class satisfying `filter`. Emitted graphs are canonically
/// labelled, so graph6_encode(g) equals the canonical string. The order of
/// emission is fixed for a given (filter, partition).
template <class Visitor>
void enumerate(const EnumFilter& filter, std::optional<EnumPartition> partition, Visitor&& visit)
{
    filter.validate();
    const EnumPartition part = partition.value_or(EnumPartition{});
    part.validate();
    detail::Generator<std::remove_reference_t<Visitor>> gen(filter, part, visit);
    gen.run();
}

template <class Visitor>
void enumerate(const EnumFilter& filter, Visitor&& visit)
{
    enumerate(filter, std::nullopt, std::forward<Visitor>(visit));
}

inline std::size_t count(const EnumFilter& filter, std::optional<EnumPartition> partition = std::nullopt)
{
    std::size_t total = 0;
    enumerate(filter, partition, [&](const Graph&, std::string_view) { ++total; });
    return total;
}

struct EnumeratedGraph {
    Graph graph;
    std::string canonical;
};

inline std::vector<EnumeratedGraph> collect(const EnumFilter& filter,
                                            std::optional<EnumPartition> partition = std::nullopt)
{
    std::vector<EnumeratedGraph> out;
    enumerate(filter, partition, [&](const Graph& g, std::string_view c) { out.push_back({g, std::string(c)}); });
    return out;
}

/// Runs `jobs` shards concurrently and returns each shard's result in shard order.
template <class ShardFn>
auto run_shards(std::size_t jobs, ShardFn&& fn) -> std::vector<decltype(fn(EnumPartition{}))>
{
    using Result = decltype(fn(EnumPartition{}));
    if (jobs == 0) jobs = 1;
    std::vector<std::optional<Result>> slots(jobs);
    if (jobs == 1) {
        slots[0].emplace(fn(EnumPartition{1, 0}));
    } else {
        std::vector<std::exception_ptr> errors(jobs);
        {
            std::vector<std::jthread> workers;
            workers.reserve(jobs);
            for (std::size_t i = 0; i < jobs; ++i) {
                workers.emplace_back([&, i] {
                    try {
                        slots[i].emplace(fn(EnumPartition{jobs, i}));
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                });
            }
        }
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    std::vector<Result> results;
    results.reserve(jobs);
    for (auto& s : slots) results.push_back(std::move(*s));
    return results;
}

/// Collects every matching graph using `jobs` concurrent shards; the result
/// is the concatenation of the shards in index order.
inline std::vector<EnumeratedGraph> collect_parallel(const EnumFilter& filter, std::size_t jobs)
{
    auto parts = run_shards(jobs, [&](EnumPartition p) { return collect(filter, p); });
    std::vector<EnumeratedGraph> out;
    for (auto& part : parts) {
        for (auto& g : part) out.push_back(std::move(g));
    }
    return out;
}

enum class Objective { max_wiener, min_wiener };

struct RankEntry {
    std::size_t rank = 0;      ///< 1-based rank of the Wiener value
    std::int64_t wiener = 0;
    std::string graph6;        ///< canonical form
};

namespace detail {

/// Keeps the k best distinct Wiener values and every graph attaining them.
class RankAccumulator {
public:
    RankAccumulator(Objective objective, std::size_t k) : objective_(objective), k_(k) {}

    void add(std::int64_t w, std::string canonical)
    {
        if (k_ == 0) return;
        const std::int64_t key = objective_ == Objective::max_wiener ? -w : w;
        if (buckets_.size() == k_ && key > buckets_.rbegin()->first) return;
        buckets_[key].push_back(std::move(canonical));
        if (buckets_.size() > k_) buckets_.erase(std::prev(buckets_.end()));
    }

    void merge(const RankAccumulator& other)
    {
        for (const auto& [key, graphs] : other.buckets_) {
            for (const auto& g : graphs) add(objective_ == Objective::max_wiener ? -key : key, g);
        }
    }

    std::vector<RankEntry> entries() const
    {
        std::vector<RankEntry> out;
        std::size_t rank = 0;
        for (const auto& [key, graphs] : buckets_) {
            ++rank;
            std::vector<std::string> sorted = graphs;
            std::sort(sorted.begin(), sorted.end());
            for (auto& g : sorted) {
                out.push_back({rank, objective_ == Objective::max_wiener ? -key : key, std::move(g)});
            }
        }
        return out;
    }

private:
    Objective objective_;
    std::size_t k_;
    std::map<std::int64_t, std::vector<std::string>> buckets_;
};

}  // namespace detail

/// Top-k (max) or bottom-k (min) Wiener values over the enumerated graphs,
/// with every graph attaining each retained value. Disconnected graphs have
/// no Wiener index and are skipped.
inline std::vector<RankEntry> extremal_scan(const EnumFilter& filter, Objective objective, std::size_t k,
                                            std::size_t jobs = 1)
{
    auto parts = run_shards(jobs, [&](EnumPartition p) {
        detail::RankAccumulator acc(objective, k);
        enumerate(filter, p, [&](const Graph& g, std::string_view canon) {
            if (!filter.require_connected && !is_connected(g)) return;
            acc.add(wiener(g), std::string(canon));
        });
        return acc;
    });
    detail::RankAccumulator total(objective, k);
    for (const auto& p : parts) total.merge(p);
    return total.entries();
}

}  // namespace ewi
