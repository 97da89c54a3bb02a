/// @file canonical.hpp
/// @brief Canonical labelling by equitable refinement and individualisation.
///
/// The search tree is the usual one: refine the unit partition to the
/// coarsest equitable partition, pick the first non-singleton cell,
/// individualise each of its vertices in turn and refine again. Every
/// discrete leaf defines a relabelling; the canonical one is the leaf whose
/// upper-triangular adjacency bit string (graph6 column order) is
/// lexicographically smallest. Automorphisms discovered when two leaves give
/// the same string prune the tree (orbit pruning plus a jump back to the
/// common ancestor), which keeps highly symmetric graphs such as K_n cheap.

#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph6.hpp"

namespace ewi {

struct CanonicalLabeling {
    std::vector<Vertex> order;               ///< order[p] = vertex placed at canonical position p
    std::vector<Vertex> position;            ///< inverse of order
    std::vector<std::uint64_t> certificate;  ///< n(n-1)/2 bits, MSB first, graph6 column order
    std::vector<Vertex> orbit;               ///< smallest vertex in the orbit under automorphisms found
    std::size_t generators = 0;              ///< automorphisms discovered during the search
};

namespace detail {

class UnionFind {
public:
    explicit UnionFind(std::size_t n = 0) { reset(n); }
    void reset(std::size_t n)
    {
        parent_.resize(n);
        std::iota(parent_.begin(), parent_.end(), Vertex{0});
    }
    Vertex find(Vertex x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(Vertex a, Vertex b)
    {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent_[b] = a;
        else parent_[a] = b;
    }

private:
    std::vector<Vertex> parent_;
};

class CanonSearch {
public:
    CanonSearch() = default;

    /// Runs the search; results stay available until the next call.
    void search_graph(std::size_t n, std::size_t words, std::span<const std::uint64_t> rows)
    {
        n_ = n;
        words_ = words;
        rows_ = rows;
        have_first_ = false;
        gens_.clear();
        prefix_.clear();
        if (levels_.size() < n_ + 1) levels_.resize(n_ + 1);
        Partition& root = levels_[0];
        root.lab.resize(n_);
        std::iota(root.lab.begin(), root.lab.end(), Vertex{0});
        root.cell_len.assign(n_, 0);
        root.cell_len[0] = static_cast<std::uint32_t>(n_);
        root.cell_of.assign(n_, 0);
        mask_.assign(words_, 0);
        in_queue_.assign(n_, 0);
        const std::uint32_t start[1] = {0};
        refine(root, start);
        search(0);
    }

    /// order[p] = vertex at canonical position p.
    const std::vector<Vertex>& best_order() const noexcept { return best_lab_; }
    const std::vector<std::uint64_t>& best_certificate() const noexcept { return best_cert_; }

    /// Orbit representatives under the automorphisms found so far.
    std::vector<Vertex> orbits() const
    {
        UnionFind uf(n_);
        for (const auto& g : gens_) {
            for (Vertex v = 0; v < n_; ++v) uf.unite(v, g[v]);
        }
        std::vector<Vertex> out(n_);
        for (Vertex v = 0; v < n_; ++v) out[v] = uf.find(v);
        return out;
    }

    CanonicalLabeling result() const
    {
        CanonicalLabeling out;
        out.order = best_lab_;
        out.position.resize(n_);
        for (std::size_t p = 0; p < n_; ++p) out.position[best_lab_[p]] = static_cast<Vertex>(p);
        out.certificate = best_cert_;
        out.orbit = orbits();
        out.generators = gens_.size();
        return out;
    }

private:
    static constexpr int kNoJump = INT_MAX;
    static constexpr std::size_t kMaxGenerators = 512;

    struct Partition {
        std::vector<Vertex> lab;              // vertices in cell order
        std::vector<std::uint32_t> cell_len;  // valid at cell start positions
        std::vector<std::uint32_t> cell_of;   // vertex -> start of its cell
    };

    std::uint64_t row_word(Vertex v, std::size_t w) const noexcept { return rows_[v * words_ + w]; }

    bool adjacent(Vertex u, Vertex v) const noexcept { return (row_word(u, v >> 6) >> (v & 63)) & 1u; }

    void refine(Partition& p, std::span<const std::uint32_t> splitters)
    {
        queue_.clear();
        for (auto s : splitters) {
            queue_.push_back(s);
            in_queue_[s] = 1;
        }
        std::size_t head = 0;
        while (head < queue_.size()) {
            const std::uint32_t s = queue_[head++];
            in_queue_[s] = 0;
            std::fill(mask_.begin(), mask_.end(), 0);
            for (std::uint32_t i = s; i < s + p.cell_len[s]; ++i) {
                const Vertex v = p.lab[i];
                mask_[v >> 6] |= std::uint64_t{1} << (v & 63);
            }
            for (std::uint32_t start = 0; start < n_;) {
                const std::uint32_t len = p.cell_len[start];
                const std::uint32_t end = start + len;
                if (len > 1) split_cell(p, start, end);
                start = end;
            }
            if (head > 4096 && head * 2 > queue_.size()) {
                queue_.erase(queue_.begin(), queue_.begin() + static_cast<std::ptrdiff_t>(head));
                head = 0;
            }
        }
    }

    void split_cell(Partition& p, std::uint32_t start, std::uint32_t end)
    {
        keyed_.clear();
        bool uniform = true;
        for (std::uint32_t i = start; i < end; ++i) {
            const Vertex v = p.lab[i];
            std::uint32_t c = 0;
            for (std::size_t w = 0; w < words_; ++w) c += std::popcount(row_word(v, w) & mask_[w]);
            if (!keyed_.empty() && c != keyed_.front().first) uniform = false;
            keyed_.emplace_back(c, v);
        }
        if (uniform) return;
        std::sort(keyed_.begin(), keyed_.end());
        const bool was_queued = in_queue_[start] != 0;
        std::uint32_t largest_start = start, largest_len = 0;
        run_starts_.clear();
        for (std::uint32_t i = 0; i < keyed_.size();) {
            std::uint32_t j = i;
            while (j < keyed_.size() && keyed_[j].first == keyed_[i].first) ++j;
            const std::uint32_t run_start = start + i;
            p.cell_len[run_start] = j - i;
            for (std::uint32_t k = i; k < j; ++k) {
                p.lab[start + k] = keyed_[k].second;
                p.cell_of[keyed_[k].second] = run_start;
            }
            run_starts_.push_back(run_start);
            if (j - i > largest_len) {
                largest_len = j - i;
                largest_start = run_start;
            }
            i = j;
        }
        for (auto rs : run_starts_) {
            if (in_queue_[rs]) continue;
            if (!was_queued && rs == largest_start) continue;
            queue_.push_back(rs);
            in_queue_[rs] = 1;
        }
    }

    static void individualize(Partition& p, std::uint32_t cell, Vertex v)
    {
        const std::uint32_t len = p.cell_len[cell];
        auto it = std::find(p.lab.begin() + cell, p.lab.begin() + cell + len, v);
        std::iter_swap(p.lab.begin() + cell, it);
        p.cell_len[cell] = 1;
        p.cell_len[cell + 1] = len - 1;
        p.cell_of[v] = cell;
        for (std::uint32_t i = cell + 1; i < cell + len; ++i) p.cell_of[p.lab[i]] = cell + 1;
    }

    int search(std::size_t depth)
    {
        const Partition& p = levels_[depth];
        std::uint32_t target = static_cast<std::uint32_t>(n_);
        for (std::uint32_t start = 0; start < n_; start += p.cell_len[start]) {
            if (p.cell_len[start] > 1) {
                target = start;
                break;
            }
        }
        if (target == n_) return leaf(depth);

        std::vector<Vertex> candidates(p.lab.begin() + target, p.lab.begin() + target + p.cell_len[target]);
        std::sort(candidates.begin(), candidates.end());
        std::vector<Vertex> explored;
        UnionFind uf;
        std::size_t gens_in_uf = 0;
        bool uf_ready = false;

        for (Vertex u : candidates) {
            if (!explored.empty() && !gens_.empty()) {
                if (!uf_ready || gens_in_uf != gens_.size()) {
                    build_stabilizer_orbits(uf);
                    gens_in_uf = gens_.size();
                    uf_ready = true;
                }
                const Vertex ru = uf.find(u);
                bool same_orbit = false;
                for (Vertex e : explored) {
                    if (uf.find(e) == ru) {
                        same_orbit = true;
                        break;
                    }
                }
                if (same_orbit) continue;
            }
            Partition& child = levels_[depth + 1];
            child = levels_[depth];
            individualize(child, target, u);
            const std::uint32_t splitter[1] = {target};
            refine(child, splitter);
            prefix_.push_back(u);
            const int jump = search(depth + 1);
            prefix_.pop_back();
            explored.push_back(u);
            if (jump < static_cast<int>(depth)) return jump;
        }
        return kNoJump;
    }

    // Orbits of the group generated by the stored automorphisms that fix the
    // current prefix pointwise.
    void build_stabilizer_orbits(UnionFind& uf) const
    {
        uf.reset(n_);
        for (const auto& g : gens_) {
            bool fixes = true;
            for (Vertex v : prefix_) {
                if (g[v] != v) {
                    fixes = false;
                    break;
                }
            }
            if (!fixes) continue;
            for (Vertex v = 0; v < n_; ++v) uf.unite(v, g[v]);
        }
    }

    void certificate_of(const std::vector<Vertex>& lab, std::vector<std::uint64_t>& cert) const
    {
        const std::size_t bits = n_ * (n_ - 1) / 2;
        cert.assign((bits + 63) / 64, 0);
        std::size_t k = 0;
        for (std::size_t j = 1; j < n_; ++j) {
            const Vertex vj = lab[j];
            for (std::size_t i = 0; i < j; ++i, ++k) {
                if (adjacent(lab[i], vj)) cert[k >> 6] |= std::uint64_t{1} << (63 - (k & 63));
            }
        }
    }

    static int common_prefix(const std::vector<Vertex>& a, const std::vector<Vertex>& b)
    {
        std::size_t k = 0;
        while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
        return static_cast<int>(k);
    }

    void record_automorphism(const std::vector<Vertex>& from, const std::vector<Vertex>& to)
    {
        if (gens_.size() >= kMaxGenerators) return;
        std::vector<Vertex> gamma(n_);
        for (std::size_t i = 0; i < n_; ++i) gamma[from[i]] = to[i];
        gens_.push_back(std::move(gamma));
    }

    int leaf(std::size_t depth)
    {
        const auto& lab = levels_[depth].lab;
        certificate_of(lab, cert_);
        if (!have_first_) {
            have_first_ = true;
            first_cert_ = best_cert_ = cert_;
            first_lab_ = best_lab_ = lab;
            first_prefix_ = best_prefix_ = prefix_;
            return kNoJump;
        }
        if (cert_ == first_cert_) {
            record_automorphism(first_lab_, lab);
            return common_prefix(prefix_, first_prefix_);
        }
        if (cert_ < best_cert_) {
            best_cert_ = cert_;
            best_lab_ = lab;
            best_prefix_ = prefix_;
            return kNoJump;
        }
        if (cert_ == best_cert_) {
            record_automorphism(best_lab_, lab);
            return common_prefix(prefix_, best_prefix_);
        }
        return kNoJump;
    }

    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::span<const std::uint64_t> rows_;

    std::vector<Partition> levels_;
    std::vector<Vertex> prefix_;
    std::vector<std::uint64_t> mask_;
    std::vector<std::uint32_t> queue_;
    std::vector<char> in_queue_;
    std::vector<std::pair<std::uint32_t, Vertex>> keyed_;
    std::vector<std::uint32_t> run_starts_;

    bool have_first_ = false;
    std::vector<std::uint64_t> cert_, first_cert_, best_cert_;
    std::vector<Vertex> first_lab_, best_lab_;
    std::vector<Vertex> first_prefix_, best_prefix_;
    std::vector<std::vector<Vertex>> gens_;
};

/// graph6 line for the order-n graph whose upper-triangular bits are `cert`.
inline std::string certificate_graph6(std::size_t n, std::span<const std::uint64_t> cert)
{
    std::string out;
    append_graph6_order(out, n);
    SixBitWriter writer(out);
    const std::size_t bits = n * (n - 1) / 2;
    for (std::size_t k = 0; k < bits; ++k) writer.put((cert[k >> 6] >> (63 - (k & 63))) & 1u);
    writer.finish();
    return out;
}

}  // namespace detail

/// Canonical labelling of the graph given by packed bit rows.
inline CanonicalLabeling canonical_labeling(std::size_t n, std::size_t words, std::span<const std::uint64_t> rows)
{
    detail::CanonSearch search;
    search.search_graph(n, words, rows);
    return search.result();
}

inline CanonicalLabeling canonical_labeling(const Graph& g)
{
    return canonical_labeling(g.order(), g.words_per_row(), g.bit_rows());
}

/// The graph relabelled so that its graph6 encoding is the canonical form.
inline Graph canonical_graph(const Graph& g)
{
    return g.relabeled(canonical_labeling(g).position);
}

/// Isomorphism-invariant encoding: graph6 of the canonically relabelled graph.
inline std::string canonical_form(const Graph& g)
{
    const auto cl = canonical_labeling(g);
    return detail::certificate_graph6(g.order(), cl.certificate);
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace ewi
