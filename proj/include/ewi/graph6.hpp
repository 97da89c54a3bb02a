/// @file graph6.hpp
/// @brief graph6 line encoding (McKay's format): N(n) followed by R(x), the
/// upper-triangular adjacency bits taken column by column in 6-bit chunks,
/// each chunk offset by 63.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace ewi {

class graph6_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void append_graph6_order(std::string& out, std::uint64_t n)
{
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
}

/// Packs a bit stream (MSB-first in 6-bit groups) into graph6 body bytes.
class SixBitWriter {
public:
    explicit SixBitWriter(std::string& out) : out_(out) {}
    void put(bool bit)
    {
        acc_ = static_cast<std::uint8_t>((acc_ << 1) | (bit ? 1 : 0));
        if (++filled_ == 6) flush_full();
    }
    void finish()
    {
        if (filled_ == 0) return;
        acc_ = static_cast<std::uint8_t>(acc_ << (6 - filled_));
        flush_full();
    }

private:
    void flush_full()
    {
        out_.push_back(static_cast<char>(acc_ + 63));
        acc_ = 0;
        filled_ = 0;
    }
    std::string& out_;
    std::uint8_t acc_ = 0;
    int filled_ = 0;
};

}  // namespace detail

/// Encodes `g` as one graph6 line without the trailing newline.
inline std::string graph6_encode(const Graph& g)
{
    std::string out;
    const std::size_t n = g.order();
    detail::append_graph6_order(out, n);
    out.reserve(out.size() + (n * (n - 1) / 2 + 5) / 6);
    detail::SixBitWriter writer(out);
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) writer.put(g.adjacent(i, j));
    }
    writer.finish();
    return out;
}

/// Decodes one graph6 line. A leading ">>graph6<<" header and a trailing
/// newline are accepted; anything else outside 63..126 is rejected.
inline Graph graph6_decode(std::string_view line)
{
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw graph6_error("graph6: empty line");
    for (char c : line) {
        const auto b = static_cast<unsigned char>(c);
        if (b < 63 || b > 126) throw graph6_error("graph6: byte outside printable range 63..126");
    }

    std::size_t pos = 0;
    auto chunk = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(line[i]) - 63); };
    std::uint64_t n = 0;
    if (chunk(0) < 63) {
        n = chunk(0);
        pos = 1;
    } else if (line.size() >= 2 && chunk(1) == 63) {
        if (line.size() < 8) throw graph6_error("graph6: truncated 8-byte order header");
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | chunk(i);
        pos = 8;
    } else {
        if (line.size() < 4) throw graph6_error("graph6: truncated 4-byte order header");
        for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | chunk(i);
        pos = 4;
    }
    if (n == 0) throw graph6_error("graph6: order 0 is not supported");
    if (n > Graph::kMaxOrder) throw graph6_error("graph6: order " + std::to_string(n) + " exceeds limit");

    const std::uint64_t bits = n * (n - 1) / 2;
    const std::uint64_t body = (bits + 5) / 6;
    if (line.size() - pos < body) throw graph6_error("graph6: body shorter than the order requires");
    if (line.size() - pos > body) throw graph6_error("graph6: trailing bytes after graph body");

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const std::uint64_t byte = chunk(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    for (; k < body * 6; ++k) {
        if ((chunk(pos + k / 6) >> (5 - k % 6)) & 1) throw graph6_error("graph6: nonzero padding bits");
    }
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

}  // namespace ewi
