/// @file closed_forms.hpp
/// @brief Exact integer evaluation of Wiener-index closed forms and bounds.
///
/// Fractional formulas are evaluated as scaled integers (times 8 or 24) in
/// 128-bit arithmetic; every implied division is checked to be exact.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ewi {

class inexact_formula_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace closed {

__extension__ using i128 = __int128;

/// Largest order accepted by the cubic formulas (keeps n^3 inside 64 bits).
inline constexpr std::int64_t kMaxFormulaOrder = 1'000'000;

namespace detail {

inline void require(bool ok, const char* what)
{
    if (!ok) throw std::invalid_argument(what);
}

inline void require_order(std::int64_t n, std::int64_t lo, const char* what)
{
    require(n >= lo && n <= kMaxFormulaOrder, what);
}

inline std::int64_t exact_div(i128 scaled, std::int64_t by, const char* formula)
{
    if (scaled % by != 0) throw inexact_formula_error(std::string(formula) + ": scaled value not divisible");
    return static_cast<std::int64_t>(scaled / by);
}

}  // namespace detail

/// W(C_n): n^3/8 for even n, (n^3-n)/8 for odd n.
inline std::int64_t w_cycle(std::int64_t n)
{
    detail::require_order(n, 3, "w_cycle needs n >= 3");
    const i128 N = n;
    return detail::exact_div(n % 2 == 0 ? N * N * N : N * N * N - N, 8, "w_cycle");
}

/// 8 * W(C_{n,3}).
inline i128 w_cn3_times8(std::int64_t n)
{
    const i128 N = n;
    return n % 2 == 0 ? N * N * N - 2 * N * N + 12 * N - 16 : N * N * N - 2 * N * N + 11 * N - 18;
}

/// W(C_{n,3}), a triangle and an (n-2)-cycle sharing a vertex.
inline std::int64_t w_cn3(std::int64_t n)
{
    detail::require_order(n, 5, "w_cn3 needs n >= 5");
    return detail::exact_div(w_cn3_times8(n), 8, "w_cn3");
}

/// Parity-free envelope of 8 * W(C_{n,3}): {n^3-2n^2+11n-18, n^3-2n^2+12n-16}.
struct ScaledRange {
    i128 lower;
    i128 upper;
};

inline ScaledRange w_cn3_envelope_times8(std::int64_t n)
{
    const i128 N = n;
    return {N * N * N - 2 * N * N + 11 * N - 18, N * N * N - 2 * N * N + 12 * N - 16};
}

/// W(F_{n,a}) from the four parity cases.
inline std::int64_t w_fna(std::int64_t n, std::int64_t a)
{
    detail::require_order(n, 6, "w_fna needs n >= 6");
    detail::require(a >= 4 && a <= n - 2, "w_fna needs 4 <= a <= n-2");
    const i128 N = n, A = a;
    i128 s = A * (N - 2) * (A - N - 2) + N * (N * N + 2 * N - 4);
    const bool n_even = n % 2 == 0, a_even = a % 2 == 0;
    if (n_even && !a_even) s += -3 * N + 6;
    if (!n_even && a_even) s += -N - A + 2;
    if (!n_even && !a_even) s += A - 2 * N;
    return detail::exact_div(s, 8, "w_fna");
}

/// C(n+1, 3), the Wiener index of the path P_n.
inline std::int64_t path_max(std::int64_t n)
{
    detail::require_order(n, 1, "path_max needs n >= 1");
    const i128 N = n;
    return detail::exact_div((N + 1) * N * (N - 1), 6, "path_max");
}

struct PlesnikBounds {
    std::int64_t w_2edge_max;     ///< W bound for 2-edge-connected graphs
    std::int64_t sigma_2conn_max; ///< transmission bound, 2-connected
    std::int64_t sigma_2edge_max; ///< transmission bound, 2-edge-connected (floor of n(n-1)/3)
};

inline PlesnikBounds plesnik_bounds(std::int64_t n)
{
    detail::require_order(n, 3, "plesnik_bounds needs n >= 3");
    return {w_cycle(n), n * n / 4, n * (n - 1) / 3};
}

/// Minimum Wiener index of an Eulerian graph of order n: C(n,2), plus n/2 when n is even.
inline std::int64_t min_w_eulerian(std::int64_t n)
{
    detail::require_order(n, 3, "min_w_eulerian needs n >= 3");
    const std::int64_t pairs = n * (n - 1) / 2;
    return n % 2 == 0 ? pairs + n / 2 : pairs;
}

/// 2 C(n,2) - m: the Wiener index of any diameter <= 2 graph of order n and size m.
inline std::int64_t w_lower_given_size(std::int64_t n, std::int64_t m)
{
    detail::require_order(n, 1, "w_lower_given_size needs n >= 1");
    detail::require(m >= 0 && m <= n * (n - 1) / 2, "w_lower_given_size needs 0 <= m <= C(n,2)");
    return n * (n - 1) - m;
}

/// Lower bound on the size of an Eulerian graph of order n >= 3 and diameter 2:
/// 3(n-1)/2 for odd n, 2n-5 for even n.
inline std::int64_t diam2_eulerian_size_bound(std::int64_t n)
{
    detail::require_order(n, 3, "diam2_eulerian_size_bound needs n >= 3");
    return n % 2 == 1 ? 3 * (n - 1) / 2 : 2 * n - 5;
}

/// The same value where it is known to be attained (n >= 9).
inline std::int64_t min_size_diam2(std::int64_t n)
{
    detail::require_order(n, 9, "min_size_diam2 needs n >= 9");
    return diam2_eulerian_size_bound(n);
}

/// Exact rational with denominator 24.
struct Over24 {
    std::int64_t numerator = 0;
    static constexpr std::int64_t denominator = 24;

    std::string str() const { return std::to_string(numerator) + "/24"; }
    friend auto operator<=>(const Over24&, const Over24&) = default;
};

/// 24 f(n,a) = (a-1)n^2 + (a^2-18a+8)n - 2a^3 + 13a^2 + 25a - 39, the lower
/// bound on W(C_{n,3}) - W(G) for separable G with smallest endblock of order a.
inline Over24 theorem2_gap(std::int64_t n, std::int64_t a)
{
    detail::require_order(n, 26, "theorem2_gap needs n >= 26");
    detail::require(a >= 3 && 2 * a <= n + 1, "theorem2_gap needs 3 <= a <= (n+1)/2");
    const i128 N = n, A = a;
    const i128 v = (A - 1) * N * N + (A * A - 18 * A + 8) * N - 2 * A * A * A + 13 * A * A + 25 * A - 39;
    return {static_cast<std::int64_t>(v)};
}

enum class BoundKind {
    w_cycle,
    w_cn3,
    w_fna,
    path_max,
    plesnik_w_2edge,
    plesnik_sigma_2conn,
    plesnik_sigma_2edge,
    min_w_eulerian,
    w_lower_given_size,
    min_size_diam2,
    theorem2_gap,
};

inline BoundKind parse_bound_kind(std::string_view s)
{
    if (s == "w_cycle") return BoundKind::w_cycle;
    if (s == "w_cn3") return BoundKind::w_cn3;
    if (s == "w_fna") return BoundKind::w_fna;
    if (s == "path_max") return BoundKind::path_max;
    if (s == "plesnik_w_2edge") return BoundKind::plesnik_w_2edge;
    if (s == "plesnik_sigma_2conn") return BoundKind::plesnik_sigma_2conn;
    if (s == "plesnik_sigma_2edge") return BoundKind::plesnik_sigma_2edge;
    if (s == "min_w_eulerian") return BoundKind::min_w_eulerian;
    if (s == "w_lower_given_size") return BoundKind::w_lower_given_size;
    if (s == "min_size_diam2") return BoundKind::min_size_diam2;
    if (s == "theorem2_gap") return BoundKind::theorem2_gap;
    throw std::invalid_argument("unknown formula '" + std::string(s) + "'");
}

/// Decimal text of a formula value (theorem2_gap prints as "numerator/24").
inline std::string evaluate(BoundKind kind, std::int64_t n, std::int64_t a, std::int64_t m)
{
    switch (kind) {
    case BoundKind::w_cycle: return std::to_string(w_cycle(n));
    case BoundKind::w_cn3: return std::to_string(w_cn3(n));
    case BoundKind::w_fna: return std::to_string(w_fna(n, a));
    case BoundKind::path_max: return std::to_string(path_max(n));
    case BoundKind::plesnik_w_2edge: return std::to_string(plesnik_bounds(n).w_2edge_max);
    case BoundKind::plesnik_sigma_2conn: return std::to_string(plesnik_bounds(n).sigma_2conn_max);
    case BoundKind::plesnik_sigma_2edge: return std::to_string(plesnik_bounds(n).sigma_2edge_max);
    case BoundKind::min_w_eulerian: return std::to_string(min_w_eulerian(n));
    case BoundKind::w_lower_given_size: return std::to_string(w_lower_given_size(n, m));
    case BoundKind::min_size_diam2: return std::to_string(min_size_diam2(n));
    case BoundKind::theorem2_gap: return theorem2_gap(n, a).str();
    }
    throw std::invalid_argument("unknown formula");
}

}  // namespace closed
}  // namespace ewi
