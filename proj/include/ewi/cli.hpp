/// @file cli.hpp
/// @brief The `ewi` command line: argument parsing and subcommand dispatch.
///
/// Exit codes: 0 success, 1 a verified claim was violated, 2 usage,
/// input or envelope error.

#pragma once

#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "closed_forms.hpp"
#include "constructions.hpp"
#include "distance.hpp"
#include "enumerator.hpp"
#include "graph6.hpp"
#include "report.hpp"
#include "verifier.hpp"

namespace ewi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;

struct Range {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

inline Range parse_range(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("range must look like A:B, got '" + text + "'");
    std::size_t used_lo = 0, used_hi = 0;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    Range r;
    try {
        r.lo = std::stoul(a, &used_lo);
        r.hi = std::stoul(b, &used_hi);
    } catch (const std::exception&) {
        throw std::invalid_argument("range must look like A:B, got '" + text + "'");
    }
    if (used_lo != a.size() || used_hi != b.size() || r.lo > r.hi) {
        throw std::invalid_argument("range must look like A:B with A <= B, got '" + text + "'");
    }
    return r;
}

struct Options {
    std::string format;
    std::optional<std::size_t> n;
    std::optional<std::size_t> a;
    std::optional<std::size_t> m;
    std::string n_range;
    std::size_t top = 1;
    bool minimize = false;
    std::string claim;
    bool count_only = false;
    std::optional<std::size_t> shards;
    std::optional<std::size_t> shard;
    std::size_t jobs = 1;
    bool no_timing = false;

    bool connected = false;
    bool even = false;
    bool eulerian = false;
    bool two_connected = false;
    bool two_edge_connected = false;
    std::optional<std::uint32_t> diameter_max;
    std::optional<std::size_t> m_min;
    std::optional<std::size_t> m_max;

    std::string family;
    std::string formula;
};

namespace detail {

inline std::size_t need(const std::optional<std::size_t>& v, const char* flag)
{
    if (!v) throw std::invalid_argument(std::string("missing required flag ") + flag);
    return *v;
}

inline void check_format(const std::string& format, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed) {
        if (format == f) return;
    }
    throw std::invalid_argument("format '" + format + "' is not available for this subcommand");
}

inline EnumFilter make_filter(const Options& o)
{
    EnumFilter f;
    f.order = need(o.n, "--n");
    f.require_connected = o.connected || o.eulerian;
    f.require_even_degrees = o.even || o.eulerian;
    f.require_two_connected = o.two_connected;
    f.require_two_edge_connected = o.two_edge_connected;
    f.diameter_max = o.diameter_max;
    if (o.m_min || o.m_max) {
        const std::size_t all = f.order * (f.order - 1) / 2;
        f.size_range = std::pair<std::size_t, std::size_t>{o.m_min.value_or(0), o.m_max.value_or(all)};
    }
    f.validate();
    return f;
}

inline std::optional<EnumPartition> make_partition(const Options& o)
{
    if (!o.shards && !o.shard) return std::nullopt;
    if (!o.shards || !o.shard) throw std::invalid_argument("--shards and --shard must be given together");
    EnumPartition p{*o.shards, *o.shard};
    p.validate();
    return p;
}

inline int run_wiener(const Options& o, std::istream& in, std::ostream& out, std::ostream& err)
{
    check_format(o.format, {"text", "csv", "json"});
    int status = kExitOk;
    std::string line;
    std::size_t lineno = 0;
    ordered_json rows = ordered_json::array();
    if (o.format == "csv") out << "graph6,wiener\n";
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::string value;
        try {
            const Graph g = graph6_decode(line);
            value = is_connected(g) ? std::to_string(wiener(g)) : "INF";
        } catch (const std::exception& e) {
            err << "line " << lineno << ": " << e.what() << "\n";
            status = kExitUsage;
            continue;
        }
        if (o.format == "json") {
            rows.push_back({{"graph6", line}, {"wiener", value}});
        } else {
            out << line << (o.format == "csv" ? "," : " ") << value << "\n";
        }
    }
    if (o.format == "json" && !rows.empty()) out << rows.dump(2) << "\n";
    return status;
}

inline int run_construct(const Options& o, std::ostream& out)
{
    check_format(o.format, {"g6", "text"});
    FamilyId id;
    id.tag = parse_family(o.family);
    id.a = o.a.value_or(0);
    if ((id.tag == Family::c_na || id.tag == Family::f_na) && !o.a) {
        throw std::invalid_argument("missing required flag --a");
    }
    std::vector<std::size_t> orders;
    if (!o.n_range.empty()) {
        const Range r = parse_range(o.n_range);
        for (std::size_t n = r.lo; n <= r.hi; ++n) orders.push_back(n);
    } else {
        orders.push_back(need(o.n, "--n"));
    }
    std::vector<std::string> lines;
    for (std::size_t n : orders) {
        id.n = n;
        for (const auto& g : construct(id)) lines.push_back(graph6_encode(g));
    }
    for (const auto& l : lines) out << l << "\n";
    return kExitOk;
}

inline int run_formula(const Options& o, std::ostream& out)
{
    check_format(o.format, {"text", "json"});
    const auto kind = closed::parse_bound_kind(o.formula);
    const auto n = static_cast<std::int64_t>(need(o.n, "--n"));
    const auto a = static_cast<std::int64_t>(o.a.value_or(0));
    const auto m = static_cast<std::int64_t>(o.m.value_or(0));
    if ((kind == closed::BoundKind::w_fna || kind == closed::BoundKind::theorem2_gap) && !o.a) {
        throw std::invalid_argument("missing required flag --a");
    }
    if (kind == closed::BoundKind::w_lower_given_size && !o.m) throw std::invalid_argument("missing required flag --m");
    const std::string value = closed::evaluate(kind, n, a, m);
    if (o.format == "json") {
        ordered_json j{{"formula", o.formula}, {"n", n}};
        if (o.a) j["a"] = a;
        if (o.m) j["m"] = m;
        j["value"] = value;
        out << j.dump(2) << "\n";
    } else {
        out << value << "\n";
    }
    return kExitOk;
}

inline int run_enumerate(const Options& o, std::ostream& out)
{
    check_format(o.format, {"g6", "text", "json"});
    const EnumFilter f = make_filter(o);
    const auto part = make_partition(o);
    if (o.count_only) {
        std::size_t total = 0;
        if (part) {
            total = count(f, part);
        } else {
            for (std::size_t c : run_shards(o.jobs, [&](EnumPartition p) { return count(f, p); })) total += c;
        }
        if (o.format == "json") {
            out << ordered_json{{"n", f.order}, {"count", total}}.dump(2) << "\n";
        } else {
            out << total << "\n";
        }
        return kExitOk;
    }
    if (o.format == "json") {
        const auto graphs = part ? collect(f, part) : collect_parallel(f, o.jobs);
        ordered_json arr = ordered_json::array();
        for (const auto& g : graphs) arr.push_back(g.canonical);
        out << arr.dump(2) << "\n";
        return kExitOk;
    }
    if (part || o.jobs <= 1) {
        enumerate(f, part, [&](const Graph&, std::string_view canon) { out << canon << "\n"; });
    } else {
        for (const auto& g : collect_parallel(f, o.jobs)) out << g.canonical << "\n";
    }
    return kExitOk;
}

inline int run_rank(const Options& o, std::ostream& out)
{
    check_format(o.format, {"text", "csv", "json"});
    const EnumFilter f = make_filter(o);
    const auto entries =
        extremal_scan(f, o.minimize ? Objective::min_wiener : Objective::max_wiener, o.top, o.jobs);
    if (o.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& e : entries) arr.push_back(to_json(e));
        out << arr.dump(2) << "\n";
        return kExitOk;
    }
    if (o.format == "csv") out << "rank,wiener,graph6\n";
    const char* sep = o.format == "csv" ? "," : " ";
    for (const auto& e : entries) out << e.rank << sep << e.wiener << sep << e.graph6 << "\n";
    return kExitOk;
}

inline int run_verify(const Options& o, std::ostream& out)
{
    check_format(o.format, {"json"});
    const bool sweep = o.claim == "L3" || o.claim == "GAP";
    std::vector<std::string> ids;
    if (o.claim == "all") {
        ids = claim_ids();
    } else {
        bool known = false;
        for (const auto& id : claim_ids()) known = known || id == o.claim;
        if (!known) throw std::invalid_argument("unknown claim '" + o.claim + "'");
        ids.push_back(o.claim);
    }
    Range range{26, 500};
    if (!o.n_range.empty()) {
        range = parse_range(o.n_range);
    } else if (o.n && sweep) {
        range = {*o.n, *o.n};
    }
    if (!sweep && o.claim != "all" && !o.n && o.n_range.empty()) {
        throw std::invalid_argument("missing required flag --n or --n-range");
    }
    const VerifyOptions vo{o.jobs};
    std::vector<ClaimReport> reports;
    for (const auto& id : ids) {
        const bool id_sweep = id == "L3" || id == "GAP";
        if (id_sweep) {
            reports.push_back(verify_claim(id, 0, range.lo, range.hi, vo));
            continue;
        }
        if (o.claim == "all") {
            if (!o.n) throw std::invalid_argument("--claim all needs --n");
            if (id == "FIG1" && !has_figure1_exceptions(*o.n)) continue;
            if (id == "L2" && *o.n < 6) continue;
            if (id == "T2" && *o.n < 5) continue;
            reports.push_back(verify_claim(id, *o.n, range.lo, range.hi, vo));
            continue;
        }
        if (!o.n_range.empty()) {
            for (std::size_t n = range.lo; n <= range.hi; ++n) {
                reports.push_back(verify_claim(id, n, range.lo, range.hi, vo));
            }
        } else {
            reports.push_back(verify_claim(id, *o.n, range.lo, range.hi, vo));
        }
    }
    out << to_json(reports, !o.no_timing).dump(2) << "\n";
    bool violated = false, skipped = false;
    for (const auto& r : reports) {
        violated = violated || r.status == ClaimStatus::violated;
        skipped = skipped || r.status == ClaimStatus::skipped_out_of_envelope;
    }
    if (violated) return kExitViolated;
    return skipped ? kExitUsage : kExitOk;
}

inline int run_min_table(const Options& o, std::ostream& out)
{
    check_format(o.format, {"csv", "json"});
    const std::size_t n = need(o.n, "--n");
    const std::size_t m_max = o.m.value_or(n <= kVerifierEnvelope ? min_table_limit(n) : 0);
    const auto rows = min_wiener_table(n, m_max, VerifyOptions{o.jobs});
    if (o.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        out << arr.dump(2) << "\n";
        return kExitOk;
    }
    out << min_table_csv_header() << "\n";
    for (const auto& r : rows) out << to_csv(r) << "\n";
    return kExitOk;
}

inline void add_filter_flags(CLI::App* sub, Options& o)
{
    sub->add_flag("--connected", o.connected, "Only connected graphs");
    sub->add_flag("--even", o.even, "Only graphs with every degree even");
    sub->add_flag("--eulerian", o.eulerian, "Connected with every degree even");
    sub->add_flag("--two-connected", o.two_connected, "Only 2-connected graphs");
    sub->add_flag("--two-edge-connected", o.two_edge_connected, "Only 2-edge-connected graphs");
    sub->add_option("--diameter-max", o.diameter_max, "Upper bound on the diameter");
    sub->add_option("--m-min", o.m_min, "Smallest size");
    sub->add_option("--m-max", o.m_max, "Largest size");
}

}  // namespace detail

/// Parses `args` (without the program name) and runs one subcommand.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Wiener index workbench for Eulerian graphs", "ewi"};
    app.require_subcommand(1, 1);
    Options o;

    auto* wiener_cmd = app.add_subcommand("wiener", "Wiener index of each graph6 line on standard input");
    wiener_cmd->add_option("--format", o.format, "text, csv or json")->default_str("text");

    auto* construct_cmd = app.add_subcommand("construct", "Emit a named graph family as graph6");
    construct_cmd->add_option("family", o.family, "cycle, path, complete, kpm, cna, fna, figure1, mind2")->required();
    construct_cmd->add_option("--n", o.n, "Order");
    construct_cmd->add_option("--a", o.a, "Block parameter for cna / fna");
    construct_cmd->add_option("--n-range", o.n_range, "Orders A:B");
    construct_cmd->add_option("--format", o.format, "g6");

    auto* formula_cmd = app.add_subcommand("formula", "Evaluate a closed form");
    formula_cmd->add_option("name", o.formula, "Formula name")->required();
    formula_cmd->add_option("--n", o.n, "Order");
    formula_cmd->add_option("--a", o.a, "Block parameter");
    formula_cmd->add_option("--m", o.m, "Size");
    formula_cmd->add_option("--format", o.format, "text or json");

    auto* enum_cmd = app.add_subcommand("enumerate", "Enumerate graphs up to isomorphism");
    enum_cmd->add_option("--n", o.n, "Order")->required();
    detail::add_filter_flags(enum_cmd, o);
    enum_cmd->add_flag("--count", o.count_only, "Print only the number of graphs");
    enum_cmd->add_option("--shards", o.shards, "Total number of shards");
    enum_cmd->add_option("--shard", o.shard, "Index of this shard");
    enum_cmd->add_option("--jobs", o.jobs, "Worker threads");
    enum_cmd->add_option("--format", o.format, "g6, text or json");

    auto* rank_cmd = app.add_subcommand("rank", "Extremal Wiener values with all attaining graphs");
    rank_cmd->add_option("--n", o.n, "Order")->required();
    detail::add_filter_flags(rank_cmd, o);
    rank_cmd->add_option("--top", o.top, "Number of distinct values kept");
    rank_cmd->add_flag("--min", o.minimize, "Smallest values instead of largest");
    rank_cmd->add_option("--jobs", o.jobs, "Worker threads");
    rank_cmd->add_option("--format", o.format, "text, csv or json");

    auto* verify_cmd = app.add_subcommand("verify", "Check one claim and print a JSON report");
    verify_cmd->add_option("--claim", o.claim, "Claim id or 'all'")->required();
    verify_cmd->add_option("--n", o.n, "Order");
    verify_cmd->add_option("--n-range", o.n_range, "Orders A:B");
    verify_cmd->add_option("--jobs", o.jobs, "Worker threads");
    verify_cmd->add_flag("--no-timing", o.no_timing, "Report elapsed_ms as 0");
    verify_cmd->add_option("--format", o.format, "json");

    auto* table_cmd = app.add_subcommand("min-table", "Minimum Wiener index of Eulerian graphs by size");
    table_cmd->add_option("--n", o.n, "Order")->required();
    table_cmd->add_option("--m", o.m, "Largest size in the table");
    table_cmd->add_option("--jobs", o.jobs, "Worker threads");
    table_cmd->add_option("--format", o.format, "csv or json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "ewi: " << e.what() << "\n";
        return kExitUsage;
    }
    if (o.jobs == 0) {
        err << "ewi: --jobs must be at least 1\n";
        return kExitUsage;
    }

    try {
        if (wiener_cmd->parsed()) {
            if (o.format.empty()) o.format = "text";
            return detail::run_wiener(o, in, out, err);
        }
        if (construct_cmd->parsed()) {
            if (o.format.empty()) o.format = "g6";
            return detail::run_construct(o, out);
        }
        if (formula_cmd->parsed()) {
            if (o.format.empty()) o.format = "text";
            return detail::run_formula(o, out);
        }
        if (enum_cmd->parsed()) {
            if (o.format.empty()) o.format = "g6";
            return detail::run_enumerate(o, out);
        }
        if (rank_cmd->parsed()) {
            if (o.format.empty()) o.format = "text";
            return detail::run_rank(o, out);
        }
        if (verify_cmd->parsed()) {
            if (o.format.empty()) o.format = "json";
            return detail::run_verify(o, out);
        }
        if (table_cmd->parsed()) {
            if (o.format.empty()) o.format = "csv";
            return detail::run_min_table(o, out);
        }
    } catch (const std::exception& e) {
        err << "ewi: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, in, out, err);
}

}  // namespace ewi::cli
