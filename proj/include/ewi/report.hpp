/// @file report.hpp
/// @brief JSON and CSV rendering of claim reports, rank entries and min tables.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "enumerator.hpp"
#include "verifier.hpp"

namespace ewi {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const ClaimReport& r, bool timing = true)
{
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return ordered_json{
        {"claim", r.claim},
        {"params", params},
        {"status", to_string(r.status)},
        {"witnesses", r.witnesses},
        {"elapsed_ms", timing ? r.elapsed_ms : 0},
        {"notes", r.notes},
    };
}

inline ordered_json to_json(const std::vector<ClaimReport>& reports, bool timing = true)
{
    if (reports.size() == 1) return to_json(reports.front(), timing);
    ordered_json arr = ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r, timing));
    return arr;
}

inline ordered_json to_json(const RankEntry& e)
{
    return ordered_json{{"rank", e.rank}, {"wiener", e.wiener}, {"graph6", e.graph6}};
}

inline ordered_json to_json(const MinTableRow& row)
{
    ordered_json j{{"n", row.n}, {"m", row.m}};
    j["min_wiener"] = row.min_wiener ? ordered_json(*row.min_wiener) : ordered_json(nullptr);
    j["witness_count"] = row.witnesses.size();
    j["witnesses"] = row.witnesses;
    return j;
}

inline std::string min_table_csv_header() { return "n,m,min_wiener,witness_count,witnesses"; }

/// One CSV row; witnesses are joined by ';' (never a graph6 byte).
inline std::string to_csv(const MinTableRow& row)
{
    std::string out = std::to_string(row.n) + "," + std::to_string(row.m) + ",";
    if (row.min_wiener) out += std::to_string(*row.min_wiener);
    out += "," + std::to_string(row.witnesses.size()) + ",";
    for (std::size_t i = 0; i < row.witnesses.size(); ++i) {
        if (i) out += ";";
        out += row.witnesses[i];
    }
    return out;
}

}  // namespace ewi
