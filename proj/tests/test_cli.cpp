#include <gtest/gtest.h>

#include <sstream>

#include "ewi/canonical.hpp"
#include "ewi/cli.hpp"
#include "ewi/constructions.hpp"

using namespace ewi;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, WienerText)
{
    const auto r = call({"wiener"}, "DhC\nC~\n\nA?\n");
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_EQ(r.out, "DhC 20\nC~ 6\nA? INF\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, WienerCsvAndJson)
{
    EXPECT_EQ(call({"wiener", "--format", "csv"}, "C~\n").out, "graph6,wiener\nC~,6\n");
    const auto j = nlohmann::json::parse(call({"wiener", "--format", "json"}, "C~\r\n").out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["graph6"], "C~");
    EXPECT_EQ(j[0]["wiener"], "6");
}

TEST(Cli, WienerMalformedLineKeepsGoing)
{
    const auto r = call({"wiener"}, "C~\nnot-graph6\nDhC\n");
    EXPECT_EQ(r.code, cli::kExitUsage);
    EXPECT_EQ(r.out, "C~ 6\nDhC 20\n");
    EXPECT_EQ(r.err.rfind("line 2: ", 0), 0u);
}

TEST(Cli, WienerEmptyInput)
{
    const auto r = call({"wiener"}, "");
    EXPECT_EQ(r.code, cli::kExitOk);
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ConstructPipesIntoWiener)
{
    const auto c = call({"construct", "cna", "--n", "8", "--a", "3"});
    ASSERT_EQ(c.code, cli::kExitOk);
    EXPECT_EQ(call({"wiener"}, c.out).out, graph6_encode(c_na(8, 3)) + " 58\n");

    const auto range = call({"construct", "cycle", "--n-range", "5:7"});
    EXPECT_EQ(range.out, graph6_encode(cycle(5)) + "\n" + graph6_encode(cycle(6)) + "\n" + graph6_encode(cycle(7)) + "\n");
    EXPECT_EQ(call({"construct", "cna", "--n", "4", "--a", "3"}).code, cli::kExitUsage);
    EXPECT_EQ(call({"construct", "wheel", "--n", "6"}).code, cli::kExitUsage);
}

TEST(Cli, Formula)
{
    EXPECT_EQ(call({"formula", "w_cn3", "--n", "26"}).out, "2065\n");
    EXPECT_EQ(call({"formula", "theorem2_gap", "--n", "26", "--a", "3"}).out, "489/24\n");
    const auto j = nlohmann::json::parse(call({"formula", "w_cycle", "--n", "6", "--format", "json"}).out);
    EXPECT_EQ(j["value"], "27");
    EXPECT_EQ(call({"formula", "w_cn3", "--n", "3"}).code, cli::kExitUsage);
}

TEST(Cli, Enumerate)
{
    EXPECT_EQ(call({"enumerate", "--n", "7", "--eulerian", "--count"}).out, "37\n");
    EXPECT_EQ(call({"enumerate", "--n", "8", "--two-connected", "--count", "--jobs", "2"}).out, "7123\n");
    const auto g6 = call({"enumerate", "--n", "5", "--eulerian"});
    EXPECT_EQ(std::count(g6.out.begin(), g6.out.end(), '\n'), 4);
    EXPECT_NE(g6.out.find(canonical_form(c_na(5, 3))), std::string::npos);

    std::string merged;
    for (int s = 0; s < 3; ++s) {
        merged += call({"enumerate", "--n", "6", "--connected", "--shards", "3", "--shard", std::to_string(s)}).out;
    }
    EXPECT_EQ(std::count(merged.begin(), merged.end(), '\n'), 112);
    EXPECT_EQ(call({"enumerate", "--n", "6", "--shards", "3"}).code, cli::kExitUsage);
    EXPECT_EQ(call({"enumerate", "--n", "13", "--count"}).code, cli::kExitUsage);
}

TEST(Cli, Rank)
{
    const auto r = call({"rank", "--n", "7", "--eulerian", "--top", "2"});
    EXPECT_EQ(r.out, "1 42 " + canonical_form(cycle(7)) + "\n2 40 " + canonical_form(c_na(7, 4)) + "\n");
    const auto csv = call({"rank", "--n", "5", "--eulerian", "--min", "--format", "csv"});
    EXPECT_EQ(csv.out, "rank,wiener,graph6\n1,10," + canonical_form(complete(5)) + "\n");
}

TEST(Cli, VerifyExitCodes)
{
    const auto ok = call({"verify", "--claim", "T1", "--n", "7", "--no-timing"});
    EXPECT_EQ(ok.code, cli::kExitOk);
    const auto j = nlohmann::json::parse(ok.out);
    EXPECT_EQ(j["claim"], "T1");
    EXPECT_EQ(j["status"], "verified");
    EXPECT_EQ(j["elapsed_ms"], 0);
    EXPECT_EQ(j["params"]["n"], 7);

    EXPECT_EQ(call({"verify", "--claim", "P3", "--n", "5"}).code, cli::kExitViolated);
    EXPECT_EQ(call({"verify", "--claim", "T1", "--n", "11"}).code, cli::kExitUsage);
    EXPECT_EQ(call({"verify", "--claim", "X9", "--n", "5"}).code, cli::kExitUsage);
    EXPECT_EQ(call({"verify", "--claim", "T1"}).code, cli::kExitUsage);

    const auto sweep = call({"verify", "--claim", "T1", "--n-range", "5:7"});
    EXPECT_EQ(nlohmann::json::parse(sweep.out).size(), 3u);
    EXPECT_EQ(call({"verify", "--claim", "GAP", "--n-range", "26:60"}).code, cli::kExitOk);
}

TEST(Cli, VerifyIsByteIdenticalWithoutTiming)
{
    const std::vector<std::string> args = {"verify", "--claim", "all", "--n", "7", "--no-timing"};
    const auto a = call(args);
    const auto b = call(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
    EXPECT_GT(nlohmann::json::parse(a.out).size(), 10u);
}

TEST(Cli, MinTable)
{
    const auto r = call({"min-table", "--n", "9", "--m", "11"});
    EXPECT_EQ(r.code, cli::kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    EXPECT_EQ(line, "n,m,min_wiener,witness_count,witnesses");
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    ASSERT_EQ(rows.size(), 12u);
    EXPECT_EQ(rows[0], "9,0,,0,");
    EXPECT_EQ(rows[9], "9,9,90,1," + canonical_form(cycle(9)));
    EXPECT_EQ(rows[10].rfind("9,10,78,", 0), 0u);
    EXPECT_EQ(call({"min-table", "--n", "9", "--m", "12"}).code, cli::kExitUsage);
    EXPECT_EQ(call({"min-table", "--n", "11"}).code, cli::kExitUsage);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(call({}).code, cli::kExitUsage);
    EXPECT_EQ(call({"wiener", "--bogus"}).code, cli::kExitUsage);
    EXPECT_EQ(call({"wiener", "--format", "xml"}).code, cli::kExitUsage);
    EXPECT_EQ(call({"rank", "--n", "6", "--jobs", "0"}).code, cli::kExitUsage);
    const auto help = call({"--help"});
    EXPECT_EQ(help.code, cli::kExitOk);
    EXPECT_NE(help.out.find("enumerate"), std::string::npos);
}
