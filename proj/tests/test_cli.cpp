#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "secmod/cli.hpp"

using namespace secmod;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, ClassifyPaperModule) {
    auto r = run_cli({"classify", "Z6 + Z10"});
    EXPECT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["schema_version"], "1");
    EXPECT_EQ(j["module"]["invariant_factors"], (std::vector<i64>{2, 30}));
    const auto& rows = j["rows"];
    const auto& m_row = rows[rows.size() - 1];
    EXPECT_EQ(m_row["order"], 60);
    EXPECT_FALSE(m_row["flags"]["strongly_two_abs_secondary"].get<bool>());
}

TEST(Cli, CheckSingleTheorem) {
    auto r = run_cli({"check", "t1.5", "Z12"});
    EXPECT_EQ(r.code, 0);
    json j = json::parse(r.out);
    ASSERT_EQ(j["reports"].size(), 1u);
    EXPECT_EQ(j["reports"][0]["theorem"], "t1.5");
    EXPECT_TRUE(j["reports"][0]["violations"].empty());
}

TEST(Cli, SearchFindsZ8Witness) {
    auto r = run_cli({"search", "strongly-2-abs-secondary", "2-abs-second", "--corpus", "8"});
    EXPECT_EQ(r.code, 1); // witnesses found
    json j = json::parse(r.out);
    bool found_z8 = false;
    for (const auto& w : j["witnesses"])
        if (w["module"]["expr"] == "Z8" && w["order"] == 8) found_z8 = true;
    EXPECT_TRUE(found_z8);
}

TEST(Cli, EnumerateLatticeAndDot) {
    auto r = run_cli({"enumerate", "Z12"});
    EXPECT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["nodes"].size(), 6u);

    auto dot = run_cli({"enumerate", "Z12", "--dot", "-"});
    EXPECT_EQ(dot.code, 0);
    EXPECT_NE(dot.out.find("digraph"), std::string::npos);
    EXPECT_NE(dot.out.find("n0 ->"), std::string::npos);
    // cover edges only: the divisor chain 1|2|4 gives no edge 0 -> M
    EXPECT_EQ(dot.out.find("n0 -> n5"), std::string::npos);
}

TEST(Cli, SecondRadicalCommand) {
    auto r = run_cli({"sec", "Z8", "--submodule", "2"});
    EXPECT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["submodule"]["order"], 4);
    EXPECT_EQ(j["second_radical"]["order"], 2);

    auto pair = run_cli({"sec", "Z2 + Z12", "--submodule", "(1,3);(0,6)"});
    EXPECT_EQ(pair.code, 0);
}

TEST(Cli, CorpusListing) {
    auto r = run_cli({"corpus", "8"});
    EXPECT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j["modules"].size(), 11u);

    auto cyc = run_cli({"corpus", "12", "--cyclic-only"});
    EXPECT_EQ(json::parse(cyc.out)["modules"].size(), 12u);
}

TEST(Cli, ErrorsAreJsonWithUsageExitCode) {
    auto bad_expr = run_cli({"classify", "Z0"});
    EXPECT_EQ(bad_expr.code, 2);
    EXPECT_TRUE(bad_expr.out.empty());
    json j = json::parse(bad_expr.err);
    EXPECT_EQ(j["error"]["kind"], "parse");

    auto bad_id = run_cli({"check", "t0.0", "Z6"});
    EXPECT_EQ(bad_id.code, 2);

    auto bad_usage = run_cli({"classify"});
    EXPECT_EQ(bad_usage.code, 2);
    EXPECT_EQ(json::parse(bad_usage.err)["error"]["kind"], "usage");

    auto bad_class = run_cli({"search", "second", "nonsense", "--corpus", "4"});
    EXPECT_EQ(bad_class.code, 2);
}

TEST(Cli, LatticeBoundExitCode) {
    ASSERT_EQ(setenv("SECMOD_MAX_LATTICE", "3", 1), 0);
    auto r = run_cli({"enumerate", "Z2^3"});
    unsetenv("SECMOD_MAX_LATTICE");
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(json::parse(r.err)["error"]["kind"], "bound");
}

TEST(Cli, ByteIdenticalAcrossWorkerCounts) {
    auto one = run_cli({"classify", "Z2^2 + Z4", "--workers", "1"});
    auto four = run_cli({"classify", "Z2^2 + Z4", "--workers", "4"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out);

    auto c1 = run_cli({"check", "all", "Z12", "--workers", "1"});
    auto c4 = run_cli({"check", "all", "Z12", "--workers", "4"});
    EXPECT_EQ(c1.out, c4.out);
}

TEST(Cli, HelpExitsZero) {
    auto r = run_cli({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("enumerate"), std::string::npos);
}
