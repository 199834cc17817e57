#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "eqidx/cli.hpp"
#include "eqidx/laurent.hpp"

using eqidx::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(EQIDX_GOLDEN_DIR) + "/" + name, std::ios::binary);
    EXPECT_TRUE(in) << name;
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST(Cli, GoldenChi) { EXPECT_EQ(invoke({"chi", "--n", "1", "--l", "2"}).out, golden("chi_n1_l2.txt")); }

TEST(Cli, GoldenBpoly) {
    for (int n : {0, 1, 2, 3}) {
        const auto ns = std::to_string(n);
        EXPECT_EQ(invoke({"bpoly", "--n", ns, "--k", "-1", "--j", "0"}).out, golden("bpoly_n" + ns + "_km1_j0.txt"));
        EXPECT_EQ(invoke({"bpoly", "--n", ns, "--k", "0", "--j", "0"}).out, golden("bpoly_n" + ns + "_k0_j0.txt"));
    }
}

TEST(Cli, GoldenLefschetz) {
    const auto r = invoke({"lefschetz", "--n", "1", "--f", "t^-1", "--format", "json", "--points", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, golden("lefschetz_n1_tinv.json"));
}

TEST(Cli, LefschetzNumericChecks) {
    const auto r = invoke({"lefschetz", "--n", "2", "--f", "t^-2 - 3*t1*t", "--format", "json", "--points", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = eqidx::Json::parse(r.out);
    EXPECT_TRUE(j["equal"].get<bool>());
    ASSERT_EQ(j["numeric_checks"].size(), 4u);
    for (const auto& c : j["numeric_checks"]) {
        EXPECT_LE(c["abs_err"].get<double>(), 1e-9);
        EXPECT_EQ(c["point"].size(), 3u);
    }
}

TEST(Cli, Deterministic) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"index", "--n", "1", "--k", "2", "--format", "json"},
             {"lefschetz", "--n", "2", "--f", "t^3 + t1", "--format", "json"},
             {"series", "--n", "2", "--k", "-1", "--kind", "jinf"},
             {"cohomology", "--n", "3", "--m", "-6", "--format", "json"},
         }) {
        EXPECT_EQ(invoke(args).out, invoke(args).out);
    }
}

TEST(Cli, Index) {
    const auto r = invoke({"index", "--n", "1", "--k", "-1", "--window", "-5..5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("match: true"), std::string::npos);
    EXPECT_NE(r.out.find("2: t1^-2 + t1^-1*t2^-1 + t2^-2\n"), std::string::npos);
    const auto z = invoke({"index", "--n", "2", "--k", "0", "--window", "-3..3"});
    EXPECT_NE(z.out.find("-3: 1\n-2: 1\n-1: 1\n0: 1\n1: 1\n2: 1\n3: 1\n"), std::string::npos);
    const auto j = eqidx::Json::parse(invoke({"index", "--n", "1", "--k", "2", "--format", "json"}).out);
    EXPECT_TRUE(j["match"].get<bool>());
    EXPECT_EQ(j["window"], eqidx::Json::array({-10, 10}));
}

TEST(Cli, OtherSubcommands) {
    EXPECT_EQ(invoke({"apoly", "--n", "1", "--k", "-2", "--j", "0"}).out, "1 + t1^-1*t2^-1*t\n");
    EXPECT_EQ(invoke({"cohomology", "--n", "1", "--m", "-3", "--q", "1"}).out, "t1*t2^2 + t1^2*t2\n");
    EXPECT_EQ(invoke({"cohomology", "--n", "2", "--m", "1"}).out, "H^0: t1^-1 + t2^-1 + t3^-1\nH^1: 0\nH^2: 0\n");
    EXPECT_EQ(invoke({"series", "--n", "0", "--k", "0", "--window", "-1..1"}).out, "-1: 1\n0: 1\n1: 1\n");
}

TEST(Cli, UsageErrors) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"nope"},
             {"chi", "--n", "1"},
             {"chi", "--n", "x", "--l", "1"},
             {"bpoly", "--n", "1", "--k", "2", "--j", "5"},
             {"apoly", "--n", "1", "--k", "1"},
             {"index", "--n", "1", "--k", "1", "--window", "3..1"},
             {"lefschetz", "--n", "1", "--f", "t5"},
             {"chi", "--n", "1", "--l", "1", "--format", "xml"},
             {"verify", "--k-range", "nope"},
         }) {
        const auto r = invoke(args);
        EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
        EXPECT_FALSE(r.err.empty());
        EXPECT_TRUE(r.out.empty());
    }
}

TEST(Cli, VerifyReduced) {
    const auto r = invoke({"verify", "--n-max", "1", "--k-range", "-1..-1"});
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("seed 20240917"), std::string::npos);
    EXPECT_NE(r.out.find("all suites passed"), std::string::npos);
}
