#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult run(std::vector<std::string> args) {
    args.insert(args.begin(), "zdgeom");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = zdgeom::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, ZdDiv) {
    const CliResult r = run({"--exact", "zd", "div", "1", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "= 0")) << r.out;
    EXPECT_TRUE(contains(run({"--exact", "zd", "div", "3", "4"}).out, "exact: 3/4"));
}

TEST(Cli, ZdTan) {
    const CliResult r = run({"zd", "tan", "1/2pi"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "zd_tan(1/2pi) = 0")) << r.out;
    EXPECT_TRUE(contains(run({"--exact", "zd", "tan", "pi/3"}).out, "sqrt(3)"));
}

TEST(Cli, GCircle) {
    EXPECT_EQ(run({"gcircle", "classify", "--coeffs", "1,0,-2,4"}).out, "PointCircle\n");
    EXPECT_TRUE(contains(run({"--exact", "gcircle", "radius", "--coeffs", "0,1,0,0"}).out, "exact: 0"));
    const CliResult c = run({"--exact", "gcircle", "center", "--coeffs", "1,-2,-1,4"});
    EXPECT_TRUE(contains(c.out, "x = 2")) << c.out;
    EXPECT_TRUE(contains(c.out, "y = 1")) << c.out;
    EXPECT_EQ(run({"gcircle", "tangency", "--c1", "1,0,-1,0", "--c2", "0,0,1,0"}).out, "LineTangent\n");
}

TEST(Cli, WasanVerify) {
    const CliResult ok = run({"--exact", "wasan", "verify", "--a", "2", "--b", "1"});
    EXPECT_EQ(ok.code, 0) << ok.out << ok.err;
    EXPECT_TRUE(contains(ok.out, "PASS"));
    EXPECT_TRUE(contains(ok.out, "exact: 1/8"));
    EXPECT_EQ(run({"wasan", "verify", "--a", "0.3", "--b", "7"}).code, 0);
}

TEST(Cli, WasanDegenerate) {
    const CliResult r = run({"--exact", "wasan", "degenerate", "--b", "7/3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "figure 3"));
    EXPECT_TRUE(contains(r.out, "figure 4"));
    EXPECT_TRUE(contains(r.out, "figure 5"));
    const CliResult one = run({"--exact", "wasan", "degenerate", "--b", "1", "--form", "2"});
    EXPECT_FALSE(contains(one.out, "figure 3"));
    EXPECT_TRUE(contains(one.out, "figure 5"));
    EXPECT_NE(run({"wasan", "degenerate", "--b", "1", "--form", "4"}).code, 0);
}

TEST(Cli, WasanSweepAndOracle) {
    const CliResult s = run({"wasan", "sweep", "--b", "1", "--a-min", "0.01", "--a-max", "10", "--steps", "5"});
    EXPECT_EQ(s.code, 0) << s.out;
    EXPECT_EQ(s.out.rfind("a\tc_closed\tc_oracle\tmax_residual\n", 0), 0u);
    EXPECT_EQ(std::count(s.out.begin(), s.out.end(), '\n'), 6);

    const auto path = std::filesystem::temp_directory_path() / "zdgeom_cli_sweep.tsv";
    const CliResult f = run({"wasan", "sweep", "--b", "2", "--a-min", "1", "--a-max", "2", "--steps", "1", "--out",
                       path.string()});
    EXPECT_EQ(f.code, 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "a\tc_closed\tc_oracle\tmax_residual");
    std::filesystem::remove(path);

    const CliResult o = run({"wasan", "oracle", "--a", "9", "--b", "3"});
    EXPECT_EQ(o.code, 0);
    ASSERT_TRUE(contains(o.out, "c_oracle = ")) << o.out;
    EXPECT_NEAR(std::stod(o.out.substr(o.out.find("c_oracle = ") + 11)), 0.25, 1e-9);
    EXPECT_TRUE(contains(o.out, "iterations = "));
}

TEST(Cli, Render) {
    const CliResult r = run({"render", "--figure", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("<?xml", 0), 0u);
    EXPECT_EQ(r.out, run({"render", "--figure", "5"}).out);
    EXPECT_NE(run({"render", "--figure", "6"}).code, 0);
}

TEST(Cli, Errors) {
    const CliResult bad = run({"wasan", "verify", "--a", "0", "--b", "1"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_TRUE(contains(bad.err, "error:"));
    EXPECT_EQ(run({"--exact", "gcircle", "radius", "--coeffs", "1,0,0,1"}).code, 2);
    EXPECT_EQ(run({"gcircle", "classify", "--coeffs", "1,2"}).code, 2);
    EXPECT_NE(run({}).code, 0);
}
