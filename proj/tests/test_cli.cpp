#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "fixtures.hpp"

namespace {

struct CliResult {
    int code;
    std::string out;
};

std::string quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

CliResult run(const std::string& args) {
    std::string cmd = std::string(FERMAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string verify_args(const fixtures::Fixture& fx) {
    return "verify --m " + std::to_string(fx.m) + " --n " + std::to_string(fx.n) + " --k " + std::to_string(fx.k) +
           " --R " + quote(fx.R) + " --Q " + quote(fx.Q) + " --alpha " + quote(fx.alpha) + " --f " + quote(fx.f);
}

}  // namespace

// The three reference examples, the sine case and the T24_E case.
class CliCorpus : public ::testing::TestWithParam<fixtures::Fixture> {};

TEST_P(CliCorpus, VerifyExitsZero) {
    const auto& fx = GetParam();
    CliResult r = run(verify_args(fx));
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(r.out, "verified (exact)\n");
    CliResult n = run(verify_args(fx) + " --numeric");
    EXPECT_EQ(n.code, 0) << n.out;
}

INSTANTIATE_TEST_SUITE_P(Regression, CliCorpus,
                         ::testing::Values(fixtures::example1(), fixtures::example2(true), fixtures::intro_example(),
                                           fixtures::sine(), fixtures::t24e_example()),
                         [](const auto& info) { return info.param.name; });

TEST(Cli, RefutedExitsOne) {
    CliResult r = run(verify_args(fixtures::wrong_exponent()));
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.rfind("refuted (exact)", 0), 0u);
    EXPECT_NE(r.out.find("residual: "), std::string::npos);
}

TEST(Cli, ParseErrorExitsTwo) {
    std::string cmd = std::string(FERMAT_CLI_PATH) + " degree --expr 'z$' 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::array<char, 512> buf{};
    std::string out;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    EXPECT_EQ(WEXITSTATUS(status), 2);
    EXPECT_NE(out.find("offset 1"), std::string::npos) << out;
    EXPECT_EQ(run("verify --m 2").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
    EXPECT_EQ(run("roots --w 0 --k 2").code, 2);
}

TEST(Cli, Degree) {
    EXPECT_EQ(run("degree --expr '(z^2+1)/(z+1)'").out, "1\n");
    EXPECT_EQ(run("degree --expr 0").out, "-inf\n");
    EXPECT_EQ(run("degree --expr '1/z^2'").out, "-2\n");
    EXPECT_EQ(run("degree --expr 'z' --json").out, "{\"degree\":\"1\"}\n");
}

TEST(Cli, Classify) {
    CliResult r = run("classify --m 3 --n 2 --k 1 --R 1 --Q 1 --alpha 0 --json");
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["verdict"], "NoTranscendentalSolution");
    EXPECT_EQ(j["theorem"], "2.1");
    CliResult t = run("classify --m 3 --n 2 --k 1");
    EXPECT_EQ(t.out.rfind("verdict: NoTranscendentalSolution", 0), 0u);
}

TEST(Cli, Construct) {
    CliResult ok = run("construct --family T24_E --R '-i/(2*z)' --P 'z^2' --json");
    EXPECT_EQ(ok.code, 0);
    auto j = nlohmann::json::parse(ok.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["verification"]["verdict"], "verified");
    EXPECT_EQ(run("construct --family T23_B --m 3 --A -1 --a 3").code, 3);
    EXPECT_EQ(run("construct --family T24_B --R z --d 2 --alpha z").code, 1);
    EXPECT_EQ(run("construct --family T23_B --m 2 --A 1 --a 3").code, 2);
    EXPECT_EQ(run("construct --family T24_E --R 'z+' --P z").code, 2);
}

TEST(Cli, Roots) {
    CliResult r = run("roots --w 4 --k 2 --json");
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 2u);
    EXPECT_DOUBLE_EQ(j[0][0].get<double>(), 2.0);
    EXPECT_DOUBLE_EQ(j[1][0].get<double>(), -2.0);
    EXPECT_EQ(run("roots --w -1 --k 3").out, "0.5 -0.86602540378443871\n0.5 0.86602540378443871\n-1 0\n");
}

TEST(Cli, JsonIsByteStable) {
    const std::string args = verify_args(fixtures::example1()) + " --numeric --json";
    CliResult a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    CliResult c = run("construct --family T23_B --m 3 --A 1 --a 3 --json"), d = run("construct --family T23_B --m 3 --A 1 --a 3 --json");
    EXPECT_EQ(c.out, d.out);
    EXPECT_FALSE(c.out.empty());
}
