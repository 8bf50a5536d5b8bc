#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "fintop/fintop.hpp"

namespace {

struct CliRun {
    int status = -1;
    std::string out;
};

CliRun run(const std::string& args) {
    const std::string cmd = std::string(FINTOP_CLI) + " " + args + " 2>&1";
    CliRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), p))
        r.out += buf.data();
    const int raw = pclose(p);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string data(const std::string& name) { return std::string(FINTOP_DATA_DIR) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, AnalyzeSierpinski) {
    const CliRun r = run("analyze " + data("sierpinski.topo"));
    ASSERT_EQ(r.status, 0) << r.out;
    for (const char* s : {"ind_b=1", "ind_p=inf", "Ind=0", "dim=0", "density=1", "isolated=[1]"})
        EXPECT_TRUE(contains(r.out, s)) << s << "\n" << r.out;
}

TEST(Cli, AnalyzeJsonIsStable) {
    const CliRun a = run("analyze --json " + data("chain3.topo"));
    ASSERT_EQ(a.status, 0) << a.out;
    const auto j = fintop::json::parse(a.out);
    EXPECT_EQ(j["ind_b"], 2);
    EXPECT_EQ(j["Ind"], 0);
    EXPECT_EQ(j["dim"], 0);
    EXPECT_EQ(run("analyze --json " + data("chain3.topo")).out, a.out);
}

TEST(Cli, SnDim0OnSierpinski) {
    const CliRun r = run("sn " + data("sierpinski.topo") + " --class=dim0");
    ASSERT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "sn(dim0) = 1")) << r.out;
    EXPECT_TRUE(contains(r.out, "witness 1: [[],[1],[0,1]]")) << r.out;
}

TEST(Cli, SnInfinityAndBoundShownDistinctly) {
    const CliRun a = run("sn " + data("sierpinski.topo") + " --class=ind0");
    EXPECT_EQ(a.status, 0);
    EXPECT_TRUE(contains(a.out, "inf (empty-hit-set")) << a.out;
    const CliRun b = run("sn " + data("sierpinski.topo") + " --class=ind0 --bh-only");
    EXPECT_TRUE(contains(b.out, "inf (empty-hit-set")) << b.out;
    const CliRun c = run("sn " + data("vee3.topo") + " --class=dim0 --max-k=1");
    EXPECT_EQ(c.status, 0);
    EXPECT_TRUE(contains(c.out, "sn(dim0) > 1 (bound-exhausted")) << c.out;
    EXPECT_TRUE(contains(run("sn " + data("vee3.topo") + " --class=dim0").out, "sn(dim0) = 2"));
}

TEST(Cli, BingHanner) {
    const CliRun r = run("bh " + data("sierpinski.topo") + " --m=1");
    ASSERT_EQ(r.status, 0) << r.out;
    EXPECT_TRUE(contains(r.out, "opens: [[],[0],[1],[0,1]]")) << r.out;
    EXPECT_EQ(run("bh " + data("sierpinski.topo") + " --m=5").status, 1);
}

TEST(Cli, Extensions) {
    const CliRun r = run("extensions " + data("indiscrete2.topo") + " --count-only");
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(contains(r.out, "count: 4")) << r.out;
    const CliRun s = run("extensions " + data("sierpinski.topo") + " --class=ind0");
    EXPECT_TRUE(contains(s.out, "[[],[0],[1],[0,1]]\ncount: 1")) << s.out;
}

TEST(Cli, Decompose) {
    EXPECT_TRUE(contains(run("decompose " + data("chain3.topo") + " --dim=ind").out, "k=3"));
    EXPECT_TRUE(contains(run("decompose " + data("chain3.topo") + " --dim=dim").out, "k=1"));
    EXPECT_EQ(run("decompose " + data("chain3.topo") + " --dim=big").status, 2);
}

TEST(Cli, CatalogBuildQueryVerify) {
    const std::string path = (std::filesystem::temp_directory_path() / "fintop_cli_n3.jsonl").string();
    const CliRun b = run("catalog build --n=3 --classes=ind0,dim0 --out=" + path);
    ASSERT_EQ(b.status, 0) << b.out;
    EXPECT_TRUE(contains(b.out, "classes=9 labeled=29")) << b.out;
    const CliRun q = run("catalog query --in=" + path + " --filter='t1=true'");
    EXPECT_TRUE(contains(q.out, "matches: 1")) << q.out;
    const CliRun all = run("catalog query --in=" + path);
    EXPECT_TRUE(contains(all.out, "matches: 9")) << all.out;
    EXPECT_EQ(run("catalog query --in=" + path + " --filter='colour=1'").status, 1);
    EXPECT_TRUE(contains(run("catalog verify --in=" + path).out, "catalog verified"));
}

TEST(Cli, VerifyExitCodes) {
    const CliRun ok = run("verify --suite=prop-intersection-1 --n=3");
    EXPECT_EQ(ok.status, 0) << ok.out;
    EXPECT_TRUE(contains(ok.out, "prop-intersection-1 n=3 PASS")) << ok.out;
    const CliRun findings = run("verify --suite=ind-le-Ind --n=2");
    EXPECT_EQ(findings.status, 0) << findings.out;
    EXPECT_TRUE(contains(findings.out, "FINDINGS")) << findings.out;
    const CliRun bad = run("verify --suite=bh-ind0 --n=2");
    EXPECT_EQ(bad.status, 1) << bad.out;
    EXPECT_EQ(run("verify --suite=nope --n=2").status, 1);
}

TEST(Cli, VerifyReportFile) {
    const std::string path = (std::filesystem::temp_directory_path() / "fintop_cli_report.json").string();
    ASSERT_EQ(run("verify --suite=ind-two-forms --n=3 --upto --report=" + path).status, 0);
    std::ifstream in(path);
    const auto j = fintop::json::parse(in);
    ASSERT_EQ(j.size(), 3U);
    for (const auto& r : j)
        EXPECT_EQ(fintop::VerificationReport::from_json(r).to_json(), r);
}

TEST(Cli, UsageAndValidationErrors) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("analyze").status, 2);
    EXPECT_EQ(run("analyze " + data("not_closed.topo")).status, 1);
    EXPECT_TRUE(contains(run("analyze " + data("not_closed.topo")).out, "AxiomViolation"));
    EXPECT_EQ(run("analyze " + data("missing.topo")).status, 1);
    EXPECT_EQ(run("sn " + data("sierpinski.topo") + " --class=nope").status, 1);
}
