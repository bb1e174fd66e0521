// End-to-end checks of the command-line tool through the shell.
#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string output;
};

Result run(const std::string& args) {
    const fs::path log = fs::temp_directory_path() / "hdran_cli_test.log";
    const std::string cmd = std::string("\"") + HDRAN_CLI_PATH + "\" " + args + " > \"" + log.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("hdran_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenerateIsDeterministic) {
    ASSERT_EQ(run("generate --k 3 --n 200 --seed 5 --out " + path("a.json")).code, 0);
    ASSERT_EQ(run("generate --k 3 --n 200 --seed 5 --out " + path("b.json")).code, 0);
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
    const auto r = run("generate --k 4 --n 10 --seed 1 --out " + path("c.json"));
    EXPECT_NE(r.output.find("vertices=14 edges=46 active_cliques=31"), std::string::npos) << r.output;
}

TEST_F(Cli, InvalidIndexIsUsageError) {
    const auto r = run("generate --k 2 --n 10 --out " + path("x.json"));
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.output.find(">= 3"), std::string::npos) << r.output;
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("bogus").code, 2);
}

TEST_F(Cli, StatsWritesTables) {
    ASSERT_EQ(run("generate --k 3 --n 300 --seed 2 --out " + path("g.json")).code, 0);
    const auto r = run("stats --in " + path("g.json") + " --out-prefix " + path("s_"));
    ASSERT_EQ(r.code, 0) << r.output;
    for (const char* f : {"s_degree_hist.csv", "s_clustering.csv", "s_lorenz.csv", "s_summary.csv"}) {
        EXPECT_TRUE(fs::exists(path(f))) << f;
    }
    EXPECT_EQ(slurp(path("s_degree_hist.csv")).rfind("j,count_all,count_newcomers,fraction,theory_b\n", 0), 0u);
    EXPECT_NE(r.output.find("wiener"), std::string::npos);
}

TEST_F(Cli, StatsOnCorruptFileFails) {
    std::ofstream(path("bad.json")) << "{\"schema_version\": 1,";
    const auto r = run("stats --in " + path("bad.json") + " --out-prefix " + path("z_"));
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.output.find("bad.json"), std::string::npos) << r.output;
}

TEST_F(Cli, TheoryPrintsClusteringLimit) {
    const auto r = run("theory --k 3 --n 100 --out " + path("t.csv"));
    ASSERT_EQ(r.code, 0) << r.output;
    EXPECT_NE(r.output.find("0.7685861"), std::string::npos) << r.output;
    EXPECT_EQ(slurp(path("t.csv")).rfind("quantity,index,value,exact\n", 0), 0u);
}

TEST_F(Cli, ValidateSmallRunPasses) {
    const auto r = run("validate --k 3 --n 500 --reps 40 --seed 7 --out " + path("v.csv"));
    EXPECT_EQ(r.code, 0) << r.output;
    EXPECT_NE(r.output.find("validation passed"), std::string::npos);
}

TEST_F(Cli, ValidateRefusesOverBudgetWithoutLong) {
    const auto r = run("validate --k 3 --n 1000000 --reps 1000");
    EXPECT_NE(r.code, 0);
    EXPECT_NE(r.output.find("--long"), std::string::npos) << r.output;
}

TEST_F(Cli, WienerStudyWritesOutputs) {
    const auto r = run("wiener-study --k 3 --n 60 --reps 25 --seed 3 --out-prefix " + path("w_"));
    ASSERT_EQ(r.code, 0) << r.output;
    EXPECT_TRUE(fs::exists(path("w_samples.csv")));
    EXPECT_TRUE(fs::exists(path("w_histogram.csv")));
    EXPECT_NE(slurp(path("w_summary.csv")).find("reject_normality_at_0.01"), std::string::npos);
}

TEST_F(Cli, LorenzWritesSvg) {
    const auto r = run("lorenz --k 3 --k 5 --n 200 --reps 5 --seed 1 --svg " + path("l.svg") + " --csv " + path("l.csv"));
    ASSERT_EQ(r.code, 0) << r.output;
    const std::string svg = slurp(path("l.svg"));
    EXPECT_EQ(svg.rfind("<?xml", 0) == 0 || svg.rfind("<svg", 0) == 0, true);
    EXPECT_NE(svg.find("class=\"equality\""), std::string::npos);
    EXPECT_NE(svg.find("data-label=\"k = 3\""), std::string::npos) << svg.substr(0, 400);
}
