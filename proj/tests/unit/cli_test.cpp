#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dgt_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Outcome dgt(const std::string& args) const {
    const auto err = dir_ / "stderr.txt";
    const std::string cmd = std::string(DGT_CLI_PATH) + " " + args + " >/dev/null 2>" + err.string();
    const int status = std::system(cmd.c_str());
    Outcome out;
    out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    out.err = slurp(err);
    return out;
  }

  static std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SynthThenRunWritesMetrics) {
  ASSERT_EQ(dgt("synth --out " + path("data")).code, 0);
  const auto result = dgt("run --input " + path("data/edges.txt") + " --truth " +
                          path("data/truth.csv") + " --repetitions 2 --out " + path("out"));
  ASSERT_EQ(result.code, 0) << result.err;
  const auto metrics = slurp(dir_ / "out/metrics.csv");
  EXPECT_EQ(metrics.rfind("t,n_communities_pred,n_communities_true,nmi,modularity\n", 0), 0u);
  // Five snapshot rows plus mean and std.
  EXPECT_EQ(std::count(metrics.begin(), metrics.end(), '\n'), 8);
  EXPECT_TRUE(fs::exists(dir_ / "out/communities_t0_rep1.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "out/churn.csv"));
}

TEST_F(CliTest, IdenticalRunsAreByteIdentical) {
  ASSERT_EQ(dgt("synth --seed 4 --out " + path("data")).code, 0);
  const std::string common = "run --input " + path("data/edges.txt") + " --truth " +
                             path("data/truth.csv") + " --repetitions 3 --jobs 2 --diagnostics";
  ASSERT_EQ(dgt(common + " --out " + path("a")).code, 0);
  ASSERT_EQ(dgt(common + " --out " + path("b")).code, 0);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir_ / "a")) {
    const auto other = dir_ / "b" / entry.path().filename();
    ASSERT_TRUE(fs::exists(other)) << other;
    EXPECT_EQ(slurp(entry.path()), slurp(other)) << entry.path().filename();
    ++files;
  }
  EXPECT_GT(files, 10u);
}

TEST_F(CliTest, DgtgWithoutTruthNamesTheFlag) {
  write("e.txt", "a b 0\nb a 0\n");
  const auto result = dgt("run --variant dgtg --input " + path("e.txt") + " --out " + path("o"));
  EXPECT_EQ(result.code, 1);
  EXPECT_NE(result.err.find("--truth"), std::string::npos) << result.err;
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(dgt("").code, 1);
  EXPECT_EQ(dgt("run").code, 1);
  EXPECT_EQ(dgt("run --input " + path("missing.txt")).code, 1);
  write("e.txt", "a b 0\n");
  EXPECT_EQ(dgt("run --gain nope --input " + path("e.txt")).code, 1);
  EXPECT_EQ(dgt("--help").code, 0);
}

TEST_F(CliTest, SweepValidatesFractions) {
  ASSERT_EQ(dgt("synth --snapshots 2 --out " + path("data")).code, 0);
  const std::string base = "sweep --input " + path("data/edges.txt") + " --truth " +
                           path("data/truth.csv") + " --repetitions 2 --out " + path("s");
  EXPECT_EQ(dgt(base + " --fractions 0,1.5").code, 1);
  ASSERT_EQ(dgt(base + " --fractions 0,0.1,0.2").code, 0);
  const auto report = slurp(dir_ / "s/sweep.csv");
  EXPECT_EQ(report.rfind("fraction,nmi_mean,nmi_std\n", 0), 0u);
  EXPECT_EQ(std::count(report.begin(), report.end(), '\n'), 4);
}

TEST_F(CliTest, ChurnNeedsTwoSnapshots) {
  write("one.txt", "a b 0\n");
  EXPECT_EQ(dgt("churn --input " + path("one.txt") + " --out " + path("c")).code, 1);
  write("dup.txt", "a b 0\nb c 0\na b 1\nb c 1\n");
  ASSERT_EQ(dgt("churn --input " + path("dup.txt") + " --out " + path("c")).code, 0);
  EXPECT_EQ(slurp(dir_ / "c/churn.csv"), "t,e_plus,e_minus,n_changed\n1,0,0,0\n");
}

TEST_F(CliTest, PartitionFilesCoverEverySnapshotNode) {
  write("e.txt", "a b 0\nb c 0\nc a 0\nd e 0\nb a 1\nd a 1\n");
  ASSERT_EQ(dgt("run --variant dgts --repetitions 1 --input " + path("e.txt") + " --out " +
                path("o"))
                .code,
            0);
  const auto t0 = slurp(dir_ / "o/communities_t0_rep0.csv");
  const auto t1 = slurp(dir_ / "o/communities_t1_rep0.csv");
  EXPECT_EQ(std::count(t0.begin(), t0.end(), '\n'), 6);  // header + 5 nodes
  EXPECT_EQ(std::count(t1.begin(), t1.end(), '\n'), 4);  // header + 3 nodes
}

}  // namespace
