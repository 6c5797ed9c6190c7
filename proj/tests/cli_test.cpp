#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "grouptest/table_io.hpp"

namespace grouptest {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("grouptest_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

TEST_F(CliTest, GenWritesTables) {
  auto r = run({"gen", "cyclic", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "magma v1\n4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n");

  r = run({"gen", "product", "2", "2", "-o", path("klein.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(load_table(path("klein.txt")), build_product(AbelianGroupSpec({2, 2})));

  r = run({"gen", "perturbed", "cyclic:8", "16", "seed:7", "-o", path("p.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(hamming_distance(load_table(path("p.txt")), build_cyclic(8)), 16u);
}

TEST_F(CliTest, GenInputErrors) {
  EXPECT_EQ(run({"gen", "cyclic", "0"}).code, cli::kInputError);
  EXPECT_EQ(run({"gen", "product", "1", "3"}).code, cli::kInputError);
  EXPECT_EQ(run({"gen", "perturbed", "cyclic:2", "5", "seed:1"}).code, cli::kInputError);
  EXPECT_EQ(run({"gen", "perturbed", "cyclic:4", "x", "1"}).code, cli::kInputError);
  EXPECT_EQ(run({"gen", "product", "4097"}).code, cli::kCapabilityCap);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run({}).code, cli::kInputError);
}

TEST_F(CliTest, DistanceReports) {
  run({"gen", "cyclic", "4", "-o", path("z4.txt")});
  auto r = run({"distance", path("z4.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "min_hamming_to_cyclic=0 delta=0\n");

  run({"gen", "product", "2", "2", "-o", path("klein.txt")});
  r = run({"distance", path("klein.txt")});
  EXPECT_EQ(r.out, "min_hamming_to_cyclic=4 delta=0.25\n");

  run({"gen", "cyclic", "9", "-o", path("z9.txt")});
  r = run({"distance", path("z9.txt")});
  EXPECT_EQ(r.code, cli::kCapabilityCap);
  EXPECT_NE(r.err.find("n <= 8"), std::string::npos);

  std::ofstream(path("bad.txt")) << "magma v1\n2\n0 1\n1 5\n";
  EXPECT_EQ(run({"distance", path("bad.txt")}).code, cli::kInputError);
  EXPECT_EQ(run({"distance", path("missing.txt")}).code, cli::kInputError);
}

TEST_F(CliTest, TestCyclicCsv) {
  run({"gen", "cyclic", "1", "-o", path("z1.txt")});
  auto r = run({"test-cyclic", path("z1.txt"), "--trials", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], "# grouptest-csv v1");
  EXPECT_EQ(rows[1], "family,q,m,epsilon,trial,seed,verdict,o1_queries,o2_queries,elapsed_ms,truth");
  EXPECT_EQ(rows[2], "table,1,1,1/23,0,0,PASS,0,0,0.000,");
  EXPECT_EQ(rows[5], "# summary trials=3 pass=3 pass_rate=1.0000");

  r = run({"test-cyclic", "--family", "product:5,5", "--trials", "5", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# summary trials=5 pass=0 pass_rate=0.0000"), std::string::npos);
  EXPECT_NE(r.out.find("product:5x5,25,25,1/23,0,3,FAIL"), std::string::npos);

  r = run({"test-cyclic", "--family", "cyclic:12", "--trials", "4", "--lazy", "--q", "64",
           "--memoize", "--epsilon", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("cyclic:12,64,12,1/2,"), std::string::npos);
}

TEST_F(CliTest, TestCyclicErrors) {
  EXPECT_EQ(run({"test-cyclic"}).code, cli::kInputError);
  EXPECT_EQ(run({"test-cyclic", "--family", "cyclic:8", "--epsilon", "0"}).code,
            cli::kInputError);
  EXPECT_EQ(run({"test-cyclic", "--family", "cyclic:8", "--epsilon", "2"}).code,
            cli::kInputError);
  EXPECT_EQ(run({"test-cyclic", "--family", "cyclic:8", "--q", "4"}).code, cli::kInputError);
  EXPECT_EQ(run({"test-cyclic", "--family", "dihedral:8"}).code, cli::kInputError);
  EXPECT_EQ(run({"test-cyclic", "--family", "cyclic:8", "--strict", "--arbitrary-oracle"}).code,
            cli::kInputError);
  std::ofstream(path("bad.txt")) << "magma v0\n";
  EXPECT_EQ(run({"test-cyclic", path("bad.txt")}).code, cli::kInputError);
}

TEST_F(CliTest, TestCyclicJobsAndTranscripts) {
  const auto a = run({"test-cyclic", "--family", "cyclic:36", "--trials", "6", "--seed", "4"});
  const auto b = run({"test-cyclic", "--family", "cyclic:36", "--trials", "6", "--seed", "4",
                      "--jobs", "3"});
  EXPECT_EQ(a.out, b.out);

  auto r = run({"test-cyclic", "--family", "cyclic:6", "--trials", "2", "--d2", "2",
                "--transcript", path("t.log")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path("t.log"));
  std::string first, second;
  std::getline(in, first);
  std::getline(in, second);
  EXPECT_EQ(first, "# trial 0");
  EXPECT_EQ(second.rfind("O1 -> ", 0), 0u);
}

TEST_F(CliTest, Distinguish) {
  auto r = run({"distinguish", "--q", "10000", "--budget", "110", "--trials", "200"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 203u);
  EXPECT_EQ(rows.back().rfind("# summary trials=200 ", 0), 0u);
  EXPECT_EQ(rows[2].rfind("cyclic-vs-square,10000,0,,0,0,", 0), 0u);

  r = run({"distinguish", "--family", "generator-count", "--k", "3", "--p", "3", "--trials", "10",
           "--strategy", "random"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("generator-count,243,"), std::string::npos);

  EXPECT_EQ(run({"distinguish", "--q", "1"}).code, cli::kEmptyPool);
  EXPECT_EQ(run({"distinguish", "--strategy", "psychic"}).code, cli::kInputError);
  EXPECT_EQ(run({"distinguish", "--family", "generator-count", "--p", "4"}).code,
            cli::kInputError);
  EXPECT_EQ(run({"distinguish", "--budget", "0"}).code, cli::kInputError);
}

TEST_F(CliTest, ExperimentIsByteIdentical) {
  const std::vector<std::string> args{"experiment", "soundness", "--trials", "3", "--seed", "9"};
  const auto a = run(args);
  const auto b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines(a.out).size(), 2u + 9u);
  EXPECT_EQ(run({"experiment", "nonsense"}).code, cli::kInputError);
}

}  // namespace
}  // namespace grouptest
