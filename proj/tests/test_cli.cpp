#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "verkit/cli.hpp"
#include "verkit/serialize.hpp"

namespace fs = std::filesystem;
using namespace verkit;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() / ("verkit_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                         "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string str() const { return path_.string(); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST(Cli, FuseExamples) {
  auto r = run({"fuse", "-p", "3", "-n", "2", "-a", "2", "-b", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "L2 + P0\n(2,0,1,0,1,0)\n");
  r = run({"fuse", "-p", "5", "-n", "2", "-a", "15", "-b", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 3), "L5\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"report", "-p", "99", "-n", "1", "--no-cache"}).code, 2);
  EXPECT_EQ(run({"report", "-p", "3"}).code, 2);
  EXPECT_EQ(run({"fuse", "-p", "3", "-n", "2", "-a", "9", "-b", "0"}).code, 2);
  EXPECT_EQ(run({"fuse", "-p", "2", "-n", "3", "-a", "0", "-b", "0"}).code, 2);
  EXPECT_EQ(run({"fuse", "-p", "2", "-n", "3", "-a", "1", "-b", "1", "--experimental-p2"}).code, 0);
  EXPECT_EQ(run({"table", "-p", "3", "-n", "2", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({"nosuchcommand"}).code, 2);
  EXPECT_EQ(run({"ext1", "-p", "2", "-n", "3"}).code, 2);
}

TEST(Cli, JsonIsDeterministicAndRoundTrips) {
  for (const std::string cmd : {"cartan", "decomp", "table", "blocks", "invariants", "verify"}) {
    std::vector<std::string> args{cmd, "-p", "3", "-n", "2", "--format", "json", "--no-cache", "--check-roundtrip"};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << cmd << ": " << a.err;
    EXPECT_EQ(a.out, b.out);
    std::string why;
    EXPECT_TRUE(io::check_roundtrip(a.out, &why)) << cmd << ": " << why;
    auto doc = io::json::parse(a.out);
    EXPECT_EQ(doc["schema_version"], 1);
    EXPECT_EQ(doc["p"], 3);
  }
}

TEST(Cli, CsvHeader) {
  auto r = run({"cartan", "-p", "3", "-n", "2", "--format", "csv", "--no-cache"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "label,L0,L1,L2,L3,L4,L5");
}

TEST(Cli, ReportCacheWarmMatchesCold) {
  TempDir dir;
  std::vector<std::string> args{"report", "-p", "3", "-n", "3", "--format", "json", "--cache-dir", dir.str()};
  auto cold = run(args);
  ASSERT_EQ(cold.code, 0) << cold.err;
  const auto file = dir.path() / "verpn_3_3_v1.json";
  ASSERT_TRUE(fs::exists(file));
  auto warm = run(args);
  EXPECT_EQ(warm.out, cold.out);
  auto uncached = run({"report", "-p", "3", "-n", "3", "--format", "json", "--no-cache"});
  EXPECT_EQ(uncached.out, cold.out);
  // different sampling options bypass the stored file
  auto other = run({"report", "-p", "3", "-n", "3", "--format", "json", "--cache-dir", dir.str(), "--rng-seed", "5"});
  EXPECT_EQ(other.code, 0);
  EXPECT_NE(other.out, cold.out);
}

TEST(Cli, OutputFile) {
  TempDir dir;
  const auto file = (dir.path() / "t.txt").string();
  auto r = run({"table", "-p", "3", "-n", "2", "--output", file});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(file);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "x|L0|L1|L2|L3|L4|L5");
}

TEST(Cli, InvariantsAndTilting) {
  auto r = run({"invariants", "-p", "2", "-n", "2", "-M", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = io::json::parse(r.out);
  EXPECT_EQ(doc["payload"].dump().find("8") != std::string::npos, true);
  r = run({"tilting", "-p", "3", "-n", "2", "-m", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(r.out.empty());
}
