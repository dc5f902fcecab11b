#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

const std::string kDataDir = KNOT818_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "knot818");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = knot818::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

TEST(CliBuild, Default818) {
  const auto r = run({"build", "--braid", "1 -2 1 -2 1 -2 1 -2", "--strands", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "crossings: 8\n"));
  EXPECT_TRUE(contains(r.out, "writhe: 0\n"));
  EXPECT_TRUE(contains(r.out, "vertices: 4\n"));
}

TEST(CliBuild, PositiveTwoStrand) {
  const auto r = run({"build", "--braid", "1 1 1", "--strands", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "crossings: 3\n"));
  EXPECT_TRUE(contains(r.out, "writhe: 3\n"));
}

TEST(CliBuild, ThreeCycleClosure) {
  const auto r = run({"build", "--braid", "1 2", "--strands", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "crossings: 2\n"));
}

TEST(CliBuild, Errors) {
  EXPECT_EQ(run({"build", "--braid", "1 x", "--strands", "3"}).code, 2);
  EXPECT_EQ(run({"build", "--braid", "1 5", "--strands", "3"}).code, 2);
  const auto link = run({"build", "--braid", "1 1", "--strands", "2"});
  EXPECT_EQ(link.code, 3);
  EXPECT_TRUE(contains(link.err, "NotAKnot"));
}

TEST(CliInvariants, Default) {
  const auto r = run({"invariants"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "alexander: 1 - 5*t + 10*t^2 - 13*t^3 + 10*t^4 - 5*t^5 + t^6\n"));
  EXPECT_TRUE(contains(r.out, "writhe: 0\n"));
  EXPECT_TRUE(contains(r.out, "phase: 6π\n"));
  EXPECT_TRUE(contains(r.out, "determinant: 45\n"));
}

TEST(CliInvariants, Trefoil) {
  const auto r = run({"invariants", "--braid", "1 1 1", "--strands", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "alexander: 1 - t + t^2\n"));
  EXPECT_TRUE(contains(r.out, "determinant: 3\n"));
}

TEST(CliTraverse, CaseA) {
  const auto r = run({"traverse", "--start", "K", "--dir", "cw", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("site,role,value\n", 0), 0u);
  EXPECT_TRUE(contains(r.out, "A,over,13\n"));
  EXPECT_TRUE(contains(r.out, "A,under,19\n"));
  EXPECT_TRUE(contains(r.out, "K,through,1\n"));
  EXPECT_TRUE(contains(r.out, "L,through,16\n"));
}

TEST(CliTraverse, CaseB) {
  const auto r = run({"traverse", "--start", "K", "--dir", "ccw", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "A,over,9\n"));
  EXPECT_TRUE(contains(r.out, "E,under,10\n"));
  EXPECT_TRUE(contains(r.out, "J,through,16\n"));
}

TEST(CliTraverse, RoleOnBranchIsUsageError) {
  const auto r = run({"traverse", "--start", "K", "--dir", "cw", "--role", "over"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTraverse, ShoulderNeedsRole) { EXPECT_EQ(run({"traverse", "--start", "F", "--dir", "cw"}).code, 2); }

TEST(CliAnalyze, SingleState) {
  const auto r = run({"analyze", "--state", "K,cw", "--format", "csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "inner_shoulder,A,32\n") || contains(r.out, ",A,32\n"));
  EXPECT_TRUE(contains(r.out, ",C,12\n"));
  EXPECT_TRUE(contains(r.out, ",F,27\n"));
}

TEST(CliAnalyze, Ensembles) {
  const auto all = run({"analyze", "--ensemble", "all40"});
  EXPECT_EQ(all.code, 0) << all.err;
  EXPECT_TRUE(contains(all.out, "all40"));
  EXPECT_FALSE(contains(all.out, "mismatch=yes"));
  const auto reps = run({"analyze", "--ensemble", "reps10"});
  EXPECT_EQ(reps.code, 0) << reps.err;
  EXPECT_TRUE(contains(reps.out, "reps10"));
  EXPECT_TRUE(contains(reps.out, "mismatch=yes"));
  EXPECT_EQ(run({"analyze", "--ensemble", "with_mirrors"}).code, 0);
  EXPECT_EQ(run({"analyze", "--ensemble", "bogus"}).code, 2);
}

TEST(CliCheckFixture, WithErrata) {
  const auto r = run({"check-fixture", "--fixture", kDataDir + "/table1.csv", "--errata", kDataDir + "/table1_errata.csv"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_FALSE(contains(r.out, "UNMATCHED"));
  EXPECT_TRUE(contains(r.out, "h MATCHED_WITH_ERRATUM"));
}

TEST(CliCheckFixture, WithoutErrata) {
  const auto r = run({"check-fixture", "--fixture", kDataDir + "/table1.csv"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "h UNMATCHED"));
  EXPECT_TRUE(contains(r.out, "value 12 appears 2 times"));
  EXPECT_TRUE(contains(r.out, "value 2 missing"));
}

TEST(CliCheckFixture, TruncatedFile) {
  const std::string path = ::testing::TempDir() + "knot818_truncated.csv";
  {
    std::ifstream in(kDataDir + "/table1.csv");
    std::ofstream out(path);
    std::string line;
    for (int i = 0; i < 5 && std::getline(in, line); ++i) out << line << "\n";
    out << "a,B,ov";
  }
  const auto r = run({"check-fixture", "--fixture", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "line 6"));
  EXPECT_EQ(run({"check-fixture", "--fixture", "/nonexistent/table.csv"}).code, 2);
}

TEST(CliDeterminism, CsvAndJsonAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"build", "--format", "json"},
      {"invariants", "--format", "csv"},
      {"traverse", "--start", "F", "--dir", "ccw", "--role", "under", "--format", "json"},
      {"analyze", "--ensemble", "reps10", "--format", "json"},
      {"embed", "--points", "8"},
  };
  for (const auto& cmd : commands) {
    const auto a = run(cmd);
    const auto b = run(cmd);
    EXPECT_EQ(a.code, 0) << cmd.front() << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << cmd.front();
  }
}

TEST(CliDt, Trefoil) {
  const auto r = run({"dt", "--gauss", "O1 U2 O3 U1 O2 U3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "4 6 2\n");
}

TEST(CliUsage, UnknownSubcommand) { EXPECT_EQ(run({"frobnicate"}).code, 2); }

}  // namespace
