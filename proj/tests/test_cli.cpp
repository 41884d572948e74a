#include <gtest/gtest.h>

#include "cli_harness.hpp"
#include "qcycle/enumerate.hpp"

using namespace qcycle;
using qcycle::testing::run;
using qcycle::testing::write_temp_file;

namespace {

std::string a2_bfile(int last, int altered_index = -1) {
  std::string text = "# A177249 fixture\n\n";
  for (int n = 0; n <= last; ++n) {
    BigInt value = a_formula(2, n, 0);
    if (n == altered_index) value += 1;
    text += std::to_string(n) + " " + value.str() + "\n";
  }
  return text;
}

}  // namespace

TEST(CliFoata, Examples) {
  EXPECT_EQ(run({"foata", "213967548"}).out, "567498312\n");
  EXPECT_EQ(run({"foata", "--inverse", "567498312"}).out, "213967548\n");
  const auto empty = run({"foata", ""});
  EXPECT_EQ(empty.code, 0);
  EXPECT_EQ(empty.out, "\n");
  EXPECT_EQ(run({"foata", "2,1,3,9,6,7,5,4,8,10"}).out, "10,5,6,7,4,9,8,3,1,2\n");
}

TEST(CliFoata, ParseFailure) {
  const auto bad = run({"foata", "1123"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("duplicate"), std::string::npos);
  EXPECT_EQ(run({"foata"}).code, kExitUsage);
}

TEST(CliMesh, Examples) {
  EXPECT_EQ(run({"mesh", "count", "--pattern", "s:3", "567498312"}).out, "1\n");
  EXPECT_EQ(run({"mesh", "avoiders", "--pattern", "p", "--n", "3"}).out, "5\n");
  EXPECT_EQ(run({"mesh", "count", "--pattern", "r:1", ""}).out, "0\n");
  EXPECT_EQ(run({"mesh", "occurrences", "--pattern", "s:1", "321"}).out, "1 2\n2 3\n");
  EXPECT_EQ(run({"mesh", "occurrences", "--pattern", "r:2", "567498312"}).out, "8 9\n");
  EXPECT_EQ(run({"mesh", "avoiders", "--pattern", "p", "--n", "3", "--list"}).out,
            "123\n213\n231\n312\n321\n");
  EXPECT_EQ(run({"mesh", "count", "--pattern", "21|0,0 0,1 1,0 1,1 1,2", "567498312"}).out, "1\n");
}

TEST(CliMesh, Errors) {
  EXPECT_EQ(run({"mesh", "count", "--pattern", "bogus", "123"}).code, kExitUsage);
  EXPECT_EQ(run({"mesh", "count", "--pattern", "1|5,5", "123"}).code, kExitUsage);
  EXPECT_EQ(run({"mesh", "avoiders", "--pattern", "p", "--n", "10"}).code, kExitUsage);
  EXPECT_EQ(run({"mesh", "avoiders", "--pattern", "p", "--n", "-2"}).code, kExitUsage);
  EXPECT_EQ(run({"mesh"}).code, kExitUsage);
}

TEST(CliSeries, Examples) {
  EXPECT_EQ(run({"series", "a2", "--terms", "3"}).out, "0\t1\n1\t1\n2\t1\n3\t4\n");
  EXPECT_EQ(run({"series", "f", "--terms", "2"}).out, "0\t1\n1\t1\n2\t2\n");
  EXPECT_EQ(run({"series", "a2", "--terms", "0"}).out, "0\t1\n");
  EXPECT_EQ(run({"series", "avoiders-p", "--terms", "4"}).out, "0\t1\n1\t1\n2\t2\n3\t5\n4\t20\n");
  EXPECT_EQ(run({"series", "avoiders-p", "--terms", "12"}).code, kExitUsage);
  EXPECT_EQ(run({"series", "g", "--terms", "2"}).code, kExitUsage);
  EXPECT_EQ(run({"series", "a2", "--terms", "-1"}).code, kExitUsage);
}

TEST(CliVerify, Theorem1) {
  const auto result = run({"verify", "theorem1", "--max-n", "6"});
  EXPECT_EQ(result.code, kExitOk);
  ASSERT_GE(result.out.size(), 5u);
  EXPECT_EQ(result.out.substr(result.out.size() - 5), "PASS\n");
  EXPECT_NE(result.out.find("permutations scanned: 874"), std::string::npos);
}

TEST(CliVerify, Conjecture) {
  const auto result = run({"verify", "conjecture", "--max-n", "6", "--series-terms", "100"});
  EXPECT_EQ(result.code, kExitOk);
  EXPECT_EQ(result.out.substr(result.out.size() - 5), "PASS\n");
  EXPECT_EQ(result.out.find("[FAIL]"), std::string::npos);
}

TEST(CliVerify, InvalidBounds) {
  EXPECT_EQ(run({"verify", "theorem1", "--max-n", "-1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "theorem1", "--max-n", "12"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "conjecture", "--max-n", "3", "--series-terms", "-4"}).code,
            kExitUsage);
  EXPECT_EQ(run({"verify", "lemma2", "--max-n", "3"}).code, kExitUsage);
}

TEST(CliOeisDiff, Match) {
  const std::string path = write_temp_file("match.txt", a2_bfile(50));
  const auto result = run({"oeis-diff", path, "--terms", "50"});
  EXPECT_EQ(result.code, kExitOk);
  EXPECT_EQ(result.out, "MATCH over [0,50]\n");
  // Without --terms the local series extends to the last b-file index.
  EXPECT_EQ(run({"oeis-diff", path}).out, "MATCH over [0,50]\n");
  EXPECT_EQ(run({"oeis-diff", path, "--terms", "20"}).out, "MATCH over [0,20]\n");
}

TEST(CliOeisDiff, Mismatch) {
  const std::string path = write_temp_file("mismatch.txt", a2_bfile(50, 17));
  const auto result = run({"oeis-diff", path, "--terms", "50"});
  EXPECT_EQ(result.code, kExitMismatch);
  EXPECT_NE(result.out.find("index 17"), std::string::npos);
}

TEST(CliOeisDiff, NoOverlap) {
  const std::string path = write_temp_file("late.txt", "60 1\n61 2\n");
  const auto result = run({"oeis-diff", path, "--terms", "50"});
  EXPECT_EQ(result.code, kExitUsage);
  EXPECT_NE(result.err.find("no overlapping range"), std::string::npos);
}

TEST(CliOeisDiff, BadInput) {
  const std::string malformed = write_temp_file("malformed.txt", "0 1\n1 1\n2 x\n");
  const auto result = run({"oeis-diff", malformed});
  EXPECT_EQ(result.code, kExitUsage);
  EXPECT_NE(result.err.find(":3:"), std::string::npos);
  EXPECT_EQ(run({"oeis-diff", "/nonexistent/bfile.txt"}).code, kExitUsage);
  const std::string f_file = write_temp_file("f.txt", "0 1\n1 1\n2 2\n3 5\n4 20\n");
  EXPECT_EQ(run({"oeis-diff", f_file, "--series", "f"}).out, "MATCH over [0,4]\n");
  EXPECT_EQ(run({"oeis-diff", f_file, "--series", "a2"}).code, kExitMismatch);
}

TEST(Cli, Determinism) {
  const std::vector<std::string> args{"mesh", "avoiders", "--pattern", "s2'", "--n", "6", "--list"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UnknownCommand) {
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}
