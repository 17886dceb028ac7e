#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "crossforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = crossforge::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

using crossforge::cli::kExitMismatch;
using crossforge::cli::kExitOk;
using crossforge::cli::kExitUsage;

TEST(Cli, ParseRange) {
  EXPECT_EQ(crossforge::cli::parse_range("4..9"), std::make_pair(4, 9));
  EXPECT_EQ(crossforge::cli::parse_range("7"), std::make_pair(7, 7));
  EXPECT_THROW(crossforge::cli::parse_range("9..4"), std::invalid_argument);
  EXPECT_THROW(crossforge::cli::parse_range("a..b"), std::invalid_argument);
}

TEST(Cli, CountMethodsAgree) {
  for (const char* method : {"geometric", "closed", "schedule"}) {
    const auto r = run({"count", "--family", "cycle", "-m", "5", "-n", "5", "--method", method});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_EQ(r.out, "260\n") << method;
  }
  EXPECT_EQ(run({"count", "--family", "path", "-m", "4", "-n", "4"}).out, "12\n");
}

TEST(Cli, Congestion) {
  EXPECT_EQ(run({"congestion", "-m", "4"}).out, "max=12 uniform=true\n");
  EXPECT_EQ(run({"congestion", "-m", "5", "--graph", "km2m"}).out, "max=21 uniform=true\n");
}

TEST(Cli, BoundsCsv) {
  const auto r = run({"bounds", "--family", "cycle", "-m", "4", "-n", "4", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\n4,4,cycle,"), std::string::npos);
}

TEST(Cli, DeferredPathIsUsageError) {
  const auto r = run({"bounds", "--family", "path", "-m", "5", "-n", "2..4"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, CapsEnforced) {
  EXPECT_EQ(run({"count", "--family", "cycle", "-m", "41", "-n", "5", "--method", "closed"}).code, kExitUsage);
  EXPECT_EQ(run({"count", "--family", "cycle", "-m", "16", "-n", "5"}).code, kExitUsage);
}

TEST(Cli, UnknownOptionIsUsage) {
  EXPECT_EQ(run({"verify", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--lemma", "9.9"}).code, kExitUsage);
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run({"verify", "--lemma", "3.12", "--format", "csv"}).code, kExitOk);
  const auto bad = run({"verify", "--lemma", "3.12", "-m", "4..15", "-n", "3..7", "--sign-reading", "literal"});
  EXPECT_EQ(bad.code, kExitMismatch);
  EXPECT_NE(bad.err.find("\"lemma\":\"3.12\""), std::string::npos);
}

TEST(Cli, VerifyJsonEmbedsDiscrepancies) {
  const auto r = run({"verify", "--lemma", "3.9", "--quick", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j.contains("discrepancies"));
  EXPECT_EQ(r.code, j.at("discrepancies").empty() ? kExitOk : kExitMismatch);
}

TEST(Cli, PermPrintsInversions) {
  const auto r = run({"perm", "-l", "1", "-m", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("inv="), std::string::npos);
}
