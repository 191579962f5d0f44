#include <gtest/gtest.h>

#include <sstream>

#include "reemobius_cli.hpp"

using reemobius::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = reemobius::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, CountFreeGroup) {
  const Json doc = run_json({"count", "--n", "3", "--target", "f2", "--d"});
  EXPECT_EQ(doc["schema_version"], "1.0");
  EXPECT_EQ(doc["command"], "count");
  EXPECT_EQ(doc["results"]["d"], "3357637312");
  EXPECT_EQ(doc["results"]["agree"], true);
  EXPECT_FALSE(doc["results"].contains("d_note"));
  const Json ext = run_json({"count", "--n", "3", "--target", "c3c3", "--d"});
  EXPECT_TRUE(ext["results"].contains("d_note"));
}

TEST(Cli, Probability) {
  const Json doc = run_json({"prob", "--n", "3", "--spec", "2,3"});
  EXPECT_EQ(doc["results"]["probability"]["num"], "648");
  EXPECT_EQ(doc["results"]["probability"]["den"], "703");
  EXPECT_EQ(doc["results"]["decimal"], "0.921763869132");
}

TEST(Cli, MobiusTable) {
  const Json doc = run_json({"mobius", "--n", "3"});
  EXPECT_EQ(doc["results"]["group_order"], "10073444472");
  EXPECT_EQ(doc["results"]["nonzero_classes"], 13);
  bool found = false;
  for (const auto& c : doc["results"]["classes"]) {
    if (c["class"] == "E") {
      EXPECT_EQ(c["mobius"], -21);
      EXPECT_EQ(c["class_size"], "59960979");
      found = true;
    }
  }
  EXPECT_TRUE(found);
  const auto csv = run({"mobius", "--n", "3", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out.rfind("class,tag,h,type", 0), 0u);
}

TEST(Cli, IntegersAreStrings) {
  const Json doc = run_json({"count", "--n", "5", "--target", "hecke3"});
  EXPECT_TRUE(doc["results"]["phi_class_sum"].is_string());
  EXPECT_EQ(reemobius::Natural::parse(doc["results"]["phi_class_sum"].get<std::string>()),
            reemobius::inversion::phi_class_sum(reemobius::TargetGroup::Hecke3, 5));
}

TEST(Cli, VerifyPasses) {
  const auto r = run({"verify", "--n", "9"});
  EXPECT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["results"]["status"], "pass");
  EXPECT_EQ(doc["results"]["checks_failed"], 0);
  bool typo = false;
  for (const auto& c : doc["results"]["catalog"][0]["corollaries"]) {
    if (c["target"] == "c3-inf") typo = c["status"] == "suspected_typo";
  }
  EXPECT_TRUE(typo);
}

TEST(Cli, Deterministic) {
  EXPECT_EQ(run({"verify", "--n", "5"}).out, run({"verify", "--n", "5"}).out);
}

TEST(Cli, Oracle) {
  const auto r = run({"oracle", "--group", std::string(REEMOBIUS_DATA_DIR) + "/s4.txt",
                      "--target", "hecke3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["results"]["group_order"], 24);
  EXPECT_EQ(doc["results"]["subgroups"], 30);
  EXPECT_EQ(doc["results"]["brute_force"], "24");
  EXPECT_EQ(doc["results"]["inversion_agrees"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count", "--n", "4", "--target", "f2"}).code, 2);
  EXPECT_EQ(run({"count", "--n", "1", "--target", "f2"}).code, 2);
  EXPECT_EQ(run({"count", "--n", "3", "--target", "f3"}).code, 2);
  EXPECT_EQ(run({"count", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"prob", "--n", "3", "--spec", "2,5"}).code, 2);
  EXPECT_EQ(run({"oracle", "--group", "/nonexistent", "--target", "f2"}).code, 2);
  EXPECT_EQ(run({"oracle", "--group", std::string(REEMOBIUS_DATA_DIR) + "/a5.txt",
                 "--target", "f2", "--bound", "50"})
                .code,
            2);
  EXPECT_EQ(run({"mobius", "--n", "3", "--format", "xml"}).code, 2);
}
