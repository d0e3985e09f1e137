#include <algorithm>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "fqcalc/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fqcalc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ConstantsText) {
  const Outcome r = invoke({"constants", "--q", "2", "--kind", "bracket", "--i", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x^2 + x"), std::string::npos);
}

TEST(Cli, ConstantsJson) {
  const Outcome r = invoke({"constants", "--q", "3", "--kind", "D", "--i", "1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["field"]["q"], 3);
  EXPECT_EQ(j["value"]["text"], "x^3 + 2*x");
  EXPECT_EQ(invoke({"constants", "--q", "3", "--kind", "D", "--i", "1", "--format", "json"}).out, r.out);
}

TEST(Cli, IntegrateBasisVector) {
  const Outcome r = invoke({"integrate", "--q", "2", "--basis-index", "0", "--method", "both", "--precision", "8", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["exact"]["text"], "1/(x^2 + x)");
  EXPECT_EQ(j["closed"]["valuation"], -1);
  EXPECT_TRUE(j["agreement"]["holds"].get<bool>());
}

TEST(Cli, FieldFromCharacteristic) {
  const Outcome r = invoke({"constants", "--p", "2", "--gamma", "2", "--kind", "bracket", "--i", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("x^4 + x"), std::string::npos);
  EXPECT_EQ(invoke({"constants", "--q", "8", "--p", "2", "--gamma", "2", "--kind", "bracket", "--i", "1"}).code, fqcalc::cli::kExitConfig);
}

TEST(Cli, ConfigErrors) {
  const Outcome bad_q = invoke({"constants", "--q", "6", "--kind", "D", "--i", "1"});
  EXPECT_EQ(bad_q.code, fqcalc::cli::kExitConfig);
  EXPECT_FALSE(bad_q.err.empty());
  EXPECT_EQ(invoke({}).code, fqcalc::cli::kExitConfig);
  EXPECT_EQ(invoke({"constants", "--kind", "nope"}).code, fqcalc::cli::kExitConfig);
  EXPECT_EQ(invoke({"carlitz", "--q", "2", "--fn", "exp", "--z", "x"}).code, fqcalc::cli::kExitConfig);
  EXPECT_EQ(invoke({"--help"}).code, fqcalc::cli::kExitOk);
}

TEST(Cli, CarlitzAndExpand) {
  const Outcome m = invoke({"carlitz", "--q", "2", "--fn", "module", "--s", "x", "--z", "x^2"});
  EXPECT_EQ(m.code, 0) << m.err;
  EXPECT_NE(m.out.find("x^3 + x^4"), std::string::npos) << m.out;
  const Outcome e = invoke({"expand", "--q", "2", "--from", "q", "--coeffs", "0;1", "--to", "carlitz", "--format", "json"});
  EXPECT_EQ(e.code, 0) << e.err;
  EXPECT_NO_THROW(json::parse(e.out));
}

TEST(Cli, VerifyExitCodeReflectsChecks) {
  const Outcome r = invoke({"verify", "--q", "3", "--precision", "24", "--format", "json"});
  const json j = json::parse(r.out);
  EXPECT_EQ(j["checks"].size(), 14u);
  EXPECT_EQ(j["passed"].get<int>() + j["failed"].get<int>(), 14);
  EXPECT_EQ(r.code, j["failed"].get<int>() == 0 ? fqcalc::cli::kExitOk : fqcalc::cli::kExitVerifyFailed);
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) names.push_back(c["name"]);
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
}
