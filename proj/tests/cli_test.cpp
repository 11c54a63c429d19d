#include <gtest/gtest.h>

#include "rankone/cli.hpp"
#include "rankone/json_io.hpp"

namespace rankone {
namespace {

cli::Outcome r1(std::vector<std::string> args, std::string_view input = {}) {
  args.insert(args.begin(), "r1");
  return cli::run(args, input);
}

constexpr std::string_view kChaconLike =
    R"({"prefix": [], "tail": {"type": "periodic", "cycle": [{"r": 3, "s": [0, 1]}]}})";
constexpr std::string_view kShortPrefix =
    R"({"prefix": [{"r": 2, "s": [0]}, {"r": 2, "s": [1]}], "tail": {"type": "unspecified"}})";

TEST(Cli, Star) {
  const auto o = r1({"star", "--s2", "5,6", "--s1", "0,1,0"});
  EXPECT_EQ(o.exit_code, 0);
  EXPECT_EQ(o.out, "0,1,0,5,0,1,0,6,0,1,0\n");
}

TEST(Cli, ReverseAndCompat) {
  EXPECT_EQ(r1({"reverse", "--s", "0,1"}).out, "1,0\n");
  EXPECT_EQ(r1({"compat", "--s", "0,1,0", "--s-prime", "0,0,1"}).out, "Compatible offset=1 middle=0\n");
  EXPECT_EQ(r1({"compat", "--s", "0,1,0", "--s-prime", "0,1,2"}).out, "Incompatible\n");
  const auto mismatch = r1({"compat", "--s", "0,1", "--s-prime", "0,1,2"});
  EXPECT_EQ(mismatch.exit_code, 1);
  EXPECT_NE(mismatch.err.find("LengthMismatch"), std::string::npos);
}

TEST(Cli, DecideJson) {
  const auto o = r1({"decide", "--params", "-", "--json"}, kChaconLike);
  ASSERT_EQ(o.exit_code, 0) << o.err;
  const Json j = Json::parse(o.out);
  EXPECT_EQ(j["command"], "decide");
  EXPECT_EQ(j["result"]["verdict"], "NotIsomorphicToInverse");
  EXPECT_EQ(j["result"]["certificate"]["entries"][0]["combined_r"], 27);
}

TEST(Cli, DecideOutputIsDeterministic) {
  const auto a = r1({"decide", "--params", "-", "--json"}, kChaconLike);
  const auto b = r1({"decide", "--params", "-", "--json"}, kChaconLike);
  EXPECT_EQ(a.out, b.out);
  const auto c = r1({"decide", "--params", "-", "--json"}, kShortPrefix);
  EXPECT_NE(Json::parse(a.out)["input_digest"], Json::parse(c.out)["input_digest"]);
}

TEST(Cli, VerifyCertRoundTrip) {
  const auto decided = r1({"decide", "--params", "-", "--json"}, kChaconLike);
  const auto verified = r1({"verify-cert", "--cert", "-", "--json"}, decided.out);
  ASSERT_EQ(verified.exit_code, 0) << verified.err;
  const Json j = Json::parse(verified.out);
  EXPECT_TRUE(j["result"]["verified"].get<bool>());
  EXPECT_TRUE(j["result"]["byte_identical"].get<bool>());

  const auto witness = r1({"witness", "--params", "-"}, kChaconLike);
  EXPECT_EQ(r1({"verify-cert", "--cert", "-"}, witness.out).out, "verified\n");
}

TEST(Cli, VerifyCertRejectsTampering) {
  const auto witness = r1({"witness", "--params", "-"}, kChaconLike);
  Json j = Json::parse(witness.out);
  j["entries"][0]["combined_s"][0] = 5;
  const auto o = r1({"verify-cert", "--cert", "-"}, j.dump(2));
  EXPECT_EQ(o.exit_code, 1);
  EXPECT_NE(o.err.find("InvalidCertificate"), std::string::npos);
}

TEST(Cli, WordBeyondPrefix) {
  const auto o = r1({"word", "--params", "-", "--level", "99", "--json"}, kShortPrefix);
  EXPECT_EQ(o.exit_code, 1);
  EXPECT_NE(o.err.find("BeyondPrefix"), std::string::npos);
  EXPECT_EQ(Json::parse(o.out)["error"]["name"], "BeyondPrefix");
  EXPECT_EQ(r1({"word", "--params", "-", "--level", "2"}, kShortPrefix).out, "00100\n");
}

TEST(Cli, UsageErrors) {
  const auto missing = r1({"star", "--s2", "5,6"});
  EXPECT_EQ(missing.exit_code, 2);
  EXPECT_NE(missing.err.find("--s1"), std::string::npos);
  EXPECT_EQ(r1({}).exit_code, 2);
  const auto unknown = r1({"star", "--s2", "1", "--s1", "1", "--bogus"});
  EXPECT_EQ(unknown.exit_code, 2);
  EXPECT_NE(unknown.err.find("--bogus"), std::string::npos);
  EXPECT_EQ(r1({"--help"}).exit_code, 0);
}

TEST(Cli, ParseMeasureConditionsCollapse) {
  const auto parse = r1({"parse", "--params", "-", "--inner", "0", "--outer", "1", "--verify"}, kChaconLike);
  EXPECT_EQ(parse.out, "offsets 0,1,3\ngaps 0,1\nproperties pass\n");
  const auto depth = r1({"parse", "--params", "-", "--depth", "2", "--pattern", "0,1", "--json"}, kChaconLike);
  EXPECT_EQ(Json::parse(depth.out)["result"]["outer"], 2);
  EXPECT_EQ(Json::parse(depth.out)["result"]["pattern_matches"].size(), 3u);

  const auto measure = r1({"measure", "--params", "-", "--level", "1", "--json"}, kChaconLike);
  const Json m = Json::parse(measure.out)["result"];
  EXPECT_EQ(m["normalizer"]["kind"], "Exact");
  EXPECT_EQ(m["normalizer"]["value"], (Json{{"num", "3"}, {"den", "2"}}));
  EXPECT_EQ(m["tower_mass"], (Json{{"num", "8"}, {"den", "9"}}));

  const auto cond = r1({"conditions", "--params", "-"}, kChaconLike);
  EXPECT_EQ(cond.out, "condition1 Holds\ncondition2 Holds\ncanonical_necessary true\n");

  const auto collapsed = r1({"collapse", "--params", "-", "--level", "0", "--unroll", "2"}, kChaconLike);
  ASSERT_EQ(collapsed.exit_code, 0) << collapsed.err;
  EXPECT_EQ(Json::parse(collapsed.out)["prefix"][0]["r"], 9);
  const auto tail = r1({"collapse", "--params", "-", "--level", "0"}, kChaconLike);
  EXPECT_NE(tail.err.find("TailCollapse"), std::string::npos);
}

TEST(Cli, PremisesAndSweep) {
  const auto premises = r1({"premises", "--params", "-"}, kChaconLike);
  EXPECT_EQ(premises.out, "condition1 true\ncondition2 true S=1\ncondition3 false R=0\n");
  const auto sweep = r1({"sweep", "--rmax", "3", "--smax", "2", "--threads", "2"});
  EXPECT_EQ(sweep.exit_code, 0);
  EXPECT_EQ(sweep.out, "lemma pairs 36, counterexamples 0\nperp symmetry pairs 90, violations 0\n");
}

}  // namespace
}  // namespace rankone
