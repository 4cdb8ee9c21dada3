#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

using namespace skewdual;
using namespace skewdual::testing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

std::string temp_file(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ValidateProd) {
  auto r = run({"validate", fixture_path("prod.txt"), "Prod"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "PASS")) << r.out;
}

TEST(Cli, ValidateM3Fails) {
  auto r = run({"validate", fixture_path("m3.txt"), "M3"});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_TRUE(contains(r.out + r.err, "NotDistributive")) << r.out << r.err;
}

TEST(Cli, RoundtripProd) {
  auto r = run({"roundtrip", fixture_path("prod.txt"), "Prod"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "alpha: isomorphism (6 elements)")) << r.out;
}

TEST(Cli, RoundtripEtale) {
  auto r = run({"roundtrip", fixture_path("efix.txt"), "Efix"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "beta: isomorphism (3 points)")) << r.out;
}

TEST(Cli, ParseErrorExitCode) {
  auto path = temp_file("broken.txt", "balg B {\n  elements 0\n}\n");
  EXPECT_EQ(run({"validate", path}).code, kExitParse);
  EXPECT_EQ(run({"validate", fixture_path("does-not-exist.txt")}).code, kExitParse);
  EXPECT_EQ(run({"no-such-command"}).code, kExitParse);
}

TEST(Cli, GenProducesParseableDocument) {
  auto r = run({"gen", "--atoms", "2", "--stalks", "2,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = parse(r.out);
  auto x = resolve_bset(doc, "Gen");
  EXPECT_EQ(x.size(), 6u);
}

TEST(Cli, ToSkewThenToBsetRoundTrips) {
  auto skew = run({"to-skew", fixture_path("prod.txt"), "Prod"});
  ASSERT_EQ(skew.code, kExitOk) << skew.err;
  auto path = temp_file("prod_skew.txt", skew.out);
  auto back = run({"to-bset", path, "Prod_skew"});
  ASSERT_EQ(back.code, kExitOk) << back.err;
  auto doc = parse(back.out);
  EXPECT_EQ(resolve_bset(doc, "Prod_skew_bset").size(), 6u);
}

TEST(Cli, DualizeEtale) {
  auto r = run({"dualize", fixture_path("efix.txt"), "Efix"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto doc = parse(r.out);
  EXPECT_EQ(resolve_bset(doc, "Efix_dual").size(), 6u);
}

TEST(Cli, SectionsOverBase) {
  auto r = run({"sections", fixture_path("efix.txt"), "Efix", "--over", "u,v"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "e1+e3"));
  EXPECT_TRUE(contains(r.out, "e2+e3"));
}

TEST(Cli, CheckMorphism) {
  auto r = run({"check-morphism", fixture_path("morphisms.txt"), "collapse"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
}

TEST(Cli, PropsBatch) {
  auto r = run({"props", fixture_path("prod.txt")});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
}

TEST(Cli, UltrafiltersOfProd) {
  auto r = run({"ultrafilters", fixture_path("prod.txt"), "Prod"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_FALSE(r.out.empty());
}

TEST(Cli, ExportDot) {
  auto r = run({"export", "--dot", fixture_path("prod.txt"), "Prod"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "digraph"));
  EXPECT_TRUE(contains(r.out, "cluster_base"));
}

TEST(Cli, ReplayConfirmsMutantWitness) {
  auto r = run({"replay", fixture_path("m3.txt"), "M3", "NotDistributive", "a", "b", "c"});
  EXPECT_EQ(r.code, kExitFailure) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "CONFIRMED"));
  auto fine = run({"replay", fixture_path("b4.txt"), "B4", "NotDistributive", "a", "b", "1"});
  EXPECT_EQ(fine.code, kExitOk) << fine.out;
  EXPECT_TRUE(contains(fine.out, "NOT CONFIRMED"));
  EXPECT_EQ(run({"replay", fixture_path("b4.txt"), "B4", "NoSuchLaw"}).code, kExitParse);
}
