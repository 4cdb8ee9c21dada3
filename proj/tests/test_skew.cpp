#include "support.hpp"

#include "skewdual/mutate.hpp"
#include "skewdual/replay.hpp"

#include <gtest/gtest.h>

using namespace skewdual;
using namespace skewdual::testing;

namespace {

Elem id(const SkewAlgebra& s, const std::string& n) { return s.index_of(n); }

// Right normal band: x o y o z = y o x o z.
bool right_normal(const SquareTable& t) {
  const Elem n = static_cast<Elem>(t.size());
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (t(t(x, y), z) != t(t(y, x), z)) return false;
  return true;
}

}  // namespace

TEST(Skew, ThreeElementAlgebraIsValid) {
  auto s = x3();
  EXPECT_EQ(s.size(), 3u);
  EXPECT_FALSE(raw_skew_defect(x3_input()).has_value());
}

TEST(Skew, BrokenBulletCellIsRejectedWithReplayableWitness) {
  auto in = x3_input();
  in.bullet[1][2] = "x2";
  auto v = violation_of([&] { SkewAlgebra::validate(in); });
  EXPECT_EQ(v.law, "SB1");
  EXPECT_EQ(v.witness, (std::vector<std::string>{"x1", "x2"}));
  auto r = replay_skew(in, v);
  EXPECT_TRUE(r.recognized && r.violated) << r.explanation;
}

TEST(Skew, GammaClassesOfThreeElementAlgebra) {
  auto s = x3();
  auto g = gamma_classes(s);
  ASSERT_EQ(g.classes.size(), 2u);
  EXPECT_EQ(g.classes[0], (std::vector<Elem>{id(s, "0")}));
  EXPECT_EQ(g.classes[1], (std::vector<Elem>{id(s, "x1"), id(s, "x2")}));
  EXPECT_EQ(g.algebra.size(), 2u);
}

TEST(Skew, NaturalOrder) {
  auto s = x3();
  EXPECT_TRUE(natural_leq(s, id(s, "0"), id(s, "x1")));
  EXPECT_FALSE(natural_leq(s, id(s, "x1"), id(s, "x2")));
  EXPECT_FALSE(natural_leq(s, id(s, "x2"), id(s, "x1")));
}

TEST(Skew, RelativeComplementAndMeets) {
  auto s = x3();
  EXPECT_EQ(skew_rel_complement(s, id(s, "x1"), id(s, "x2")), s.zero());
  EXPECT_EQ(meet(s, id(s, "x1"), id(s, "x2")), std::optional<Elem>(s.zero()));
  EXPECT_TRUE(is_wedge_algebra(s));

  auto p = to_skew(prod());
  EXPECT_EQ(p.name(skew_rel_complement(p, id(p, "a1b1"), id(p, "a1"))), "b1");
  EXPECT_EQ(meet(p, id(p, "a1"), id(p, "a2b1")), std::optional<Elem>(p.zero()));
}

TEST(Skew, ConsequencesHoldOnExamples) {
  EXPECT_TRUE(check_consequences(x3()).ok());
  EXPECT_TRUE(check_consequences(to_skew(prod())).ok()) << check_consequences(to_skew(prod()));
}

TEST(Skew, CircReductIsRightNormal) {
  auto p = to_skew(prod());
  EXPECT_TRUE(right_normal(p.circ_table()));
}

TEST(Skew, CollapseIsNotWedgeAndSwapIsAutomorphism) {
  auto doc = fixture("morphisms.txt");
  auto x = to_skew(resolve_bset(doc, "X3"));
  auto c = to_skew(resolve_bset(doc, "Const"));
  std::vector<Elem> collapse(x.size());
  for (Elem e = 0; e < x.size(); ++e) collapse[e] = c.index_of(x.name(e) == "z" ? "w" : "y");
  auto m = validate_skew_morphism(x, c, collapse);
  EXPECT_FALSE(is_wedge_morphism(x, c, m));

  std::vector<Elem> swap(x.size());
  for (Elem e = 0; e < x.size(); ++e)
    swap[e] = x.index_of(x.name(e) == "x1" ? "x2" : x.name(e) == "x2" ? "x1" : x.name(e));
  auto sw = validate_skew_morphism(x, x, swap);
  auto twice = compose(sw, sw);
  for (Elem e = 0; e < x.size(); ++e) EXPECT_EQ(twice(e), e);
}

TEST(Skew, NonMorphismRejected) {
  auto s = x3();
  // x1 -> x1, x2 -> 0 breaks x2 o x1 = x1.
  EXPECT_EQ(violation_law([&] { validate_skew_morphism(s, s, {id(s, "0"), id(s, "x1"), id(s, "0")}); }),
            "NotAMorphism");
}

TEST(Skew, ReorderKeepsOperations) {
  auto s = to_skew(prod());
  std::vector<Elem> order(s.size());
  for (Elem i = 0; i < s.size(); ++i) order[i] = static_cast<Elem>(s.size() - 1 - i);
  auto r = reorder(s, order);
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = 0; y < s.size(); ++y)
      EXPECT_EQ(r.name(r.circ(r.index_of(s.name(x)), r.index_of(s.name(y)))), s.name(s.circ(x, y)));
}

TEST(Skew, RandomTableMutantsAgreeWithRawOracle) {
  std::mt19937_64 rng(7);
  auto base = to_skew(prod()).to_input();
  for (int i = 0; i < 60; ++i) {
    std::string what;
    auto m = mutate_table_cell(base, rng, what);
    auto out = judge_skew(m);
    EXPECT_TRUE(out.sound()) << what;
  }
}
