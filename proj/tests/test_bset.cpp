#include "support.hpp"

#include "skewdual/enumerate.hpp"
#include "skewdual/replay.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace skewdual;
using namespace skewdual::testing;

namespace {

bool isomorphic(const SkewAlgebra& a, const SkewAlgebra& b) {
  if (a.size() != b.size()) return false;
  for (auto& m : enumerate_skew_morphisms(a, b))
    if (std::set<Elem>(m.map.begin(), m.map.end()).size() == a.size()) return true;
  return false;
}

PresheafInput shrunk_prod() {
  auto in = prod_input();
  for (auto& [e, ids] : in.stalks)
    if (e == "1") ids = {"a1b1"};
  for (auto& r : in.restrictions)
    if (r.from == "1") std::erase_if(r.pairs, [](auto& p) { return p.first == "a2b1"; });
  return in;
}

}  // namespace

TEST(Bset, ProdOrderAndCompatibility) {
  auto x = prod();
  auto i = [&](const char* n) { return x.index_of(n); };
  EXPECT_TRUE(x.leq(i("a1"), i("a1b1")));
  EXPECT_FALSE(x.leq(i("a2"), i("a1b1")));
  EXPECT_TRUE(x.compatible(i("a1"), i("b1")));
  EXPECT_FALSE(x.compatible(i("a1b1"), i("a2b1")));
  EXPECT_EQ(x.join(i("a1"), i("b1")), std::optional<Elem>(i("a1b1")));
  EXPECT_FALSE(x.join(i("a1b1"), i("a2b1")).has_value());
}

TEST(Bset, MissingJoinDetected) {
  auto b4 = powerset(2);
  auto v = violation_of([&] { BooleanSet::validate(b4, shrunk_prod()); });
  EXPECT_EQ(v.law, "MissingJoin");
  EXPECT_EQ(v.witness, (std::vector<std::string>{"a2", "b1"}));
  auto r = replay_bset(b4.to_input(), shrunk_prod(), v);
  EXPECT_TRUE(r.recognized && r.violated) << r.explanation;
}

TEST(Bset, OperationsFromSkewAlgebra) {
  auto x = from_skew(x3());
  auto i = [&](const char* n) { return x.index_of(n); };
  EXPECT_EQ(x.name(x.circ(i("x1"), i("x2"))), "x2");
  EXPECT_EQ(x.name(x.bullet(i("x1"), i("x2"))), "x1");
  auto p = prod();
  EXPECT_EQ(p.name(p.bullet(p.index_of("a1"), p.index_of("b1"))), "a1b1");
}

TEST(Bset, RoundTripThroughSkewAlgebra) {
  auto p = prod();
  EXPECT_TRUE(structurally_equal(from_skew(to_skew(p)), p));
  auto s = x3();
  EXPECT_EQ(to_skew(from_skew(s)), s);
}

TEST(Bset, Bm1ViolationForWrongBaseMap) {
  auto doc = fixture("morphisms.txt");
  auto x = resolve_bset(doc, "X3");
  auto c = resolve_bset(doc, "Const");
  std::vector<Elem> m(x.size());
  for (Elem e = 0; e < x.size(); ++e) m[e] = c.index_of(x.name(e) == "z" ? "w" : "y");
  EXPECT_EQ(violation_law([&] { validate_bset_morphism(x, c, m, {0, 0}); }), "BM1Violation");
  auto ok = validate_bset_morphism(x, c, m, {0, 1});
  EXPECT_TRUE(ok.proper);
  EXPECT_FALSE(preserves_meets(x, c, ok));
}

TEST(Bset, CoveringSieves) {
  auto b4 = powerset(2);
  Elem a = b4.index_of("a"), b = b4.index_of("b"), top = b4.index_of("1");
  auto sieve = [&](std::initializer_list<Elem> gens) {
    IndexSet s(b4.size());
    for (Elem g : gens) s |= down_closure(b4, g).members;
    return s;
  };
  EXPECT_TRUE(is_covering_sieve(b4, top, sieve({a, b})));
  EXPECT_FALSE(is_covering_sieve(b4, top, sieve({a})));
  EXPECT_TRUE(is_covering_sieve(b4, b4.bottom(), IndexSet(b4.size())));
  EXPECT_FALSE(is_covering_sieve(b4, b4.bottom(), IndexSet(b4.size()), SieveConvention::kNonEmptyFamilies));
}

TEST(Bset, SheafConditionOnProdAndShrunkProd) {
  auto b4 = powerset(2);
  EXPECT_TRUE(sheaf_condition(prod().presheaf(), b4));
  auto shrunk = Presheaf::validate(b4.order(), shrunk_prod());
  EXPECT_FALSE(sheaf_condition(shrunk, b4));
  EXPECT_TRUE(find_sheaf_violation(shrunk, b4).has_value());
}

TEST(Bset, GeneratorShapes) {
  EXPECT_TRUE(isomorphic(to_skew(generate_boolean_set({2})), x3()));
  EXPECT_TRUE(isomorphic(to_skew(generate_boolean_set({2, 1})), to_skew(prod())));
  auto g = generate_boolean_set({3, 2, 1}, 5);
  EXPECT_EQ(g.size(), 1u + 3 + 2 + 1 + 6 + 3 + 2 + 6);
}

TEST(Bset, LemmaReportOnExamples) {
  EXPECT_TRUE(bset_lemma_report(prod()).ok()) << bset_lemma_report(prod());
  EXPECT_TRUE(bset_lemma_report(generate_boolean_set({2, 2, 1}, 3)).ok());
}

TEST(Bset, RightZeroBandWithZeroIsBoolean) {
  BandInput in{{"0", "p", "q"}, {{"0", "0", "0"}, {"0", "p", "q"}, {"0", "p", "q"}}};
  auto s = RightNormalBand::validate(in);
  EXPECT_TRUE(is_boolean_band(s));
  auto x = band_to_boolean_set(s);
  EXPECT_EQ(x.size(), 3u);
  EXPECT_EQ(presheaf_to_band(band_to_presheaf(s)), s);
}

TEST(Bset, NonRightNormalBandRejected) {
  // Left zero band: x o y = x.
  BandInput in{{"p", "q"}, {{"p", "p"}, {"q", "q"}}};
  EXPECT_EQ(violation_law([&] { RightNormalBand::validate(in); }), "NotRightNormal");
}

TEST(Bset, ProjectionAlongAtomIsMorphism) {
  auto p = prod();
  auto c = constant_bset(powerset(2));
  // Meet-preserving embedding picking a1 over the atom a.
  std::vector<Elem> m(c.size());
  for (Elem e = 0; e < c.size(); ++e) {
    const std::string& n = c.name(e);
    m[e] = p.index_of(n == "c0" ? "0" : n == "ca" ? "a1" : n == "cb" ? "b1" : "a1b1");
  }
  auto f = validate_bset_morphism(c, p, m, identity_hom(p.base()).map);
  EXPECT_TRUE(preserves_meets(c, p, f));
}

TEST(Bset, SheafIffBooleanOverFourElements) {
  auto b4 = powerset(2);
  int sheaves = 0, boolean = 0;
  for_each_presheaf_input(b4, {1, 2, 1, 2}, [&](const PresheafInput& in) {
    Presheaf p;
    try {
      p = Presheaf::validate(b4.order(), in);
    } catch (const ValidationError&) {
      return;
    }
    bool sheaf = sheaf_condition(p, b4);
    bool is_bool = !raw_bset_defect(b4.to_input(), in).has_value();
    EXPECT_EQ(sheaf, is_bool);
    sheaves += sheaf;
    boolean += is_bool;
  });
  EXPECT_GT(sheaves, 0);
  EXPECT_EQ(sheaves, boolean);
}
