#include "support.hpp"

#include "skewdual/duality.hpp"
#include "skewdual/enumerate.hpp"

#include <gtest/gtest.h>

using namespace skewdual;
using namespace skewdual::testing;

namespace {

std::size_t atom_stalk_total(const BooleanSet& x) {
  std::size_t n = 0;
  for (Elem a : x.base().atoms()) n += x.stalk(a).size();
  return n;
}

BSetMorphism collapse(const BooleanSet& x, const BooleanSet& c) {
  std::vector<Elem> m(x.size());
  for (Elem e = 0; e < x.size(); ++e) m[e] = c.index_of(x.name(e) == "z" ? "w" : "y");
  return validate_bset_morphism(x, c, m, {0, 1});
}

bool check(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  return c != nullptr && c->ok;
}

std::string detail(const Report& r, const std::string& name) {
  const Check* c = r.find(name);
  return c == nullptr ? "" : c->detail;
}

}  // namespace

TEST(Duality, UltrafilterCounts) {
  auto doc = fixture("morphisms.txt");
  EXPECT_EQ(bset_ultrafilters(resolve_bset(doc, "X3")).size(), 2u);
  EXPECT_EQ(bset_ultrafilters(constant_bset(powerset(2))).size(), 2u);
  EXPECT_EQ(bset_ultrafilters(prod()).size(), 3u);
}

TEST(Duality, UltrafiltersMatchAtomStalks) {
  for (auto sizes : std::vector<std::vector<unsigned>>{{1}, {3}, {2, 1}, {2, 2}, {1, 2, 3}, {3, 1, 1}}) {
    auto x = generate_boolean_set(sizes, 11);
    EXPECT_EQ(bset_ultrafilters(x).size(), atom_stalk_total(x));
  }
}

TEST(Duality, LOfElement) {
  auto p = prod();
  auto ufs = bset_ultrafilters(p);
  EXPECT_EQ(L(ufs, p.index_of("a1b1")).count(), 2u);
  EXPECT_EQ(L(ufs, p.index_of("a1")).count(), 1u);
  EXPECT_EQ(L(ufs, p.zero()).count(), 0u);
}

TEST(Duality, EtaleDuals) {
  auto doc = fixture("morphisms.txt");
  auto d = bset_to_etale(resolve_bset(doc, "X3"));
  EXPECT_EQ(d.space.base_size(), 1u);
  EXPECT_EQ(d.space.fiber(0).size(), 2u);
  auto dp = bset_to_etale(prod());
  EXPECT_EQ(dp.space.size(), 3u);
  EXPECT_EQ(dp.space.base_size(), 2u);
}

TEST(Duality, AlphaOnExamples) {
  auto doc = fixture("morphisms.txt");
  auto a = alpha(resolve_bset(doc, "X3"));
  EXPECT_EQ(a.double_dual.bset.size(), 3u);
  auto c = alpha(constant_bset(powerset(2)));
  EXPECT_EQ(c.double_dual.bset.size(), 4u);
  auto p = alpha(prod());
  auto round = compose(p.inverse, p.forward);
  EXPECT_EQ(round, identity_morphism(prod()));
}

TEST(Duality, BetaOnEfix) {
  auto sp = efix();
  auto b = beta(sp);
  EXPECT_EQ(b.double_dual.space.size(), sp.size());
  for (Elem e = 0; e < sp.size(); ++e) EXPECT_EQ(b.base_map[sp.proj(e)], b.double_dual.space.proj(b.map[e]));
}

TEST(Duality, CollapseDual) {
  auto doc = fixture("morphisms.txt");
  auto x = resolve_bset(doc, "X3");
  auto c = resolve_bset(doc, "Const");
  auto d = dual_of_bset_morphism(x, bset_to_etale(x), c, bset_to_etale(c), collapse(x, c));
  std::size_t widest = 0;
  for (auto& img : d.phi) widest = std::max(widest, img.count());
  EXPECT_EQ(widest, 2u);
  EXPECT_FALSE(d.partial_map);
}

TEST(Duality, MeetsAgainstPartialMaps) {
  auto p = prod();
  auto id = check_prop14(p, p, identity_morphism(p));
  EXPECT_TRUE(id.ok());
  EXPECT_EQ(detail(id, "phi preserves binary meets"), "true");
  EXPECT_EQ(detail(id, "dual is a partial map"), "true");

  auto doc = fixture("morphisms.txt");
  auto x = resolve_bset(doc, "X3");
  auto c = resolve_bset(doc, "Const");
  auto r = check_prop14(x, c, collapse(x, c));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(detail(r, "phi preserves binary meets"), "false");
  EXPECT_EQ(detail(r, "dual is a partial map"), "false");
}

TEST(Duality, BinaryMeetsAgainstHausdorff) {
  auto r = check_prop13(prod());
  EXPECT_TRUE(r.ok()) << r;
  EXPECT_TRUE(check(r, "binary meets iff dual is Hausdorff"));
}

TEST(Duality, TopologyReport) {
  EXPECT_TRUE(topology_report(prod()).ok()) << topology_report(prod());
  EXPECT_TRUE(topology_report(generate_boolean_set({2, 2, 1}, 4)).ok());
}

TEST(Duality, FunctorLawsOnSmallCategory) {
  auto x = prod();
  auto ms = enumerate_bset_morphisms(x, x, true);
  ASSERT_FALSE(ms.empty());
  for (std::size_t i = 0; i < ms.size(); ++i) {
    auto& f = ms[i];
    auto& g = ms[(i + 1) % ms.size()];
    EXPECT_TRUE(functor_laws_bset(x, x, x, f, g).ok());
  }
  auto sp = efix();
  auto cs = enumerate_coverings(sp, sp);
  for (auto& f : cs) EXPECT_TRUE(functor_laws_etale(sp, sp, sp, f, f).ok());
}

TEST(Duality, RelationalDualRoundTrip) {
  auto doc = fixture("morphisms.txt");
  auto s = resolve_etale(doc, "Efix");
  auto t = resolve_etale(doc, "Pt");
  auto squash = resolve_relmor(doc, "squash");
  auto ds = dual_bset(s);
  auto dt = dual_bset(t);
  auto m = dual_of_relational(s, ds, t, dt, squash);
  EXPECT_EQ(m.map.size(), dt.bset.size());
}
