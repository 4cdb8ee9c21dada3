#include "support.hpp"

#include "skewdual/enumerate.hpp"

#include <gtest/gtest.h>

using namespace skewdual;
using namespace skewdual::testing;

namespace {

IndexSet pts(const FinEtaleSpace& sp, std::initializer_list<const char*> ids) {
  IndexSet s(sp.size());
  for (auto n : ids) s.set(sp.index_of(n));
  return s;
}

IndexSet base(const FinEtaleSpace& sp, std::initializer_list<const char*> ids) {
  IndexSet s(sp.base_size());
  for (auto n : ids) s.set(sp.base_index_of(n));
  return s;
}

std::size_t fiber_product(const FinEtaleSpace& sp, const IndexSet& a) {
  std::size_t n = 1;
  for (auto u : members_of(a)) n *= sp.fiber(u).size();
  return n;
}

}  // namespace

TEST(Etale, NonSurjectionRejected) {
  EtaleInput in{{"e1"}, {"u", "v"}, {{"e1", "u"}}};
  auto v = violation_of([&] { FinEtaleSpace::validate(in); });
  EXPECT_EQ(v.law, "NotSurjective");
  EXPECT_EQ(v.witness, (std::vector<std::string>{"v"}));
}

TEST(Etale, MissingProjectionRejected) {
  EtaleInput in{{"e1", "e2"}, {"u"}, {{"e1", "u"}}};
  EXPECT_EQ(violation_law([&] { FinEtaleSpace::validate(in); }), "MissingProjection");
}

TEST(Etale, SectionsOverSubsets) {
  auto sp = efix();
  EXPECT_EQ(sections_over(sp, base(sp, {"u", "v"})).size(), 2u);
  auto empty = sections_over(sp, base(sp, {}));
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].none());
  auto over_v = sections_over(sp, base(sp, {"v"}));
  ASSERT_EQ(over_v.size(), 1u);
  EXPECT_EQ(over_v[0], pts(sp, {"e3"}));
}

TEST(Etale, SectionCountIsFiberProduct) {
  for (auto& sp : enumerate_surjections(5, 3))
    for (unsigned m = 0; m < 8; ++m) {
      IndexSet a(3, m);
      auto secs = sections_over(sp, a);
      EXPECT_EQ(secs.size(), fiber_product(sp, a));
      for (auto& s : secs) {
        EXPECT_TRUE(is_section(sp, s));
        EXPECT_EQ(support(sp, s), a);
      }
    }
}

TEST(Etale, RestrictAndJoin) {
  auto sp = efix();
  EXPECT_EQ(restrict_section(sp, pts(sp, {"e1", "e3"}), base(sp, {"u"})), pts(sp, {"e1"}));
  EXPECT_EQ(violation_law([&] { restrict_section(sp, pts(sp, {"e1"}), base(sp, {"v"})); }), "NotNested");
  EXPECT_EQ(join_sections(sp, pts(sp, {"e1"}), pts(sp, {"e3"})), pts(sp, {"e1", "e3"}));
  EXPECT_EQ(violation_law([&] { join_sections(sp, pts(sp, {"e1"}), pts(sp, {"e2"})); }), "NotCompatible");
  EXPECT_EQ(section_name(sp, pts(sp, {"e1", "e3"})), "e1+e3");
  EXPECT_EQ(section_name(sp, IndexSet(sp.size())), "~");
}

TEST(Etale, DualBooleanSet) {
  auto d = dual_bset(efix());
  EXPECT_EQ(d.bset.size(), 6u);
  EXPECT_EQ(d.bset.base().size(), 4u);

  auto sp = FinEtaleSpace::from_map({"p1", "p2", "p3", "q"}, {"u", "v"}, {0, 0, 0, 1});
  auto dd = dual_bset(sp);
  std::vector<std::size_t> sizes;
  for (Elem e = 0; e < dd.bset.base().size(); ++e) sizes.push_back(dd.bset.stalk(e).size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 1, 3}));
}

TEST(Etale, RelationalMorphismFlags) {
  auto doc = fixture("morphisms.txt");
  auto squash = resolve_relmor(doc, "squash");
  EXPECT_TRUE(squash.locally_injective);
  EXPECT_TRUE(squash.locally_surjective);
  EXPECT_TRUE(squash.partial_map);

  auto sp = efix();
  auto id = identity_relational(sp);
  EXPECT_TRUE(id.covering());
  EXPECT_TRUE(id.partial_map);

  auto pt = resolve_etale(doc, "Pt");
  std::vector<IndexSet> phi(sp.size(), IndexSet(pt.size()));
  phi[sp.index_of("e3")].set(0);
  // nothing over u reaches p
  auto r = validate_relational_morphism(sp, pt, phi, {0, 0});
  EXPECT_FALSE(r.locally_surjective);
}

TEST(Etale, FiberViolationRejected) {
  auto sp = efix();
  std::vector<IndexSet> phi(sp.size(), IndexSet(sp.size()));
  phi[sp.index_of("e1")].set(sp.index_of("e3"));
  for (auto n : {"e2", "e3"}) phi[sp.index_of(n)].set(sp.index_of(n));
  EXPECT_EQ(violation_law([&] { validate_relational_morphism(sp, sp, phi, {0, 1}); }), "FiberViolation");
}

TEST(Etale, CompositionWithIdentity) {
  auto spaces = enumerate_surjections(3, 2);
  for (auto& s : spaces)
    for (auto& t : spaces)
      for (auto& f : enumerate_coverings(s, t)) {
        EXPECT_EQ(compose(identity_relational(t), f), f);
        EXPECT_EQ(compose(f, identity_relational(s)), f);
      }
}
