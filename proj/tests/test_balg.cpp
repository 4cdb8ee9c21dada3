#include "support.hpp"

#include <gtest/gtest.h>

using namespace skewdual;
using namespace skewdual::testing;

namespace {

FilterSet up(const BooleanAlgebra& b, const std::string& id) { return up_closure(b, b.index_of(id)); }
FilterSet down(const BooleanAlgebra& b, const std::string& id) { return down_closure(b, b.index_of(id)); }

// Ultrafilters by brute force over every subset: proper, upward closed, meet
// closed and maximal.
std::vector<IndexSet> brute_ultrafilters(const BooleanAlgebra& b) {
  const std::size_t n = b.size();
  std::vector<IndexSet> filters;
  for (unsigned long m = 1; m < (1ul << n); ++m) {
    IndexSet s(n, m);
    if (s.test(b.bottom())) continue;
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y) {
        if (s.test(x) && b.leq(x, y) && !s.test(y)) ok = false;
        if (s.test(x) && s.test(y) && !s.test(b.meet(x, y))) ok = false;
      }
    if (ok) filters.push_back(s);
  }
  std::vector<IndexSet> maximal;
  for (auto& f : filters) {
    bool top = true;
    for (auto& g : filters)
      if (g != f && f.is_subset_of(g)) top = false;
    if (top) maximal.push_back(f);
  }
  return maximal;
}

}  // namespace

TEST(Balg, RelativeComplementInFourElementAlgebra) {
  auto b = fixture("b4.txt");
  auto b4 = resolve_balg(b, "B4");
  EXPECT_EQ(b4.name(b4.rel_complement(b4.index_of("1"), b4.index_of("a"))), "b");
  EXPECT_EQ(b4.name(b4.rel_complement(b4.index_of("a"), b4.index_of("b"))), "a");
  EXPECT_EQ(b4.name(b4.rel_complement(b4.index_of("a"), b4.index_of("1"))), "0");
}

TEST(Balg, RejectsM3AsNotDistributive) {
  auto doc = fixture("m3.txt");
  auto v = violation_of([&] { resolve_balg(doc, "M3"); });
  EXPECT_EQ(v.law, "NotDistributive");
  EXPECT_EQ(v.witness.size(), 3u);
}

TEST(Balg, RejectsChainWithoutRelativeComplements) {
  auto doc = fixture("chain.txt");
  EXPECT_EQ(violation_law([&] { resolve_balg(doc, "Chain"); }), "NoRelativeComplement");
}

TEST(Balg, RejectsCycleAsNotAPoset) {
  BalgInput in{{"0", "a", "b"}, {{"0", "a"}, {"a", "b"}, {"b", "a"}}, "0"};
  EXPECT_EQ(violation_law([&] { BooleanAlgebra::validate(in); }), "NotAPoset");
}

TEST(Balg, RejectsUnknownElementInOrder) {
  BalgInput in{{"0", "1"}, {{"0", "q"}}, "0"};
  EXPECT_EQ(violation_law([&] { BooleanAlgebra::validate(in); }), "UnknownElement");
}

TEST(Balg, RejectsAtomsWithoutJoin) {
  BalgInput v{{"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}, "0"};
  EXPECT_EQ(violation_law([&] { BooleanAlgebra::validate(v); }), "NotALattice");
}

TEST(Balg, UltrafilterCountsMatchAtomCounts) {
  EXPECT_EQ(chain_of_two().ultrafilters().size(), 1u);
  EXPECT_EQ(powerset(2).ultrafilters().size(), 2u);
  EXPECT_EQ(powerset(3).ultrafilters().size(), 3u);
}

TEST(Balg, UltrafiltersAgreeWithBruteForce) {
  for (unsigned k = 0; k <= 4; ++k) {
    auto b = powerset(k);
    auto expected = brute_ultrafilters(b);
    std::vector<IndexSet> got;
    for (auto& f : ultrafilters(b)) got.push_back(f.members);
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << "k=" << k;
  }
}

TEST(Balg, SeparatingUltrafilter) {
  auto b4 = powerset(2);
  EXPECT_EQ(separating_ultrafilter(b4, b4.index_of("a"), b4.index_of("b")), up(b4, "a"));
  EXPECT_EQ(separating_ultrafilter(b4, b4.index_of("a"), b4.index_of("1")), up(b4, "b"));
  auto b2 = chain_of_two();
  EXPECT_EQ(violation_law([&] { separating_ultrafilter(b2, 1, 1); }), "NotDistinct");
}

TEST(Balg, ExtendFilterAvoidingIdeal) {
  auto b4 = powerset(2);
  EXPECT_EQ(extend_filter_avoiding_ideal(b4, up(b4, "1"), down(b4, "0")), up(b4, "a"));
  EXPECT_EQ(extend_filter_avoiding_ideal(b4, up(b4, "a"), down(b4, "b")), up(b4, "a"));
  EXPECT_EQ(violation_law([&] { extend_filter_avoiding_ideal(b4, up(b4, "a"), down(b4, "a")); }), "NotDisjoint");
}

TEST(Balg, StoneMapValues) {
  auto b4 = powerset(2);
  const auto& ufs = ultrafilters(b4);
  EXPECT_EQ(stone_map(ufs, b4.index_of("a")).count(), 1u);
  EXPECT_TRUE(ufs[stone_map(ufs, b4.index_of("a")).find_first()] == up(b4, "a"));
  EXPECT_EQ(stone_map(ufs, b4.bottom()).count(), 0u);
  auto b8 = powerset(3);
  EXPECT_EQ(stone_map(ultrafilters(b8), b8.index_of("ab")).count(), 2u);
}

TEST(Balg, StoneReportHoldsUpToFourAtoms) {
  for (unsigned k = 0; k <= 4; ++k) EXPECT_TRUE(stone_report(powerset(k)).ok()) << stone_report(powerset(k));
}

TEST(Balg, ProperHomomorphisms) {
  auto b2 = chain_of_two();
  auto b4 = powerset(2);
  auto incl = validate_ba_hom(b2, b4, {b4.bottom(), b4.index_of("1")});
  EXPECT_TRUE(is_proper_hom(b2, b4, incl));
  auto to_atom = validate_ba_hom(b2, b4, {b4.bottom(), b4.index_of("a")});
  EXPECT_FALSE(is_proper_hom(b2, b4, to_atom));
}

TEST(Balg, NonHomomorphismRejected) {
  auto b4 = powerset(2);
  // Sends both atoms to a: join of a and b would go to a, not 1.
  std::vector<Elem> m{b4.bottom(), b4.index_of("a"), b4.index_of("a"), b4.index_of("1")};
  EXPECT_EQ(violation_law([&] { validate_ba_hom(b4, b4, m); }), "NotAHomomorphism");
}

TEST(Balg, PreimageOfUltrafilterIsUltrafilter) {
  auto b4 = powerset(2);
  auto b8 = powerset(3);
  // a -> a, b -> bc
  std::vector<Elem> m{b8.bottom(), b8.index_of("a"), b8.index_of("bc"), b8.index_of("1")};
  auto h = validate_ba_hom(b4, b8, m);
  for (auto& u : ultrafilters(b8)) {
    auto pre = preimage(h, b4.size(), u.members);
    EXPECT_TRUE(is_prime_filter(b4, pre));
  }
}
