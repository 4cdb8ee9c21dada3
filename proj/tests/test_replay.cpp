#include "support.hpp"

#include "skewdual/mutate.hpp"
#include "skewdual/replay.hpp"

#include <gtest/gtest.h>

using namespace skewdual;
using namespace skewdual::testing;

TEST(Replay, ValidInstancesHaveNoRawDefect) {
  EXPECT_FALSE(raw_balg_defect(powerset(3).to_input()).has_value());
  EXPECT_FALSE(raw_skew_defect(to_skew(prod()).to_input()).has_value());
  EXPECT_FALSE(raw_bset_defect(powerset(2).to_input(), prod_input()).has_value());
}

TEST(Replay, InvalidInstancesHaveRawDefect) {
  auto m3 = std::get<BalgInput>(fixture("m3.txt").get("M3").body);
  EXPECT_TRUE(raw_balg_defect(m3).has_value());
  auto chain = std::get<BalgInput>(fixture("chain.txt").get("Chain").body);
  EXPECT_TRUE(raw_balg_defect(chain).has_value());
}

TEST(Replay, FalseWitnessNotConfirmed) {
  auto b4 = powerset(2).to_input();
  auto r = replay_balg(b4, Violation{"NotDistributive", {"a", "b", "1"}, ""});
  EXPECT_TRUE(r.recognized);
  EXPECT_FALSE(r.violated);
  auto u = replay_balg(b4, Violation{"NoSuchLaw", {}, ""});
  EXPECT_FALSE(u.recognized);
}

TEST(Replay, RedirectedRestrictionReplays) {
  auto in = prod_input();
  for (auto& r : in.restrictions)
    if (r.from == "1" && r.to == "a")
      for (auto& p : r.pairs)
        if (p.first == "a2b1") p.second = "a1";
  auto out = judge_bset(powerset(2).to_input(), in);
  EXPECT_FALSE(out.accepted);
  EXPECT_TRUE(out.sound()) << out.replay.explanation;
}

TEST(Replay, OrderMutantsAreSound) {
  std::mt19937_64 rng(3);
  auto base = powerset(3).to_input();
  for (int i = 0; i < 80; ++i) {
    std::string what;
    auto out = judge_balg(mutate_order_pair(base, rng, what));
    EXPECT_TRUE(out.sound()) << what << " " << out.replay.explanation;
  }
}

TEST(Replay, RestrictionMutantsAreSound) {
  std::mt19937_64 rng(5);
  auto base = powerset(2).to_input();
  auto in = prod_input();
  for (int i = 0; i < 80; ++i) {
    std::string what;
    auto out = judge_bset(base, mutate_restriction(in, rng, what));
    EXPECT_TRUE(out.sound()) << what << " " << out.replay.explanation;
  }
}

TEST(Replay, SmallCampaign) {
  auto outcomes = mutation_campaign(30, 17);
  EXPECT_EQ(outcomes.size(), 90u);
  for (auto& o : outcomes) EXPECT_TRUE(o.sound()) << o.description << " " << o.internal_error;
}
