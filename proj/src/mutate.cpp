#include "skewdual/mutate.hpp"

namespace skewdual {

bool MutationOutcome::sound() const {
  if (!internal_error.empty()) return false;
  if (accepted) return !raw_defect.has_value();
  return replay.recognized && replay.violated && raw_defect.has_value();
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

template <class Validate, class Replay, class Raw>
MutationOutcome judge(MutationKind kind, Validate validate, Replay replay, Raw raw) {
  MutationOutcome out;
  out.kind = kind;
  try {
    validate();
    out.accepted = true;
  } catch (const ValidationError& e) {
    out.violation = e.violation();
    out.replay = replay(e.violation());
  } catch (const InternalError& e) {
    out.internal_error = e.what();
  }
  out.raw_defect = raw();
  return out;
}

}  // namespace

BalgInput mutate_order_pair(const BalgInput& in, std::mt19937_64& rng, std::string& description) {
  BalgInput out = in;
  const std::size_t choice = out.leq.empty() ? 1 : pick(rng, 3);
  if (choice == 0) {
    const std::size_t i = pick(rng, out.leq.size());
    description = "drop " + out.leq[i].first + "<=" + out.leq[i].second;
    out.leq.erase(out.leq.begin() + static_cast<std::ptrdiff_t>(i));
  } else if (choice == 1) {
    const std::size_t a = pick(rng, out.elements.size()), b = pick(rng, out.elements.size());
    description = "add " + out.elements[a] + "<=" + out.elements[b];
    out.leq.emplace_back(out.elements[a], out.elements[b]);
  } else {
    const std::size_t i = pick(rng, out.leq.size());
    std::swap(out.leq[i].first, out.leq[i].second);
    description = "reverse to " + out.leq[i].first + "<=" + out.leq[i].second;
  }
  return out;
}

SkewInput mutate_table_cell(const SkewInput& in, std::mt19937_64& rng, std::string& description) {
  SkewInput out = in;
  const bool circ = pick(rng, 2) == 0;
  auto& t = circ ? out.circ : out.bullet;
  const std::size_t n = out.elements.size();
  const std::size_t i = pick(rng, n), j = pick(rng, n);
  std::string v = t[i][j];
  if (n > 1)
    while (v == t[i][j]) v = out.elements[pick(rng, n)];
  description = std::string(circ ? "circ" : "bullet") + "[" + out.elements[i] + "][" + out.elements[j] + "]: " +
                t[i][j] + " -> " + v;
  t[i][j] = v;
  return out;
}

PresheafInput mutate_restriction(const PresheafInput& in, std::mt19937_64& rng, std::string& description) {
  PresheafInput out = in;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t r = 0; r < out.restrictions.size(); ++r)
    for (std::size_t k = 0; k < out.restrictions[r].pairs.size(); ++k) slots.emplace_back(r, k);
  if (slots.empty()) {
    description = "no restriction to mutate";
    return out;
  }
  const auto [r, k] = slots[pick(rng, slots.size())];
  auto& res = out.restrictions[r];
  auto& pr = res.pairs[k];
  const std::vector<std::string>* target = nullptr;
  std::vector<std::string> all;
  for (const auto& [e, xs] : out.stalks) {
    if (e == res.to) target = &xs;
    all.insert(all.end(), xs.begin(), xs.end());
  }
  const std::size_t roll = pick(rng, 20);
  const std::string prefix = "restrict " + res.from + " -> " + res.to + ": " + pr.first + "->" + pr.second;
  if (roll < 14 && target && target->size() > 1) {
    std::string v = pr.second;
    while (v == pr.second) v = (*target)[pick(rng, target->size())];
    description = prefix + " becomes ->" + v;
    pr.second = v;
  } else if (roll < 17 || !target || target->size() <= 1) {
    std::string v = all[pick(rng, all.size())];
    description = prefix + " becomes ->" + v;
    pr.second = v;
  } else {
    description = prefix + " dropped";
    res.pairs.erase(res.pairs.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return out;
}

MutationOutcome judge_balg(const BalgInput& in) {
  return judge(
      MutationKind::kOrderPair, [&] { BooleanAlgebra::validate(in); },
      [&](const Violation& v) { return replay_balg(in, v); }, [&] { return raw_balg_defect(in); });
}

MutationOutcome judge_skew(const SkewInput& in) {
  return judge(
      MutationKind::kTableCell, [&] { SkewAlgebra::validate(in); },
      [&](const Violation& v) { return replay_skew(in, v); }, [&] { return raw_skew_defect(in); });
}

MutationOutcome judge_bset(const BalgInput& base, const PresheafInput& in) {
  return judge(
      MutationKind::kRestriction, [&] { BooleanSet::validate(BooleanAlgebra::validate(base), in); },
      [&](const Violation& v) { return replay_bset(base, in, v); }, [&] { return raw_bset_defect(base, in); });
}

std::vector<MutationOutcome> mutation_campaign(std::size_t per_kind, std::uint64_t seed) {
  const std::vector<std::vector<unsigned>> profiles = {{1}, {2}, {3}, {1, 1}, {2, 1}, {2, 2}, {1, 1, 1}, {2, 1, 1}, {3, 2}};
  std::vector<BooleanSet> pool;
  for (std::size_t i = 0; i < profiles.size(); ++i) pool.push_back(generate_boolean_set(profiles[i], seed + i));
  std::vector<BalgInput> algebras;
  for (const auto& x : pool) algebras.push_back(x.base().to_input());
  std::vector<SkewInput> skews;
  for (const auto& x : pool) skews.push_back(to_skew(x).to_input());

  std::mt19937_64 rng(seed);
  std::vector<MutationOutcome> out;
  for (std::size_t i = 0; i < per_kind; ++i) {
    std::string d;
    const BalgInput& a = algebras[i % algebras.size()];
    auto m = mutate_order_pair(a, rng, d);
    out.push_back(judge_balg(m));
    out.back().description = d;
  }
  for (std::size_t i = 0; i < per_kind; ++i) {
    std::string d;
    auto m = mutate_table_cell(skews[i % skews.size()], rng, d);
    out.push_back(judge_skew(m));
    out.back().description = d;
  }
  for (std::size_t i = 0; i < per_kind; ++i) {
    std::string d;
    const BooleanSet& x = pool[i % pool.size()];
    auto m = mutate_restriction(x.presheaf().to_input(), rng, d);
    out.push_back(judge_bset(x.base().to_input(), m));
    out.back().description = d;
  }
  return out;
}

}  // namespace skewdual
