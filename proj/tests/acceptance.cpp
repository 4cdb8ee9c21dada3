#include "skewdual/balg.hpp"
#include "skewdual/bset.hpp"
#include "skewdual/duality.hpp"
#include "skewdual/enumerate.hpp"
#include "skewdual/etale.hpp"
#include "skewdual/mutate.hpp"
#include "skewdual/replay.hpp"
#include "skewdual/skew.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace skewdual;

namespace {

struct Outcome {
  bool ok = true;
  std::string summary;
};

std::vector<std::vector<unsigned>> profiles(unsigned max_atoms, unsigned max_stalk) {
  std::vector<std::vector<unsigned>> out;
  std::function<void(std::vector<unsigned>&, unsigned)> rec = [&](std::vector<unsigned>& p, unsigned left) {
    if (!p.empty()) out.push_back(p);
    if (left == 0) return;
    for (unsigned s = 1; s <= max_stalk; ++s) {
      p.push_back(s);
      rec(p, left - 1);
      p.pop_back();
    }
  };
  std::vector<unsigned> p;
  rec(p, max_atoms);
  return out;
}

std::string profile_name(const std::vector<unsigned>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

const std::vector<std::vector<unsigned>>& family() {
  static const auto f = profiles(3, 3);
  return f;
}

BooleanAlgebra powerset(unsigned k) {
  static const std::vector<std::string> atoms{"a", "b", "c", "d"};
  std::vector<std::string> names(atoms.begin(), atoms.begin() + k);
  return BooleanAlgebra::validate(powerset_input(k, [&](unsigned m) { return atom_mask_name(names, m); }));
}

bool bijective(const std::vector<Elem>& m, std::size_t n) {
  return m.size() == n && std::set<Elem>(m.begin(), m.end()).size() == n;
}

// Same algebra listed in the element order of `like`.
SkewAlgebra align(const SkewAlgebra& s, const SkewAlgebra& like) {
  std::vector<Elem> order;
  for (const auto& n : like.names()) order.push_back(s.index_of(n));
  return reorder(s, order);
}

Outcome criterion1() {
  std::size_t n = 0;
  for (const auto& p : family()) {
    auto s = to_skew(generate_boolean_set(p));
    try {
      SkewAlgebra::validate(s.to_input());
    } catch (const ValidationError& e) {
      return {false, profile_name(p) + ": " + e.what()};
    }
    if (auto d = raw_skew_defect(s.to_input())) return {false, profile_name(p) + ": " + *d};
    auto r = check_consequences(s);
    if (!r.ok()) return {false, profile_name(p) + ": consequence failed"};
    ++n;
  }
  return {true, std::to_string(n) + " profiles"};
}

Outcome criterion2() {
  std::size_t bsets = 0, skews = 0, morphisms = 0;
  for (const auto& p : family()) {
    auto x = generate_boolean_set(p);
    if (!structurally_equal(from_skew(to_skew(x)), x)) return {false, profile_name(p) + ": bset round trip"};
    ++bsets;
  }
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 50; ++i) {
    auto p = family()[rng() % family().size()];
    auto s = to_skew(generate_boolean_set(p, rng()));
    std::vector<Elem> order(s.size());
    for (Elem k = 0; k < s.size(); ++k) order[k] = k;
    std::shuffle(order.begin() + 1, order.end(), rng);
    s = reorder(s, order);
    auto back = to_skew(from_skew(s));
    if (!(align(back, s) == s)) return {false, "random skew algebra " + std::to_string(i)};
    ++skews;
  }
  std::vector<BooleanSet> small;
  for (const auto& p : family()) {
    auto x = generate_boolean_set(p);
    if (x.size() <= 6) small.push_back(x);
  }
  for (const auto& x : small)
    for (const auto& y : small) {
      auto sx = to_skew(x), sy = to_skew(y);
      for (const auto& m : enumerate_bset_morphisms(x, y)) {
        auto sm = validate_skew_morphism(sx, sy, m.map);
        std::vector<Elem> base(x.base().size());
        for (Elem e = 0; e < base.size(); ++e) base[e] = y.proj(sm(x.stalk(e).front()));
        auto back = validate_bset_morphism(x, y, sm.map, base);
        if (!(back == m)) return {false, "bset morphism translation"};
        ++morphisms;
      }
      auto fx = from_skew(sx), fy = from_skew(sy);
      for (const auto& sm : enumerate_skew_morphisms(sx, sy)) {
        std::vector<Elem> base(fx.base().size());
        for (Elem e = 0; e < base.size(); ++e) base[e] = fy.proj(sm(fx.stalk(e).front()));
        auto bm = validate_bset_morphism(fx, fy, sm.map, base);
        if (validate_skew_morphism(sx, sy, bm.map).map != sm.map) return {false, "skew morphism translation"};
        ++morphisms;
      }
    }
  return {true, std::to_string(bsets) + " bsets, " + std::to_string(skews) + " skew algebras, " +
                    std::to_string(morphisms) + " morphisms"};
}

Outcome criterion3() {
  std::size_t n = 0;
  for (const auto& p : family()) {
    auto x = generate_boolean_set(p);
    auto a = alpha(x);
    bool ok = a.double_dual.bset.size() == x.size() && bijective(a.forward.map, x.size()) &&
              compose(a.inverse, a.forward) == identity_morphism(x) &&
              compose(a.forward, a.inverse) == identity_morphism(a.double_dual.bset);
    if (!ok) return {false, profile_name(p)};
    ++n;
  }
  return {true, std::to_string(n) + " instances"};
}

Outcome criterion4() {
  std::size_t n = 0;
  for (unsigned e = 1; e <= 5; ++e)
    for (unsigned b = 1; b <= std::min(e, 3u); ++b)
      for (const auto& sp : enumerate_surjections(e, b)) {
        auto r = beta(sp);
        const auto& dd = r.double_dual.space;
        bool ok = dd.size() == sp.size() && dd.base_size() == sp.base_size() && bijective(r.map, sp.size()) &&
                  bijective(r.base_map, sp.base_size());
        for (Elem x = 0; ok && x < sp.size(); ++x) ok = dd.proj(r.map[x]) == r.base_map[sp.proj(x)];
        if (!ok) return {false, "surjection " + std::to_string(e) + "->" + std::to_string(b)};
        ++n;
      }
  return {true, std::to_string(n) + " surjections"};
}

Outcome criterion5() {
  for (unsigned k = 0; k <= 4; ++k) {
    auto r = stone_report(powerset(k));
    if (!r.ok()) {
      std::ostringstream os;
      os << r;
      return {false, std::to_string(k) + " atoms: " + os.str()};
    }
  }
  return {true, "0..4 atoms"};
}

Outcome criterion6() {
  std::size_t n = 0;
  for (const auto& p : family()) {
    auto r = topology_report(generate_boolean_set(p));
    if (!r.ok()) return {false, profile_name(p)};
    ++n;
  }
  return {true, std::to_string(n) + " instances"};
}

Outcome criterion7() {
  std::vector<BooleanSet> xs;
  for (const auto& p : profiles(2, 2)) xs.push_back(generate_boolean_set(p));
  std::size_t n = 0, preserving = 0;
  for (const auto& x : xs)
    for (const auto& y : xs)
      for (const auto& m : enumerate_bset_morphisms(x, y, true)) {
        bool meets = preserves_meets(x, y, m);
        auto d = dual_of_bset_morphism(x, bset_to_etale(x), y, bset_to_etale(y), m);
        if (meets != d.partial_map) return {false, "disagreement"};
        preserving += meets;
        ++n;
      }
  return {true, std::to_string(n) + " morphisms, " + std::to_string(preserving) + " meet-preserving"};
}

Outcome criterion8() {
  std::vector<BooleanSet> xs;
  for (const auto& p : profiles(2, 2)) xs.push_back(generate_boolean_set(p));
  std::mt19937_64 rng(8);
  std::map<std::pair<std::size_t, std::size_t>, std::vector<BSetMorphism>> homs;
  auto hom = [&](std::size_t i, std::size_t j) -> const std::vector<BSetMorphism>& {
    auto key = std::make_pair(i, j);
    auto it = homs.find(key);
    if (it == homs.end()) it = homs.emplace(key, enumerate_bset_morphisms(xs[i], xs[j], true)).first;
    return it->second;
  };
  std::size_t bset_pairs = 0;
  while (bset_pairs < 100) {
    std::size_t i = rng() % xs.size(), j = rng() % xs.size(), k = rng() % xs.size();
    const auto& fs = hom(i, j);
    const auto& gs = hom(j, k);
    if (fs.empty() || gs.empty()) continue;
    auto r = functor_laws_bset(xs[i], xs[j], xs[k], fs[rng() % fs.size()], gs[rng() % gs.size()]);
    if (!r.ok()) return {false, "bset pair " + std::to_string(bset_pairs)};
    ++bset_pairs;
  }
  std::vector<FinEtaleSpace> spaces;
  for (unsigned e = 1; e <= 4; ++e)
    for (unsigned b = 1; b <= std::min(e, 2u); ++b)
      for (auto& sp : enumerate_surjections(e, b)) spaces.push_back(sp);
  std::size_t etale_pairs = 0, attempts = 0;
  while (etale_pairs < 100 && attempts < 100000) {
    ++attempts;
    const auto& s = spaces[rng() % spaces.size()];
    const auto& t = spaces[rng() % spaces.size()];
    const auto& u = spaces[rng() % spaces.size()];
    auto f = random_covering(s, t, rng());
    if (!f) continue;
    auto g = random_covering(t, u, rng());
    if (!g) continue;
    auto r = functor_laws_etale(s, t, u, *f, *g);
    if (!r.ok()) return {false, "etale pair " + std::to_string(etale_pairs)};
    ++etale_pairs;
  }
  if (etale_pairs < 100) return {false, "only " + std::to_string(etale_pairs) + " etale pairs found"};
  return {true, std::to_string(bset_pairs) + " bset pairs, " + std::to_string(etale_pairs) + " etale pairs"};
}

Outcome criterion9() {
  auto b4 = powerset(2);
  std::size_t presheaves = 0, sheaves = 0, rejected = 0;
  for (unsigned m = 0; m < 16; ++m) {
    std::vector<unsigned> sizes;
    for (unsigned i = 0; i < 4; ++i) sizes.push_back(1 + ((m >> i) & 1));
    bool ok = true;
    for_each_presheaf_input(b4, sizes, [&](const PresheafInput& in) {
      Presheaf p;
      try {
        p = Presheaf::validate(b4.order(), in);
      } catch (const ValidationError&) {
        ++rejected;
        return;
      }
      ++presheaves;
      bool sheaf = sheaf_condition(p, b4);
      bool boolean = true;
      try {
        BooleanSet::validate(b4, in);
      } catch (const ValidationError&) {
        boolean = false;
      }
      if (sheaf != boolean) ok = false;
      sheaves += sheaf;
    });
    if (!ok) return {false, "disagreement"};
  }
  return {true, std::to_string(presheaves) + " presheaves, " + std::to_string(sheaves) + " sheaves, " +
                    std::to_string(rejected) + " path-dependent inputs skipped"};
}

Outcome criterion10() {
  auto outcomes = mutation_campaign(100, 10);
  std::size_t unsound = 0, accepted = 0;
  for (const auto& o : outcomes) {
    unsound += !o.sound();
    accepted += o.accepted;
  }
  return {unsound == 0 && outcomes.size() >= 200,
          std::to_string(outcomes.size()) + " mutants, " + std::to_string(accepted) + " still valid, " +
              std::to_string(unsound) + " unsound"};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    Outcome (*run)();
    double limit;  // seconds, 0 for none
  };
  const Criterion criteria[] = {
      {1, "skew axioms on generated Boolean sets", criterion1, 30},
      {2, "skew algebra / Boolean set isomorphism", criterion2, 0},
      {3, "alpha round trip", criterion3, 0},
      {4, "beta round trip", criterion4, 10},
      {5, "finite Stone duality", criterion5, 0},
      {6, "topology of the dual", criterion6, 0},
      {7, "meet preservation vs partial dual", criterion7, 0},
      {8, "functor laws and naturality", criterion8, 0},
      {9, "sheaf condition vs Boolean set", criterion9, 60},
      {10, "mutation witnesses", criterion10, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs >= c.limit) {
      o.ok = false;
      o.summary += ", over time limit";
    }
    failures += !o.ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.number << " " << c.title << ": " << o.summary << " ["
              << timing << "]" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
