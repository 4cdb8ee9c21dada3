#include "skewdual/enumerate.hpp"

#include <algorithm>
#include <random>

namespace skewdual {

namespace {

/// Odometer over digits[i] in [0, radix[i]); returns false after the last.
bool advance(std::vector<std::size_t>& digits, const std::vector<std::size_t>& radix) {
  std::size_t pos = digits.size();
  while (pos > 0 && ++digits[pos - 1] == radix[pos - 1]) digits[--pos] = 0;
  return pos != 0;
}

}  // namespace

std::vector<BAHom> enumerate_ba_homs(const BooleanAlgebra& source, const BooleanAlgebra& target) {
  const auto& atoms = source.atoms();
  std::vector<std::size_t> digits(atoms.size(), 0), radix(atoms.size(), target.size());
  std::vector<BAHom> out;
  do {
    std::vector<Elem> map(source.size(), target.bottom());
    for (Elem e = 0; e < source.size(); ++e)
      for (std::size_t i = 0; i < atoms.size(); ++i)
        if (source.leq(atoms[i], e)) map[e] = target.join(map[e], static_cast<Elem>(digits[i]));
    try {
      out.push_back(validate_ba_hom(source, target, std::move(map)));
    } catch (const ValidationError&) {
    }
  } while (advance(digits, radix));
  return out;
}

std::vector<BSetMorphism> enumerate_bset_morphisms(const BooleanSet& source, const BooleanSet& target,
                                                   bool proper_only) {
  const auto n = static_cast<Elem>(source.size());
  std::vector<Elem> order(n);
  for (Elem x = 0; x < n; ++x) order[x] = x;
  const Semilattice& so = source.base().order();
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    return so.down_set(source.proj(a)).count() > so.down_set(source.proj(b)).count();
  });

  std::vector<BSetMorphism> out;
  for (const BAHom& h : enumerate_ba_homs(source.base(), target.base())) {
    if (proper_only && !is_proper_hom(source.base(), target.base(), h)) continue;
    std::vector<Elem> map(n, kNone);
    std::function<void(std::size_t)> fill = [&](std::size_t depth) {
      if (depth == n) {
        out.push_back(validate_bset_morphism(source, target, map, h.map));
        return;
      }
      const Elem x = order[depth];
      for (Elem cand : target.stalk(h(source.proj(x)))) {
        bool ok = true;
        for (std::size_t d = 0; d < depth && ok; ++d) {
          const Elem y = order[d];
          if (source.leq(x, y)) ok = cand == target.restrict(map[y], h(source.proj(x)));
          else if (source.leq(y, x)) ok = map[y] == target.restrict(cand, h(source.proj(y)));
        }
        if (!ok) continue;
        map[x] = cand;
        fill(depth + 1);
        map[x] = kNone;
      }
    };
    fill(0);
  }
  return out;
}

std::vector<SkewMorphism> enumerate_skew_morphisms(const SkewAlgebra& source, const SkewAlgebra& target) {
  const auto n = static_cast<Elem>(source.size());
  std::vector<Elem> free;
  for (Elem x = 0; x < n; ++x)
    if (x != source.zero()) free.push_back(x);
  std::vector<std::size_t> digits(free.size(), 0), radix(free.size(), target.size());
  std::vector<SkewMorphism> out;
  std::vector<Elem> map(n, target.zero());
  do {
    for (std::size_t i = 0; i < free.size(); ++i) map[free[i]] = static_cast<Elem>(digits[i]);
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y)
        ok = map[source.circ(x, y)] == target.circ(map[x], map[y]) &&
             map[source.bullet(x, y)] == target.bullet(map[x], map[y]);
    if (ok) out.push_back(validate_skew_morphism(source, target, map));
  } while (advance(digits, radix));
  return out;
}

void for_each_presheaf_input(const BooleanAlgebra& base, const std::vector<unsigned>& stalk_sizes,
                             const std::function<void(const PresheafInput&)>& visit) {
  ensure(stalk_sizes.size() == base.size(), "one stalk size per base element");
  auto id = [&](Elem e, std::size_t k) { return base.name(e) + "." + std::to_string(k + 1); };
  PresheafInput in;
  for (Elem e = 0; e < base.size(); ++e) {
    std::vector<std::string> ids;
    for (unsigned k = 0; k < stalk_sizes[e]; ++k) ids.push_back(id(e, k));
    in.stalks.emplace_back(base.name(e), std::move(ids));
  }
  // one digit per (cover, source element)
  struct Slot {
    std::size_t restriction;
    Elem from_elem;
    Elem to;
  };
  std::vector<Slot> slots;
  std::vector<std::size_t> radix;
  for (Elem e = 0; e < base.size(); ++e)
    for (Elem f : base.order().lower_covers(e)) {
      const std::size_t r = in.restrictions.size();
      in.restrictions.push_back(RestrictionInput{base.name(e), base.name(f), {}});
      if (stalk_sizes[e] > 0 && stalk_sizes[f] == 0) return;  // no maps into an empty stalk
      for (unsigned k = 0; k < stalk_sizes[e]; ++k) {
        slots.push_back(Slot{r, k, f});
        radix.push_back(stalk_sizes[f]);
      }
    }
  std::vector<std::size_t> digits(slots.size(), 0);
  do {
    for (auto& r : in.restrictions) r.pairs.clear();
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const Slot& s = slots[i];
      const Elem from = base.index_of(in.restrictions[s.restriction].from);
      in.restrictions[s.restriction].pairs.emplace_back(id(from, s.from_elem), id(s.to, digits[i]));
    }
    visit(in);
  } while (advance(digits, radix));
}

std::vector<FinEtaleSpace> enumerate_surjections(unsigned total, unsigned base) {
  std::vector<std::string> tn, bn;
  for (unsigned i = 1; i <= total; ++i) tn.push_back("e" + std::to_string(i));
  for (unsigned i = 1; i <= base; ++i) bn.push_back("u" + std::to_string(i));
  std::vector<FinEtaleSpace> out;
  if (base == 0) return out;
  std::vector<std::size_t> digits(total, 0), radix(total, base);
  do {
    std::vector<Elem> proj(digits.begin(), digits.end());
    IndexSet hit(base);
    for (Elem u : proj) hit.set(u);
    if (hit.all()) out.push_back(FinEtaleSpace::from_map(tn, bn, std::move(proj)));
  } while (advance(digits, radix));
  return out;
}

std::vector<RelationalMorphism> enumerate_coverings(const FinEtaleSpace& source, const FinEtaleSpace& target) {
  std::vector<RelationalMorphism> out;
  const auto nb = source.base_size();
  std::vector<std::size_t> bdig(nb, 0), bradix(nb, target.base_size());
  if (target.base_size() == 0 && nb > 0) return out;
  do {
    std::vector<Elem> base_map(bdig.begin(), bdig.end());
    // every target point over the image of u needs one source point over u,
    // separately for each u mapping there
    struct Slot {
      Elem u;
      Elem y;
    };
    std::vector<Slot> slots;
    std::vector<std::size_t> radix;
    for (Elem u = 0; u < nb; ++u)
      for (Elem y : target.fiber(base_map[u])) {
        slots.push_back({u, y});
        radix.push_back(source.fiber(u).size());
      }
    std::vector<std::size_t> digits(slots.size(), 0);
    do {
      std::vector<IndexSet> phi(source.size(), IndexSet(target.size()));
      for (std::size_t i = 0; i < slots.size(); ++i) phi[source.fiber(slots[i].u)[digits[i]]].set(slots[i].y);
      out.push_back(validate_relational_morphism(source, target, std::move(phi), base_map));
    } while (advance(digits, radix));
  } while (advance(bdig, bradix));
  return out;
}

std::optional<RelationalMorphism> random_covering(const FinEtaleSpace& source, const FinEtaleSpace& target,
                                                  std::uint64_t seed) {
  if (target.base_size() == 0) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::vector<Elem> base_map;
  for (Elem u = 0; u < source.base_size(); ++u)
    base_map.push_back(static_cast<Elem>(rng() % target.base_size()));
  std::vector<IndexSet> phi(source.size(), IndexSet(target.size()));
  for (Elem u = 0; u < source.base_size(); ++u)
    for (Elem y : target.fiber(base_map[u])) phi[source.fiber(u)[rng() % source.fiber(u).size()]].set(y);
  return validate_relational_morphism(source, target, std::move(phi), std::move(base_map));
}

}  // namespace skewdual
