#include "skewdual/bset.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace skewdual {

namespace {

std::vector<Elem> by_decreasing_down_size(const Semilattice& base, const IndexSet& subset) {
  std::vector<Elem> out = members_of(subset);
  std::stable_sort(out.begin(), out.end(),
                   [&](Elem a, Elem b) { return base.down_set(a).count() > base.down_set(b).count(); });
  return out;
}

template <class Leq>
std::optional<Elem> greatest_lower(std::size_t n, Elem x, Elem y, Leq leq) {
  std::vector<Elem> lower;
  for (Elem z = 0; z < n; ++z)
    if (leq(z, x) && leq(z, y)) lower.push_back(z);
  for (Elem g : lower) {
    bool greatest = true;
    for (Elem z : lower) greatest = greatest && leq(z, g);
    if (greatest) return g;
  }
  return std::nullopt;
}

template <class Leq>
std::optional<Elem> least_upper(std::size_t n, Elem x, Elem y, Leq leq) {
  std::vector<Elem> upper;
  for (Elem z = 0; z < n; ++z)
    if (leq(x, z) && leq(y, z)) upper.push_back(z);
  for (Elem l : upper) {
    bool least = true;
    for (Elem z : upper) least = least && leq(l, z);
    if (least) return l;
  }
  return std::nullopt;
}

}  // namespace

// --- Presheaf ----------------------------------------------------------------

std::optional<Elem> Presheaf::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem Presheaf::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) fail("UnknownElement", {id});
  return it->second;
}

bool Presheaf::has_global_support() const {
  return std::none_of(stalks_.begin(), stalks_.end(), [](const auto& s) { return s.empty(); });
}

Presheaf Presheaf::validate(Semilattice base, const PresheafInput& input) {
  const auto nb = static_cast<Elem>(base.size());
  Presheaf p;

  std::vector<std::string> listed;
  std::vector<Elem> listed_proj;
  std::vector<bool> seen_stalk(nb, false);
  std::unordered_map<std::string, Elem> stalk_of;
  for (const auto& [e_name, ids] : input.stalks) {
    const Elem e = base.index_of(e_name);
    if (seen_stalk[e]) fail("DuplicateStalk", {e_name});
    seen_stalk[e] = true;
    for (const auto& id : ids) {
      if (!stalk_of.emplace(id, e).second) fail("StalkCollision", {id}, "id appears in two stalks");
      listed.push_back(id);
      listed_proj.push_back(e);
    }
  }

  if (input.element_order.empty()) {
    p.names_ = listed;
  } else {
    p.names_ = input.element_order;
    std::set<std::string> a(listed.begin(), listed.end()), b(p.names_.begin(), p.names_.end());
    if (b.size() != p.names_.size()) fail("DuplicateElement", {}, "element order repeats an id");
    for (const auto& id : p.names_)
      if (!a.count(id)) fail("UnknownElement", {id});
    for (const auto& id : listed)
      if (!b.count(id)) fail("UnknownElement", {id}, "missing from the element order");
  }
  const auto n = static_cast<Elem>(p.names_.size());
  for (Elem i = 0; i < n; ++i) p.index_.emplace(p.names_[i], i);
  p.proj_.resize(n);
  p.stalks_.assign(nb, {});
  for (Elem i = 0; i < n; ++i) {
    p.proj_[i] = stalk_of.at(p.names_[i]);
    p.stalks_[p.proj_[i]].push_back(i);
  }

  // cover maps, keyed by (from, to)
  std::vector<std::vector<Elem>> cover_map(static_cast<std::size_t>(nb) * nb);
  auto cover = [&](Elem e, Elem f) -> std::vector<Elem>& { return cover_map[e * nb + f]; };
  for (const auto& r : input.restrictions) {
    const Elem e = base.index_of(r.from);
    const Elem f = base.index_of(r.to);
    if (!base.covers(e, f)) fail("NotACover", {r.from, r.to});
    auto& m = cover(e, f);
    if (m.empty()) m.assign(n, kNone);
    for (const auto& [xs, ys] : r.pairs) {
      const Elem x = p.index_of(xs);
      const Elem y = p.index_of(ys);
      if (p.proj_[x] != e || p.proj_[y] != f) fail("RestrictionOutOfStalk", {xs, ys}, r.from + " -> " + r.to);
      if (m[x] != kNone && m[x] != y) fail("AmbiguousRestriction", {xs, p.names_[m[x]], ys});
      m[x] = y;
    }
  }
  for (Elem e = 0; e < nb; ++e)
    for (Elem f : base.lower_covers(e))
      for (Elem x : p.stalks_[e])
        if (cover(e, f).empty() || cover(e, f)[x] == kNone)
          fail("MissingRestriction", {p.names_[x], base.name(f)}, base.name(e) + " -> " + base.name(f));

  p.restrict_.assign(static_cast<std::size_t>(n) * nb, kNone);
  std::vector<std::string> chain(nb);
  for (Elem x = 0; x < n; ++x) {
    const Elem top = p.proj_[x];
    p.restrict_[x * nb + top] = x;
    chain[top] = base.name(top);
    for (Elem g : by_decreasing_down_size(base, base.down_set(top))) {
      if (g == top) continue;
      Elem value = kNone;
      std::string via;
      for (Elem e : members_of(base.up_set(g))) {
        if (!base.leq(e, top) || !base.covers(e, g)) continue;
        const Elem above = p.restrict_[x * nb + e];
        const Elem v = cover(e, g)[above];
        const std::string path = chain[e] + ">" + base.name(g);
        if (value == kNone) {
          value = v;
          via = path;
        } else if (v != value) {
          fail("PathDependent", {p.names_[x], base.name(g), via, path},
               "restrictions along the two chains reach " + p.names_[value] + " and " + p.names_[v]);
        }
      }
      p.restrict_[x * nb + g] = value;
      chain[g] = via;
    }
  }

  p.up_.assign(n, IndexSet(n));
  p.down_.assign(n, IndexSet(n));
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (base.leq(p.proj_[x], p.proj_[y]) && p.restrict_[y * nb + p.proj_[x]] == x) {
        p.up_[x].set(y);
        p.down_[y].set(x);
      }
  p.base_ = std::move(base);
  return p;
}

std::optional<Elem> Presheaf::meet(Elem x, Elem y) const {
  return greatest_lower(size(), x, y, [&](Elem a, Elem b) { return leq(a, b); });
}

std::optional<Elem> Presheaf::join(Elem x, Elem y) const {
  return least_upper(size(), x, y, [&](Elem a, Elem b) { return leq(a, b); });
}

bool Presheaf::compatible(Elem x, Elem y) const {
  auto m = meet(x, y);
  return m && proj_[*m] == base_.meet(proj_[x], proj_[y]);
}

PresheafInput Presheaf::to_input() const {
  PresheafInput in;
  bool stalk_ordered = true;
  Elem next = 0;
  for (Elem e = 0; e < base_.size(); ++e) {
    std::vector<std::string> ids;
    for (Elem x : stalks_[e]) {
      ids.push_back(names_[x]);
      stalk_ordered = stalk_ordered && x == next++;
    }
    in.stalks.emplace_back(base_.name(e), std::move(ids));
  }
  for (Elem e = 0; e < base_.size(); ++e)
    for (Elem f : base_.lower_covers(e)) {
      if (stalks_[e].empty()) continue;
      RestrictionInput r{base_.name(e), base_.name(f), {}};
      for (Elem x : stalks_[e]) r.pairs.emplace_back(names_[x], names_[restrict(x, f)]);
      in.restrictions.push_back(std::move(r));
    }
  if (!stalk_ordered) in.element_order = names_;
  return in;
}

// --- BooleanSet --------------------------------------------------------------

BooleanSet BooleanSet::validate(BooleanAlgebra base, const PresheafInput& input) {
  Presheaf p = Presheaf::validate(base.order(), input);
  return validate(std::move(base), std::move(p));
}

BooleanSet BooleanSet::validate(BooleanAlgebra base, Presheaf presheaf) {
  ensure(base.names() == presheaf.base().names(), "presheaf base differs from the Boolean algebra");
  const auto n = static_cast<Elem>(presheaf.size());
  for (Elem e = 0; e < base.size(); ++e)
    if (presheaf.stalk(e).empty()) fail("NoGlobalSupport", {base.name(e)}, "empty stalk");
  const auto& zs = presheaf.stalk(base.bottom());
  if (zs.size() > 1) fail("ZeroStalkNotTrivial", {presheaf.name(zs[0]), presheaf.name(zs[1])});

  BooleanSet x;
  x.zero_ = kNone;
  for (Elem z = 0; z < n && x.zero_ == kNone; ++z)
    if (presheaf.up_set(z).count() == n) x.zero_ = z;
  if (x.zero_ == kNone) fail("NoMinimum", {});

  x.meet_ = SquareTable(n);
  x.join_ = SquareTable(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      if (auto m = presheaf.meet(a, b)) x.meet_(a, b) = x.meet_(b, a) = *m;
      if (auto j = presheaf.join(a, b)) x.join_(a, b) = x.join_(b, a) = *j;
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem m = x.meet_(a, b);
      const bool compat = m != kNone && presheaf.proj(m) == base.meet(presheaf.proj(a), presheaf.proj(b));
      if (!compat) continue;
      const Elem j = x.join_(a, b);
      if (j == kNone) fail("MissingJoin", {presheaf.name(a), presheaf.name(b)});
      ensure(presheaf.proj(j) == base.join(presheaf.proj(a), presheaf.proj(b)), "p(x \\/ y) != p(x) \\/ p(y)");
    }
  x.base_ = std::move(base);
  x.presheaf_ = std::move(presheaf);
  return x;
}

std::optional<Elem> BooleanSet::meet(Elem x, Elem y) const {
  const Elem m = meet_(x, y);
  if (m == kNone) return std::nullopt;
  return m;
}

std::optional<Elem> BooleanSet::join(Elem x, Elem y) const {
  const Elem j = join_(x, y);
  if (j == kNone) return std::nullopt;
  return j;
}

bool BooleanSet::compatible(Elem x, Elem y) const {
  const Elem m = meet_(x, y);
  return m != kNone && proj(m) == base_.meet(proj(x), proj(y));
}

bool BooleanSet::has_binary_meets() const {
  for (Elem x = 0; x < size(); ++x)
    for (Elem y = 0; y < size(); ++y)
      if (meet_(x, y) == kNone) return false;
  return true;
}

Elem BooleanSet::setminus(Elem y, Elem x) const { return restrict(y, base_.rel_complement(proj(y), proj(x))); }

Elem BooleanSet::bullet(Elem x, Elem y) const {
  const Elem j = join_(x, setminus(y, x));
  if (j == kNone) throw InternalError("InternalMissingJoin: " + name(x) + " \\/ (" + name(y) + " \\ " + name(x) + ")");
  return j;
}

bool structurally_equal(const BooleanSet& a, const BooleanSet& b) {
  if (a.names() != b.names() || a.base().size() != b.base().size()) return false;
  const auto nb = static_cast<Elem>(a.base().size());
  std::vector<Elem> f(nb, kNone);
  std::vector<bool> hit(nb, false);
  for (Elem e = 0; e < nb; ++e) {
    f[e] = b.proj(a.stalk(e).front());
    if (hit[f[e]]) return false;
    hit[f[e]] = true;
  }
  for (Elem e = 0; e < nb; ++e)
    for (Elem g = 0; g < nb; ++g)
      if (a.base().leq(e, g) != b.base().leq(f[e], f[g])) return false;
  for (Elem x = 0; x < a.size(); ++x) {
    if (f[a.proj(x)] != b.proj(x)) return false;
    for (Elem g = 0; g < nb; ++g)
      if (a.base().leq(g, a.proj(x)) && a.restrict(x, g) != b.restrict(x, f[g])) return false;
  }
  return true;
}

SkewAlgebra to_skew(const BooleanSet& x) {
  const auto n = static_cast<Elem>(x.size());
  SquareTable c(n), b(n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      c(i, j) = x.circ(i, j);
      b(i, j) = x.bullet(i, j);
    }
  try {
    return SkewAlgebra::from_tables(x.names(), std::move(c), std::move(b), x.zero());
  } catch (const ValidationError& e) {
    throw InternalError("Boolean set did not yield a skew Boolean algebra: " + e.violation().message());
  }
}

BooleanSet from_skew(const SkewAlgebra& s) {
  const GammaQuotient q = gamma_classes(s);
  const BooleanAlgebra& base = q.algebra;
  PresheafInput in;
  for (Elem k = 0; k < q.classes.size(); ++k) {
    std::vector<std::string> ids;
    for (Elem x : q.classes[k]) ids.push_back(s.name(x));
    in.stalks.emplace_back(base.name(k), std::move(ids));
  }
  for (Elem a = 0; a < base.size(); ++a)
    for (Elem b : base.order().lower_covers(a)) {
      RestrictionInput r{base.name(a), base.name(b), {}};
      for (Elem x : q.classes[a]) {
        const Elem v = s.circ(q.classes[b].front(), x);
        for (Elem y : q.classes[b]) ensure(s.circ(y, x) == v, "restriction depends on the representative");
        r.pairs.emplace_back(s.name(x), s.name(v));
      }
      in.restrictions.push_back(std::move(r));
    }
  in.element_order = s.names();
  try {
    return BooleanSet::validate(base, in);
  } catch (const ValidationError& e) {
    throw InternalError("skew algebra did not yield a Boolean set: " + e.violation().message());
  }
}

// --- morphisms ---------------------------------------------------------------

BSetMorphism validate_bset_morphism(const BooleanSet& source, const BooleanSet& target, std::vector<Elem> map,
                                    std::vector<Elem> base_map) {
  const auto n = static_cast<Elem>(source.size());
  if (map.size() != n) fail("NotAMorphism", {}, "element map is not total");
  for (Elem x = 0; x < n; ++x)
    if (map[x] >= target.size()) fail("NotAMorphism", {source.name(x)}, "image outside target");
  BAHom h = validate_ba_hom(source.base(), target.base(), std::move(base_map));

  for (Elem x = 0; x < n; ++x)
    if (target.proj(map[x]) != h(source.proj(x)))
      fail("BM1Violation", {source.name(x)},
           "q(phi(x)) = " + target.base().name(target.proj(map[x])) + " but phibar(p(x)) = " +
               target.base().name(h(source.proj(x))));
  for (Elem x = 0; x < n; ++x) {
    const Elem a = source.proj(x);
    for (Elem b = 0; b < source.base().size(); ++b) {
      if (!source.base().leq(b, a)) continue;
      if (map[source.restrict(x, b)] != target.restrict(map[x], h(b)))
        fail("BM2Violation", {source.name(x), source.base().name(a), source.base().name(b)});
    }
  }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (source.compatible(x, y)) {
        auto j = target.join(map[x], map[y]);
        ensure(j && *j == map[*source.join(x, y)], "phi does not preserve joins of compatible pairs");
      }
      ensure(map[source.circ(x, y)] == target.circ(map[x], map[y]), "phi does not preserve o");
      ensure(map[source.bullet(x, y)] == target.bullet(map[x], map[y]), "phi does not preserve *");
    }
  ensure(map[source.zero()] == target.zero(), "phi does not preserve 0");

  BSetMorphism m{std::move(map), std::move(h), false};
  m.proper = is_proper_hom(source.base(), target.base(), m.base_map);
  return m;
}

BSetMorphism identity_morphism(const BooleanSet& x) {
  BSetMorphism m;
  for (Elem i = 0; i < x.size(); ++i) m.map.push_back(i);
  m.base_map = identity_hom(x.base());
  m.proper = true;
  return m;
}

BSetMorphism compose(const BSetMorphism& second, const BSetMorphism& first) {
  BSetMorphism m;
  for (Elem e : first.map) m.map.push_back(second(e));
  m.base_map = compose(second.base_map, first.base_map);
  m.proper = first.proper && second.proper;
  return m;
}

bool preserves_meets(const BooleanSet& source, const BooleanSet& target, const BSetMorphism& m) {
  for (Elem x = 0; x < source.size(); ++x)
    for (Elem y = 0; y < source.size(); ++y) {
      auto lhs = source.meet(x, y);
      auto rhs = target.meet(m(x), m(y));
      if (!lhs || !rhs || m(*lhs) != *rhs) return false;
    }
  return true;
}

Report bset_lemma_report(const BooleanSet& x) {
  Report r;
  const auto n = static_cast<Elem>(x.size());
  const BooleanAlgebra& b = x.base();
  auto names = [&](std::initializer_list<Elem> xs) {
    std::vector<std::string> out;
    for (Elem e : xs) out.push_back(x.name(e));
    return out;
  };
  auto first_pair = [&](auto&& pred) -> std::vector<std::string> {
    for (Elem u = 0; u < n; ++u)
      for (Elem v = 0; v < n; ++v)
        if (!pred(u, v)) return names({u, v});
    return {};
  };
  auto first_triple = [&](auto&& pred) -> std::vector<std::string> {
    for (Elem u = 0; u < n; ++u)
      for (Elem v = 0; v < n; ++v)
        for (Elem w = 0; w < n; ++w)
          if (!pred(u, v, w)) return names({u, v, w});
    return {};
  };
  auto leq = [&](Elem u, Elem v) { return x.leq(u, v); };
  auto compat = [&](Elem u, Elem v) { return x.compatible(u, v); };
  auto c = [&](Elem u, Elem v) { return x.circ(u, v); };
  auto minus = [&](Elem u, Elem v) { return x.setminus(u, v); };
  auto meet_eq = [&](Elem lhs, Elem u, Elem v) {
    auto m = x.meet(u, v);
    return m && *m == lhs;
  };

  auto w = first_triple([&](Elem u, Elem v, Elem z) { return !(leq(u, z) && leq(v, z)) || compat(u, v); });
  r.add("x,y <= z implies x ~ y", w.empty(), w);
  w = first_pair([&](Elem u, Elem v) { return !(compat(u, v) && b.leq(x.proj(u), x.proj(v))) || leq(u, v); });
  r.add("x ~ y and p(x) <= p(y) imply x <= y", w.empty(), w);
  w = first_pair([&](Elem u, Elem v) { return leq(u, v) == (u == c(u, v)); });
  r.add("x <= y iff x = x o y", w.empty(), w);
  w = first_pair([&](Elem u, Elem v) { return compat(u, v) == (c(u, v) == c(v, u)); });
  r.add("x ~ y iff x o y = y o x", w.empty(), w);
  w = first_triple([&](Elem u, Elem v, Elem z) {
    return !(leq(u, z) && leq(v, z) && x.proj(u) == x.proj(v)) || u == v;
  });
  r.add("x,y <= z and p(x) = p(y) imply x = y", w.empty(), w);

  std::vector<std::string> refl;
  for (Elem u = 0; u < n && refl.empty(); ++u)
    for (Elem e = 0; e < b.size() && refl.empty(); ++e) {
      if (!b.leq(e, x.proj(u))) continue;
      unsigned count = 0;
      for (Elem v = 0; v < n; ++v) count += leq(v, u) && x.proj(v) == e;
      if (count != 1) refl = {x.name(u), b.name(e)};
    }
  r.add("p reflects the order", refl.empty(), refl);

  w = first_pair([&](Elem u, Elem v) {
    if (!compat(u, v)) return true;
    auto j = x.join(u, v);
    return j && x.proj(*j) == b.join(x.proj(u), x.proj(v));
  });
  r.add("x ~ y implies p(x \\/ y) = p(x) \\/ p(y)", w.empty(), w);
  w = first_pair([&](Elem u, Elem v) { return compat(u, v) == x.join(u, v).has_value(); });
  r.add("x ~ y iff x \\/ y exists", w.empty(), w);

  w = first_triple([&](Elem a, Elem bb, Elem cc) { return meet_eq(minus(minus(a, bb), cc), minus(a, bb), minus(a, cc)); });
  r.add("(a\\b)\\c = (a\\b) /\\ (a\\c)", w.empty(), w);
  w = first_triple([&](Elem a, Elem bb, Elem cc) {
    auto j = x.join(a, bb);
    if (!j) return true;
    auto rhs = x.join(minus(a, cc), minus(bb, cc));
    return rhs && *rhs == minus(*j, cc);
  });
  r.add("(a \\/ b)\\c = (a\\c) \\/ (b\\c)", w.empty(), w);
  w = first_triple([&](Elem a, Elem bb, Elem cc) {
    auto j = x.join(bb, minus(cc, bb));
    return j && meet_eq(minus(a, *j), minus(a, bb), minus(a, cc));
  });
  r.add("a\\(b \\/ c\\b) = (a\\b) /\\ (a\\c)", w.empty(), w);

  w = first_pair([&](Elem u, Elem v) {
    const bool one = compat(u, v);
    return one == (c(u, v) == c(v, u)) && one == (x.bullet(u, v) == x.bullet(v, u));
  });
  r.add("x ~ y iff x o y = y o x iff x * y = y * x", w.empty(), w);
  return r;
}

// --- right normal bands ------------------------------------------------------

RightNormalBand RightNormalBand::validate(const BandInput& input) {
  std::unordered_map<std::string, Elem> index;
  const std::size_t n = input.elements.size();
  if (n == 0) fail("EmptyCarrier", {});
  for (Elem i = 0; i < n; ++i)
    if (!index.emplace(input.elements[i], i).second) fail("DuplicateElement", {input.elements[i]});
  if (input.table.size() != n) fail("MalformedTable", {"circ"}, "wrong number of rows");
  SquareTable t(n);
  for (Elem i = 0; i < n; ++i) {
    if (input.table[i].size() != n) fail("MalformedTable", {"circ"}, "wrong number of columns");
    for (Elem j = 0; j < n; ++j) {
      auto it = index.find(input.table[i][j]);
      if (it == index.end()) fail("UnknownElement", {input.table[i][j]});
      t(i, j) = it->second;
    }
  }
  return from_table(input.elements, std::move(t));
}

RightNormalBand RightNormalBand::from_table(std::vector<std::string> names, SquareTable table) {
  const auto n = static_cast<Elem>(names.size());
  for (Elem x = 0; x < n; ++x)
    if (table(x, x) != x) fail("NotABand", {names[x]}, "x.x != x");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (table(table(x, y), z) != table(x, table(y, z)))
          fail("NotABand", {names[x], names[y], names[z]}, "(x.y).z != x.(y.z)");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (table(table(x, y), z) != table(table(y, x), z))
          fail("NotRightNormal", {names[x], names[y], names[z]}, "x.y.z != y.x.z");
  RightNormalBand s;
  s.names_ = std::move(names);
  s.table_ = std::move(table);
  return s;
}

BandInput RightNormalBand::to_input() const {
  BandInput in{names_, {}};
  for (Elem i = 0; i < size(); ++i) {
    in.table.emplace_back();
    for (Elem j = 0; j < size(); ++j) in.table.back().push_back(names_[op(i, j)]);
  }
  return in;
}

namespace {

struct BandClasses {
  std::vector<Elem> class_of;
  std::vector<std::vector<Elem>> classes;
  std::vector<std::string> base_names;
  std::vector<std::pair<std::string, std::string>> leq;
};

BandClasses band_classes(const RightNormalBand& s) {
  const auto n = static_cast<Elem>(s.size());
  BandClasses bc;
  bc.class_of.assign(n, kNone);
  for (Elem x = 0; x < n; ++x) {
    if (bc.class_of[x] != kNone) continue;
    const auto k = static_cast<Elem>(bc.classes.size());
    bc.classes.push_back({});
    bc.base_names.push_back("[" + s.name(x) + "]");
    for (Elem y = x; y < n; ++y)
      if (s.op(x, y) == y && s.op(y, x) == x) {
        bc.class_of[y] = k;
        bc.classes.back().push_back(y);
      }
  }
  const auto m = static_cast<Elem>(bc.classes.size());
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      if (bc.class_of[s.op(bc.classes[i].front(), bc.classes[j].front())] == i)
        bc.leq.emplace_back(bc.base_names[i], bc.base_names[j]);
  return bc;
}

PresheafInput band_presheaf_input(const RightNormalBand& s, const BandClasses& bc, const Semilattice& base) {
  PresheafInput in;
  for (Elem k = 0; k < bc.classes.size(); ++k) {
    std::vector<std::string> ids;
    for (Elem x : bc.classes[k]) ids.push_back(s.name(x));
    in.stalks.emplace_back(bc.base_names[k], std::move(ids));
  }
  for (Elem a = 0; a < base.size(); ++a)
    for (Elem b : base.lower_covers(a)) {
      RestrictionInput r{base.name(a), base.name(b), {}};
      for (Elem x : bc.classes[a]) {
        const Elem v = s.op(bc.classes[b].front(), x);
        for (Elem y : bc.classes[b]) ensure(s.op(y, x) == v, "band restriction depends on the representative");
        r.pairs.emplace_back(s.name(x), s.name(v));
      }
      in.restrictions.push_back(std::move(r));
    }
  in.element_order = s.names();
  return in;
}

}  // namespace

Presheaf band_to_presheaf(const RightNormalBand& s) {
  const BandClasses bc = band_classes(s);
  Semilattice base = Semilattice::from_input(bc.base_names, bc.leq);
  PresheafInput in = band_presheaf_input(s, bc, base);
  return Presheaf::validate(std::move(base), in);
}

RightNormalBand presheaf_to_band(const Presheaf& p) {
  const auto n = static_cast<Elem>(p.size());
  ensure(p.has_global_support(), "presheaf lacks global support");
  SquareTable t(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t(x, y) = p.circ(x, y);
  return RightNormalBand::from_table(p.names(), std::move(t));
}

RightNormalBand skew_circ_reduct(const SkewAlgebra& s) {
  return RightNormalBand::from_table(s.names(), s.circ_table());
}

BooleanSet band_to_boolean_set(const RightNormalBand& s) {
  const BandClasses bc = band_classes(s);
  BalgInput bi{bc.base_names, bc.leq, {}};
  const Semilattice order = Semilattice::from_input(bc.base_names, bc.leq);
  bi.bottom = order.name(order.bottom());
  BooleanAlgebra base = BooleanAlgebra::validate(bi);
  return BooleanSet::validate(base, band_presheaf_input(s, bc, base.order()));
}

bool is_boolean_band(const RightNormalBand& s) {
  try {
    band_to_boolean_set(s);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

// --- sieves ------------------------------------------------------------------

bool is_covering_sieve(const BooleanAlgebra& b, Elem c, const IndexSet& sieve, SieveConvention convention) {
  Elem joined = b.bottom();
  for (Elem a : members_of(sieve)) {
    if (!b.leq(a, c)) return false;
    for (Elem d : members_of(b.order().down_set(a)))
      if (!sieve.test(d)) return false;
    joined = b.join(joined, a);
  }
  if (sieve.none()) return convention == SieveConvention::kEmptyCoversBottom && c == b.bottom();
  return joined == c;
}

std::optional<Violation> find_sheaf_violation(const Presheaf& p, const BooleanAlgebra& b, SieveConvention convention) {
  ensure(b.names() == p.base().names(), "presheaf base differs from the Boolean algebra");
  const auto nb = static_cast<Elem>(b.size());
  for (Elem c = 0; c < nb; ++c) {
    const std::vector<Elem> below = members_of(b.order().down_set(c));
    ensure(below.size() <= 20, "sieve enumeration is limited to 20 elements below c");
    for (std::uint32_t mask = 0; mask < (1U << below.size()); ++mask) {
      IndexSet sieve(nb);
      for (std::size_t i = 0; i < below.size(); ++i)
        if (mask & (1U << i)) sieve.set(below[i]);
      if (!is_covering_sieve(b, c, sieve, convention)) continue;

      std::vector<Elem> maximal;
      for (Elem a : members_of(sieve)) {
        bool top = true;
        for (Elem d : members_of(sieve)) top = top && (d == a || !b.leq(a, d));
        if (top) maximal.push_back(a);
      }
      bool empty_stalk = false;
      for (Elem a : maximal) empty_stalk = empty_stalk || p.stalk(a).empty();
      if (empty_stalk) continue;

      std::vector<std::size_t> pick(maximal.size(), 0);
      while (true) {
        bool matching = true;
        for (std::size_t i = 0; i < maximal.size() && matching; ++i)
          for (std::size_t j = i + 1; j < maximal.size() && matching; ++j) {
            const Elem g = b.meet(maximal[i], maximal[j]);
            matching = p.restrict(p.stalk(maximal[i])[pick[i]], g) == p.restrict(p.stalk(maximal[j])[pick[j]], g);
          }
        if (matching) {
          unsigned amalgamations = 0;
          for (Elem xc : p.stalk(c)) {
            bool glues = true;
            for (std::size_t i = 0; i < maximal.size(); ++i)
              glues = glues && p.restrict(xc, maximal[i]) == p.stalk(maximal[i])[pick[i]];
            amalgamations += glues;
          }
          if (amalgamations != 1) {
            std::vector<std::string> sieve_names;
            for (Elem a : members_of(sieve)) sieve_names.push_back(b.name(a));
            std::vector<std::string> witness{b.name(c), "{" + join_names(sieve_names) + "}"};
            for (std::size_t i = 0; i < maximal.size(); ++i) witness.push_back(p.name(p.stalk(maximal[i])[pick[i]]));
            return Violation{"SheafCondition", std::move(witness),
                             std::to_string(amalgamations) + " amalgamations of a matching family"};
          }
        }
        std::size_t i = 0;
        while (i < maximal.size() && ++pick[i] == p.stalk(maximal[i]).size()) pick[i++] = 0;
        if (i == maximal.size()) break;
      }
    }
  }
  return std::nullopt;
}

bool sheaf_condition(const Presheaf& p, const BooleanAlgebra& b, SieveConvention convention) {
  return !find_sheaf_violation(p, b, convention).has_value();
}

// --- generator ---------------------------------------------------------------

BooleanSet generate_boolean_set(const std::vector<unsigned>& sizes, std::uint64_t seed) {
  if (sizes.empty()) fail("EmptySizes", {}, "at least one atom is required");
  for (unsigned s : sizes)
    if (s == 0) fail("EmptySizes", {}, "atom stalks must be non-empty");
  const auto k = static_cast<unsigned>(sizes.size());
  ensure(k <= 26, "at most 26 atoms");

  std::vector<std::string> atom_names;
  std::vector<std::vector<std::string>> labels(k);
  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < k; ++i) {
    atom_names.push_back(std::string(1, static_cast<char>('a' + i)));
    for (unsigned j = 1; j <= sizes[i]; ++j) labels[i].push_back(atom_names[i] + std::to_string(j));
    if (seed != 0) std::shuffle(labels[i].begin(), labels[i].end(), rng);
  }
  auto namer = [&](unsigned mask) { return atom_mask_name(atom_names, mask); };
  BooleanAlgebra base = BooleanAlgebra::validate(powerset_input(k, namer));

  // tuple[mask] lists, per element of the stalk, the chosen label index of each atom in the mask
  const unsigned full = (1U << k) - 1;
  std::vector<std::vector<std::vector<unsigned>>> tuples(full + 1);
  PresheafInput in;
  auto id_of = [&](unsigned mask, const std::vector<unsigned>& t) {
    if (mask == 0) return std::string("0.z");
    std::string id = namer(mask) + ".";
    unsigned pos = 0;
    for (unsigned i = 0; i < k; ++i)
      if (mask & (1U << i)) id += labels[i][t[pos++]];
    return id;
  };
  for (unsigned mask = 0; mask <= full; ++mask) {
    std::vector<unsigned> atoms;
    for (unsigned i = 0; i < k; ++i)
      if (mask & (1U << i)) atoms.push_back(i);
    std::vector<unsigned> t(atoms.size(), 0);
    std::vector<std::string> ids;
    while (true) {
      tuples[mask].push_back(t);
      ids.push_back(id_of(mask, t));
      std::size_t pos = atoms.size();
      while (pos > 0 && ++t[pos - 1] == sizes[atoms[pos - 1]]) t[--pos] = 0;
      if (pos == 0) break;
    }
    in.stalks.emplace_back(namer(mask), std::move(ids));
  }
  for (unsigned mask = 1; mask <= full; ++mask)
    for (unsigned i = 0; i < k; ++i) {
      if (!(mask & (1U << i))) continue;
      const unsigned lower = mask & ~(1U << i);
      RestrictionInput r{namer(mask), namer(lower), {}};
      for (const auto& t : tuples[mask]) {
        std::vector<unsigned> dropped;
        unsigned pos = 0;
        for (unsigned a = 0; a < k; ++a)
          if (mask & (1U << a)) {
            if (a != i) dropped.push_back(t[pos]);
            ++pos;
          }
        r.pairs.emplace_back(id_of(mask, t), id_of(lower, dropped));
      }
      in.restrictions.push_back(std::move(r));
    }
  try {
    return BooleanSet::validate(std::move(base), in);
  } catch (const ValidationError& e) {
    throw InternalError("generator produced an invalid Boolean set: " + e.violation().message());
  }
}

}  // namespace skewdual
