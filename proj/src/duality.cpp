#include "skewdual/duality.hpp"

#include <algorithm>

namespace skewdual {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

Elem least_of(const std::vector<IndexSet>& up, const IndexSet& members) {
  for (Elem g : members_of(members))
    if (members.is_subset_of(up[g])) return g;
  return kNone;
}

std::vector<IndexSet> up_sets(const BooleanSet& x) {
  std::vector<IndexSet> up;
  for (Elem a = 0; a < x.size(); ++a) up.push_back(x.presheaf().up_set(a));
  return up;
}

std::vector<IndexSet> up_sets(const BooleanAlgebra& b) {
  std::vector<IndexSet> up;
  for (Elem a = 0; a < b.size(); ++a) up.push_back(b.order().up_set(a));
  return up;
}

}  // namespace

std::vector<BSetUltrafilter> bset_ultrafilters(const BooleanSet& x) {
  const auto n = static_cast<Elem>(x.size());
  const auto& base_ufs = x.base().ultrafilters();
  const auto up = up_sets(x);
  std::vector<BSetUltrafilter> out;
  for (Elem k = 0; k < base_ufs.size(); ++k) {
    const FilterSet& f = base_ufs[k];
    IndexSet over(n);
    for (Elem a = 0; a < n; ++a)
      if (f.contains(x.proj(a))) over.set(a);
    auto conjugate = [&](Elem a, Elem b) {
      for (Elem c : members_of(over))
        if (x.leq(c, a) && x.leq(c, b)) return true;
      return false;
    };
    IndexSet assigned(n);
    for (Elem a : members_of(over)) {
      if (assigned.test(a)) continue;
      BSetUltrafilter g{IndexSet(n), k, kNone};
      for (Elem b : members_of(over))
        if (conjugate(a, b)) g.members.set(b);
      ensure(!g.members.intersects(assigned), "conjugacy classes overlap");
      for (Elem b : members_of(g.members))
        for (Elem c : members_of(g.members)) ensure(conjugate(b, c), "conjugacy is not transitive");
      for (Elem b : members_of(g.members)) ensure(up[b].is_subset_of(g.members), "[a]_F is not upwardly closed");
      g.least = least_of(up, g.members);
      ensure(g.least != kNone, "[a]_F is not down directed");
      ensure(!g.members.test(x.zero()), "[a]_F is not proper");
      IndexSet image(x.base().size());
      for (Elem b : members_of(g.members)) image.set(x.proj(b));
      ensure(image == f.members, "p([a]_F) != F");
      for (Elem u = 0; u < n; ++u)
        for (Elem v = 0; v < n; ++v)
          if (x.compatible(u, v) && g.members.test(*x.join(u, v)))
            ensure(g.members.test(u) || g.members.test(v), "ultrafilter is not prime");
      assigned |= g.members;
      out.push_back(std::move(g));
    }
    ensure(assigned == over, "classes do not cover p^{-1}(F)");
  }
  return out;
}

IndexSet L(const std::vector<BSetUltrafilter>& ufs, Elem a) {
  IndexSet out(ufs.size());
  for (Elem i = 0; i < ufs.size(); ++i)
    if (ufs[i].members.test(a)) out.set(i);
  return out;
}

EtaleDual bset_to_etale(const BooleanSet& x) {
  EtaleDual d;
  d.points = bset_ultrafilters(x);
  std::vector<std::string> total, base;
  std::vector<Elem> proj;
  for (const auto& g : d.points) {
    total.push_back("up(" + x.name(g.least) + ")");
    proj.push_back(g.over);
  }
  const auto bup = up_sets(x.base());
  for (const auto& f : x.base().ultrafilters()) {
    const Elem a = least_of(bup, f.members);
    ensure(a != kNone, "base ultrafilter without a least element");
    base.push_back("up(" + x.base().name(a) + ")");
  }
  d.space = FinEtaleSpace::from_map(std::move(total), std::move(base), std::move(proj));
  return d;
}

AlphaIso alpha(const BooleanSet& x) {
  AlphaIso r;
  r.dual = bset_to_etale(x);
  r.double_dual = dual_bset(r.dual.space);
  const auto n = static_cast<Elem>(x.size());
  std::vector<Elem> map, base_map;
  for (Elem a = 0; a < n; ++a) {
    const IndexSet la = L(r.dual.points, a);
    ensure(is_section(r.dual.space, la), "L(a) is not a local section");
    map.push_back(r.double_dual.element_of(la));
  }
  for (Elem e = 0; e < x.base().size(); ++e)
    base_map.push_back(r.double_dual.base_element_of(stone_map(x.base().ultrafilters(), e)));
  ensure(r.double_dual.bset.size() == n && r.double_dual.bset.base().size() == x.base().size(),
         "alpha is not a bijection");
  std::vector<Elem> inv(n, kNone), inv_base(base_map.size(), kNone);
  for (Elem a = 0; a < n; ++a) {
    ensure(inv[map[a]] == kNone, "alpha is not injective");
    inv[map[a]] = a;
  }
  for (Elem e = 0; e < base_map.size(); ++e) {
    ensure(inv_base[base_map[e]] == kNone, "M is not injective");
    inv_base[base_map[e]] = e;
  }
  try {
    r.forward = validate_bset_morphism(x, r.double_dual.bset, std::move(map), std::move(base_map));
    r.inverse = validate_bset_morphism(r.double_dual.bset, x, std::move(inv), std::move(inv_base));
  } catch (const ValidationError& e) {
    throw InternalError("alpha is not an isomorphism of Boolean sets: " + e.violation().message());
  }
  return r;
}

BetaIso beta(const FinEtaleSpace& sp) {
  BetaIso r;
  r.dual = dual_bset(sp);
  r.double_dual = bset_to_etale(r.dual.bset);
  const auto& points = r.double_dual.points;
  const auto& base_ufs = r.dual.bset.base().ultrafilters();
  for (Elem a = 0; a < sp.size(); ++a) {
    IndexSet k(r.dual.sections.size());
    for (Elem s = 0; s < r.dual.sections.size(); ++s)
      if (r.dual.sections[s].test(a)) k.set(s);
    Elem found = kNone;
    for (Elem i = 0; i < points.size(); ++i)
      if (points[i].members == k) found = i;
    ensure(found != kNone, "K_a is not an ultrafilter of the dual");
    r.map.push_back(found);
  }
  for (Elem u = 0; u < sp.base_size(); ++u) {
    IndexSet nx(r.dual.base_subset.size());
    for (Elem m = 0; m < r.dual.base_subset.size(); ++m)
      if (r.dual.base_subset[m].test(u)) nx.set(m);
    Elem found = kNone;
    for (Elem i = 0; i < base_ufs.size(); ++i)
      if (base_ufs[i].members == nx) found = i;
    ensure(found != kNone, "N(x) is not an ultrafilter");
    r.base_map.push_back(found);
  }
  ensure(points.size() == sp.size() && base_ufs.size() == sp.base_size(), "beta is not a bijection");
  IndexSet hit(points.size()), base_hit(base_ufs.size());
  for (Elem i : r.map) hit.set(i);
  for (Elem i : r.base_map) base_hit.set(i);
  ensure(hit.all() && base_hit.all(), "beta is not surjective");
  for (Elem a = 0; a < sp.size(); ++a)
    ensure(r.double_dual.space.proj(r.map[a]) == r.base_map[sp.proj(a)], "beta does not commute with projections");
  return r;
}

RelationalMorphism beta_relational(const FinEtaleSpace& sp, const BetaIso& b) {
  std::vector<IndexSet> phi;
  for (Elem a = 0; a < sp.size(); ++a) phi.push_back(make_set(b.double_dual.space.size(), {b.map[a]}));
  return validate_relational_morphism(sp, b.double_dual.space, std::move(phi), b.base_map);
}

BSetMorphism dual_of_relational(const FinEtaleSpace& source, const DualBSet& source_dual, const FinEtaleSpace& target,
                                const DualBSet& target_dual, const RelationalMorphism& phi) {
  if (!phi.covering())
    fail("NotCovering", {},
         std::string("locally injective: ") + yes_no(phi.locally_injective) +
             ", locally surjective: " + yes_no(phi.locally_surjective));
  ensure(target_dual.base_subset.size() == (std::size_t{1} << target.base_size()), "dual does not match the target");
  std::vector<Elem> map, base_map;
  for (const IndexSet& sec : target_dual.sections) {
    IndexSet pre(source.size());
    for (Elem e = 0; e < source.size(); ++e)
      if (phi.phi[e].intersects(sec)) pre.set(e);
    ensure(is_section(source, pre), "preimage of a section is not a section");
    map.push_back(source_dual.element_of(pre));
  }
  for (const IndexSet& a : target_dual.base_subset) {
    IndexSet pre(source.base_size());
    for (Elem u = 0; u < source.base_size(); ++u)
      if (a.test(phi.base_map[u])) pre.set(u);
    base_map.push_back(source_dual.base_element_of(pre));
  }
  try {
    return validate_bset_morphism(target_dual.bset, source_dual.bset, std::move(map), std::move(base_map));
  } catch (const ValidationError& e) {
    throw InternalError("dual of a covering morphism is not a morphism: " + e.violation().message());
  }
}

RelationalMorphism dual_of_bset_morphism(const BooleanSet& x, const EtaleDual& x_dual, const BooleanSet& y,
                                         const EtaleDual& y_dual, const BSetMorphism& phi) {
  if (!phi.proper) fail("NotProper", {}, "the base homomorphism is not proper");
  std::vector<IndexSet> images;
  for (const auto& g : y_dual.points) {
    IndexSet pre(x.size());
    for (Elem a = 0; a < x.size(); ++a)
      if (g.members.test(phi(a))) pre.set(a);
    IndexSet img(x_dual.points.size()), covered(x.size());
    for (Elem i = 0; i < x_dual.points.size(); ++i)
      if (x_dual.points[i].members.is_subset_of(pre)) {
        img.set(i);
        covered |= x_dual.points[i].members;
      }
    ensure(covered == pre, "phi^{-1}(G) is not the union of the ultrafilters it contains");
    images.push_back(std::move(img));
  }
  std::vector<Elem> base_map;
  const auto& xufs = x.base().ultrafilters();
  for (const auto& f : y.base().ultrafilters()) {
    const IndexSet pre = preimage(phi.base_map, x.base().size(), f.members);
    Elem found = kNone;
    for (Elem i = 0; i < xufs.size(); ++i)
      if (xufs[i].members == pre) found = i;
    ensure(found != kNone, "preimage of an ultrafilter is not an ultrafilter");
    base_map.push_back(found);
  }
  RelationalMorphism m;
  try {
    m = validate_relational_morphism(y_dual.space, x_dual.space, std::move(images), std::move(base_map));
  } catch (const ValidationError& e) {
    throw InternalError("dual of a morphism is not relational: " + e.violation().message());
  }
  ensure(m.covering(), "dual of a morphism is not a covering morphism");
  return m;
}

bool is_hausdorff(const BooleanSet& x, const EtaleDual& d) {
  std::vector<IndexSet> basis;
  for (Elem a = 0; a < x.size(); ++a) basis.push_back(L(d.points, a));
  const auto m = static_cast<Elem>(d.points.size());
  for (Elem i = 0; i < m; ++i)
    for (Elem j = i + 1; j < m; ++j) {
      bool separated = false;
      for (const auto& u : basis) {
        if (!u.test(i)) continue;
        for (const auto& v : basis)
          if (v.test(j) && !u.intersects(v)) separated = true;
        if (separated) break;
      }
      if (!separated) return false;
    }
  return true;
}

Report check_prop13(const BooleanSet& x) {
  Report r;
  const bool meets = x.has_binary_meets();
  const bool hausdorff = is_hausdorff(x, bset_to_etale(x));
  r.add("binary meets", true, {}, yes_no(meets));
  r.add("dual is Hausdorff", true, {}, yes_no(hausdorff));
  r.add("binary meets iff dual is Hausdorff", meets == hausdorff);
  return r;
}

Report check_prop14(const BooleanSet& x, const BooleanSet& y, const BSetMorphism& phi) {
  if (!x.has_binary_meets()) fail("NoBinaryMeets", {"source"});
  if (!y.has_binary_meets()) fail("NoBinaryMeets", {"target"});
  const bool preserves = preserves_meets(x, y, phi);
  const RelationalMorphism d = dual_of_bset_morphism(x, bset_to_etale(x), y, bset_to_etale(y), phi);
  Report r;
  r.add("phi preserves binary meets", true, {}, yes_no(preserves));
  r.add("dual is a partial map", true, {}, yes_no(d.partial_map));
  r.add("meet preservation iff partial dual", preserves == d.partial_map);
  return r;
}

Report topology_report(const BooleanSet& x) {
  Report r;
  const auto n = static_cast<Elem>(x.size());
  const EtaleDual d = bset_to_etale(x);
  const auto& pts = d.points;
  std::vector<IndexSet> ls;
  for (Elem a = 0; a < n; ++a) ls.push_back(L(pts, a));
  auto nm = [&](std::initializer_list<Elem> xs) {
    std::vector<std::string> out;
    for (Elem e : xs) out.push_back(x.name(e));
    return out;
  };
  auto first_pair = [&](auto&& pred) -> std::vector<std::string> {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (!pred(a, b)) return nm({a, b});
    return {};
  };

  IndexSet all(pts.size());
  for (const auto& l : ls) all |= l;
  auto w = first_pair([&](Elem a, Elem b) {
    IndexSet u(pts.size());
    for (Elem c = 0; c < n; ++c)
      if (c != x.zero() && x.leq(c, a) && x.leq(c, b)) u |= ls[c];
    return u == (ls[a] & ls[b]);
  });
  r.add("the sets L(a) form a base", all.all() && w.empty(), w);
  w = first_pair([&](Elem a, Elem b) {
    auto m = x.meet(a, b);
    return !m || ls[*m] == (ls[a] & ls[b]);
  });
  r.add("L(a /\\ b) = L(a) n L(b)", w.empty(), w);
  w = first_pair([&](Elem a, Elem b) { return (ls[a] == ls[b]) == (a == b); });
  r.add("L(a) = L(b) iff a = b", w.empty(), w);
  w = first_pair([&](Elem a, Elem b) { return ls[a].is_subset_of(ls[b]) == x.leq(a, b); });
  r.add("L(a) <= L(b) iff a <= b", w.empty(), w);
  w = first_pair([&](Elem a, Elem) { return is_section(d.space, ls[a]); });
  r.add("L(a) is a local section", w.empty(), w);
  w = first_pair([&](Elem a, Elem b) { return !x.compatible(a, b) || (ls[a] | ls[b]) == ls[*x.join(a, b)]; });
  r.add("a ~ b implies L(a) u L(b) = L(a \\/ b)", w.empty(), w);
  w = first_pair([&](Elem a, Elem b) { return !is_section(d.space, ls[a] | ls[b]) || x.compatible(a, b); });
  r.add("L(a) u L(b) a local section implies a ~ b", w.empty(), w);
  w = first_pair([&](Elem a, Elem) {
    return support(d.space, ls[a]) == stone_map(x.base().ultrafilters(), x.proj(a));
  });
  r.add("p(L(a)) = M(p(a))", w.empty(), w);
  r.add("L(a) is compact", true, {}, "finite discrete space");

  std::vector<std::string> missing;
  const auto k = static_cast<unsigned>(d.space.base_size());
  ensure(k <= 16, "section enumeration is limited to 16 base points");
  std::size_t total_sections = 0;
  for (unsigned mask = 0; mask < (1U << k) && missing.empty(); ++mask) {
    IndexSet a(k);
    for (unsigned i = 0; i < k; ++i)
      if (mask & (1U << i)) a.set(i);
    for (const IndexSet& s : sections_over(d.space, a)) {
      ++total_sections;
      if (std::find(ls.begin(), ls.end(), s) == ls.end()) {
        missing = {section_name(d.space, s)};
        break;
      }
    }
  }
  r.add("every compact-open local section is some L(a)", missing.empty(), missing,
        std::to_string(total_sections) + " sections");

  w = first_pair([&](Elem a, Elem b) {
    for (Elem z = 0; z < n; ++z)
      if (x.leq(z, a) && x.leq(z, b) && !x.leq(z, x.circ(a, b))) return false;
    return true;
  });
  r.add("x, y in a filter imply x o y in it", w.empty(), w);

  std::vector<std::string> bad;
  for (Elem z = 0; z < n && bad.empty(); ++z) {
    if (z == x.zero()) continue;
    IndexSet img(x.base().size());
    for (Elem a : members_of(x.presheaf().up_set(z))) img.set(x.proj(a));
    if (!is_filter(x.base(), img) || !is_proper(x.base(), img) || img.test(x.base().bottom())) bad = {x.name(z)};
  }
  r.add("p of a proper filter is a proper filter", bad.empty(), bad);

  bad.clear();
  for (Elem k2 = 0; k2 < x.base().ultrafilters().size() && bad.empty(); ++k2) {
    IndexSet over(n), seen(n);
    for (Elem a = 0; a < n; ++a)
      if (x.base().ultrafilters()[k2].contains(x.proj(a))) over.set(a);
    for (const auto& g : pts) {
      if (g.over != k2) continue;
      if (g.members.intersects(seen)) bad = {x.name(g.least)};
      seen |= g.members;
    }
    if (bad.empty() && seen != over) bad = {x.base().name(k2)};
  }
  r.add("ultrafilters over F partition p^{-1}(F)", bad.empty(), bad);

  // every ultrafilter of X, found as a maximal proper principal filter
  std::vector<IndexSet> maximal;
  for (Elem z = 0; z < n; ++z) {
    if (z == x.zero()) continue;
    bool minimal_nonzero = true;
    for (Elem c = 0; c < n; ++c) minimal_nonzero = minimal_nonzero && (c == z || c == x.zero() || !x.leq(c, z));
    if (minimal_nonzero) maximal.push_back(x.presheaf().up_set(z));
  }
  bool same = maximal.size() == pts.size();
  for (const auto& g : pts) same = same && std::find(maximal.begin(), maximal.end(), g.members) != maximal.end();
  r.add("every ultrafilter is some [a]_F", same);
  return r;
}

Report functor_laws_bset(const BooleanSet& x, const BooleanSet& y, const BooleanSet& z, const BSetMorphism& f,
                         const BSetMorphism& g) {
  Report r;
  const AlphaIso ax = alpha(x), ay = alpha(y), az = alpha(z);
  const RelationalMorphism id_dual = dual_of_bset_morphism(x, ax.dual, x, ax.dual, identity_morphism(x));
  r.add("dual(id) = id", id_dual == identity_relational(ax.dual.space));

  const BSetMorphism gf = compose(g, f);
  const RelationalMorphism lhs = dual_of_bset_morphism(x, ax.dual, z, az.dual, gf);
  const RelationalMorphism df = dual_of_bset_morphism(x, ax.dual, y, ay.dual, f);
  const RelationalMorphism dg = dual_of_bset_morphism(y, ay.dual, z, az.dual, g);
  r.add("dual(g o f) = dual(f) o dual(g)", lhs == compose(df, dg));

  auto natural = [&](const AlphaIso& from, const AlphaIso& to, const BSetMorphism& m, const RelationalMorphism& dm) {
    const BSetMorphism ddm = dual_of_relational(to.dual.space, to.double_dual, from.dual.space, from.double_dual, dm);
    return compose(ddm, from.forward) == compose(to.forward, m);
  };
  r.add("alpha is natural for f", natural(ax, ay, f, df));
  r.add("alpha is natural for g", natural(ay, az, g, dg));
  return r;
}

Report functor_laws_etale(const FinEtaleSpace& s, const FinEtaleSpace& t, const FinEtaleSpace& u,
                          const RelationalMorphism& f, const RelationalMorphism& g) {
  Report r;
  const BetaIso bs = beta(s), bt = beta(t), bu = beta(u);
  r.add("dual(id) = id", dual_of_relational(s, bs.dual, s, bs.dual, identity_relational(s)) ==
                             identity_morphism(bs.dual.bset));

  const RelationalMorphism raw = compose(g, f);
  const RelationalMorphism gf = validate_relational_morphism(s, u, raw.phi, raw.base_map);
  r.add("composite of coverings is a covering", gf.covering());
  const BSetMorphism df = dual_of_relational(s, bs.dual, t, bt.dual, f);
  const BSetMorphism dg = dual_of_relational(t, bt.dual, u, bu.dual, g);
  r.add("dual(g o f) = dual(f) o dual(g)", dual_of_relational(s, bs.dual, u, bu.dual, gf) == compose(df, dg));

  auto natural = [&](const FinEtaleSpace& from, const BetaIso& bf, const FinEtaleSpace& to, const BetaIso& bt2,
                     const RelationalMorphism& m, const BSetMorphism& dm) {
    const RelationalMorphism ddm = dual_of_bset_morphism(bt2.dual.bset, bt2.double_dual, bf.dual.bset, bf.double_dual, dm);
    return compose(ddm, beta_relational(from, bf)) == compose(beta_relational(to, bt2), m);
  };
  r.add("beta is natural for f", natural(s, bs, t, bt, f, df));
  r.add("beta is natural for g", natural(t, bt, u, bu, g, dg));
  return r;
}

}  // namespace skewdual
