#include "skewdual/etale.hpp"

namespace skewdual {

FinEtaleSpace FinEtaleSpace::validate(const EtaleInput& input) {
  std::unordered_map<std::string, Elem> ti, bi;
  for (Elem i = 0; i < input.total.size(); ++i)
    if (!ti.emplace(input.total[i], i).second) fail("DuplicateElement", {input.total[i]});
  for (Elem i = 0; i < input.base.size(); ++i)
    if (!bi.emplace(input.base[i], i).second) fail("DuplicateElement", {input.base[i]});
  std::vector<Elem> proj(input.total.size(), kNone);
  for (const auto& [e, u] : input.proj) {
    auto it = ti.find(e);
    if (it == ti.end()) fail("UnknownElement", {e});
    auto jt = bi.find(u);
    if (jt == bi.end()) fail("UnknownElement", {u});
    if (proj[it->second] != kNone && proj[it->second] != jt->second)
      fail("AmbiguousProjection", {e, input.base[proj[it->second]], u});
    proj[it->second] = jt->second;
  }
  for (Elem i = 0; i < proj.size(); ++i)
    if (proj[i] == kNone) fail("MissingProjection", {input.total[i]});
  return from_map(input.total, input.base, std::move(proj));
}

FinEtaleSpace FinEtaleSpace::from_map(std::vector<std::string> total, std::vector<std::string> base,
                                      std::vector<Elem> proj) {
  ensure(proj.size() == total.size(), "projection is not total");
  FinEtaleSpace sp;
  sp.fibers_.assign(base.size(), {});
  for (Elem e = 0; e < proj.size(); ++e) {
    ensure(proj[e] < base.size(), "projection outside the base");
    sp.fibers_[proj[e]].push_back(e);
  }
  for (Elem u = 0; u < base.size(); ++u)
    if (sp.fibers_[u].empty()) fail("NotSurjective", {base[u]});
  for (Elem i = 0; i < total.size(); ++i)
    if (!sp.total_index_.emplace(total[i], i).second) fail("DuplicateElement", {total[i]});
  for (Elem i = 0; i < base.size(); ++i)
    if (!sp.base_index_.emplace(base[i], i).second) fail("DuplicateElement", {base[i]});
  sp.total_ = std::move(total);
  sp.base_ = std::move(base);
  sp.proj_ = std::move(proj);
  return sp;
}

Elem FinEtaleSpace::index_of(const std::string& id) const {
  auto it = total_index_.find(id);
  if (it == total_index_.end()) fail("UnknownElement", {id});
  return it->second;
}

Elem FinEtaleSpace::base_index_of(const std::string& id) const {
  auto it = base_index_.find(id);
  if (it == base_index_.end()) fail("UnknownElement", {id});
  return it->second;
}

EtaleInput FinEtaleSpace::to_input() const {
  EtaleInput in{total_, base_, {}};
  for (Elem e = 0; e < size(); ++e) in.proj.emplace_back(total_[e], base_[proj_[e]]);
  return in;
}

bool is_section(const FinEtaleSpace& sp, const IndexSet& s) {
  IndexSet seen(sp.base_size());
  for (Elem e : members_of(s)) {
    if (seen.test(sp.proj(e))) return false;
    seen.set(sp.proj(e));
  }
  return true;
}

IndexSet support(const FinEtaleSpace& sp, const IndexSet& s) {
  IndexSet out(sp.base_size());
  for (Elem e : members_of(s)) out.set(sp.proj(e));
  return out;
}

std::vector<IndexSet> sections_over(const FinEtaleSpace& sp, const IndexSet& a) {
  const std::vector<Elem> points = members_of(a);
  std::vector<std::size_t> pick(points.size(), 0);
  std::vector<IndexSet> out;
  while (true) {
    IndexSet s(sp.size());
    for (std::size_t i = 0; i < points.size(); ++i) s.set(sp.fiber(points[i])[pick[i]]);
    out.push_back(std::move(s));
    std::size_t pos = points.size();
    while (pos > 0 && ++pick[pos - 1] == sp.fiber(points[pos - 1]).size()) pick[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

IndexSet construct_section(const FinEtaleSpace& sp, const IndexSet& a) {
  IndexSet s(sp.size());
  for (Elem u : members_of(a)) s.set(sp.fiber(u).front());
  return s;
}

IndexSet restrict_section(const FinEtaleSpace& sp, const IndexSet& c, const IndexSet& b) {
  if (!b.is_subset_of(support(sp, c))) fail("NotNested", {section_name(sp, c), subset_name(sp, b)});
  IndexSet out(sp.size());
  for (Elem e : members_of(c))
    if (b.test(sp.proj(e))) out.set(e);
  return out;
}

IndexSet join_sections(const FinEtaleSpace& sp, const IndexSet& a, const IndexSet& b) {
  const IndexSet pa = support(sp, a), pb = support(sp, b);
  const IndexSet overlap = pa & pb;
  if (restrict_section(sp, a, overlap) != restrict_section(sp, b, overlap))
    fail("NotCompatible", {section_name(sp, a), section_name(sp, b)}, "sections disagree over their overlap");
  return a | restrict_section(sp, b, pb - pa);
}

std::string section_name(const FinEtaleSpace& sp, const IndexSet& s) {
  if (s.none()) return "~";
  std::vector<std::string> parts;
  for (Elem e : members_of(s)) parts.push_back(sp.name(e));
  return join_names(parts, "+");
}

std::string subset_name(const FinEtaleSpace& sp, const IndexSet& a) {
  if (a.none()) return "~";
  std::vector<std::string> parts;
  for (Elem u : members_of(a)) parts.push_back(sp.base_name(u));
  return join_names(parts, "+");
}

Elem DualBSet::element_of(const IndexSet& section) const {
  auto it = lookup.find(section);
  ensure(it != lookup.end(), "not a section of the space");
  return it->second;
}

Elem DualBSet::base_element_of(const IndexSet& subset) const {
  ensure(subset.size() <= 16, "subset of more than 16 points");
  return static_cast<Elem>(subset.to_ulong());
}

DualBSet dual_bset(const FinEtaleSpace& sp) {
  const auto k = static_cast<unsigned>(sp.base_size());
  ensure(k <= 16, "dual of an etale space is limited to 16 base points");
  DualBSet d;
  auto subset = [&](unsigned mask) {
    IndexSet a(k);
    for (unsigned i = 0; i < k; ++i)
      if (mask & (1U << i)) a.set(i);
    return a;
  };
  BooleanAlgebra base = BooleanAlgebra::validate(powerset_input(k, [&](unsigned m) { return subset_name(sp, subset(m)); }));

  PresheafInput in;
  for (unsigned mask = 0; mask < (1U << k); ++mask) {
    d.base_subset.push_back(subset(mask));
    std::vector<std::string> ids;
    for (IndexSet& s : sections_over(sp, d.base_subset.back())) {
      ids.push_back(section_name(sp, s));
      d.lookup.emplace(s, static_cast<Elem>(d.sections.size()));
      d.sections.push_back(std::move(s));
    }
    in.stalks.emplace_back(base.name(mask), std::move(ids));
  }
  for (unsigned mask = 0; mask < (1U << k); ++mask)
    for (Elem f : base.order().lower_covers(mask)) {
      RestrictionInput r{base.name(mask), base.name(f), {}};
      for (const auto& [s, x] : d.lookup)
        if (support(sp, s) == d.base_subset[mask])
          r.pairs.emplace_back(section_name(sp, s), section_name(sp, restrict_section(sp, s, d.base_subset[f])));
      in.restrictions.push_back(std::move(r));
    }
  try {
    d.bset = BooleanSet::validate(std::move(base), in);
  } catch (const ValidationError& e) {
    throw InternalError("sections do not form a Boolean set: " + e.violation().message());
  }
  for (Elem x = 0; x < d.sections.size(); ++x)
    for (Elem y = 0; y < d.sections.size(); ++y)
      if (d.bset.compatible(x, y))
        ensure(d.sections[*d.bset.join(x, y)] == join_sections(sp, d.sections[x], d.sections[y]),
               "join of sections differs from the least upper bound");
  return d;
}

RelationalMorphism validate_relational_morphism(const FinEtaleSpace& source, const FinEtaleSpace& target,
                                                std::vector<IndexSet> phi, std::vector<Elem> base_map) {
  if (phi.size() != source.size()) fail("NotAMorphism", {}, "phi is not total");
  if (base_map.size() != source.base_size()) fail("NotAMorphism", {}, "base map is not total");
  for (Elem u = 0; u < base_map.size(); ++u)
    if (base_map[u] >= target.base_size()) fail("NotAMorphism", {source.base_name(u)}, "base image outside target");
  for (Elem x = 0; x < phi.size(); ++x) {
    if (phi[x].size() != target.size()) fail("NotAMorphism", {source.name(x)}, "image is not a subset of the target");
    for (Elem y : members_of(phi[x]))
      if (target.proj(y) != base_map[source.proj(x)])
        fail("FiberViolation", {source.name(x), target.name(y)},
             "phi(x) must lie over " + target.base_name(base_map[source.proj(x)]));
  }
  RelationalMorphism m{std::move(phi), std::move(base_map)};
  m.locally_injective = true;
  for (Elem x = 0; x < source.size(); ++x)
    for (Elem y = x + 1; y < source.size(); ++y)
      if (source.proj(x) == source.proj(y) && m.phi[x].intersects(m.phi[y])) m.locally_injective = false;
  m.locally_surjective = true;
  for (Elem e = 0; e < source.base_size(); ++e)
    for (Elem y : target.fiber(m.base_map[e])) {
      bool hit = false;
      for (Elem x : source.fiber(e)) hit = hit || m.phi[x].test(y);
      if (!hit) m.locally_surjective = false;
    }
  m.partial_map = true;
  for (const auto& img : m.phi) m.partial_map = m.partial_map && img.count() <= 1;
  return m;
}

RelationalMorphism identity_relational(const FinEtaleSpace& sp) {
  std::vector<IndexSet> phi;
  for (Elem x = 0; x < sp.size(); ++x) phi.push_back(make_set(sp.size(), {x}));
  std::vector<Elem> base;
  for (Elem u = 0; u < sp.base_size(); ++u) base.push_back(u);
  return validate_relational_morphism(sp, sp, std::move(phi), std::move(base));
}

RelationalMorphism compose(const RelationalMorphism& second, const RelationalMorphism& first) {
  RelationalMorphism m;
  const std::size_t target_size = second.phi.empty() ? 0 : second.phi.front().size();
  for (const IndexSet& img : first.phi) {
    IndexSet out(target_size);
    for (Elem y : members_of(img)) out |= second.phi[y];
    m.phi.push_back(std::move(out));
  }
  for (Elem u : first.base_map) m.base_map.push_back(second.base_map[u]);
  m.locally_injective = first.locally_injective && second.locally_injective;
  m.locally_surjective = first.locally_surjective && second.locally_surjective;
  m.partial_map = first.partial_map && second.partial_map;
  return m;
}

}  // namespace skewdual
