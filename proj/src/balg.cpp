#include "skewdual/balg.hpp"

#include <algorithm>

namespace skewdual {

namespace {

struct RawOrder {
  std::vector<std::string> names;
  std::unordered_map<std::string, Elem> index;
  std::vector<IndexSet> up;
  std::vector<IndexSet> down;
};

RawOrder build_order(const std::vector<std::string>& elements,
                     const std::vector<std::pair<std::string, std::string>>& leq) {
  RawOrder o;
  o.names = elements;
  const std::size_t n = elements.size();
  for (Elem i = 0; i < n; ++i)
    if (!o.index.emplace(elements[i], i).second) fail("DuplicateElement", {elements[i]});
  o.up.assign(n, IndexSet(n));
  for (Elem i = 0; i < n; ++i) o.up[i].set(i);
  auto lookup = [&](const std::string& id) {
    auto it = o.index.find(id);
    if (it == o.index.end()) fail("UnknownElement", {id});
    return it->second;
  };
  for (const auto& [lo, hi] : leq) o.up[lookup(lo)].set(lookup(hi));
  // Warshall: the rows are up-sets, row i absorbs row k whenever i <= k.
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (o.up[i].test(k)) o.up[i] |= o.up[k];
  o.down.assign(n, IndexSet(n));
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (o.up[i].test(j)) o.down[j].set(i);
  return o;
}

void check_antisymmetric(const RawOrder& o) {
  const std::size_t n = o.names.size();
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j)
      if (o.up[i].test(j) && o.up[j].test(i))
        fail("NotAPoset", {o.names[i], o.names[j]}, "x<=y and y<=x for distinct x, y");
}

// Greatest element of `bounds` w.r.t. the order whose down-sets are `down`.
Elem greatest(const IndexSet& bounds, const std::vector<IndexSet>& down) {
  Elem best = kNone;
  std::size_t best_count = 0;
  for (auto i = bounds.find_first(); i != IndexSet::npos; i = bounds.find_next(i)) {
    std::size_t c = down[i].count();
    if (best == kNone || c > best_count) {
      best = static_cast<Elem>(i);
      best_count = c;
    }
  }
  if (best == kNone || !bounds.is_subset_of(down[best])) return kNone;
  return best;
}

}  // namespace

std::optional<Elem> Semilattice::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem Semilattice::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail("UnknownElement", {name});
  return it->second;
}

bool Semilattice::covers(Elem e, Elem f) const {
  const auto& c = lower_covers_[e];
  return std::find(c.begin(), c.end(), f) != c.end();
}

void Semilattice::finish_covers() {
  const std::size_t n = names_.size();
  lower_covers_.assign(n, {});
  for (Elem e = 0; e < n; ++e) {
    IndexSet strictly_below = down_[e];
    strictly_below.reset(e);
    for (auto f = strictly_below.find_first(); f != IndexSet::npos; f = strictly_below.find_next(f)) {
      IndexSet between = up_[f] & strictly_below;
      if (between.count() == 1) lower_covers_[e].push_back(static_cast<Elem>(f));
    }
  }
}

Semilattice Semilattice::from_input(const std::vector<std::string>& elements,
                                    const std::vector<std::pair<std::string, std::string>>& leq) {
  if (elements.empty()) fail("EmptyCarrier", {});
  RawOrder o = build_order(elements, leq);
  check_antisymmetric(o);
  const std::size_t n = elements.size();
  Semilattice s;
  s.meet_ = SquareTable(n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i; j < n; ++j) {
      Elem m = greatest(o.down[i] & o.down[j], o.down);
      if (m == kNone) fail("NotASemilattice", {o.names[i], o.names[j]}, "no meet");
      s.meet_(i, j) = s.meet_(j, i) = m;
    }
  Elem bot = 0;
  for (Elem i = 1; i < n; ++i) bot = s.meet_(bot, i);
  s.bottom_ = bot;
  s.names_ = std::move(o.names);
  s.index_ = std::move(o.index);
  s.up_ = std::move(o.up);
  s.down_ = std::move(o.down);
  s.finish_covers();
  return s;
}

BooleanAlgebra BooleanAlgebra::validate(const BalgInput& input) {
  if (input.elements.empty()) fail("NoBottom", {input.bottom}, "empty carrier");
  RawOrder o = build_order(input.elements, input.leq);
  auto bottom_it = o.index.find(input.bottom);
  if (bottom_it == o.index.end()) fail("UnknownElement", {input.bottom});
  check_antisymmetric(o);

  const std::size_t n = input.elements.size();
  SquareTable meet(n), join(n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i; j < n; ++j) {
      Elem m = greatest(o.down[i] & o.down[j], o.down);
      if (m == kNone) fail("NotALattice", {o.names[i], o.names[j]}, "no meet");
      // least upper bound: greatest w.r.t. the reversed order
      Elem u = greatest(o.up[i] & o.up[j], o.up);
      if (u == kNone) fail("NotALattice", {o.names[i], o.names[j]}, "no join");
      meet(i, j) = meet(j, i) = m;
      join(i, j) = join(j, i) = u;
    }

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
          fail("NotDistributive", {o.names[x], o.names[y], o.names[z]}, "x/\\(y\\/z) != (x/\\y)\\/(x/\\z)");

  const Elem bot = bottom_it->second;
  for (Elem x = 0; x < n; ++x)
    if (!o.up[bot].test(x)) fail("NoBottom", {o.names[bot], o.names[x]}, "declared bottom is not below x");

  // comp(a, b) for a <= b: the complement of a in [0, b]
  SquareTable comp(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!o.up[a].test(b)) continue;
      for (Elem c = 0; c < n; ++c)
        if (join(c, a) == b && meet(c, a) == bot) {
          comp(a, b) = c;
          break;
        }
      if (comp(a, b) == kNone)
        fail("NoRelativeComplement", {o.names[a], o.names[b]}, "no c with c\\/a = b and c/\\a = 0");
    }

  BooleanAlgebra ba;
  ba.order_.names_ = std::move(o.names);
  ba.order_.index_ = std::move(o.index);
  ba.order_.up_ = std::move(o.up);
  ba.order_.down_ = std::move(o.down);
  ba.order_.meet_ = meet;
  ba.order_.bottom_ = bot;
  ba.order_.finish_covers();
  ba.join_ = std::move(join);
  ba.relcomp_ = SquareTable(n);
  for (Elem e = 0; e < n; ++e)
    for (Elem f = 0; f < n; ++f) ba.relcomp_(e, f) = comp(meet(e, f), e);
  for (Elem e = 0; e < n; ++e) {
    const auto& lc = ba.order_.lower_covers(e);
    if (e != bot && lc.size() == 1 && lc[0] == bot) ba.atoms_.push_back(e);
    if (ba.order_.down_set(e).count() == n) ba.top_ = e;
  }

  // Filters of a finite lattice are principal; the maximal proper ones are
  // kept in the order of their least element.
  std::vector<FilterSet> proper;
  for (Elem e = 0; e < n; ++e)
    if (e != bot) proper.push_back(FilterSet{ba.order_.up_set(e)});
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < proper.size() && maximal; ++j)
      if (i != j && proper[i].members.is_proper_subset_of(proper[j].members)) maximal = false;
    if (maximal) ba.ultrafilters_.push_back(proper[i]);
  }
  return ba;
}

BalgInput BooleanAlgebra::to_input() const {
  BalgInput in;
  in.elements = names();
  in.bottom = name(bottom());
  for (Elem e = 0; e < size(); ++e)
    for (Elem f : order_.lower_covers(e)) in.leq.emplace_back(name(f), name(e));
  return in;
}

BalgInput powerset_input(unsigned k, const std::function<std::string(unsigned mask)>& namer) {
  BalgInput in;
  const unsigned n = 1u << k;
  for (unsigned m = 0; m < n; ++m) in.elements.push_back(namer(m));
  for (unsigned m = 0; m < n; ++m)
    for (unsigned a = 0; a < k; ++a)
      if (!(m & (1u << a))) in.leq.emplace_back(namer(m), namer(m | (1u << a)));
  in.bottom = namer(0);
  return in;
}

std::string atom_mask_name(const std::vector<std::string>& atom_names, unsigned mask) {
  if (mask == 0) return "0";
  const unsigned full = (1u << atom_names.size()) - 1;
  if (mask == full) return "1";
  std::string out;
  for (unsigned a = 0; a < atom_names.size(); ++a)
    if (mask & (1u << a)) out += atom_names[a];
  return out;
}

FilterSet up_closure(const BooleanAlgebra& b, Elem e) { return FilterSet{b.order().up_set(e)}; }
FilterSet down_closure(const BooleanAlgebra& b, Elem e) { return FilterSet{b.order().down_set(e)}; }

bool is_filter(const BooleanAlgebra& b, const IndexSet& s) {
  if (s.none()) return false;
  const auto m = members_of(s);
  for (Elem a : m)
    if (!b.order().up_set(a).is_subset_of(s)) return false;
  for (Elem a : m)
    for (Elem c : m) {
      bool directed = false;
      for (Elem d : m)
        if (b.leq(d, a) && b.leq(d, c)) {
          directed = true;
          break;
        }
      if (!directed) return false;
    }
  return true;
}

bool is_ideal(const BooleanAlgebra& b, const IndexSet& s) {
  if (s.none()) return false;
  const auto m = members_of(s);
  for (Elem a : m)
    if (!b.order().down_set(a).is_subset_of(s)) return false;
  for (Elem a : m)
    for (Elem c : m)
      if (!s.test(b.join(a, c))) return false;
  return true;
}

bool is_proper(const BooleanAlgebra& b, const IndexSet& s) { return s.count() != b.size(); }

bool is_prime_filter(const BooleanAlgebra& b, const IndexSet& s) {
  if (!is_filter(b, s) || !is_proper(b, s)) return false;
  for (Elem x = 0; x < b.size(); ++x)
    for (Elem y = 0; y < b.size(); ++y)
      if (s.test(b.join(x, y)) && !s.test(x) && !s.test(y)) return false;
  return true;
}

bool is_prime_ideal(const BooleanAlgebra& b, const IndexSet& s) {
  if (!is_ideal(b, s) || !is_proper(b, s)) return false;
  for (Elem x = 0; x < b.size(); ++x)
    for (Elem y = 0; y < b.size(); ++y)
      if (s.test(b.meet(x, y)) && !s.test(x) && !s.test(y)) return false;
  return true;
}

std::vector<FilterSet> all_filters(const BooleanAlgebra& b) {
  std::vector<FilterSet> out;
  for (Elem e = 0; e < b.size(); ++e) out.push_back(up_closure(b, e));
  return out;
}

std::vector<FilterSet> all_ideals(const BooleanAlgebra& b) {
  std::vector<FilterSet> out;
  for (Elem e = 0; e < b.size(); ++e) out.push_back(down_closure(b, e));
  return out;
}

const std::vector<FilterSet>& ultrafilters(const BooleanAlgebra& b) { return b.ultrafilters(); }

FilterSet separating_ultrafilter(const BooleanAlgebra& b, Elem a, Elem c) {
  if (a == c) fail("NotDistinct", {b.name(a), b.name(c)});
  if (a == b.bottom() || c == b.bottom()) fail("ZeroArgument", {b.name(a), b.name(c)});
  for (const auto& u : b.ultrafilters())
    if (u.contains(a) != u.contains(c)) return u;
  throw InternalError("no separating ultrafilter for distinct non-zero elements");
}

FilterSet extend_filter_avoiding_ideal(const BooleanAlgebra& b, const FilterSet& filter, const FilterSet& ideal) {
  if (!is_filter(b, filter.members)) fail("NotAFilter", {});
  if (!is_ideal(b, ideal.members)) fail("NotAnIdeal", {});
  IndexSet common = filter.members & ideal.members;
  if (common.any()) fail("NotDisjoint", {b.name(static_cast<Elem>(common.find_first()))});
  for (const auto& u : b.ultrafilters())
    if (filter.members.is_subset_of(u.members) && !u.members.intersects(ideal.members)) return u;
  throw InternalError("no ultrafilter extends a filter disjoint from an ideal");
}

IndexSet stone_map(const std::vector<FilterSet>& ufs, Elem a) {
  IndexSet m(ufs.size());
  for (std::size_t i = 0; i < ufs.size(); ++i)
    if (ufs[i].contains(a)) m.set(i);
  return m;
}

BAHom validate_ba_hom(const BooleanAlgebra& source, const BooleanAlgebra& target, std::vector<Elem> map) {
  if (map.size() != source.size()) fail("NotAHomomorphism", {}, "map is not total on the source");
  for (Elem e = 0; e < map.size(); ++e)
    if (map[e] >= target.size()) fail("NotAHomomorphism", {source.name(e)}, "image outside target");
  if (map[source.bottom()] != target.bottom())
    fail("NotAHomomorphism", {source.name(source.bottom())}, "bottom not preserved");
  for (Elem x = 0; x < source.size(); ++x)
    for (Elem y = 0; y < source.size(); ++y) {
      if (map[source.meet(x, y)] != target.meet(map[x], map[y]))
        fail("NotAHomomorphism", {source.name(x), source.name(y)}, "meet not preserved");
      if (map[source.join(x, y)] != target.join(map[x], map[y]))
        fail("NotAHomomorphism", {source.name(x), source.name(y)}, "join not preserved");
    }
  return BAHom{std::move(map)};
}

bool is_proper_hom(const BooleanAlgebra& source, const BooleanAlgebra& target, const BAHom& h) {
  for (Elem t = 0; t < target.size(); ++t) {
    bool below = false;
    for (Elem a = 0; a < source.size() && !below; ++a) below = target.leq(t, h(a));
    if (!below) return false;
  }
  return true;
}

BAHom identity_hom(const BooleanAlgebra& b) {
  BAHom h;
  for (Elem e = 0; e < b.size(); ++e) h.map.push_back(e);
  return h;
}

BAHom compose(const BAHom& second, const BAHom& first) {
  BAHom h;
  for (Elem e : first.map) h.map.push_back(second(e));
  return h;
}

IndexSet preimage(const BAHom& h, std::size_t source_size, const IndexSet& f) {
  IndexSet out(source_size);
  for (Elem a = 0; a < source_size; ++a)
    if (f.test(h(a))) out.set(a);
  return out;
}

Report stone_report(const BooleanAlgebra& b) {
  Report r;
  const auto& ufs = b.ultrafilters();
  const auto filters = all_filters(b);
  const auto ideals = all_ideals(b);
  const std::size_t n = b.size();

  {
    std::vector<std::string> w;
    for (Elem a = 0; a < n && w.empty(); ++a)
      if (a != b.bottom() && stone_map(ufs, a).none()) w = {b.name(a)};
    r.add("nonzero element lies in an ultrafilter", w.empty(), w);
  }
  {
    std::vector<FilterSet> prime;
    for (const auto& f : filters)
      if (is_prime_filter(b, f.members)) prime.push_back(f);
    bool same = prime.size() == ufs.size();
    for (const auto& u : ufs) same = same && std::find(prime.begin(), prime.end(), u) != prime.end();
    r.add("ultrafilters are the prime filters", same);
  }
  std::vector<FilterSet> prime_ideals;
  for (const auto& i : ideals)
    if (is_prime_ideal(b, i.members)) prime_ideals.push_back(i);
  {
    std::vector<FilterSet> maximal;
    for (const auto& i : ideals) {
      if (!is_proper(b, i.members)) continue;
      bool is_max = true;
      for (const auto& j : ideals)
        if (is_proper(b, j.members) && i.members.is_proper_subset_of(j.members)) is_max = false;
      if (is_max) maximal.push_back(i);
    }
    bool same = maximal.size() == prime_ideals.size();
    for (const auto& m : maximal)
      same = same && std::find(prime_ideals.begin(), prime_ideals.end(), m) != prime_ideals.end();
    r.add("maximal proper ideals are the prime ideals", same);
  }
  {
    bool ok = true;
    for (const auto& i : prime_ideals) ok = ok && is_prime_filter(b, ~i.members);
    r.add("complement of a prime ideal is a prime filter", ok);
  }
  {
    std::vector<std::string> w;
    for (Elem fi = 0; fi < n && w.empty(); ++fi)
      for (Elem ii = 0; ii < n && w.empty(); ++ii) {
        const auto& f = filters[fi];
        const auto& i = ideals[ii];
        if (f.members.intersects(i.members)) continue;
        // a maximal ideal above i avoiding f, which must be prime
        std::optional<FilterSet> best;
        for (const auto& j : ideals) {
          if (!i.members.is_subset_of(j.members) || j.members.intersects(f.members)) continue;
          bool is_max = true;
          for (const auto& k : ideals)
            if (j.members.is_proper_subset_of(k.members) && !k.members.intersects(f.members)) is_max = false;
          if (is_max) {
            best = j;
            break;
          }
        }
        bool ok = best && is_prime_ideal(b, best->members);
        bool uf = false;
        for (const auto& u : ufs) uf = uf || (f.members.is_subset_of(u.members) && !u.members.intersects(i.members));
        if (!ok || !uf) w = {b.name(fi), b.name(ii)};
      }
    r.add("filter avoiding an ideal extends to an ultrafilter", w.empty(), w, "witness: generators of filter, ideal");
  }
  {
    std::vector<std::string> w;
    for (Elem x = 0; x < n && w.empty(); ++x)
      for (Elem y = 0; y < n && w.empty(); ++y) {
        if (x == y || x == b.bottom() || y == b.bottom()) continue;
        bool sep = false;
        for (const auto& u : ufs) sep = sep || (u.contains(x) != u.contains(y));
        if (!sep) w = {b.name(x), b.name(y)};
      }
    r.add("distinct non-zero elements are separated", w.empty(), w);
  }

  // a -> M(a) is an isomorphism onto the powerset of the ultrafilters
  std::vector<IndexSet> m;
  for (Elem a = 0; a < n; ++a) m.push_back(stone_map(ufs, a));
  {
    std::vector<std::string> w;
    for (Elem x = 0; x < n && w.empty(); ++x)
      for (Elem y = 0; y < n && w.empty(); ++y) {
        bool ok = (m[b.meet(x, y)] == (m[x] & m[y])) && (m[b.join(x, y)] == (m[x] | m[y])) &&
                  (m[x].is_subset_of(m[y]) == b.leq(x, y)) && ((x == y) == (m[x] == m[y]));
        if (!ok) w = {b.name(x), b.name(y)};
      }
    r.add("M preserves meet, join and order and is injective", w.empty(), w);
  }
  r.add("M(0) is empty", m[b.bottom()].none());
  r.add("M is onto the powerset of ultrafilters", ufs.size() < 32 && (std::size_t{1} << ufs.size()) == n);
  r.add("ultrafilter count equals atom count", ufs.size() == b.atoms().size());
  {
    bool ok = true;
    for (const auto& u : ufs) {
      bool principal = false;
      for (Elem a : b.atoms()) principal = principal || u.members == b.order().up_set(a);
      ok = ok && principal;
    }
    r.add("each ultrafilter is the up-set of an atom", ok);
  }
  return r;
}

}  // namespace skewdual
