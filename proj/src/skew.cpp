#include "skewdual/skew.hpp"

#include <cassert>
#include <set>

namespace skewdual {

namespace {

SquareTable parse_table(const std::vector<std::vector<std::string>>& rows,
                        const std::unordered_map<std::string, Elem>& index, std::size_t n, const char* which) {
  if (rows.size() != n) fail("MalformedTable", {which}, "wrong number of rows");
  SquareTable t(n);
  for (Elem i = 0; i < n; ++i) {
    if (rows[i].size() != n) fail("MalformedTable", {which}, "wrong number of columns");
    for (Elem j = 0; j < n; ++j) {
      auto it = index.find(rows[i][j]);
      if (it == index.end()) fail("UnknownElement", {rows[i][j]});
      t(i, j) = it->second;
    }
  }
  return t;
}

void check_band(const SquareTable& t, const std::vector<std::string>& names, const std::string& law) {
  const auto n = static_cast<Elem>(names.size());
  for (Elem x = 0; x < n; ++x)
    if (t(x, x) != x) fail(law, {names[x]}, "x.x != x");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (t(t(x, y), z) != t(x, t(y, z))) fail(law, {names[x], names[y], names[z]}, "(x.y).z != x.(y.z)");
}

}  // namespace

std::optional<Elem> SkewAlgebra::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem SkewAlgebra::index_of(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) fail("UnknownElement", {name});
  return it->second;
}

SkewAlgebra SkewAlgebra::validate(const SkewInput& input) {
  std::unordered_map<std::string, Elem> index;
  const std::size_t n = input.elements.size();
  if (n == 0) fail("EmptyCarrier", {});
  for (Elem i = 0; i < n; ++i)
    if (!index.emplace(input.elements[i], i).second) fail("DuplicateElement", {input.elements[i]});
  auto zero = index.find(input.zero);
  if (zero == index.end()) fail("UnknownElement", {input.zero});
  return from_tables(input.elements, parse_table(input.circ, index, n, "circ"),
                     parse_table(input.bullet, index, n, "bullet"), zero->second);
}

SkewAlgebra SkewAlgebra::from_tables(std::vector<std::string> names, SquareTable circ, SquareTable bullet, Elem zero) {
  const auto n = static_cast<Elem>(names.size());
  const auto& c = circ;
  const auto& b = bullet;
  auto w = [&](std::initializer_list<Elem> xs) {
    std::vector<std::string> out;
    for (Elem x : xs) out.push_back(names[x]);
    return out;
  };

  check_band(c, names, "NotABand(circ)");
  check_band(b, names, "NotABand(bullet)");

  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (c(x, b(x, y)) != x) fail("SB1", w({x, y}), "x o (x * y) != x");
      if (c(b(y, x), x) != x) fail("SB1", w({x, y}), "(y * x) o x != x");
      if (b(x, c(x, y)) != x) fail("SB1", w({x, y}), "x * (x o y) != x");
      if (b(c(y, x), x) != x) fail("SB1", w({x, y}), "(y o x) * x != x");
    }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (c(c(x, y), x) != c(y, x)) fail("SB2", w({x, y}), "x o y o x != y o x");
      if (b(b(x, y), x) != b(x, y)) fail("SB2", w({x, y}), "x * y * x != x * y");
    }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if ((b(x, y) == b(y, x)) != (c(x, y) == c(y, x)))
        fail("SB3", w({x, y}), "x * y = y * x does not match x o y = y o x");
  for (Elem x = 0; x < n; ++x)
    if (c(zero, x) != zero || c(x, zero) != zero) fail("SB4", w({x}), "0 o x = 0 = x o 0 fails");

  SkewAlgebra s;
  s.down_.reserve(n);
  for (Elem x = 0; x < n; ++x) {
    IndexSet in_down(n);
    for (Elem t = 0; t < n; ++t) in_down.set(c(c(x, t), x));
    DownSet d{members_of(in_down), std::vector<Elem>(n, kNone), {}};
    BalgInput bi;
    for (Elem u : d.members) bi.elements.push_back(names[u]);
    for (Elem u : d.members)
      for (Elem v : d.members)
        if (c(u, v) == u) bi.leq.emplace_back(names[u], names[v]);
    bi.bottom = names[zero];
    if (!in_down.test(zero)) fail("SB5", w({x}), "x-down does not contain 0");
    try {
      d.algebra = BooleanAlgebra::validate(bi);
    } catch (const ValidationError& e) {
      fail("SB5", w({x}), "x-down is not a Boolean algebra: " + e.violation().message());
    }
    for (Elem i = 0; i < d.members.size(); ++i) d.local[d.members[i]] = i;
    if (d.algebra.top() != d.local[x]) fail("SB5", w({x}), "x-down is not unital with top x");
    for (Elem u : d.members)
      for (Elem v : d.members) {
        if (d.local[c(u, v)] != d.algebra.meet(d.local[u], d.local[v]))
          fail("SB5", w({x, u, v}), "o is not the meet on x-down");
        if (d.local[b(u, v)] != d.algebra.join(d.local[u], d.local[v]))
          fail("SB5", w({x, u, v}), "* is not the join on x-down");
      }
    s.down_.push_back(std::move(d));
  }

  for (Elem i = 0; i < n; ++i)
    if (!s.index_.emplace(names[i], i).second) fail("DuplicateElement", {names[i]});
  s.names_ = std::move(names);
  s.circ_ = std::move(circ);
  s.bullet_ = std::move(bullet);
  s.zero_ = zero;
  return s;
}

SkewInput SkewAlgebra::to_input() const {
  SkewInput in;
  in.elements = names_;
  in.zero = names_[zero_];
  const auto n = static_cast<Elem>(size());
  in.circ.assign(n, {});
  in.bullet.assign(n, {});
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      in.circ[i].push_back(names_[circ(i, j)]);
      in.bullet[i].push_back(names_[bullet(i, j)]);
    }
  return in;
}

bool natural_leq(const SkewAlgebra& s, Elem x, Elem y) {
  const bool by_circ = s.circ(x, y) == x;
  assert(by_circ == (s.bullet(x, y) == y));
  return by_circ;
}

Elem skew_rel_complement(const SkewAlgebra& s, Elem x, Elem y) {
  const DownSet& d = s.down(x);
  const Elem inner = d.local[s.circ(y, x)];
  ensure(inner != kNone, "y o x lies outside x-down");
  return d.members[d.algebra.rel_complement(d.local[x], inner)];
}

std::optional<Elem> meet(const SkewAlgebra& s, Elem x, Elem y) {
  const auto n = static_cast<Elem>(s.size());
  std::vector<Elem> lower;
  for (Elem z = 0; z < n; ++z)
    if (natural_leq(s, z, x) && natural_leq(s, z, y)) lower.push_back(z);
  for (Elem g : lower) {
    bool greatest = true;
    for (Elem z : lower) greatest = greatest && natural_leq(s, z, g);
    if (greatest) return g;
  }
  return std::nullopt;
}

std::optional<Elem> join(const SkewAlgebra& s, Elem x, Elem y) {
  const auto n = static_cast<Elem>(s.size());
  std::vector<Elem> upper;
  for (Elem z = 0; z < n; ++z)
    if (natural_leq(s, x, z) && natural_leq(s, y, z)) upper.push_back(z);
  for (Elem l : upper) {
    bool least = true;
    for (Elem z : upper) least = least && natural_leq(s, l, z);
    if (least) return l;
  }
  return std::nullopt;
}

bool is_wedge_algebra(const SkewAlgebra& s) {
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem y = x + 1; y < s.size(); ++y)
      if (!meet(s, x, y)) return false;
  return true;
}

GammaQuotient gamma_classes(const SkewAlgebra& s) {
  const auto n = static_cast<Elem>(s.size());
  auto related = [&](Elem x, Elem y) { return s.circ(x, y) == y && s.circ(y, x) == x; };

  GammaQuotient q;
  q.class_of.assign(n, kNone);
  for (Elem x = 0; x < n; ++x) {
    if (q.class_of[x] != kNone) continue;
    const auto k = static_cast<Elem>(q.classes.size());
    q.classes.push_back({});
    for (Elem y = x; y < n; ++y)
      if (q.class_of[y] == kNone && related(x, y)) {
        q.class_of[y] = k;
        q.classes.back().push_back(y);
      }
  }
  // R must be transitive on each class, otherwise the partition is wrong.
  for (const auto& cls : q.classes)
    for (Elem a : cls)
      for (Elem b : cls)
        if (!related(a, b)) fail("NotACongruence", {s.name(a), s.name(b)}, "R is not transitive");

  const auto m = static_cast<Elem>(q.classes.size());
  SquareTable qc(m), qb(m);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const Elem i = q.class_of[x], j = q.class_of[y];
      const Elem rc = q.class_of[s.circ(x, y)], rb = q.class_of[s.bullet(x, y)];
      if (qc(i, j) == kNone) qc(i, j) = rc;
      if (qb(i, j) == kNone) qb(i, j) = rb;
      if (qc(i, j) != rc || qb(i, j) != rb)
        fail("NotACongruence", {s.name(x), s.name(y)}, "class of the product depends on representatives");
    }

  BalgInput bi;
  for (const auto& cls : q.classes) bi.elements.push_back("[" + s.name(cls.front()) + "]");
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      if (qc(i, j) == i) bi.leq.emplace_back(bi.elements[i], bi.elements[j]);
  bi.bottom = bi.elements[q.class_of[s.zero()]];
  try {
    q.algebra = BooleanAlgebra::validate(bi);
  } catch (const ValidationError& e) {
    fail("QuotientNotBoolean", e.witness(), e.violation().message());
  }
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      if (qc(i, j) != q.algebra.meet(i, j) || qb(i, j) != q.algebra.join(i, j))
        fail("QuotientNotBoolean", {bi.elements[i], bi.elements[j]}, "induced operations are not meet and join");
  return q;
}

Report check_consequences(const SkewAlgebra& s) {
  Report r;
  const auto n = static_cast<Elem>(s.size());
  auto names = [&](std::initializer_list<Elem> xs) {
    std::vector<std::string> out;
    for (Elem x : xs) out.push_back(s.name(x));
    return out;
  };
  auto first_pair = [&](auto&& pred) -> std::vector<std::string> {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (!pred(x, y)) return names({x, y});
    return {};
  };
  auto first_triple = [&](auto&& pred) -> std::vector<std::string> {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z)
          if (!pred(x, y, z)) return names({x, y, z});
    return {};
  };
  auto c = [&](Elem x, Elem y) { return s.circ(x, y); };
  auto b = [&](Elem x, Elem y) { return s.bullet(x, y); };

  auto w = first_triple([&](Elem x, Elem y, Elem z) { return c(c(x, y), z) == c(c(y, x), z); });
  r.add("(B,o) is right normal", w.empty(), w);

  w = first_pair([&](Elem x, Elem) { return b(s.zero(), x) == x && b(x, s.zero()) == x; });
  r.add("(B,*,0) is a monoid with identity 0", w.empty(), w);

  w = first_triple([&](Elem x, Elem y, Elem z) {
    return c(x, b(y, z)) == b(c(x, y), c(x, z)) && c(b(y, z), x) == b(c(y, x), c(z, x));
  });
  r.add("o distributes over *", w.empty(), w);

  // gamma as the D relation of each band, and R of (B,o)
  w = first_pair([&](Elem x, Elem y) {
    const bool d_circ = c(c(x, y), x) == x && c(c(y, x), y) == y;
    const bool d_bullet = b(b(x, y), x) == x && b(b(y, x), y) == y;
    const bool r_circ = c(x, y) == y && c(y, x) == x;
    return d_circ == d_bullet && d_circ == r_circ;
  });
  r.add("gamma agrees for o and * and equals R", w.empty(), w);

  try {
    const GammaQuotient q = gamma_classes(s);
    r.add("B/gamma is a Boolean algebra", true);
    std::vector<std::string> flat;
    for (const auto& cls : q.classes)
      for (Elem x : cls)
        for (Elem y : cls)
          if (flat.empty() && (c(x, y) != y || b(x, y) != x)) flat = names({x, y});
    r.add("gamma classes are right zero for o and left zero for *", flat.empty(), flat);
  } catch (const ValidationError& e) {
    r.add("B/gamma is a Boolean algebra", false, e.witness(), e.violation().message());
  }

  w = first_pair([&](Elem x, Elem y) { return (c(x, y) == x) == (b(x, y) == y); });
  r.add("x = x o y iff y = x * y", w.empty(), w);

  w = first_pair([&](Elem x, Elem) { return natural_leq(s, s.zero(), x); });
  r.add("0 is the minimum of the natural order", w.empty(), w);

  w = first_pair([&](Elem x, Elem y) { return (c(x, y) == c(y, x)) == (b(x, y) == b(y, x)); });
  r.add("x o y = y o x iff x * y = y * x", w.empty(), w);

  w = first_pair([&](Elem x, Elem y) {
    auto j = join(s, x, skew_rel_complement(s, y, x));
    return j && *j == b(x, y);
  });
  r.add("x * y = x \\/ (y \\ x)", w.empty(), w);
  return r;
}

SkewMorphism validate_skew_morphism(const SkewAlgebra& source, const SkewAlgebra& target, std::vector<Elem> map) {
  const auto n = static_cast<Elem>(source.size());
  if (map.size() != n) fail("NotAMorphism", {}, "map is not total");
  for (Elem x = 0; x < n; ++x)
    if (map[x] >= target.size()) fail("NotAMorphism", {source.name(x)}, "image outside target");
  if (map[source.zero()] != target.zero()) fail("NotAMorphism", {source.name(source.zero())}, "zero");
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (map[source.circ(x, y)] != target.circ(map[x], map[y]))
        fail("NotAMorphism", {source.name(x), source.name(y)}, "circ");
      if (map[source.bullet(x, y)] != target.bullet(map[x], map[y]))
        fail("NotAMorphism", {source.name(x), source.name(y)}, "bullet");
    }
  const GammaQuotient qs = gamma_classes(source);
  const GammaQuotient qt = gamma_classes(target);
  std::vector<Elem> qmap(qs.classes.size(), kNone);
  for (Elem x = 0; x < n; ++x) {
    const Elem img = qt.class_of[map[x]];
    Elem& slot = qmap[qs.class_of[x]];
    ensure(slot == kNone || slot == img, "morphism does not respect gamma");
    slot = img;
  }
  BAHom q = validate_ba_hom(qs.algebra, qt.algebra, std::move(qmap));
  return SkewMorphism{std::move(map), std::move(q)};
}

bool is_wedge_morphism(const SkewAlgebra& source, const SkewAlgebra& target, const SkewMorphism& m) {
  for (Elem x = 0; x < source.size(); ++x)
    for (Elem y = 0; y < source.size(); ++y) {
      auto lhs = meet(source, x, y);
      auto rhs = meet(target, m(x), m(y));
      if (!lhs || !rhs || m(*lhs) != *rhs) return false;
    }
  return true;
}

SkewMorphism compose(const SkewMorphism& second, const SkewMorphism& first) {
  SkewMorphism out;
  for (Elem e : first.map) out.map.push_back(second(e));
  out.quotient = compose(second.quotient, first.quotient);
  return out;
}

SkewAlgebra reorder(const SkewAlgebra& s, const std::vector<Elem>& order) {
  const auto n = static_cast<Elem>(s.size());
  ensure(order.size() == n, "reorder needs a permutation");
  std::vector<Elem> pos(n, kNone);
  for (Elem i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::string> names;
  for (Elem i = 0; i < n; ++i) names.push_back(s.name(order[i]));
  SquareTable c(n), b(n);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) {
      c(i, j) = pos[s.circ(order[i], order[j])];
      b(i, j) = pos[s.bullet(order[i], order[j])];
    }
  return SkewAlgebra::from_tables(std::move(names), std::move(c), std::move(b), pos[s.zero()]);
}

}  // namespace skewdual
