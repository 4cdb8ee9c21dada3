#include "skewdual/replay.hpp"

#include "skewdual/text_format.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace skewdual {

namespace {

using Idx = std::size_t;
constexpr Idx kNo = static_cast<Idx>(-1);

struct Names {
  std::vector<std::string> v;
  std::unordered_map<std::string, Idx> pos;
  std::string duplicate;

  explicit Names(const std::vector<std::string>& names) : v(names) {
    for (Idx i = 0; i < v.size(); ++i)
      if (!pos.emplace(v[i], i).second && duplicate.empty()) duplicate = v[i];
  }
  Idx at(const std::string& s) const {
    auto it = pos.find(s);
    return it == pos.end() ? kNo : it->second;
  }
  std::size_t size() const { return v.size(); }
};

ReplayResult verdict(bool violated, std::string why) { return ReplayResult{true, violated, std::move(why)}; }
ReplayResult unrecognized(const Violation& v) {
  return ReplayResult{false, false, "no replay rule for " + v.law + " with " + std::to_string(v.witness.size()) +
                                        " witness ids"};
}

/// Reflexive-transitive closure of a list of pairs over named points.
struct RawOrder {
  std::size_t n = 0;
  std::vector<std::vector<char>> le;

  RawOrder(const Names& names, const NamePairs& pairs) : n(names.size()), le(n, std::vector<char>(n, 0)) {
    for (Idx i = 0; i < n; ++i) le[i][i] = 1;
    for (const auto& [a, b] : pairs) {
      const Idx x = names.at(a), y = names.at(b);
      if (x != kNo && y != kNo) le[x][y] = 1;
    }
    for (Idx k = 0; k < n; ++k)
      for (Idx i = 0; i < n; ++i)
        if (le[i][k])
          for (Idx j = 0; j < n; ++j)
            if (le[k][j]) le[i][j] = 1;
  }
  bool leq(Idx a, Idx b) const { return le[a][b] != 0; }
  bool lt(Idx a, Idx b) const { return a != b && leq(a, b); }
  Idx glb(Idx a, Idx b) const {
    for (Idx m = 0; m < n; ++m) {
      if (!leq(m, a) || !leq(m, b)) continue;
      bool greatest = true;
      for (Idx l = 0; l < n && greatest; ++l)
        if (leq(l, a) && leq(l, b) && !leq(l, m)) greatest = false;
      if (greatest) return m;
    }
    return kNo;
  }
  Idx lub(Idx a, Idx b) const {
    for (Idx m = 0; m < n; ++m) {
      if (!leq(a, m) || !leq(b, m)) continue;
      bool least = true;
      for (Idx u = 0; u < n && least; ++u)
        if (leq(a, u) && leq(b, u) && !leq(m, u)) least = false;
      if (least) return m;
    }
    return kNo;
  }
  bool covers(Idx a, Idx b) const {
    if (!lt(b, a)) return false;
    for (Idx c = 0; c < n; ++c)
      if (lt(b, c) && lt(c, a)) return false;
    return true;
  }
};

// --- Boolean algebras ------------------------------------------------------

struct RawBalg {
  Names names;
  RawOrder order;
  Idx bottom;

  explicit RawBalg(const BalgInput& in)
      : names(in.elements), order(names, in.leq), bottom(names.at(effective_bottom(in))) {}
  const std::string& id(Idx i) const { return names.v[i]; }

  bool has_relative_complement(Idx a, Idx b) const {
    for (Idx c = 0; c < names.size(); ++c)
      if (order.lub(c, a) == b && order.glb(c, a) == bottom) return true;
    return false;
  }

  std::optional<std::string> defect(const BalgInput& in) const {
    const std::size_t n = names.size();
    if (n == 0) return "empty carrier";
    if (!names.duplicate.empty()) return "duplicate element " + names.duplicate;
    for (const auto& [a, b] : in.leq)
      for (const auto& s : {a, b})
        if (names.at(s) == kNo) return "unknown id " + s;
    if (bottom == kNo) return "unknown bottom " + in.bottom;
    for (Idx x = 0; x < n; ++x)
      for (Idx y = x + 1; y < n; ++y)
        if (order.leq(x, y) && order.leq(y, x)) return "cycle through " + id(x) + " and " + id(y);
    for (Idx x = 0; x < n; ++x)
      if (!order.leq(bottom, x)) return id(bottom) + " is not below " + id(x);
    for (Idx x = 0; x < n; ++x)
      for (Idx y = 0; y < n; ++y)
        if (order.glb(x, y) == kNo || order.lub(x, y) == kNo) return id(x) + ", " + id(y) + " lack a bound";
    for (Idx x = 0; x < n; ++x)
      for (Idx y = 0; y < n; ++y)
        for (Idx z = 0; z < n; ++z)
          if (order.glb(x, order.lub(y, z)) != order.lub(order.glb(x, y), order.glb(x, z)))
            return "distributivity fails at " + id(x) + ", " + id(y) + ", " + id(z);
    for (Idx a = 0; a < n; ++a)
      for (Idx b = 0; b < n; ++b)
        if (order.leq(a, b) && !has_relative_complement(a, b)) return id(a) + " has no complement in [0," + id(b) + "]";
    return std::nullopt;
  }
};

// --- tables ------------------------------------------------------------------

using Table = std::vector<std::vector<Idx>>;

std::optional<Table> raw_table(const Names& names, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = names.size();
  if (rows.size() != n) return std::nullopt;
  Table t(n, std::vector<Idx>(n, kNo));
  for (Idx i = 0; i < n; ++i) {
    if (rows[i].size() != n) return std::nullopt;
    for (Idx j = 0; j < n; ++j) {
      t[i][j] = names.at(rows[i][j]);
      if (t[i][j] == kNo) return std::nullopt;
    }
  }
  return t;
}

bool idempotent_at(const Table& t, Idx x) { return t[x][x] == x; }
bool associative_at(const Table& t, Idx x, Idx y, Idx z) { return t[t[x][y]][z] == t[x][t[y][z]]; }

struct RawSkew {
  Names names;
  std::optional<Table> c, b;
  Idx zero;

  explicit RawSkew(const SkewInput& in)
      : names(in.elements), c(raw_table(names, in.circ)), b(raw_table(names, in.bullet)), zero(names.at(in.zero)) {}

  bool ok() const { return c && b && zero != kNo && names.duplicate.empty() && names.size() > 0; }

  bool sb1(Idx x, Idx y) const {
    const auto& C = *c;
    const auto& B = *b;
    return C[x][B[x][y]] == x && C[B[y][x]][x] == x && B[x][C[x][y]] == x && B[C[y][x]][x] == x;
  }
  bool sb2(Idx x, Idx y) const {
    const auto& C = *c;
    const auto& B = *b;
    return C[C[x][y]][x] == C[y][x] && B[B[x][y]][x] == B[x][y];
  }
  bool sb3(Idx x, Idx y) const {
    const auto& C = *c;
    const auto& B = *b;
    return (B[x][y] == B[y][x]) == (C[x][y] == C[y][x]);
  }
  bool sb4(Idx x) const { return (*c)[zero][x] == zero && (*c)[x][zero] == zero; }

  /// Algebraic test: x-down is a Boolean algebra with meet o, join *,
  /// bottom 0 and top x.
  std::optional<std::string> sb5_defect(Idx x) const {
    const auto& C = *c;
    const auto& B = *b;
    std::set<Idx> d;
    for (Idx t = 0; t < names.size(); ++t) d.insert(C[C[x][t]][x]);
    auto nm = [&](Idx i) { return names.v[i]; };
    if (!d.count(zero)) return "0 is not in the down-set";
    for (Idx u : d) {
      if (C[zero][u] != zero) return "0 o " + nm(u) + " != 0";
      if (C[x][u] != u || C[u][x] != u) return nm(x) + " is not a unit for " + nm(u);
      bool complemented = false;
      for (Idx v : d) complemented = complemented || (C[u][v] == zero && B[u][v] == x);
      if (!complemented) return nm(u) + " has no complement";
      for (Idx v : d) {
        if (!d.count(C[u][v]) || !d.count(B[u][v])) return "not closed at " + nm(u) + ", " + nm(v);
        if (C[u][v] != C[v][u] || B[u][v] != B[v][u]) return "not commutative at " + nm(u) + ", " + nm(v);
        if (C[u][B[u][v]] != u || B[u][C[u][v]] != u) return "absorption fails at " + nm(u) + ", " + nm(v);
        for (Idx w : d) {
          if (C[C[u][v]][w] != C[u][C[v][w]] || B[B[u][v]][w] != B[u][B[v][w]])
            return "not associative at " + nm(u) + ", " + nm(v) + ", " + nm(w);
          if (C[u][B[v][w]] != B[C[u][v]][C[u][w]])
            return "not distributive at " + nm(u) + ", " + nm(v) + ", " + nm(w);
        }
      }
    }
    return std::nullopt;
  }
};

std::optional<ReplayResult> witness_ids(const Names& names, const std::vector<std::string>& w, std::size_t arity,
                                        std::vector<Idx>& out) {
  if (w.size() != arity) return ReplayResult{false, false, "expected " + std::to_string(arity) + " witness ids"};
  for (const auto& s : w) {
    const Idx i = names.at(s);
    if (i == kNo) return verdict(false, s + " is not an element");
    out.push_back(i);
  }
  return std::nullopt;
}

ReplayResult replay_band_law(const Table& t, const Names& names, const Violation& v) {
  std::vector<Idx> w;
  if (v.witness.size() == 1) {
    if (auto r = witness_ids(names, v.witness, 1, w)) return *r;
    return verdict(!idempotent_at(t, w[0]), "x.x = " + names.v[t[w[0]][w[0]]]);
  }
  if (auto r = witness_ids(names, v.witness, 3, w)) return *r;
  return verdict(!associative_at(t, w[0], w[1], w[2]), "(x.y).z = " + names.v[t[t[w[0]][w[1]]][w[2]]] +
                                                           ", x.(y.z) = " + names.v[t[w[0]][t[w[1]][w[2]]]]);
}

}  // namespace

ReplayResult replay_balg(const BalgInput& in, const Violation& v) {
  RawBalg r(in);
  const auto& w = v.witness;
  std::vector<Idx> x;
  auto get = [&](std::size_t arity) -> std::optional<ReplayResult> { return witness_ids(r.names, w, arity, x); };
  const auto& o = r.order;
  if (v.law == "EmptyCarrier") return verdict(in.elements.empty(), "element count");
  if (v.law == "DuplicateElement" && w.size() == 1)
    return verdict(std::count(in.elements.begin(), in.elements.end(), w[0]) > 1, "occurrences of " + w[0]);
  if (v.law == "UnknownElement" && w.size() == 1) return verdict(r.names.at(w[0]) == kNo, "lookup of " + w[0]);
  if (v.law == "NotAPoset") {
    if (auto e = get(2)) return *e;
    return verdict(x[0] != x[1] && o.leq(x[0], x[1]) && o.leq(x[1], x[0]), "both x<=y and y<=x in the closure");
  }
  if (v.law == "NotALattice" || v.law == "NotASemilattice") {
    if (auto e = get(2)) return *e;
    if (v.detail.find("join") != std::string::npos) return verdict(o.lub(x[0], x[1]) == kNo, "least upper bound search");
    return verdict(o.glb(x[0], x[1]) == kNo, "greatest lower bound search");
  }
  if (v.law == "NotDistributive") {
    if (auto e = get(3)) return *e;
    const Idx yz = o.lub(x[1], x[2]), xy = o.glb(x[0], x[1]), xz = o.glb(x[0], x[2]);
    if (yz == kNo || xy == kNo || xz == kNo) return verdict(false, "the bounds involved do not all exist");
    const Idx lhs = o.glb(x[0], yz), rhs = o.lub(xy, xz);
    return verdict(lhs != rhs, "x/\\(y\\/z) = " + (lhs == kNo ? std::string("none") : r.id(lhs)) +
                                   ", (x/\\y)\\/(x/\\z) = " + (rhs == kNo ? std::string("none") : r.id(rhs)));
  }
  if (v.law == "NoBottom") {
    if (w.size() == 1) {
      const Idx b = r.names.at(w[0]);
      if (in.elements.empty() || b == kNo) return verdict(true, "no such bottom");
      for (Idx e = 0; e < r.names.size(); ++e)
        if (!o.leq(b, e)) return verdict(true, w[0] + " is not below " + r.id(e));
      return verdict(false, w[0] + " is below every element");
    }
    if (auto e = get(2)) return *e;
    return verdict(!o.leq(x[0], x[1]), "x <= y in the closure");
  }
  if (v.law == "NoRelativeComplement") {
    if (auto e = get(2)) return *e;
    if (r.bottom == kNo) return verdict(false, "no bottom");
    return verdict(o.leq(x[0], x[1]) && !r.has_relative_complement(x[0], x[1]), "search over all c");
  }
  return unrecognized(v);
}

std::optional<std::string> raw_balg_defect(const BalgInput& in) { return RawBalg(in).defect(in); }

ReplayResult replay_skew(const SkewInput& in, const Violation& v) {
  RawSkew s(in);
  const auto& w = v.witness;
  if (v.law == "EmptyCarrier") return verdict(in.elements.empty(), "element count");
  if (v.law == "DuplicateElement" && w.size() == 1)
    return verdict(std::count(in.elements.begin(), in.elements.end(), w[0]) > 1, "occurrences of " + w[0]);
  if (v.law == "UnknownElement" && w.size() == 1) return verdict(s.names.at(w[0]) == kNo, "lookup of " + w[0]);
  if (v.law == "MalformedTable" && w.size() == 1) {
    const bool is_circ = w[0] == "circ";
    return verdict(!(is_circ ? s.c : s.b), "shape and entries of the " + w[0] + " table");
  }
  if (!s.ok()) return ReplayResult{false, false, "tables could not be read"};
  if (v.law == "NotABand(circ)") return replay_band_law(*s.c, s.names, v);
  if (v.law == "NotABand(bullet)") return replay_band_law(*s.b, s.names, v);
  std::vector<Idx> x;
  auto get = [&](std::size_t arity) { return witness_ids(s.names, w, arity, x); };
  if (v.law == "SB1") {
    if (auto e = get(2)) return *e;
    return verdict(!s.sb1(x[0], x[1]), "the four absorption identities at (x,y)");
  }
  if (v.law == "SB2") {
    if (auto e = get(2)) return *e;
    return verdict(!s.sb2(x[0], x[1]), "x o y o x = y o x and x * y * x = x * y at (x,y)");
  }
  if (v.law == "SB3") {
    if (auto e = get(2)) return *e;
    return verdict(!s.sb3(x[0], x[1]), "commutation of * against commutation of o at (x,y)");
  }
  if (v.law == "SB4") {
    if (auto e = get(1)) return *e;
    return verdict(!s.sb4(x[0]), "0 o x and x o 0");
  }
  if (v.law == "SB5" && !w.empty()) {
    if (auto e = witness_ids(s.names, {w[0]}, 1, x)) return *e;
    for (std::size_t i = 1; i < w.size(); ++i)
      if (s.names.at(w[i]) == kNo) return verdict(false, w[i] + " is not an element");
    auto d = s.sb5_defect(x[0]);
    return verdict(d.has_value(), d ? *d : "the down-set is a Boolean algebra");
  }
  return unrecognized(v);
}

std::optional<std::string> raw_skew_defect(const SkewInput& in) {
  RawSkew s(in);
  const std::size_t n = s.names.size();
  if (n == 0) return "empty carrier";
  if (!s.names.duplicate.empty()) return "duplicate element " + s.names.duplicate;
  if (s.zero == kNo) return "unknown zero";
  if (!s.c || !s.b) return "malformed table";
  for (const Table* t : {&*s.c, &*s.b})
    for (Idx x = 0; x < n; ++x) {
      if (!idempotent_at(*t, x)) return "not idempotent at " + s.names.v[x];
      for (Idx y = 0; y < n; ++y)
        for (Idx z = 0; z < n; ++z)
          if (!associative_at(*t, x, y, z)) return "not associative";
    }
  for (Idx x = 0; x < n; ++x) {
    if (!s.sb4(x)) return "SB4 at " + s.names.v[x];
    for (Idx y = 0; y < n; ++y)
      if (!s.sb1(x, y) || !s.sb2(x, y) || !s.sb3(x, y)) return "SB1-SB3 at " + s.names.v[x] + ", " + s.names.v[y];
  }
  for (Idx x = 0; x < n; ++x)
    if (auto d = s.sb5_defect(x)) return "SB5 at " + s.names.v[x] + ": " + *d;
  return std::nullopt;
}

ReplayResult replay_band(const BandInput& in, const Violation& v) {
  Names names(in.elements);
  auto t = raw_table(names, in.table);
  if (!t) return ReplayResult{false, false, "table could not be read"};
  if (v.law == "NotABand") return replay_band_law(*t, names, v);
  if (v.law == "NotRightNormal") {
    std::vector<Idx> x;
    if (auto e = witness_ids(names, v.witness, 3, x)) return *e;
    const auto& T = *t;
    return verdict(T[T[x[0]][x[1]]][x[2]] != T[T[x[1]][x[0]]][x[2]], "x.y.z against y.x.z");
  }
  return unrecognized(v);
}

// --- presheaves --------------------------------------------------------------

namespace {

struct RawPresheaf {
  RawBalg base;
  std::vector<std::string> ids;
  std::unordered_map<std::string, Idx> id_pos;
  std::vector<Idx> proj;
  std::vector<std::vector<Idx>> stalks;
  std::map<std::string, int> id_count;
  std::map<std::string, int> stalk_count;
  // (from, to) -> x -> images
  std::map<std::pair<Idx, Idx>, std::map<Idx, std::set<Idx>>> cover_maps;
  std::optional<std::string> defect;

  std::map<std::pair<Idx, Idx>, std::set<Idx>> memo;

  RawPresheaf(const BalgInput& b, const PresheafInput& in) : base(b) {
    if (auto d = base.defect(b)) {
      defect = "base: " + *d;
      return;
    }
    stalks.assign(base.names.size(), {});
    for (const auto& [e, xs] : in.stalks) {
      ++stalk_count[e];
      const Idx bi = base.names.at(e);
      if (bi == kNo) {
        note("unknown base element " + e);
        continue;
      }
      if (stalk_count[e] > 1) note("stalk " + e + " listed twice");
      for (const auto& x : xs) {
        if (++id_count[x] > 1) note("id " + x + " appears twice");
        if (id_pos.count(x)) continue;
        id_pos.emplace(x, ids.size());
        ids.push_back(x);
        proj.push_back(bi);
        stalks[bi].push_back(ids.size() - 1);
      }
    }
    if (!in.element_order.empty()) {
      std::set<std::string> seen(in.element_order.begin(), in.element_order.end());
      if (seen.size() != in.element_order.size() || seen.size() != ids.size()) note("element order is not a permutation");
      for (const auto& x : in.element_order)
        if (!id_pos.count(x)) note("element order names unknown " + x);
    }
    for (const auto& r : in.restrictions) {
      const Idx e = base.names.at(r.from), f = base.names.at(r.to);
      if (e == kNo || f == kNo) {
        note("restriction between unknown base elements");
        continue;
      }
      if (!base.order.covers(e, f)) note(r.from + " does not cover " + r.to);
      auto& m = cover_maps[{e, f}];
      for (const auto& [xs, ys] : r.pairs) {
        const Idx x = elem(xs), y = elem(ys);
        if (x == kNo || y == kNo) {
          note("restriction names an unknown id");
          continue;
        }
        if (proj[x] != e || proj[y] != f) note(xs + "->" + ys + " leaves the stalks");
        m[x].insert(y);
        if (m[x].size() > 1) note(xs + " has two images");
      }
    }
    for (Idx e = 0; e < base.names.size(); ++e)
      for (Idx f = 0; f < base.names.size(); ++f)
        if (base.order.covers(e, f))
          for (Idx x : stalks[e])
            if (image(x, e, f) == kNo) note(ids[x] + " has no image over " + base.id(f));
  }

  void note(std::string d) {
    if (!defect) defect = std::move(d);
  }
  Idx elem(const std::string& s) const {
    auto it = id_pos.find(s);
    return it == id_pos.end() ? kNo : it->second;
  }
  Idx image(Idx x, Idx e, Idx f) const {
    auto it = cover_maps.find({e, f});
    if (it == cover_maps.end()) return kNo;
    auto jt = it->second.find(x);
    if (jt == it->second.end() || jt->second.empty()) return kNo;
    return *jt->second.begin();
  }

  /// Every value of x restricted to g along every maximal chain of covers.
  const std::set<Idx>& values(Idx x, Idx g) {
    auto key = std::make_pair(x, g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::set<Idx> out;
    const Idx top = proj[x];
    if (top == g) {
      out.insert(x);
    } else {
      for (Idx f = 0; f < base.names.size(); ++f) {
        if (!base.order.covers(top, f) || !base.order.leq(g, f)) continue;
        const Idx y = image(x, top, f);
        if (y == kNo) continue;
        const auto& sub = values(y, g);
        out.insert(sub.begin(), sub.end());
      }
    }
    return memo[key] = std::move(out);
  }

  Idx res(Idx x, Idx g) {
    const auto& v = values(x, g);
    return v.size() == 1 ? *v.begin() : kNo;
  }

  bool leq(Idx x, Idx y) { return base.order.leq(proj[x], proj[y]) && res(y, proj[x]) == x; }

  Idx glb(Idx a, Idx b) {
    for (Idx m = 0; m < ids.size(); ++m) {
      if (!leq(m, a) || !leq(m, b)) continue;
      bool greatest = true;
      for (Idx l = 0; l < ids.size() && greatest; ++l)
        if (leq(l, a) && leq(l, b) && !leq(l, m)) greatest = false;
      if (greatest) return m;
    }
    return kNo;
  }
  Idx lub(Idx a, Idx b) {
    for (Idx m = 0; m < ids.size(); ++m) {
      if (!leq(a, m) || !leq(b, m)) continue;
      bool least = true;
      for (Idx u = 0; u < ids.size() && least; ++u)
        if (leq(a, u) && leq(b, u) && !leq(m, u)) least = false;
      if (least) return m;
    }
    return kNo;
  }
  bool compatible(Idx a, Idx b) {
    const Idx m = glb(a, b);
    return m != kNo && proj[m] == base.order.glb(proj[a], proj[b]);
  }
  bool path_independent() {
    for (Idx x = 0; x < ids.size(); ++x)
      for (Idx g = 0; g < base.names.size(); ++g)
        if (base.order.leq(g, proj[x]) && values(x, g).size() != 1) return false;
    return true;
  }
  Idx minimum() {
    for (Idx z = 0; z < ids.size(); ++z) {
      bool all = true;
      for (Idx y = 0; y < ids.size() && all; ++y) all = leq(z, y);
      if (all) return z;
    }
    return kNo;
  }
};

/// Follows a chain "e0>e1>..>ek" of cover restrictions starting at x.
std::optional<Idx> follow(RawPresheaf& p, Idx x, const std::string& chain, std::string& why) {
  std::vector<std::string> steps;
  std::stringstream ss(chain);
  for (std::string s; std::getline(ss, s, '>');) steps.push_back(s);
  if (steps.empty() || p.base.names.at(steps[0]) != p.proj[x]) {
    why = "chain " + chain + " does not start at p(x)";
    return std::nullopt;
  }
  Idx cur = x;
  for (std::size_t i = 1; i < steps.size(); ++i) {
    const Idx e = p.base.names.at(steps[i - 1]), f = p.base.names.at(steps[i]);
    if (e == kNo || f == kNo || !p.base.order.covers(e, f)) {
      why = "chain " + chain + " is not made of covers";
      return std::nullopt;
    }
    cur = p.image(cur, e, f);
    if (cur == kNo) {
      why = "chain " + chain + " meets a missing restriction";
      return std::nullopt;
    }
  }
  return cur;
}

}  // namespace

ReplayResult replay_bset(const BalgInput& base, const PresheafInput& in, const Violation& v) {
  RawPresheaf p(base, in);
  if (p.defect && p.defect->rfind("base: ", 0) == 0) return ReplayResult{false, false, *p.defect};
  const auto& w = v.witness;
  auto id = [&](const std::string& s) { return p.elem(s); };
  auto bid = [&](const std::string& s) { return p.base.names.at(s); };

  if (v.law == "UnknownElement" && w.size() == 1)
    return verdict(id(w[0]) == kNo && bid(w[0]) == kNo, "lookup of " + w[0]);
  if (v.law == "DuplicateStalk" && w.size() == 1) return verdict(p.stalk_count[w[0]] > 1, "stalk listings of " + w[0]);
  if (v.law == "StalkCollision" && w.size() == 1) return verdict(p.id_count[w[0]] > 1, "occurrences of " + w[0]);
  if (v.law == "DuplicateElement") {
    std::set<std::string> seen(in.element_order.begin(), in.element_order.end());
    return verdict(seen.size() != in.element_order.size(), "repeats in the element order");
  }
  if (v.law == "NotACover" && w.size() == 2) {
    if (bid(w[0]) == kNo || bid(w[1]) == kNo) return verdict(false, "unknown base element");
    return verdict(!p.base.order.covers(bid(w[0]), bid(w[1])), "cover test in the base");
  }
  if (v.law == "RestrictionOutOfStalk" && w.size() == 2) {
    const Idx x = id(w[0]), y = id(w[1]);
    if (x == kNo || y == kNo) return verdict(false, "unknown id");
    for (const auto& r : in.restrictions)
      for (const auto& pr : r.pairs)
        if (pr.first == w[0] && pr.second == w[1] && (p.proj[x] != bid(r.from) || p.proj[y] != bid(r.to)))
          return verdict(true, w[0] + "->" + w[1] + " listed under " + r.from + " -> " + r.to);
    return verdict(false, "every listing of the pair stays inside its stalks");
  }
  if (v.law == "AmbiguousRestriction" && w.size() == 3) {
    for (const auto& [key, m] : p.cover_maps) {
      auto it = m.find(id(w[0]));
      if (it != m.end() && it->second.count(id(w[1])) && it->second.count(id(w[2])) && w[1] != w[2])
        return verdict(true, "both images listed under " + p.base.id(key.first) + " -> " + p.base.id(key.second));
    }
    return verdict(false, "no cover lists both images");
  }
  if (v.law == "MissingRestriction" && w.size() == 2) {
    const Idx x = id(w[0]), f = bid(w[1]);
    if (x == kNo || f == kNo) return verdict(false, "unknown id");
    return verdict(p.base.order.covers(p.proj[x], f) && p.image(x, p.proj[x], f) == kNo, "image lookup");
  }
  if (v.law == "PathDependent" && w.size() == 4) {
    const Idx x = id(w[0]), g = bid(w[1]);
    if (x == kNo || g == kNo) return verdict(false, "unknown id");
    std::string why;
    auto a = follow(p, x, w[2], why);
    if (!a) return verdict(false, why);
    auto b = follow(p, x, w[3], why);
    if (!b) return verdict(false, why);
    auto ends = [&](const std::string& c) { return c.size() >= w[1].size() && c.compare(c.size() - w[1].size(), w[1].size(), w[1]) == 0; };
    if (!ends(w[2]) || !ends(w[3])) return verdict(false, "chains do not end at " + w[1]);
    return verdict(*a != *b, "chains reach " + p.ids[*a] + " and " + p.ids[*b]);
  }
  if (v.law == "NoGlobalSupport" && w.size() == 1) {
    const Idx e = bid(w[0]);
    return verdict(e != kNo && p.stalks[e].empty(), "stalk size of " + w[0]);
  }
  if (v.law == "ZeroStalkNotTrivial" && w.size() == 2) {
    const Idx a = id(w[0]), b = id(w[1]);
    return verdict(a != kNo && b != kNo && a != b && p.proj[a] == p.base.bottom && p.proj[b] == p.base.bottom,
                   "both lie over the bottom");
  }
  if (p.defect || !p.path_independent()) return ReplayResult{false, false, "presheaf data is not well formed"};
  if (v.law == "NoMinimum" && w.empty()) return verdict(p.minimum() == kNo, "search for an element below all");
  if (v.law == "MissingJoin" && w.size() == 2) {
    const Idx a = id(w[0]), b = id(w[1]);
    if (a == kNo || b == kNo) return verdict(false, "unknown id");
    if (!p.compatible(a, b)) return verdict(false, "the pair is not compatible");
    return verdict(p.lub(a, b) == kNo, "least upper bound search");
  }
  return unrecognized(v);
}

std::optional<std::string> raw_bset_defect(const BalgInput& base, const PresheafInput& in) {
  RawPresheaf p(base, in);
  if (p.defect) return p.defect;
  if (!p.path_independent()) return "restrictions depend on the chain";
  for (Idx e = 0; e < p.base.names.size(); ++e)
    if (p.stalks[e].empty()) return "empty stalk over " + p.base.id(e);
  if (p.stalks[p.base.bottom].size() != 1) return "zero stalk is not a singleton";
  if (p.minimum() == kNo) return "no minimum";
  for (Idx a = 0; a < p.ids.size(); ++a)
    for (Idx b = 0; b < p.ids.size(); ++b)
      if (p.compatible(a, b) && p.lub(a, b) == kNo) return "compatible " + p.ids[a] + ", " + p.ids[b] + " lack a join";
  return std::nullopt;
}

}  // namespace skewdual
