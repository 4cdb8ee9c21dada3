#include "skewdual/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace skewdual {

std::string_view keyword(StanzaKind kind) {
  switch (kind) {
    case StanzaKind::kBalg: return "balg";
    case StanzaKind::kSkew: return "skew";
    case StanzaKind::kBand: return "band";
    case StanzaKind::kBset: return "bset";
    case StanzaKind::kEtale: return "etale";
    case StanzaKind::kMorphism: return "morphism";
    case StanzaKind::kRelmor: return "relmor";
  }
  return "?";
}

namespace {

std::string describe(ParseError::Kind kind, int line, int col, const std::string& what) {
  switch (kind) {
    case ParseError::Kind::kSyntax:
      return "SyntaxError at " + std::to_string(line) + ":" + std::to_string(col) + ": expected " + what;
    case ParseError::Kind::kUnresolvedReference:
      return "UnresolvedReference(" + what + ")" + (line > 0 ? " at line " + std::to_string(line) : "");
    case ParseError::Kind::kDuplicateName:
      return "DuplicateName(" + what + ") at line " + std::to_string(line);
  }
  return what;
}

}  // namespace

ParseError::ParseError(Kind kind, int line, int col, std::string what)
    : std::runtime_error(describe(kind, line, col, what)), kind_(kind), line_(line), col_(col),
      subject_(std::move(what)) {}

void Document::add(Stanza stanza) {
  if (find(stanza.name)) throw ParseError(ParseError::Kind::kDuplicateName, stanza.line, 1, stanza.name);
  stanzas_.push_back(std::move(stanza));
}

const Stanza* Document::find(std::string_view name) const {
  for (const auto& s : stanzas_)
    if (s.name == name) return &s;
  return nullptr;
}

const Stanza& Document::get(std::string_view name) const {
  const Stanza* s = find(name);
  if (!s) throw ParseError(ParseError::Kind::kUnresolvedReference, 0, 0, std::string(name));
  return *s;
}

namespace {

struct Line {
  int no = 0;
  std::string_view text;  // whole physical line

  int col(std::string_view part) const { return static_cast<int>(part.data() - text.data()) + 1; }
  int end_col() const { return static_cast<int>(text.size()) + 1; }
};

[[noreturn]] void syntax(const Line& l, int col, const std::string& expected) {
  throw ParseError(ParseError::Kind::kSyntax, l.no, col, expected);
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool id_char(char c) { return !is_space(c) && c != ',' && c != ':' && c != '{' && c != '}' && c != '#'; }

void check_id(const Line& l, std::string_view tok, const std::string& what = "id") {
  if (tok.empty()) syntax(l, l.col(tok), what);
  for (std::size_t i = 0; i < tok.size(); ++i)
    if (!id_char(tok[i])) syntax(l, l.col(tok.substr(i)), "',' or end of line");
}

std::vector<std::string_view> split_list(const Line& l, std::string_view value) {
  std::vector<std::string_view> out;
  if (trim(value).empty()) return out;
  while (true) {
    const auto comma = value.find(',');
    std::string_view tok = trim(value.substr(0, comma));
    if (tok.empty()) syntax(l, l.col(value.substr(0, comma == std::string_view::npos ? value.size() : comma)), "id");
    check_id(l, tok);
    out.push_back(tok);
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<std::string> ids(const Line& l, std::string_view value) {
  std::vector<std::string> out;
  for (auto t : split_list(l, value)) out.emplace_back(t);
  return out;
}

std::pair<std::string, std::string> split_pair(const Line& l, std::string_view tok, std::string_view sep) {
  const auto at = tok.find(sep);
  const std::string expected = "x" + std::string(sep) + "y";
  if (at == std::string_view::npos || at == 0 || at + sep.size() == tok.size()) syntax(l, l.col(tok), expected);
  const auto lhs = tok.substr(0, at), rhs = tok.substr(at + sep.size());
  if (rhs.find(sep) != std::string_view::npos) syntax(l, l.col(rhs), expected);
  return {std::string(lhs), std::string(rhs)};
}

NamePairs pairs(const Line& l, std::string_view value, std::string_view sep) {
  NamePairs out;
  for (auto t : split_list(l, value)) out.push_back(split_pair(l, t, sep));
  return out;
}

std::string single(const Line& l, std::string_view value) {
  auto v = split_list(l, value);
  if (v.size() != 1) syntax(l, l.col(value), "exactly one id");
  return std::string(v.front());
}

struct BodyLine {
  Line line;
  std::string_view key;
  std::string_view value;
};

/// Tracks which singular keys have been seen.
class Once {
 public:
  void mark(const BodyLine& b) {
    if (!seen_.emplace(std::string(b.key), b.line.no).second) syntax(b.line, b.line.col(b.key), "'" + std::string(b.key) + ":' only once");
  }
  bool has(std::string_view key) const { return seen_.count(std::string(key)) > 0; }
  void require(const Line& close, std::string_view key) const {
    if (!has(key)) syntax(close, 1, "'" + std::string(key) + ":' line in the stanza");
  }

 private:
  std::map<std::string, int> seen_;
};

[[noreturn]] void unknown_key(const BodyLine& b, const std::string& keys) {
  syntax(b.line, b.line.col(b.key), "one of the keys " + keys);
}

/// Header plus rows of a table written as `circ: ids` and `row x: ids`.
struct TableText {
  Line header_line;
  std::vector<std::string_view> header;
  std::vector<std::pair<BodyLine, std::vector<std::string_view>>> rows;
};

std::vector<std::vector<std::string>> assemble_table(const TableText& t, const std::vector<std::string>& elements,
                                                     const Line& close) {
  const std::size_t n = elements.size();
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(elements[i], i);
  std::vector<std::size_t> column_of(n, n);
  if (t.header.size() != n) syntax(t.header_line, t.header_line.col(t.header.empty() ? t.header_line.text : t.header.front()), "a header listing every element once");
  for (std::size_t j = 0; j < n; ++j) {
    auto it = pos.find(std::string(t.header[j]));
    if (it == pos.end() || column_of[it->second] != n)
      syntax(t.header_line, t.header_line.col(t.header[j]), "a header listing every element once");
    column_of[it->second] = j;
  }
  std::vector<std::vector<std::string>> out(n);
  std::vector<bool> seen(n, false);
  for (const auto& [b, cells] : t.rows) {
    const auto label = trim(b.key.substr(3));
    auto it = pos.find(std::string(label));
    if (it == pos.end()) syntax(b.line, b.line.col(label), "a row label that is an element");
    if (seen[it->second]) syntax(b.line, b.line.col(label), "each row once");
    seen[it->second] = true;
    if (cells.size() != n) syntax(b.line, b.line.end_col(), std::to_string(n) + " table entries");
    for (std::size_t j = 0; j < n; ++j) out[it->second].emplace_back(cells[column_of[j]]);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) syntax(close, 1, "row " + elements[i]);
  return out;
}

/// Collects `circ:`/`bullet:` headers and the rows following each.
class Tables {
 public:
  bool take(const BodyLine& b, Once& once, std::initializer_list<std::string_view> names) {
    for (auto name : names)
      if (b.key == name) {
        once.mark(b);
        current_ = &tables_[std::string(name)];
        current_->header_line = b.line;
        current_->header = split_list(b.line, b.value);
        return true;
      }
    if (b.key.substr(0, 3) == "row" && (b.key.size() == 3 || is_space(b.key[3]))) {
      if (!current_) syntax(b.line, b.line.col(b.key), "a table header before rows");
      current_->rows.emplace_back(b, split_list(b.line, b.value));
      return true;
    }
    return false;
  }
  const TableText* get(std::string_view name) const {
    auto it = tables_.find(std::string(name));
    return it == tables_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, TableText> tables_;
  TableText* current_ = nullptr;
};

std::vector<std::string> need_elements(const std::optional<std::vector<std::string>>& e, const Line& at) {
  if (!e) syntax(at, 1, "'elements:' before any table");
  return *e;
}

BalgInput build_balg(const std::vector<BodyLine>& body, const Line& close) {
  BalgInput in;
  Once once;
  for (const auto& b : body) {
    if (b.key == "elements") {
      once.mark(b);
      in.elements = ids(b.line, b.value);
    } else if (b.key == "bottom") {
      once.mark(b);
      in.bottom = single(b.line, b.value);
    } else if (b.key == "leq") {
      auto p = pairs(b.line, b.value, "<=");
      in.leq.insert(in.leq.end(), p.begin(), p.end());
    } else {
      unknown_key(b, "elements, bottom, leq");
    }
  }
  once.require(close, "elements");
  return in;
}

SkewInput build_skew(const std::vector<BodyLine>& body, const Line& close) {
  SkewInput in;
  Once once;
  Tables tables;
  std::optional<std::vector<std::string>> elements;
  for (const auto& b : body) {
    if (b.key == "elements") {
      once.mark(b);
      elements = ids(b.line, b.value);
    } else if (b.key == "zero") {
      once.mark(b);
      in.zero = single(b.line, b.value);
    } else if (!tables.take(b, once, {"circ", "bullet"})) {
      unknown_key(b, "elements, zero, circ, bullet, row");
    }
  }
  for (auto key : {"elements", "zero", "circ", "bullet"}) once.require(close, key);
  in.elements = need_elements(elements, close);
  in.circ = assemble_table(*tables.get("circ"), in.elements, close);
  in.bullet = assemble_table(*tables.get("bullet"), in.elements, close);
  return in;
}

BandInput build_band(const std::vector<BodyLine>& body, const Line& close) {
  BandInput in;
  Once once;
  Tables tables;
  std::optional<std::vector<std::string>> elements;
  for (const auto& b : body) {
    if (b.key == "elements") {
      once.mark(b);
      elements = ids(b.line, b.value);
    } else if (!tables.take(b, once, {"circ"})) {
      unknown_key(b, "elements, circ, row");
    }
  }
  for (auto key : {"elements", "circ"}) once.require(close, key);
  in.elements = need_elements(elements, close);
  in.table = assemble_table(*tables.get("circ"), in.elements, close);
  return in;
}

/// "stalk a" or "restrict a -> 0": the word and what follows it.
std::optional<std::string_view> keyed(std::string_view key, std::string_view word) {
  if (key.substr(0, word.size()) != word || key.size() == word.size() || !is_space(key[word.size()])) return std::nullopt;
  return trim(key.substr(word.size()));
}

PresheafInput build_bset(const std::vector<BodyLine>& body) {
  PresheafInput in;
  Once once;
  for (const auto& b : body) {
    if (auto e = keyed(b.key, "stalk")) {
      check_id(b.line, *e, "base element id");
      in.stalks.emplace_back(std::string(*e), ids(b.line, b.value));
    } else if (auto r = keyed(b.key, "restrict")) {
      const auto arrow = r->find("->");
      if (arrow == std::string_view::npos) syntax(b.line, b.line.col(*r), "'<e> -> <f>'");
      auto lhs = trim(r->substr(0, arrow));
      auto rhs = trim(r->substr(arrow + 2));
      check_id(b.line, lhs, "base element id");
      check_id(b.line, rhs, "base element id");
      in.restrictions.push_back(RestrictionInput{std::string(lhs), std::string(rhs), pairs(b.line, b.value, "->")});
    } else if (b.key == "order") {
      once.mark(b);
      in.element_order = ids(b.line, b.value);
    } else {
      unknown_key(b, "stalk <e>, restrict <e> -> <f>, order");
    }
  }
  return in;
}

EtaleInput build_etale(const std::vector<BodyLine>& body, const Line& close) {
  EtaleInput in;
  Once once;
  for (const auto& b : body) {
    if (b.key == "points") {
      once.mark(b);
      in.total = ids(b.line, b.value);
    } else if (b.key == "base") {
      once.mark(b);
      in.base = ids(b.line, b.value);
    } else if (b.key == "proj") {
      auto p = pairs(b.line, b.value, "->");
      in.proj.insert(in.proj.end(), p.begin(), p.end());
    } else {
      unknown_key(b, "points, base, proj");
    }
  }
  for (auto key : {"points", "base"}) once.require(close, key);
  return in;
}

template <class In>
In build_arrow(const std::vector<BodyLine>& body, const Line& close, std::string_view map_key) {
  In in;
  Once once;
  for (const auto& b : body) {
    if (b.key == "source") {
      once.mark(b);
      in.source = single(b.line, b.value);
    } else if (b.key == "target") {
      once.mark(b);
      in.target = single(b.line, b.value);
    } else if (b.key == map_key || b.key == "base") {
      auto p = pairs(b.line, b.value, "->");
      auto& dst = b.key == "base" ? in.base : [&]() -> NamePairs& {
        if constexpr (std::is_same_v<In, MorphismInput>) return in.map;
        else return in.phi;
      }();
      dst.insert(dst.end(), p.begin(), p.end());
    } else {
      unknown_key(b, "source, target, " + std::string(map_key) + ", base");
    }
  }
  for (auto key : {"source", "target"}) once.require(close, key);
  return in;
}

const std::vector<std::pair<std::string_view, StanzaKind>> kKeywords = {
    {"balg", StanzaKind::kBalg},   {"skew", StanzaKind::kSkew},         {"band", StanzaKind::kBand},
    {"bset", StanzaKind::kBset},   {"etale", StanzaKind::kEtale},       {"morphism", StanzaKind::kMorphism},
    {"relmor", StanzaKind::kRelmor}};

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

void resolve(const Document& doc, const Line& l, const std::string& name, std::initializer_list<StanzaKind> kinds) {
  const Stanza* s = doc.find(name);
  bool ok = s != nullptr;
  if (ok && kinds.size() > 0) ok = std::find(kinds.begin(), kinds.end(), s->kind) != kinds.end();
  if (!ok) throw ParseError(ParseError::Kind::kUnresolvedReference, l.no, 1, name);
}

}  // namespace

Document parse(std::string_view text) {
  std::vector<Line> lines;
  {
    int no = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
      auto nl = text.find('\n', start);
      if (nl == std::string_view::npos) nl = text.size();
      auto l = text.substr(start, nl - start);
      if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
      lines.push_back(Line{no++, l});
      start = nl + 1;
    }
  }
  Document doc;
  std::size_t i = 0;
  auto content = [&](const Line& l) { return trim(l.text.substr(0, l.text.find('#'))); };
  while (i < lines.size()) {
    const Line& head = lines[i++];
    auto c = content(head);
    if (c.empty()) continue;
    if (c.back() != '{') syntax(head, head.col(c) + static_cast<int>(c.size()), "'{'");
    auto w = words(c.substr(0, c.size() - 1));
    auto kw = std::find_if(kKeywords.begin(), kKeywords.end(), [&](const auto& k) { return !w.empty() && k.first == w[0]; });
    if (kw == kKeywords.end())
      syntax(head, w.empty() ? head.col(c) : head.col(w[0]), "stanza keyword (balg, skew, band, bset, etale, morphism, relmor)");
    if (w.size() < 2) syntax(head, head.col(c) + static_cast<int>(c.size()) - 1, "stanza name");
    check_id(head, w[1], "stanza name");
    Stanza st{kw->second, std::string(w[1]), BalgInput{}, head.no};
    std::string over;
    if (st.kind == StanzaKind::kBset) {
      if (w.size() < 3 || w[2] != "over") syntax(head, w.size() < 3 ? head.col(c) + static_cast<int>(c.size()) - 1 : head.col(w[2]), "'over'");
      if (w.size() < 4) syntax(head, head.col(c) + static_cast<int>(c.size()) - 1, "base stanza name");
      check_id(head, w[3], "base stanza name");
      if (w.size() > 4) syntax(head, head.col(w[4]), "'{'");
      over = std::string(w[3]);
    } else if (w.size() > 2) {
      syntax(head, head.col(w[2]), "'{'");
    }

    std::vector<BodyLine> body;
    const Line* close = nullptr;
    while (i < lines.size()) {
      const Line& l = lines[i++];
      auto b = content(l);
      if (b.empty()) continue;
      if (b == "}") {
        close = &l;
        break;
      }
      const auto colon = b.find(':');
      if (colon == std::string_view::npos) syntax(l, l.col(b) + static_cast<int>(b.size()), "':'");
      auto key = trim(b.substr(0, colon));
      if (key.empty()) syntax(l, l.col(b), "key");
      body.push_back(BodyLine{l, key, b.substr(colon + 1)});
    }
    if (!close) syntax(lines.back(), lines.back().end_col(), "'}' closing stanza " + st.name);

    switch (st.kind) {
      case StanzaKind::kBalg: st.body = build_balg(body, *close); break;
      case StanzaKind::kSkew: st.body = build_skew(body, *close); break;
      case StanzaKind::kBand: st.body = build_band(body, *close); break;
      case StanzaKind::kBset:
        resolve(doc, head, over, {StanzaKind::kBalg});
        st.body = BsetStanza{over, build_bset(body)};
        break;
      case StanzaKind::kEtale: st.body = build_etale(body, *close); break;
      case StanzaKind::kMorphism: {
        auto m = build_arrow<MorphismInput>(body, *close, "map");
        resolve(doc, head, m.source, {});
        resolve(doc, head, m.target, {});
        st.body = std::move(m);
        break;
      }
      case StanzaKind::kRelmor: {
        auto m = build_arrow<RelmorInput>(body, *close, "phi");
        resolve(doc, head, m.source, {StanzaKind::kEtale});
        resolve(doc, head, m.target, {StanzaKind::kEtale});
        st.body = std::move(m);
        break;
      }
    }
    doc.add(std::move(st));
  }
  return doc;
}

namespace {

void list_line(std::ostream& os, std::string_view key, const std::vector<std::string>& v) {
  os << "  " << key << ":";
  if (!v.empty()) os << " " << join_names(v, ", ");
  os << "\n";
}

void pair_line(std::ostream& os, std::string_view key, const NamePairs& v, std::string_view sep) {
  std::vector<std::string> parts;
  for (const auto& [a, b] : v) parts.push_back(a + std::string(sep) + b);
  list_line(os, key, parts);
}

void table_lines(std::ostream& os, std::string_view key, const std::vector<std::string>& elements,
                 const std::vector<std::vector<std::string>>& rows) {
  list_line(os, key, elements);
  for (std::size_t i = 0; i < rows.size() && i < elements.size(); ++i) list_line(os, "row " + elements[i], rows[i]);
}

}  // namespace

std::string print(const Stanza& st) {
  std::ostringstream os;
  os << keyword(st.kind) << " " << st.name;
  if (st.kind == StanzaKind::kBset) os << " over " << std::get<BsetStanza>(st.body).over;
  os << " {\n";
  switch (st.kind) {
    case StanzaKind::kBalg: {
      const auto& in = std::get<BalgInput>(st.body);
      list_line(os, "elements", in.elements);
      if (!in.bottom.empty()) list_line(os, "bottom", {in.bottom});
      pair_line(os, "leq", in.leq, "<=");
      break;
    }
    case StanzaKind::kSkew: {
      const auto& in = std::get<SkewInput>(st.body);
      list_line(os, "elements", in.elements);
      list_line(os, "zero", {in.zero});
      table_lines(os, "circ", in.elements, in.circ);
      table_lines(os, "bullet", in.elements, in.bullet);
      break;
    }
    case StanzaKind::kBand: {
      const auto& in = std::get<BandInput>(st.body);
      list_line(os, "elements", in.elements);
      table_lines(os, "circ", in.elements, in.table);
      break;
    }
    case StanzaKind::kBset: {
      const auto& in = std::get<BsetStanza>(st.body).data;
      for (const auto& [e, xs] : in.stalks) list_line(os, "stalk " + e, xs);
      for (const auto& r : in.restrictions) pair_line(os, "restrict " + r.from + " -> " + r.to, r.pairs, "->");
      if (!in.element_order.empty()) list_line(os, "order", in.element_order);
      break;
    }
    case StanzaKind::kEtale: {
      const auto& in = std::get<EtaleInput>(st.body);
      list_line(os, "points", in.total);
      list_line(os, "base", in.base);
      pair_line(os, "proj", in.proj, "->");
      break;
    }
    case StanzaKind::kMorphism: {
      const auto& in = std::get<MorphismInput>(st.body);
      list_line(os, "source", {in.source});
      list_line(os, "target", {in.target});
      pair_line(os, "map", in.map, "->");
      if (!in.base.empty()) pair_line(os, "base", in.base, "->");
      break;
    }
    case StanzaKind::kRelmor: {
      const auto& in = std::get<RelmorInput>(st.body);
      list_line(os, "source", {in.source});
      list_line(os, "target", {in.target});
      pair_line(os, "phi", in.phi, "->");
      pair_line(os, "base", in.base, "->");
      break;
    }
  }
  os << "}\n";
  return os.str();
}

std::string print(const Document& doc) {
  std::string out;
  for (const auto& s : doc.stanzas()) {
    if (!out.empty()) out += "\n";
    out += print(s);
  }
  return out;
}

std::string effective_bottom(const BalgInput& in) {
  if (!in.bottom.empty() || in.elements.empty()) return in.bottom;
  const std::size_t n = in.elements.size();
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos.emplace(in.elements[i], i);
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [a, b] : in.leq) {
    auto x = pos.find(a), y = pos.find(b);
    if (x != pos.end() && y != pos.end()) le[x->second][y->second] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    if (std::all_of(le[i].begin(), le[i].end(), [](bool b) { return b; })) return in.elements[i];
  return in.elements.front();
}

Stanza make_stanza(std::string name, BalgInput in) { return Stanza{StanzaKind::kBalg, std::move(name), std::move(in)}; }
Stanza make_stanza(std::string name, SkewInput in) { return Stanza{StanzaKind::kSkew, std::move(name), std::move(in)}; }
Stanza make_stanza(std::string name, BandInput in) { return Stanza{StanzaKind::kBand, std::move(name), std::move(in)}; }
Stanza make_stanza(std::string name, std::string over, PresheafInput in) {
  return Stanza{StanzaKind::kBset, std::move(name), BsetStanza{std::move(over), std::move(in)}};
}
Stanza make_stanza(std::string name, EtaleInput in) { return Stanza{StanzaKind::kEtale, std::move(name), std::move(in)}; }

}  // namespace skewdual
