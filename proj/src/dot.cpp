#include "skewdual/dot.hpp"

#include <functional>
#include <sstream>

namespace skewdual {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Cover pairs (lower, upper) of a finite order given by `leq`.
void hasse(std::ostream& os, std::size_t n, const std::function<bool(Elem, Elem)>& leq,
           const std::function<std::string(Elem)>& node, const std::string& indent) {
  auto lt = [&](Elem a, Elem b) { return a != b && leq(a, b); };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!lt(a, b)) continue;
      bool cover = true;
      for (Elem c = 0; c < n && cover; ++c) cover = !(lt(a, c) && lt(c, b));
      if (cover) os << indent << node(a) << " -> " << node(b) << ";\n";
    }
}

}  // namespace

std::string dot_balg(const BooleanAlgebra& b, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n  rankdir=BT;\n";
  auto node = [&](Elem e) { return quote(b.name(e)); };
  for (Elem e = 0; e < b.size(); ++e) os << "  " << node(e) << ";\n";
  hasse(os, b.size(), [&](Elem x, Elem y) { return b.leq(x, y); }, node, "  ");
  os << "}\n";
  return os.str();
}

std::string dot_skew(const SkewAlgebra& s, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n  rankdir=BT;\n";
  auto node = [&](Elem e) { return quote(s.name(e)); };
  for (Elem e = 0; e < s.size(); ++e) os << "  " << node(e) << ";\n";
  hasse(os, s.size(), [&](Elem x, Elem y) { return natural_leq(s, x, y); }, node, "  ");
  os << "}\n";
  return os.str();
}

std::string dot_bset(const BooleanSet& x, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n  rankdir=BT;\n  subgraph cluster_elements {\n    label=" << quote(name)
     << ";\n";
  auto node = [&](Elem e) { return quote(x.name(e)); };
  auto base_node = [&](Elem e) { return quote("base:" + x.base().name(e)); };
  for (Elem e = 0; e < x.size(); ++e) os << "    " << node(e) << ";\n";
  hasse(os, x.size(), [&](Elem a, Elem b) { return x.leq(a, b); }, node, "    ");
  os << "  }\n  subgraph cluster_base {\n    label=\"base\";\n";
  for (Elem e = 0; e < x.base().size(); ++e)
    os << "    " << base_node(e) << " [label=" << quote(x.base().name(e)) << ", shape=box];\n";
  hasse(os, x.base().size(), [&](Elem a, Elem b) { return x.base().leq(a, b); }, base_node, "    ");
  os << "  }\n";
  for (Elem e = 0; e < x.size(); ++e)
    os << "  " << node(e) << " -> " << base_node(x.proj(e)) << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

std::string dot_etale(const FinEtaleSpace& sp, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quote(name) << " {\n";
  auto node = [&](Elem e) { return quote(sp.name(e)); };
  auto base_node = [&](Elem u) { return quote("base:" + sp.base_name(u)); };
  for (Elem e = 0; e < sp.size(); ++e) os << "  " << node(e) << ";\n";
  for (Elem u = 0; u < sp.base_size(); ++u)
    os << "  " << base_node(u) << " [label=" << quote(sp.base_name(u)) << ", shape=box];\n";
  for (Elem e = 0; e < sp.size(); ++e) os << "  " << node(e) << " -> " << base_node(sp.proj(e)) << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace skewdual
