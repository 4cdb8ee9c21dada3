#include "skewdual/cli.hpp"

#include "skewdual/dot.hpp"
#include "skewdual/duality.hpp"
#include "skewdual/replay.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace skewdual {

namespace {

const Stanza& stanza_of(const Document& doc, const std::string& name, StanzaKind kind) {
  const Stanza& s = doc.get(name);
  if (s.kind != kind)
    throw std::invalid_argument(name + " is a " + std::string(keyword(s.kind)) + " stanza, expected " +
                                std::string(keyword(kind)));
  return s;
}

BalgInput balg_input(const Stanza& s) {
  BalgInput in = std::get<BalgInput>(s.body);
  in.bottom = effective_bottom(in);
  return in;
}

template <class SourceIndex, class TargetIndex>
std::vector<Elem> total_map(const NamePairs& pairs, std::size_t n, const std::vector<std::string>& names,
                            SourceIndex source_index, TargetIndex target_index, const char* what) {
  std::vector<Elem> map(n, kNone);
  for (const auto& [a, b] : pairs) {
    const Elem x = source_index(a), y = target_index(b);
    if (map[x] != kNone && map[x] != y) fail("NotAMorphism", {a}, std::string(what) + " lists two images");
    map[x] = y;
  }
  for (Elem x = 0; x < n; ++x)
    if (map[x] == kNone) fail("NotAMorphism", {names[x]}, std::string(what) + " has no image");
  return map;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

BooleanAlgebra resolve_balg(const Document& doc, const std::string& name) {
  return BooleanAlgebra::validate(balg_input(stanza_of(doc, name, StanzaKind::kBalg)));
}

SkewAlgebra resolve_skew(const Document& doc, const std::string& name) {
  return SkewAlgebra::validate(std::get<SkewInput>(stanza_of(doc, name, StanzaKind::kSkew).body));
}

RightNormalBand resolve_band(const Document& doc, const std::string& name) {
  return RightNormalBand::validate(std::get<BandInput>(stanza_of(doc, name, StanzaKind::kBand).body));
}

BooleanSet resolve_bset(const Document& doc, const std::string& name) {
  const auto& b = std::get<BsetStanza>(stanza_of(doc, name, StanzaKind::kBset).body);
  return BooleanSet::validate(resolve_balg(doc, b.over), b.data);
}

FinEtaleSpace resolve_etale(const Document& doc, const std::string& name) {
  return FinEtaleSpace::validate(std::get<EtaleInput>(stanza_of(doc, name, StanzaKind::kEtale).body));
}

RelationalMorphism resolve_relmor(const Document& doc, const std::string& name) {
  const auto& m = std::get<RelmorInput>(stanza_of(doc, name, StanzaKind::kRelmor).body);
  const FinEtaleSpace s = resolve_etale(doc, m.source), t = resolve_etale(doc, m.target);
  std::vector<IndexSet> phi(s.size(), IndexSet(t.size()));
  for (const auto& [a, b] : m.phi) phi[s.index_of(a)].set(t.index_of(b));
  auto si = [&](const std::string& u) { return s.base_index_of(u); };
  auto ti = [&](const std::string& u) { return t.base_index_of(u); };
  return validate_relational_morphism(s, t, std::move(phi),
                                      total_map(m.base, s.base_size(), s.to_input().base, si, ti, "base map"));
}

Document bset_document(const BooleanSet& x, const std::string& name) {
  Document d;
  d.add(make_stanza(name + "_base", x.base().to_input()));
  d.add(make_stanza(name, name + "_base", x.presheaf().to_input()));
  return d;
}

namespace {

struct Ctx {
  std::ostream& out;
  std::ostream& err;
};

/// Validation of one morphism stanza with a printed flag summary.
Report morphism_report(const Document& doc, const Stanza& st) {
  Report r;
  if (st.kind == StanzaKind::kRelmor) {
    const RelationalMorphism m = resolve_relmor(doc, st.name);
    r.add("fiber-respecting relation", true);
    r.add("locally injective", true, {}, yes_no(m.locally_injective));
    r.add("locally surjective", true, {}, yes_no(m.locally_surjective));
    r.add("covering", true, {}, yes_no(m.covering()));
    r.add("partial map", true, {}, yes_no(m.partial_map));
    return r;
  }
  const auto& m = std::get<MorphismInput>(st.body);
  const Stanza& src = doc.get(m.source);
  const Stanza& tgt = doc.get(m.target);
  if (src.kind != tgt.kind) throw std::invalid_argument("source and target of " + st.name + " are of different kinds");
  switch (src.kind) {
    case StanzaKind::kBalg: {
      const BooleanAlgebra s = resolve_balg(doc, m.source), t = resolve_balg(doc, m.target);
      auto si = [&](const std::string& a) { return s.index_of(a); };
      auto ti = [&](const std::string& a) { return t.index_of(a); };
      const BAHom h = validate_ba_hom(s, t, total_map(m.map, s.size(), s.names(), si, ti, "map"));
      r.add("homomorphism", true);
      r.add("proper", true, {}, yes_no(is_proper_hom(s, t, h)));
      return r;
    }
    case StanzaKind::kSkew: {
      const SkewAlgebra s = resolve_skew(doc, m.source), t = resolve_skew(doc, m.target);
      auto si = [&](const std::string& a) { return s.index_of(a); };
      auto ti = [&](const std::string& a) { return t.index_of(a); };
      std::vector<std::string> names;
      for (Elem x = 0; x < s.size(); ++x) names.push_back(s.name(x));
      const SkewMorphism h = validate_skew_morphism(s, t, total_map(m.map, s.size(), names, si, ti, "map"));
      r.add("preserves o, * and 0", true);
      r.add("preserves the meet", true, {}, yes_no(is_wedge_morphism(s, t, h)));
      return r;
    }
    case StanzaKind::kBset: {
      const BooleanSet s = resolve_bset(doc, m.source), t = resolve_bset(doc, m.target);
      auto si = [&](const std::string& a) { return s.index_of(a); };
      auto ti = [&](const std::string& a) { return t.index_of(a); };
      auto bsi = [&](const std::string& a) { return s.base().index_of(a); };
      auto bti = [&](const std::string& a) { return t.base().index_of(a); };
      auto map = total_map(m.map, s.size(), s.names(), si, ti, "map");
      auto base = total_map(m.base, s.base().size(), s.base().names(), bsi, bti, "base map");
      const BSetMorphism h = validate_bset_morphism(s, t, std::move(map), std::move(base));
      r.add("base map is a homomorphism", true);
      r.add("BM1 and BM2", true);
      r.add("preserves o, * and 0", true);
      r.add("proper", true, {}, yes_no(h.proper));
      r.add("preserves binary meets", true, {}, yes_no(preserves_meets(s, t, h)));
      if (h.proper && s.has_binary_meets() && t.has_binary_meets()) r.merge(check_prop14(s, t, h), "meets: ");
      return r;
    }
    default:
      throw std::invalid_argument("morphisms are defined between balg, skew or bset stanzas");
  }
}

/// One validation line per stanza.
void validate_stanza(const Document& doc, const Stanza& st, Report& r) {
  const std::string label = std::string(keyword(st.kind)) + " " + st.name;
  try {
    std::string size;
    switch (st.kind) {
      case StanzaKind::kBalg: size = std::to_string(resolve_balg(doc, st.name).size()) + " elements"; break;
      case StanzaKind::kSkew: size = std::to_string(resolve_skew(doc, st.name).size()) + " elements"; break;
      case StanzaKind::kBand: size = std::to_string(resolve_band(doc, st.name).size()) + " elements"; break;
      case StanzaKind::kBset: size = std::to_string(resolve_bset(doc, st.name).size()) + " elements"; break;
      case StanzaKind::kEtale: {
        const auto n = resolve_etale(doc, st.name).size();
        size = std::to_string(n) + (n == 1 ? " point" : " points");
        break;
      }
      case StanzaKind::kMorphism:
      case StanzaKind::kRelmor: morphism_report(doc, st); size = "morphism"; break;
    }
    r.add(label, true, {}, size);
  } catch (const ValidationError& e) {
    r.add(label, false, {}, e.violation().message());
  }
}

Report props_of(const Document& doc, const Stanza& st) {
  Report r;
  switch (st.kind) {
    case StanzaKind::kBalg: r.merge(stone_report(resolve_balg(doc, st.name))); break;
    case StanzaKind::kSkew: {
      const SkewAlgebra s = resolve_skew(doc, st.name);
      r.merge(check_consequences(s));
      r.add("meets exist (wedge algebra)", true, {}, yes_no(is_wedge_algebra(s)));
      break;
    }
    case StanzaKind::kBand: {
      const RightNormalBand b = resolve_band(doc, st.name);
      r.add("right normal band", true);
      r.add("Boolean band", true, {}, yes_no(is_boolean_band(b)));
      break;
    }
    case StanzaKind::kBset: {
      const BooleanSet x = resolve_bset(doc, st.name);
      r.merge(bset_lemma_report(x));
      r.merge(topology_report(x), "topology: ");
      r.merge(check_prop13(x), "points: ");
      r.merge(check_consequences(to_skew(x)), "skew: ");
      r.add("sheaf condition", sheaf_condition(x.presheaf(), x.base()));
      break;
    }
    case StanzaKind::kEtale: {
      const FinEtaleSpace sp = resolve_etale(doc, st.name);
      beta(sp);
      r.add("beta is an isomorphism", true, {}, std::to_string(sp.size()) + " points");
      const DualBSet d = dual_bset(sp);
      r.merge(bset_lemma_report(d.bset), "sections: ");
      r.add("sections form a sheaf", sheaf_condition(d.bset.presheaf(), d.bset.base()));
      break;
    }
    case StanzaKind::kMorphism:
    case StanzaKind::kRelmor: r.merge(morphism_report(doc, st)); break;
  }
  return r;
}

int finish(Ctx& c, const Report& r) {
  c.out << r;
  return r.ok() ? kExitOk : kExitFailure;
}

Document load(const std::string& path) { return parse(read_file(path)); }

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');) {
    auto b = t.find_first_not_of(" \t"), e = t.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(t.substr(b, e - b + 1));
  }
  return out;
}

std::string ultrafilter_name(const BooleanAlgebra& b, const FilterSet& f) {
  for (Elem m : members_of(f.members)) {
    bool least = true;
    for (Elem y : members_of(f.members)) least = least && b.leq(m, y);
    if (least) return "up(" + b.name(m) + ")";
  }
  return "?";
}

int cmd_ultrafilters(Ctx& c, const Document& doc, const std::string& name) {
  const Stanza& st = doc.get(name);
  if (st.kind == StanzaKind::kBalg) {
    const BooleanAlgebra b = resolve_balg(doc, name);
    for (const auto& f : b.ultrafilters()) {
      std::vector<std::string> m;
      for (Elem e : members_of(f.members)) m.push_back(b.name(e));
      c.out << ultrafilter_name(b, f) << ": " << join_names(m, ", ") << "\n";
    }
    return kExitOk;
  }
  const BooleanSet x = resolve_bset(doc, name);
  const EtaleDual d = bset_to_etale(x);
  for (Elem i = 0; i < d.points.size(); ++i) {
    std::vector<std::string> m;
    for (Elem e : members_of(d.points[i].members)) m.push_back(x.name(e));
    c.out << d.space.name(i) << " over " << d.space.base_name(d.space.proj(i)) << ": " << join_names(m, ", ") << "\n";
  }
  return kExitOk;
}

int cmd_sections(Ctx& c, const Document& doc, const std::string& name, const std::optional<std::string>& over) {
  const FinEtaleSpace sp = resolve_etale(doc, name);
  auto print_over = [&](const IndexSet& a) {
    for (const auto& s : sections_over(sp, a)) c.out << subset_name(sp, a) << ": " << section_name(sp, s) << "\n";
  };
  if (over) {
    IndexSet a(sp.base_size());
    if (*over != "~")
      for (const auto& u : split_commas(*over)) a.set(sp.base_index_of(u));
    print_over(a);
    return kExitOk;
  }
  if (sp.base_size() > 16) throw std::invalid_argument("listing every section needs at most 16 base points");
  for (unsigned mask = 0; mask < (1u << sp.base_size()); ++mask) {
    IndexSet a(sp.base_size(), mask);
    print_over(a);
  }
  return kExitOk;
}

int cmd_roundtrip(Ctx& c, const Document& doc, const std::string& name) {
  const Stanza& st = doc.get(name);
  try {
    switch (st.kind) {
      case StanzaKind::kBset: {
        const BooleanSet x = resolve_bset(doc, name);
        alpha(x);
        c.out << "alpha: isomorphism (" << x.size() << " elements)\n";
        return kExitOk;
      }
      case StanzaKind::kEtale: {
        const FinEtaleSpace sp = resolve_etale(doc, name);
        beta(sp);
        c.out << "beta: isomorphism (" << sp.size() << " points)\n";
        return kExitOk;
      }
      case StanzaKind::kSkew: {
        const SkewAlgebra s = resolve_skew(doc, name);
        if (!(to_skew(from_skew(s)) == s)) {
          c.out << "FAIL skew: to_skew(from_skew(S)) differs from S\n";
          return kExitFailure;
        }
        c.out << "skew: to_skew(from_skew(S)) = S (" << s.size() << " elements)\n";
        return kExitOk;
      }
      default:
        throw std::invalid_argument("roundtrip takes a bset, etale or skew stanza");
    }
  } catch (const InternalError& e) {
    c.out << "FAIL roundtrip: " << e.what() << "\n";
    return kExitFailure;
  }
}

int cmd_convert(Ctx& c, const Document& doc, const std::string& name, const std::string& command) {
  const Stanza& st = doc.get(name);
  Document out;
  if (command == "to-skew") {
    out.add(make_stanza(name + "_skew", to_skew(resolve_bset(doc, name)).to_input()));
  } else if (command == "to-bset") {
    BooleanSet x;
    if (st.kind == StanzaKind::kSkew) x = from_skew(resolve_skew(doc, name));
    else if (st.kind == StanzaKind::kBand) {
      const RightNormalBand b = resolve_band(doc, name);
      if (!is_boolean_band(b)) fail("NotABooleanBand", {name}, "the band does not come from a Boolean set");
      x = band_to_boolean_set(b);
    } else if (st.kind == StanzaKind::kEtale) x = dual_bset(resolve_etale(doc, name)).bset;
    else throw std::invalid_argument("to-bset takes a skew, band or etale stanza");
    out = bset_document(x, name + "_bset");
  } else {  // dualize
    if (st.kind == StanzaKind::kBset) out.add(make_stanza(name + "_dual", bset_to_etale(resolve_bset(doc, name)).space.to_input()));
    else if (st.kind == StanzaKind::kEtale) out = bset_document(dual_bset(resolve_etale(doc, name)).bset, name + "_dual");
    else throw std::invalid_argument("dualize takes a bset or etale stanza");
  }
  c.out << print(out);
  return kExitOk;
}

int cmd_export(Ctx& c, const Document& doc, const std::string& name) {
  const Stanza& st = doc.get(name);
  switch (st.kind) {
    case StanzaKind::kBalg: c.out << dot_balg(resolve_balg(doc, name), name); break;
    case StanzaKind::kSkew: c.out << dot_skew(resolve_skew(doc, name), name); break;
    case StanzaKind::kBset: c.out << dot_bset(resolve_bset(doc, name), name); break;
    case StanzaKind::kEtale: c.out << dot_etale(resolve_etale(doc, name), name); break;
    case StanzaKind::kBand: c.out << dot_bset(band_to_boolean_set(resolve_band(doc, name)), name); break;
    default: throw std::invalid_argument("export takes a balg, skew, band, bset or etale stanza");
  }
  return kExitOk;
}

int cmd_replay(Ctx& c, const Document& doc, const std::string& name, const std::string& law,
               const std::vector<std::string>& witness) {
  const Stanza& st = doc.get(name);
  const Violation v{law, witness, {}};
  ReplayResult r;
  switch (st.kind) {
    case StanzaKind::kBalg: r = replay_balg(std::get<BalgInput>(st.body), v); break;
    case StanzaKind::kSkew: r = replay_skew(std::get<SkewInput>(st.body), v); break;
    case StanzaKind::kBand: r = replay_band(std::get<BandInput>(st.body), v); break;
    case StanzaKind::kBset: {
      const auto& b = std::get<BsetStanza>(st.body);
      r = replay_bset(balg_input(stanza_of(doc, b.over, StanzaKind::kBalg)), b.data, v);
      break;
    }
    default: throw std::invalid_argument("replay takes a balg, skew, band or bset stanza");
  }
  const std::string shown = law + " witness (" + join_names(witness) + ")";
  if (!r.recognized) {
    c.err << "replay: " << r.explanation << "\n";
    return kExitParse;
  }
  c.out << (r.violated ? "CONFIRMED " : "NOT CONFIRMED ") << shown << ": " << r.explanation << "\n";
  return r.violated ? kExitFailure : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew Boolean algebras, Boolean sets and etale spaces on finite instances", "skewdual"};
  app.require_subcommand(1);
  std::string file, name, law, over, stalks;
  std::vector<std::string> witness;
  unsigned atoms = 0;
  std::uint64_t seed = 0;
  bool dot = false;
  std::string gen_name = "Gen";

  auto with_file = [&](CLI::App* sub, bool needs_name) {
    sub->add_option("file", file, "document")->required();
    auto* o = sub->add_option("name", name, "stanza name");
    if (needs_name) o->required();
  };
  auto* validate = app.add_subcommand("validate", "validate every stanza, or one");
  with_file(validate, false);
  const std::pair<const char*, const char*> named[] = {
      {"to-skew", "skew Boolean algebra of a Boolean set"},
      {"to-bset", "Boolean set of a skew algebra, band or etale space"},
      {"dualize", "etale dual of a Boolean set, or section dual of an etale space"},
      {"roundtrip", "check the double dual or skew round trip is an isomorphism"},
      {"ultrafilters", "ultrafilters of a Boolean algebra or Boolean set"},
      {"check-morphism", "validate a morphism stanza and report its flags"}};
  for (const auto& [c, what] : named) with_file(app.add_subcommand(c, what), true);
  auto* props = app.add_subcommand("props", "property suites for one stanza or all");
  with_file(props, false);
  auto* sections = app.add_subcommand("sections", "local sections of an etale space");
  with_file(sections, true);
  auto* over_opt = sections->add_option("--over", over, "comma-separated base points, ~ for none");
  auto* gen = app.add_subcommand("gen", "generated Boolean set: atoms with the given stalk sizes");
  gen->add_option("--atoms", atoms)->required();
  gen->add_option("--stalks", stalks)->required();
  gen->add_option("--seed", seed);
  gen->add_option("--name", gen_name);
  auto* exp = app.add_subcommand("export", "Graphviz rendering");
  exp->add_flag("--dot", dot)->required();
  with_file(exp, true);
  auto* replay = app.add_subcommand("replay", "re-check a reported law violation on the raw stanza");
  with_file(replay, true);
  replay->add_option("law", law)->required();
  replay->add_option("witness", witness);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  Ctx c{out, err};
  CLI::App* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();
  try {
    if (cmd == "gen") {
      std::vector<unsigned> sizes;
      for (const auto& s : split_commas(stalks)) sizes.push_back(static_cast<unsigned>(std::stoul(s)));
      if (sizes.size() != atoms) {
        err << "gen: --stalks needs one size per atom\n";
        return kExitParse;
      }
      out << print(bset_document(generate_boolean_set(sizes, seed), gen_name));
      return kExitOk;
    }
    const Document doc = load(file);
    if (cmd == "validate" || cmd == "props") {
      Report r;
      for (const auto& st : doc.stanzas()) {
        if (!name.empty() && st.name != name) continue;
        if (cmd == "validate") {
          validate_stanza(doc, st, r);
        } else {
          try {
            r.merge(props_of(doc, st), name.empty() ? st.name + ": " : "");
          } catch (const ValidationError& e) {
            r.add(st.name, false, {}, e.violation().message());
          }
        }
      }
      if (!name.empty()) doc.get(name);
      return finish(c, r);
    }
    if (cmd == "to-skew" || cmd == "to-bset" || cmd == "dualize") return cmd_convert(c, doc, name, cmd);
    if (cmd == "roundtrip") return cmd_roundtrip(c, doc, name);
    if (cmd == "ultrafilters") return cmd_ultrafilters(c, doc, name);
    if (cmd == "sections") return cmd_sections(c, doc, name, over_opt->count() ? std::optional(over) : std::nullopt);
    if (cmd == "check-morphism") {
      const Stanza& st = doc.get(name);
      if (st.kind != StanzaKind::kMorphism && st.kind != StanzaKind::kRelmor)
        throw std::invalid_argument(name + " is not a morphism or relmor stanza");
      return finish(c, morphism_report(doc, st));
    }
    if (cmd == "export") return cmd_export(c, doc, name);
    if (cmd == "replay") return cmd_replay(c, doc, name, law, witness);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    out << "FAIL " << e.violation().message() << "\n";
    return kExitFailure;
  } catch (const InternalError& e) {
    out << "FAIL internal: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << cmd << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const std::runtime_error& e) {
    err << cmd << ": " << e.what() << "\n";
    return kExitParse;
  }
  return kExitParse;
}

}  // namespace skewdual
