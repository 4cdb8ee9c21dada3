#ifndef SKEWDUAL_TESTS_SUPPORT_HPP
#define SKEWDUAL_TESTS_SUPPORT_HPP

#include "skewdual/balg.hpp"
#include "skewdual/bset.hpp"
#include "skewdual/cli.hpp"
#include "skewdual/etale.hpp"
#include "skewdual/skew.hpp"
#include "skewdual/text_format.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace skewdual::testing {

inline std::string fixture_path(const std::string& file) { return std::string(SKEWDUAL_FIXTURE_DIR) + "/" + file; }

inline Document fixture(const std::string& file) {
  std::ifstream in(fixture_path(file));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

inline BooleanAlgebra powerset(unsigned k) {
  static const std::vector<std::string> atoms{"a", "b", "c", "d", "e", "f"};
  std::vector<std::string> names(atoms.begin(), atoms.begin() + k);
  return BooleanAlgebra::validate(powerset_input(k, [&](unsigned m) { return atom_mask_name(names, m); }));
}

inline BooleanAlgebra chain_of_two() { return BooleanAlgebra::validate(BalgInput{{"0", "1"}, {{"0", "1"}}, "0"}); }

inline SkewInput x3_input() {
  return SkewInput{{"0", "x1", "x2"},
                   {{"0", "0", "0"}, {"0", "x1", "x2"}, {"0", "x1", "x2"}},
                   {{"0", "x1", "x2"}, {"x1", "x1", "x1"}, {"x2", "x2", "x2"}},
                   "0"};
}

inline SkewAlgebra x3() { return SkewAlgebra::validate(x3_input()); }
inline BooleanSet prod() { return resolve_bset(fixture("prod.txt"), "Prod"); }
inline FinEtaleSpace efix() { return resolve_etale(fixture("efix.txt"), "Efix"); }

inline PresheafInput prod_input() {
  auto doc = fixture("prod.txt");
  return std::get<BsetStanza>(doc.get("Prod").body).data;
}

/// Constant presheaf with one point in every stalk over `b`.
inline BooleanSet constant_bset(const BooleanAlgebra& b, const std::string& prefix = "c") {
  PresheafInput in;
  for (Elem e = 0; e < b.size(); ++e) in.stalks.push_back({b.name(e), {prefix + b.name(e)}});
  for (Elem e = 0; e < b.size(); ++e)
    for (Elem f : b.order().lower_covers(e)) in.restrictions.push_back({b.name(e), b.name(f), {{prefix + b.name(e), prefix + b.name(f)}}});
  return BooleanSet::validate(b, in);
}

template <class F>
std::string violation_law(F&& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.law();
  }
  return "";
}

template <class F>
Violation violation_of(F&& f) {
  try {
    f();
  } catch (const ValidationError& e) {
    return e.violation();
  }
  return {};
}

}  // namespace skewdual::testing

#endif  // SKEWDUAL_TESTS_SUPPORT_HPP
