#ifndef SKEWDUAL_ETALE_HPP
#define SKEWDUAL_ETALE_HPP

#include "skewdual/bset.hpp"
#include "skewdual/common.hpp"

#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace skewdual {

struct EtaleInput {
  std::vector<std::string> total;
  std::vector<std::string> base;
  std::vector<std::pair<std::string, std::string>> proj;
};

/// A surjection p: E -> X of finite sets.  Finite Boolean spaces are
/// discrete, so every such map is a local homeomorphism and every subset is
/// compact-open.
class FinEtaleSpace {
 public:
  FinEtaleSpace() = default;

  /// Throws UnknownElement, DuplicateElement, MissingProjection(e),
  /// AmbiguousProjection(e) or NotSurjective(v).
  static FinEtaleSpace validate(const EtaleInput& input);
  static FinEtaleSpace from_map(std::vector<std::string> total, std::vector<std::string> base, std::vector<Elem> proj);

  std::size_t size() const noexcept { return total_.size(); }
  std::size_t base_size() const noexcept { return base_.size(); }
  const std::string& name(Elem e) const { return total_[e]; }
  const std::string& base_name(Elem u) const { return base_[u]; }
  const std::vector<std::string>& names() const noexcept { return total_; }
  const std::vector<std::string>& base_names() const noexcept { return base_; }
  Elem index_of(const std::string& id) const;
  Elem base_index_of(const std::string& id) const;

  Elem proj(Elem e) const { return proj_[e]; }
  const std::vector<Elem>& fiber(Elem u) const { return fibers_[u]; }
  EtaleInput to_input() const;

  friend bool operator==(const FinEtaleSpace& a, const FinEtaleSpace& b) {
    return a.total_ == b.total_ && a.base_ == b.base_ && a.proj_ == b.proj_;
  }

 private:
  std::vector<std::string> total_;
  std::vector<std::string> base_;
  std::unordered_map<std::string, Elem> total_index_;
  std::unordered_map<std::string, Elem> base_index_;
  std::vector<Elem> proj_;
  std::vector<std::vector<Elem>> fibers_;
};

/// p restricted to `s` is injective.
bool is_section(const FinEtaleSpace& sp, const IndexSet& s);
/// p(s) as a subset of the base.
IndexSet support(const FinEtaleSpace& sp, const IndexSet& s);

/// All transversals over A, lexicographic in the fiber positions with the
/// first point of A varying slowest.
std::vector<IndexSet> sections_over(const FinEtaleSpace& sp, const IndexSet& a);
/// The first fiber point over every point of A.
IndexSet construct_section(const FinEtaleSpace& sp, const IndexSet& a);

/// C restricted to B, i.e. C /\ p^{-1}(B).  Throws NotNested unless B is a
/// subset of p(C).
IndexSet restrict_section(const FinEtaleSpace& sp, const IndexSet& c, const IndexSet& b);
/// a u b|(p(b) \ p(a)).  Throws NotCompatible when a and b disagree over the
/// overlap of their supports.
IndexSet join_sections(const FinEtaleSpace& sp, const IndexSet& a, const IndexSet& b);

/// "e1+e3"; the empty set is "~".
std::string section_name(const FinEtaleSpace& sp, const IndexSet& s);
std::string subset_name(const FinEtaleSpace& sp, const IndexSet& a);

/// The Boolean set of sections over the powerset of the base.
struct DualBSet {
  BooleanSet bset;
  std::vector<IndexSet> sections;     // element -> section
  std::map<IndexSet, Elem> lookup;    // section -> element
  std::vector<IndexSet> base_subset;  // base element -> subset of the base points

  Elem element_of(const IndexSet& section) const;
  /// Base element for a subset, which is its bitmask.
  Elem base_element_of(const IndexSet& subset) const;
};

/// Limited to 16 base points.
DualBSet dual_bset(const FinEtaleSpace& sp);

/// Relational morphism (E,p,X) -> (F,q,Y).  Continuity and properness hold
/// for every map of finite discrete spaces, so those flags are constant.
struct RelationalMorphism {
  std::vector<IndexSet> phi;  // over F
  std::vector<Elem> base_map;
  bool locally_injective = false;
  bool locally_surjective = false;
  bool partial_map = false;
  bool continuous = true;
  bool proper = true;

  bool covering() const noexcept { return locally_injective && locally_surjective; }
  friend bool operator==(const RelationalMorphism& a, const RelationalMorphism& b) {
    return a.phi == b.phi && a.base_map == b.base_map;
  }
};

/// Throws NotAMorphism for malformed maps and FiberViolation(x, y) when
/// y in phi(x) lies outside the fiber over phibar(p(x)).
RelationalMorphism validate_relational_morphism(const FinEtaleSpace& source, const FinEtaleSpace& target,
                                                std::vector<IndexSet> phi, std::vector<Elem> base_map);
RelationalMorphism identity_relational(const FinEtaleSpace& sp);
/// z in (second o first)(x) iff z in second(y) for some y in first(x).  Flags
/// are the conjunction of the factors' flags; revalidate for exact values.
RelationalMorphism compose(const RelationalMorphism& second, const RelationalMorphism& first);

}  // namespace skewdual

#endif  // SKEWDUAL_ETALE_HPP
