#ifndef SKEWDUAL_BSET_HPP
#define SKEWDUAL_BSET_HPP

#include "skewdual/balg.hpp"
#include "skewdual/common.hpp"
#include "skewdual/skew.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace skewdual {

/// Restriction map along one Hasse cover `from` > `to`, as (x, x|to) pairs.
struct RestrictionInput {
  std::string from;
  std::string to;
  std::vector<std::pair<std::string, std::string>> pairs;
};

/// Raw presheaf data over a named base.  Element ids must be globally unique;
/// the text format guarantees this by prefixing the stalk id ("a.a1").
struct PresheafInput {
  std::vector<std::pair<std::string, std::vector<std::string>>> stalks;
  std::vector<RestrictionInput> restrictions;
  /// Optional explicit element order; stalk order is used when empty.
  std::vector<std::string> element_order;
};

/// A presheaf of sets over a finite meet semilattice.  All composite
/// restrictions are derived from the cover maps and cached once their path
/// independence has been verified.
class Presheaf {
 public:
  Presheaf() = default;

  /// Throws UnknownElement, StalkCollision, DuplicateStalk, NotACover,
  /// MissingRestriction, RestrictionOutOfStalk, AmbiguousRestriction or
  /// PathDependent(x, f, chain1, chain2).
  static Presheaf validate(Semilattice base, const PresheafInput& input);

  const Semilattice& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Elem x) const { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Elem> find(const std::string& id) const;
  Elem index_of(const std::string& id) const;

  Elem proj(Elem x) const { return proj_[x]; }
  const std::vector<Elem>& stalk(Elem e) const { return stalks_[e]; }
  bool has_global_support() const;

  /// x|^{p(x)}_f, or kNone when f is not below p(x).
  Elem restrict(Elem x, Elem f) const { return restrict_[x * base_.size() + f]; }

  /// x <= y iff x = y|^{p(y)}_{p(x)}.
  bool leq(Elem x, Elem y) const { return up_[x].test(y); }
  const IndexSet& up_set(Elem x) const { return up_[x]; }
  const IndexSet& down_set(Elem x) const { return down_[x]; }
  std::optional<Elem> meet(Elem x, Elem y) const;
  std::optional<Elem> join(Elem x, Elem y) const;
  /// The meet exists and lies over p(x) /\ p(y).
  bool compatible(Elem x, Elem y) const;
  /// x o y = y|^{p(y)}_{p(x) /\ p(y)}.
  Elem circ(Elem x, Elem y) const { return restrict(y, base_.meet(proj_[x], proj_[y])); }

  PresheafInput to_input() const;

 private:
  Semilattice base_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<Elem> proj_;
  std::vector<std::vector<Elem>> stalks_;
  std::vector<Elem> restrict_;
  std::vector<IndexSet> up_;
  std::vector<IndexSet> down_;
};

/// A presheaf over a Boolean algebra with global support, a minimum element,
/// a trivial zero stalk, and joins of all compatible pairs.  Meets and joins
/// are found by exhaustive bound scans and cached.
class BooleanSet {
 public:
  BooleanSet() = default;

  /// Throws NoGlobalSupport(e), ZeroStalkNotTrivial(z1, z2), NoMinimum or
  /// MissingJoin(x, y), after the presheaf errors.
  static BooleanSet validate(BooleanAlgebra base, const PresheafInput& input);
  static BooleanSet validate(BooleanAlgebra base, Presheaf presheaf);

  const BooleanAlgebra& base() const noexcept { return base_; }
  const Presheaf& presheaf() const noexcept { return presheaf_; }
  std::size_t size() const noexcept { return presheaf_.size(); }
  const std::string& name(Elem x) const { return presheaf_.name(x); }
  const std::vector<std::string>& names() const noexcept { return presheaf_.names(); }
  Elem index_of(const std::string& id) const { return presheaf_.index_of(id); }
  std::optional<Elem> find(const std::string& id) const { return presheaf_.find(id); }

  Elem proj(Elem x) const { return presheaf_.proj(x); }
  const std::vector<Elem>& stalk(Elem e) const { return presheaf_.stalk(e); }
  Elem restrict(Elem x, Elem f) const { return presheaf_.restrict(x, f); }
  Elem zero() const noexcept { return zero_; }

  bool leq(Elem x, Elem y) const { return presheaf_.leq(x, y); }
  std::optional<Elem> meet(Elem x, Elem y) const;
  std::optional<Elem> join(Elem x, Elem y) const;
  bool compatible(Elem x, Elem y) const;
  bool has_binary_meets() const;

  Elem circ(Elem x, Elem y) const { return presheaf_.circ(x, y); }
  /// y \ x = y|^{p(y)}_{p(y) \ p(x)}.
  Elem setminus(Elem y, Elem x) const;
  /// x * y = x \/ (y \ x).  Throws InternalError if the join is missing.
  Elem bullet(Elem x, Elem y) const;

 private:
  BooleanAlgebra base_;
  Presheaf presheaf_;
  Elem zero_ = 0;
  SquareTable meet_;
  SquareTable join_;
};

/// Element ids equal, and the base correspondence induced by the stalks is
/// an order isomorphism under which stalks and restrictions agree.
bool structurally_equal(const BooleanSet& a, const BooleanSet& b);

SkewAlgebra to_skew(const BooleanSet& x);
BooleanSet from_skew(const SkewAlgebra& s);

/// Morphism of Boolean sets: element map plus the Boolean algebra map of the
/// bases satisfying BM1 and BM2.
struct BSetMorphism {
  std::vector<Elem> map;
  BAHom base_map;
  bool proper = false;  // base map is a proper homomorphism

  Elem operator()(Elem x) const { return map[x]; }
  friend bool operator==(const BSetMorphism& a, const BSetMorphism& b) {
    return a.map == b.map && a.base_map == b.base_map;
  }
};

/// Throws NotAHomomorphism (base map), BM1Violation(x) or
/// BM2Violation(x, a, b).  On success also asserts that joins of compatible
/// pairs are preserved and that the map preserves o, * and 0.
BSetMorphism validate_bset_morphism(const BooleanSet& source, const BooleanSet& target, std::vector<Elem> map,
                                    std::vector<Elem> base_map);
BSetMorphism identity_morphism(const BooleanSet& x);
BSetMorphism compose(const BSetMorphism& second, const BSetMorphism& first);
bool preserves_meets(const BooleanSet& source, const BooleanSet& target, const BSetMorphism& m);

/// Order-compatibility, equality, order-reflection, relative-complement and
/// compatibility identities, exhaustively over all element tuples.
Report bset_lemma_report(const BooleanSet& x);

// --- right normal bands ---------------------------------------------------

struct BandInput {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> table;
};

class RightNormalBand {
 public:
  /// Throws NotABand or NotRightNormal(x, y, z).
  static RightNormalBand validate(const BandInput& input);
  static RightNormalBand from_table(std::vector<std::string> names, SquareTable table);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Elem x) const { return names_[x]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  Elem op(Elem x, Elem y) const { return table_(x, y); }
  const SquareTable& table() const noexcept { return table_; }
  BandInput to_input() const;

  friend bool operator==(const RightNormalBand& a, const RightNormalBand& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

 private:
  RightNormalBand() = default;
  std::vector<std::string> names_;
  SquareTable table_;
};

/// Stalks are the gamma (= R) classes, the base is the quotient semilattice.
Presheaf band_to_presheaf(const RightNormalBand& s);
/// The band (X, o) of a presheaf with global support.
RightNormalBand presheaf_to_band(const Presheaf& p);
RightNormalBand skew_circ_reduct(const SkewAlgebra& s);

/// Quotient is a Boolean algebra, joins of compatible pairs exist, and the
/// bottom class is a single element.
bool is_boolean_band(const RightNormalBand& s);
BooleanSet band_to_boolean_set(const RightNormalBand& s);

// --- covering sieves and the sheaf condition ------------------------------

enum class SieveConvention {
  /// Empty join is 0: the empty sieve covers the bottom element.
  kEmptyCoversBottom,
  /// Only non-empty families a_1 \/ ... \/ a_k with k >= 1.
  kNonEmptyFamilies,
};

bool is_covering_sieve(const BooleanAlgebra& b, Elem c, const IndexSet& sieve,
                       SieveConvention convention = SieveConvention::kEmptyCoversBottom);

/// First covering sieve with a matching family lacking a unique
/// amalgamation.  Witness: (c, sieve members, family members...).
std::optional<Violation> find_sheaf_violation(const Presheaf& p, const BooleanAlgebra& b,
                                              SieveConvention convention = SieveConvention::kEmptyCoversBottom);
bool sheaf_condition(const Presheaf& p, const BooleanAlgebra& b,
                     SieveConvention convention = SieveConvention::kEmptyCoversBottom);

// --- generator -------------------------------------------------------------

/// Base: powerset of k = sizes.size() atoms.  The stalk over e is the product
/// of the atom stalks below e, restrictions are projections.  The seed only
/// permutes labels inside each atom stalk.  Throws EmptySizes.
BooleanSet generate_boolean_set(const std::vector<unsigned>& atom_stalk_sizes, std::uint64_t seed = 0);

}  // namespace skewdual

#endif  // SKEWDUAL_BSET_HPP
