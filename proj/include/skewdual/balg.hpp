#ifndef SKEWDUAL_BALG_HPP
#define SKEWDUAL_BALG_HPP

#include "skewdual/common.hpp"

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace skewdual {

/// Raw description of an order: element ids plus generating `x<=y` pairs.
/// The reflexive-transitive closure is taken by the validators.
struct BalgInput {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> leq;
  std::string bottom;
};

/// A finite meet semilattice.  Used as the base of general presheaves; the
/// Boolean case is `BooleanAlgebra`, which carries one of these.
class Semilattice {
 public:
  /// Validates a partial order with all binary meets.
  /// Throws NotAPoset(x,y) or NotASemilattice(x,y).
  Semilattice() = default;
  static Semilattice from_input(const std::vector<std::string>& elements,
                                const std::vector<std::pair<std::string, std::string>>& leq);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Elem e) const { return names_[e]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Elem> find(const std::string& name) const;
  Elem index_of(const std::string& name) const;

  bool leq(Elem a, Elem b) const { return up_[a].test(b); }
  Elem meet(Elem a, Elem b) const { return meet_(a, b); }
  Elem bottom() const noexcept { return bottom_; }
  /// Elements f with e covering f in the Hasse diagram, in index order.
  const std::vector<Elem>& lower_covers(Elem e) const { return lower_covers_[e]; }
  bool covers(Elem e, Elem f) const;
  const IndexSet& up_set(Elem e) const { return up_[e]; }
  const IndexSet& down_set(Elem e) const { return down_[e]; }

 private:
  friend class BooleanAlgebra;
  void finish_covers();

  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
  std::vector<IndexSet> up_;
  std::vector<IndexSet> down_;
  SquareTable meet_;
  std::vector<std::vector<Elem>> lower_covers_;
  Elem bottom_ = 0;
};

/// A subset of a Boolean algebra used as a filter or an ideal.
struct FilterSet {
  IndexSet members;

  bool contains(Elem e) const { return members.test(e); }
  friend bool operator==(const FilterSet&, const FilterSet&) = default;
};

/// A finite (generalized) Boolean algebra: a relatively complemented
/// distributive lattice with bottom.  Meet, join and relative complement
/// tables are derived from the order at validation time.
class BooleanAlgebra {
 public:
  /// Throws NotAPoset, NotALattice, NotDistributive, NoBottom or
  /// NoRelativeComplement, each with witness element ids, plus
  /// UnknownElement for ids not declared in `elements`.
  static BooleanAlgebra validate(const BalgInput& input);
  BooleanAlgebra() = default;

  std::size_t size() const noexcept { return order_.size(); }
  const Semilattice& order() const noexcept { return order_; }
  const std::string& name(Elem e) const { return order_.name(e); }
  const std::vector<std::string>& names() const noexcept { return order_.names(); }
  Elem index_of(const std::string& name) const { return order_.index_of(name); }
  std::optional<Elem> find(const std::string& name) const { return order_.find(name); }

  bool leq(Elem a, Elem b) const { return order_.leq(a, b); }
  Elem meet(Elem a, Elem b) const { return order_.meet(a, b); }
  Elem join(Elem a, Elem b) const { return join_(a, b); }
  Elem bottom() const noexcept { return order_.bottom(); }
  std::optional<Elem> top() const noexcept { return top_; }

  /// e \ f: the complement of e /\ f inside the unital algebra e-down.
  Elem rel_complement(Elem e, Elem f) const { return relcomp_(e, f); }
  const std::vector<Elem>& atoms() const noexcept { return atoms_; }

  /// Maximal proper filters, ordered by the index of their least element.
  const std::vector<FilterSet>& ultrafilters() const noexcept { return ultrafilters_; }

  /// Source input, kept so that derived algebras can be printed back.
  BalgInput to_input() const;

 private:

  Semilattice order_;
  SquareTable join_;
  SquareTable relcomp_;
  std::vector<Elem> atoms_;
  std::optional<Elem> top_;
  std::vector<FilterSet> ultrafilters_;
};

/// Input for the powerset of `k` atoms, elements in bitmask order.
BalgInput powerset_input(unsigned k, const std::function<std::string(unsigned mask)>& namer);

/// Element id of a bitmask over named atoms: "0" for the empty set, "1" for
/// the full set, otherwise the atom names concatenated.
std::string atom_mask_name(const std::vector<std::string>& atom_names, unsigned mask);

FilterSet up_closure(const BooleanAlgebra& b, Elem e);
FilterSet down_closure(const BooleanAlgebra& b, Elem e);

bool is_filter(const BooleanAlgebra& b, const IndexSet& s);
bool is_ideal(const BooleanAlgebra& b, const IndexSet& s);
bool is_proper(const BooleanAlgebra& b, const IndexSet& s);
bool is_prime_filter(const BooleanAlgebra& b, const IndexSet& s);
bool is_prime_ideal(const BooleanAlgebra& b, const IndexSet& s);

/// Every filter of a finite lattice is principal, so the filters are exactly
/// the up-sets of single elements.  Returned in element order.
std::vector<FilterSet> all_filters(const BooleanAlgebra& b);
std::vector<FilterSet> all_ideals(const BooleanAlgebra& b);

/// Maximal proper filters, ordered by the index of their least element.
const std::vector<FilterSet>& ultrafilters(const BooleanAlgebra& b);

/// First ultrafilter containing exactly one of `a`, `c`.
/// Throws NotDistinct or ZeroArgument.
FilterSet separating_ultrafilter(const BooleanAlgebra& b, Elem a, Elem c);

/// First ultrafilter containing `filter` and disjoint from `ideal`.
/// Throws NotAFilter, NotAnIdeal or NotDisjoint.
FilterSet extend_filter_avoiding_ideal(const BooleanAlgebra& b, const FilterSet& filter, const FilterSet& ideal);

/// M(a): the indices (into `ufs`) of the ultrafilters containing a.
IndexSet stone_map(const std::vector<FilterSet>& ufs, Elem a);

/// Homomorphism of Boolean algebras: preserves meets, joins and bottom.
struct BAHom {
  std::vector<Elem> map;

  Elem operator()(Elem e) const { return map[e]; }
  friend bool operator==(const BAHom&, const BAHom&) = default;
};

/// Throws NotAHomomorphism with the offending pair (or single element for
/// the bottom law).
BAHom validate_ba_hom(const BooleanAlgebra& source, const BooleanAlgebra& target, std::vector<Elem> map);

/// True iff every target element lies below some image element.
bool is_proper_hom(const BooleanAlgebra& source, const BooleanAlgebra& target, const BAHom& h);

BAHom identity_hom(const BooleanAlgebra& b);
BAHom compose(const BAHom& second, const BAHom& first);

/// {a : h(a) in f}.
IndexSet preimage(const BAHom& h, std::size_t source_size, const IndexSet& f);

/// Exhaustive check of the standard facts about filters, ideals and
/// ultrafilters, and of a -> M(a) being an isomorphism onto the powerset of
/// the ultrafilter set.
Report stone_report(const BooleanAlgebra& b);

}  // namespace skewdual

#endif  // SKEWDUAL_BALG_HPP
