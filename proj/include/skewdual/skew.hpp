#ifndef SKEWDUAL_SKEW_HPP
#define SKEWDUAL_SKEW_HPP

#include "skewdual/balg.hpp"
#include "skewdual/common.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace skewdual {

/// Raw double Cayley table.  `circ[i][j]` is the id of elements[i] o elements[j].
struct SkewInput {
  std::vector<std::string> elements;
  std::vector<std::vector<std::string>> circ;
  std::vector<std::vector<std::string>> bullet;
  std::string zero;
};

/// The principal ideal x-down = {x o s o x}, validated as a unital Boolean
/// algebra under the natural order.
struct DownSet {
  std::vector<Elem> members;  // global indices, ascending
  std::vector<Elem> local;    // global index -> index in `algebra`, or kNone
  BooleanAlgebra algebra;
};

/// A right-hand skew Boolean algebra (B, o, *, 0).  Element order is the input
/// order; operations are table lookups.
class SkewAlgebra {
 public:
  /// Checks both bands and the axioms SB1-SB5 in that order and throws the
  /// first failure: NotABand(circ), NotABand(bullet), SB1 ... SB5, with the
  /// lexicographically first witness tuple.
  static SkewAlgebra validate(const SkewInput& input);
  static SkewAlgebra from_tables(std::vector<std::string> names, SquareTable circ, SquareTable bullet, Elem zero);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Elem e) const { return names_[e]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<Elem> find(const std::string& name) const;
  Elem index_of(const std::string& name) const;

  Elem circ(Elem x, Elem y) const { return circ_(x, y); }
  Elem bullet(Elem x, Elem y) const { return bullet_(x, y); }
  Elem zero() const noexcept { return zero_; }
  const SquareTable& circ_table() const noexcept { return circ_; }
  const SquareTable& bullet_table() const noexcept { return bullet_; }
  const DownSet& down(Elem x) const { return down_[x]; }

  SkewInput to_input() const;

  /// Same ids in the same order with identical tables and zero.
  friend bool operator==(const SkewAlgebra& a, const SkewAlgebra& b) {
    return a.names_ == b.names_ && a.circ_ == b.circ_ && a.bullet_ == b.bullet_ && a.zero_ == b.zero_;
  }

 private:
  SkewAlgebra() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Elem> index_;
  SquareTable circ_;
  SquareTable bullet_;
  Elem zero_ = 0;
  std::vector<DownSet> down_;
};

/// x <= y iff x = x o y (equivalently y = x * y).
bool natural_leq(const SkewAlgebra& s, Elem x, Elem y);

/// x \ y: the complement of y o x inside the unital algebra x-down.
Elem skew_rel_complement(const SkewAlgebra& s, Elem x, Elem y);

/// Greatest lower / least upper bound under the natural order, by scan.
std::optional<Elem> meet(const SkewAlgebra& s, Elem x, Elem y);
std::optional<Elem> join(const SkewAlgebra& s, Elem x, Elem y);
bool is_wedge_algebra(const SkewAlgebra& s);

/// Partition by Green's R relation of (B, o) together with the induced
/// Boolean algebra.  Classes are ordered by their first member.
struct GammaQuotient {
  std::vector<Elem> class_of;
  std::vector<std::vector<Elem>> classes;
  BooleanAlgebra algebra;
};

/// Throws QuotientNotBoolean (or NotACongruence) when the quotient is not a
/// Boolean algebra whose meet and join are the induced operations.
GammaQuotient gamma_classes(const SkewAlgebra& s);

/// Right normality, distributivity of o over *, the (B,*,0) monoid, flat
/// gamma classes, gamma = R for both operations, and the join formula
/// x * y = x \/ (y \ x).  Exhaustive over all tuples.
Report check_consequences(const SkewAlgebra& s);

struct SkewMorphism {
  std::vector<Elem> map;
  BAHom quotient;  // induced map on gamma classes

  Elem operator()(Elem e) const { return map[e]; }
};

/// Throws NotAMorphism(x, y) naming the operation that is not preserved.
SkewMorphism validate_skew_morphism(const SkewAlgebra& source, const SkewAlgebra& target, std::vector<Elem> map);
bool is_wedge_morphism(const SkewAlgebra& source, const SkewAlgebra& target, const SkewMorphism& m);
SkewMorphism compose(const SkewMorphism& second, const SkewMorphism& first);

/// Same algebra with its elements listed in `order` (a permutation of the
/// current indices).
SkewAlgebra reorder(const SkewAlgebra& s, const std::vector<Elem>& order);

}  // namespace skewdual

#endif  // SKEWDUAL_SKEW_HPP
