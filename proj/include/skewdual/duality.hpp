#ifndef SKEWDUAL_DUALITY_HPP
#define SKEWDUAL_DUALITY_HPP

#include "skewdual/balg.hpp"
#include "skewdual/bset.hpp"
#include "skewdual/common.hpp"
#include "skewdual/etale.hpp"

#include <vector>

namespace skewdual {

/// An ultrafilter [a]_F of a Boolean set together with the index of the
/// base ultrafilter F it lies over.
struct BSetUltrafilter {
  IndexSet members;
  Elem over = kNone;  // index into base().ultrafilters()
  Elem least = kNone; // its minimum element

  friend bool operator==(const BSetUltrafilter&, const BSetUltrafilter&) = default;
};

/// For every base ultrafilter F in order, the conjugacy classes of p^{-1}(F)
/// ordered by their first member.  Disjointness, primeness and p([a]_F) = F
/// are asserted.
std::vector<BSetUltrafilter> bset_ultrafilters(const BooleanSet& x);

/// L(a): indices of the ultrafilters containing a.
IndexSet L(const std::vector<BSetUltrafilter>& ufs, Elem a);

/// The etale space X* -> B*.  Points are named "up(x)" after the least
/// element x of the ultrafilter, base points likewise after atoms.
struct EtaleDual {
  std::vector<BSetUltrafilter> points;
  FinEtaleSpace space;
};

EtaleDual bset_to_etale(const BooleanSet& x);

/// a -> L(a) with base map a -> M(a), and its inverse.
struct AlphaIso {
  EtaleDual dual;
  DualBSet double_dual;
  BSetMorphism forward;
  BSetMorphism inverse;
};

/// Throws InternalError unless both directions are morphisms of Boolean sets
/// and mutually inverse.
AlphaIso alpha(const BooleanSet& x);

/// a -> K_a with base map x -> N(x).
struct BetaIso {
  DualBSet dual;
  EtaleDual double_dual;
  std::vector<Elem> map;
  std::vector<Elem> base_map;
};

/// Throws InternalError unless both maps are bijections with
/// q(beta(a)) = betabar(p(a)).
BetaIso beta(const FinEtaleSpace& sp);

/// As a relational morphism with singleton images.
RelationalMorphism beta_relational(const FinEtaleSpace& sp, const BetaIso& b);

/// Section x -> {e : phi(e) meets x}, base map A -> phibar^{-1}(A).
/// Throws NotCovering.
BSetMorphism dual_of_relational(const FinEtaleSpace& source, const DualBSet& source_dual, const FinEtaleSpace& target,
                                const DualBSet& target_dual, const RelationalMorphism& phi);

/// G -> the ultrafilters of X inside phi^{-1}(G), base map F -> phibar^{-1}(F).
/// Throws NotProper when phibar is not proper.
RelationalMorphism dual_of_bset_morphism(const BooleanSet& x, const EtaleDual& x_dual, const BooleanSet& y,
                                         const EtaleDual& y_dual, const BSetMorphism& phi);

/// Binary meets against Hausdorffness of the dual, computed by separating
/// every pair of points with disjoint basic opens L(a), L(b).
Report check_prop13(const BooleanSet& x);
bool is_hausdorff(const BooleanSet& x, const EtaleDual& d);

/// Meet preservation against the dual being a partial map.  Throws
/// NoBinaryMeets.
Report check_prop14(const BooleanSet& x, const BooleanSet& y, const BSetMorphism& phi);

/// The ten topology items plus the filter facts, exhaustively.
Report topology_report(const BooleanSet& x);

/// f: X -> Y, g: Y -> Z.  Identity and composition laws for the dual
/// functor and the naturality squares of alpha for f and g.
Report functor_laws_bset(const BooleanSet& x, const BooleanSet& y, const BooleanSet& z, const BSetMorphism& f,
                         const BSetMorphism& g);

/// f: S -> T, g: T -> U covering morphisms.  Same laws for the section
/// functor and the naturality squares of beta.
Report functor_laws_etale(const FinEtaleSpace& s, const FinEtaleSpace& t, const FinEtaleSpace& u,
                          const RelationalMorphism& f, const RelationalMorphism& g);

}  // namespace skewdual

#endif  // SKEWDUAL_DUALITY_HPP
