#ifndef SKEWDUAL_ENUMERATE_HPP
#define SKEWDUAL_ENUMERATE_HPP

#include "skewdual/balg.hpp"
#include "skewdual/bset.hpp"
#include "skewdual/etale.hpp"
#include "skewdual/skew.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace skewdual {

/// Every homomorphism, found by assigning images to the atoms.
std::vector<BAHom> enumerate_ba_homs(const BooleanAlgebra& source, const BooleanAlgebra& target);

/// Every morphism of Boolean sets, over every base homomorphism (or only the
/// proper ones).  Stalk-wise maps are built top-down and pruned by BM2.
std::vector<BSetMorphism> enumerate_bset_morphisms(const BooleanSet& source, const BooleanSet& target,
                                                   bool proper_only = false);

/// Every skew morphism, by exhaustive search over maps fixing zero.
std::vector<SkewMorphism> enumerate_skew_morphisms(const SkewAlgebra& source, const SkewAlgebra& target);

/// Every assignment of cover restriction maps for the given stalk sizes
/// (indexed by base element).  Element ids are "<base>.<k>".  Inputs are
/// raw; some of them fail path independence.
void for_each_presheaf_input(const BooleanAlgebra& base, const std::vector<unsigned>& stalk_sizes,
                             const std::function<void(const PresheafInput&)>& visit);

/// Every surjection from `total` points onto `base` points, as etale spaces
/// with points "e1".. and base points "u1"..
std::vector<FinEtaleSpace> enumerate_surjections(unsigned total, unsigned base);

/// Every relational covering morphism between two spaces over every base map.
std::vector<RelationalMorphism> enumerate_coverings(const FinEtaleSpace& source, const FinEtaleSpace& target);

/// A covering morphism chosen by the seed: a random base map, then for each
/// target point over the image of u a random source point over u.
std::optional<RelationalMorphism> random_covering(const FinEtaleSpace& source, const FinEtaleSpace& target,
                                                  std::uint64_t seed);

}  // namespace skewdual

#endif  // SKEWDUAL_ENUMERATE_HPP
