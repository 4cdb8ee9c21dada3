#ifndef SKEWDUAL_DOT_HPP
#define SKEWDUAL_DOT_HPP

#include "skewdual/balg.hpp"
#include "skewdual/bset.hpp"
#include "skewdual/etale.hpp"
#include "skewdual/skew.hpp"

#include <string>

namespace skewdual {

/// Graphviz digraphs, edges pointing up the order.  Boolean sets and etale
/// spaces draw the base as a second cluster with dashed projection edges.
std::string dot_balg(const BooleanAlgebra& b, const std::string& name);
std::string dot_skew(const SkewAlgebra& s, const std::string& name);
std::string dot_bset(const BooleanSet& x, const std::string& name);
std::string dot_etale(const FinEtaleSpace& sp, const std::string& name);

}  // namespace skewdual

#endif  // SKEWDUAL_DOT_HPP
