#ifndef SKEWDUAL_REPLAY_HPP
#define SKEWDUAL_REPLAY_HPP

#include "skewdual/balg.hpp"
#include "skewdual/bset.hpp"
#include "skewdual/common.hpp"
#include "skewdual/skew.hpp"

#include <optional>
#include <string>

namespace skewdual {

/// Outcome of re-checking one reported violation against raw input data.
/// Nothing here calls the validators: orders, tables and restrictions are
/// recomputed from the id strings.
struct ReplayResult {
  bool recognized = false;  // the law name and witness shape are understood
  bool violated = false;    // the witness really breaks the law
  std::string explanation;
};

ReplayResult replay_balg(const BalgInput& in, const Violation& v);
ReplayResult replay_skew(const SkewInput& in, const Violation& v);
ReplayResult replay_band(const BandInput& in, const Violation& v);
ReplayResult replay_bset(const BalgInput& base, const PresheafInput& in, const Violation& v);

/// Full raw validity checks, independent of the validators.  nullopt means
/// the data is a valid instance; otherwise a short description of a defect.
std::optional<std::string> raw_balg_defect(const BalgInput& in);
std::optional<std::string> raw_skew_defect(const SkewInput& in);
std::optional<std::string> raw_bset_defect(const BalgInput& base, const PresheafInput& in);

}  // namespace skewdual

#endif  // SKEWDUAL_REPLAY_HPP
