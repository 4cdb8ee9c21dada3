#ifndef SKEWDUAL_MUTATE_HPP
#define SKEWDUAL_MUTATE_HPP

#include "skewdual/balg.hpp"
#include "skewdual/bset.hpp"
#include "skewdual/replay.hpp"
#include "skewdual/skew.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace skewdual {

enum class MutationKind { kOrderPair, kTableCell, kRestriction };

/// One seeded single-point change of a valid instance, judged by the
/// validator and cross-examined by the raw replay.
struct MutationOutcome {
  MutationKind kind;
  std::string description;
  bool accepted = false;
  std::optional<Violation> violation;
  ReplayResult replay;
  std::optional<std::string> raw_defect;
  std::string internal_error;

  /// Accepted mutants have no raw defect; rejected ones carry a witness the
  /// replay confirms.
  bool sound() const;
};

/// Removes, adds or reverses one leq pair.
BalgInput mutate_order_pair(const BalgInput& in, std::mt19937_64& rng, std::string& description);
/// Rewrites one cell of the circ or bullet table.
SkewInput mutate_table_cell(const SkewInput& in, std::mt19937_64& rng, std::string& description);
/// Redirects one restriction pair inside or outside its target stalk, or
/// drops it.
PresheafInput mutate_restriction(const PresheafInput& in, std::mt19937_64& rng, std::string& description);

MutationOutcome judge_balg(const BalgInput& in);
MutationOutcome judge_skew(const SkewInput& in);
MutationOutcome judge_bset(const BalgInput& base, const PresheafInput& in);

/// `per_kind` mutants of each kind over a fixed pool of valid instances.
std::vector<MutationOutcome> mutation_campaign(std::size_t per_kind, std::uint64_t seed);

}  // namespace skewdual

#endif  // SKEWDUAL_MUTATE_HPP
