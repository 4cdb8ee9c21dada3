#ifndef SKEWDUAL_COMMON_HPP
#define SKEWDUAL_COMMON_HPP

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace skewdual {

/// Dense index of an element inside one finite structure.  Indices follow
/// the input order of the element ids.
using Elem = std::uint32_t;
inline constexpr Elem kNone = std::numeric_limits<Elem>::max();

/// A subset of the dense indices of some structure.
using IndexSet = boost::dynamic_bitset<>;

IndexSet make_set(std::size_t universe, std::initializer_list<Elem> members);
IndexSet make_set(std::size_t universe, const std::vector<Elem>& members);
std::vector<Elem> members_of(const IndexSet& set);

/// A failed law together with the element ids that witness the failure.
struct Violation {
  std::string law;
  std::vector<std::string> witness;
  std::string detail;

  std::string message() const;
};

/// Thrown by every validator.  The carried violation is machine readable so
/// that callers (tests, the CLI, the witness replay) can act on it.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(Violation v);
  const Violation& violation() const noexcept { return violation_; }
  const std::string& law() const noexcept { return violation_.law; }
  const std::vector<std::string>& witness() const noexcept { return violation_.witness; }

 private:
  Violation violation_;
};

[[noreturn]] void fail(std::string law, std::vector<std::string> witness, std::string detail = {});

/// Raised when a property that the theory guarantees on validated input does
/// not hold.  Seeing one means a bug in this library, not in the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

void ensure(bool condition, std::string_view what);

/// Row-major n x n table of element indices (Cayley tables, meet tables).
class SquareTable {
 public:
  SquareTable() = default;
  explicit SquareTable(std::size_t n, Elem fill = kNone) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  Elem operator()(Elem i, Elem j) const { return cells_[i * n_ + j]; }
  Elem& operator()(Elem i, Elem j) { return cells_[i * n_ + j]; }

  friend bool operator==(const SquareTable&, const SquareTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> cells_;
};

/// One line of a property report.
struct Check {
  std::string name;
  bool ok = true;
  std::vector<std::string> witness;
  std::string detail;
};

class Report {
 public:
  void add(std::string name, bool ok, std::vector<std::string> witness = {}, std::string detail = {});
  void add(Check check) { checks_.push_back(std::move(check)); }
  void merge(const Report& other, std::string_view prefix = {});

  bool ok() const;
  const std::vector<Check>& checks() const noexcept { return checks_; }
  const Check* find(std::string_view name) const;
  std::size_t failures() const;

 private:
  std::vector<Check> checks_;
};

std::ostream& operator<<(std::ostream& os, const Report& report);

std::string join_names(const std::vector<std::string>& names, std::string_view sep = ",");

}  // namespace skewdual

#endif  // SKEWDUAL_COMMON_HPP
