#include "skewdual/common.hpp"

#include <sstream>

namespace skewdual {

IndexSet make_set(std::size_t universe, std::initializer_list<Elem> members) {
  IndexSet s(universe);
  for (Elem m : members) s.set(m);
  return s;
}

IndexSet make_set(std::size_t universe, const std::vector<Elem>& members) {
  IndexSet s(universe);
  for (Elem m : members) s.set(m);
  return s;
}

std::vector<Elem> members_of(const IndexSet& set) {
  std::vector<Elem> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != IndexSet::npos; i = set.find_next(i)) out.push_back(static_cast<Elem>(i));
  return out;
}

std::string join_names(const std::vector<std::string>& names, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

std::string Violation::message() const {
  std::string out = law;
  if (!witness.empty()) out += " witness (" + join_names(witness) + ")";
  if (!detail.empty()) out += ": " + detail;
  return out;
}

ValidationError::ValidationError(Violation v) : std::runtime_error(v.message()), violation_(std::move(v)) {}

void fail(std::string law, std::vector<std::string> witness, std::string detail) {
  throw ValidationError(Violation{std::move(law), std::move(witness), std::move(detail)});
}

void ensure(bool condition, std::string_view what) {
  if (!condition) throw InternalError(std::string(what));
}

void Report::add(std::string name, bool ok, std::vector<std::string> witness, std::string detail) {
  checks_.push_back(Check{std::move(name), ok, std::move(witness), std::move(detail)});
}

void Report::merge(const Report& other, std::string_view prefix) {
  for (Check c : other.checks_) {
    if (!prefix.empty()) c.name = std::string(prefix) + c.name;
    checks_.push_back(std::move(c));
  }
}

bool Report::ok() const {
  for (const auto& c : checks_)
    if (!c.ok) return false;
  return true;
}

const Check* Report::find(std::string_view name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks_) n += c.ok ? 0 : 1;
  return n;
}

std::ostream& operator<<(std::ostream& os, const Report& report) {
  for (const auto& c : report.checks()) {
    os << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.witness.empty()) os << " witness (" << join_names(c.witness) << ")";
    if (!c.detail.empty()) os << ": " << c.detail;
    os << '\n';
  }
  return os;
}

}  // namespace skewdual
