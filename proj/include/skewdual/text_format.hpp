#ifndef SKEWDUAL_TEXT_FORMAT_HPP
#define SKEWDUAL_TEXT_FORMAT_HPP

#include "skewdual/balg.hpp"
#include "skewdual/bset.hpp"
#include "skewdual/etale.hpp"
#include "skewdual/skew.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace skewdual {

using NamePairs = std::vector<std::pair<std::string, std::string>>;

struct BsetStanza {
  std::string over;
  PresheafInput data;
};

/// Element map (and base map for Boolean sets) between two earlier stanzas.
/// The kind of morphism follows the kind of the source stanza.
struct MorphismInput {
  std::string source;
  std::string target;
  NamePairs map;
  NamePairs base;
};

/// phi as a relation: every pair x->y puts y into phi(x).
struct RelmorInput {
  std::string source;
  std::string target;
  NamePairs phi;
  NamePairs base;
};

enum class StanzaKind { kBalg, kSkew, kBand, kBset, kEtale, kMorphism, kRelmor };

std::string_view keyword(StanzaKind kind);

/// Stanza bodies are kept raw: validation happens when a command asks for
/// the structure, so invalid instances can still be loaded and replayed.
struct Stanza {
  StanzaKind kind;
  std::string name;
  std::variant<BalgInput, SkewInput, BandInput, BsetStanza, EtaleInput, MorphismInput, RelmorInput> body;
  int line = 0;
};

class Document {
 public:
  /// Throws ParseError(DuplicateName).
  void add(Stanza stanza);
  const std::vector<Stanza>& stanzas() const noexcept { return stanzas_; }
  const Stanza* find(std::string_view name) const;
  /// Throws ParseError(UnresolvedReference).
  const Stanza& get(std::string_view name) const;

 private:
  std::vector<Stanza> stanzas_;
};

class ParseError : public std::runtime_error {
 public:
  enum class Kind { kSyntax, kUnresolvedReference, kDuplicateName };
  ParseError(Kind kind, int line, int col, std::string what);

  Kind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }
  /// The expected token for syntax errors, otherwise the offending name.
  const std::string& subject() const noexcept { return subject_; }

 private:
  Kind kind_;
  int line_;
  int col_;
  std::string subject_;
};

/// Stanzas are `keyword name [over name] {`, body lines `key: v1, v2, ..`
/// and a closing `}`.  `#` starts a comment.
Document parse(std::string_view text);

std::string print(const Stanza& stanza);
std::string print(const Document& doc);

/// The declared bottom, or the first element below every other one under
/// the reflexive-transitive closure of the leq pairs, or the first element.
std::string effective_bottom(const BalgInput& in);

Stanza make_stanza(std::string name, BalgInput in);
Stanza make_stanza(std::string name, SkewInput in);
Stanza make_stanza(std::string name, BandInput in);
Stanza make_stanza(std::string name, std::string over, PresheafInput in);
Stanza make_stanza(std::string name, EtaleInput in);

}  // namespace skewdual

#endif  // SKEWDUAL_TEXT_FORMAT_HPP
