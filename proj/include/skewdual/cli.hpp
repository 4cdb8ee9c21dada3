#ifndef SKEWDUAL_CLI_HPP
#define SKEWDUAL_CLI_HPP

#include "skewdual/text_format.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace skewdual {

/// Exit codes of the command line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation or property failure
inline constexpr int kExitParse = 2;    // unreadable document or command line

/// Runs one command; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Validated structures behind stanzas.  Throw ValidationError for invalid
// data and std::invalid_argument for a stanza of the wrong kind.
BooleanAlgebra resolve_balg(const Document& doc, const std::string& name);
SkewAlgebra resolve_skew(const Document& doc, const std::string& name);
RightNormalBand resolve_band(const Document& doc, const std::string& name);
BooleanSet resolve_bset(const Document& doc, const std::string& name);
FinEtaleSpace resolve_etale(const Document& doc, const std::string& name);
RelationalMorphism resolve_relmor(const Document& doc, const std::string& name);

/// A Boolean algebra and Boolean set as two stanzas, `<name>_base` first.
Document bset_document(const BooleanSet& x, const std::string& name);

}  // namespace skewdual

#endif  // SKEWDUAL_CLI_HPP
