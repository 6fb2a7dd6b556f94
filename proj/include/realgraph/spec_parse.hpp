#pragma once

#include <string>

#include "realgraph/constructions.hpp"

// Parsers for the two group-description surfaces: compact command-line spec
// strings ("named:dihedral:6", "paper:g150", "twisted:4", "file:groups.txt")
// and the line-oriented file format ("named dihedral 6", or a perm/matrix/
// semidirect header followed by generator lines).

namespace rg {

// Parses a command-line spec string.  "file:<path>" loads and parses the
// file.  Throws std::invalid_argument with an explanation on bad input.
GroupSpec parse_spec_string(const std::string& text);

// Parses the file format.  Errors carry 1-based line numbers.
GroupSpec parse_spec_text(const std::string& text);

}  // namespace rg
