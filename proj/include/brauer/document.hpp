#pragma once

#include <string>

#include "brauer/config.hpp"

namespace brauer {

/// Parse a configuration document. Structural problems (malformed text,
/// unknown or repeated sections, duplicate names, nonpositive
/// multiplicities) throw SyntaxError with a 1-based position. A
/// well-formed document whose configuration breaks a model axiom throws
/// SemanticError with the full violation list.
BrauerConfiguration parse_configuration(const std::string& text);

/// Write the canonical document form: the four sections in fixed order,
/// polygon members sorted, multiplicity entries only where mu != 1,
/// LF line endings, trailing newline.
std::string serialize_configuration(const BrauerConfiguration& config);

/// Read and parse a document file. Throws FileError if unreadable.
BrauerConfiguration load_configuration_file(const std::string& path);

}  // namespace brauer
