#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace brauer {

/// Machine-readable classification of a validation failure.
enum class ViolationKind {
    C1,                               // vertex occurs in no polygon
    C2,                               // polygon has fewer than two members
    C3,                               // polygon has no vertex with val*mu > 1
    OrientationMultiplicityMismatch,  // successor sequence disagrees with occ
    OrientationOnTruncated,           // truncated vertex given a successor sequence
    MissingOrientation,               // nontruncated vertex without a successor sequence
    UnknownId,                        // reference to an undeclared vertex or polygon
};

const char* to_string(ViolationKind kind);

/// One validation failure: kind plus where it happened.
struct Violation {
    ViolationKind kind;
    std::string location;  // e.g. "vertex 1", "polygon V3"
    std::string detail;

    bool operator==(const Violation&) const = default;
};

std::string to_string(const Violation& violation);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownVertexError : Error {
    explicit UnknownVertexError(const std::string& name)
        : Error("unknown vertex '" + name + "'") {}
};

struct UnknownPolygonError : Error {
    explicit UnknownPolygonError(const std::string& name)
        : Error("unknown polygon '" + name + "'") {}
};

struct TruncatedVertexError : Error {
    explicit TruncatedVertexError(const std::string& name)
        : Error("vertex '" + name + "' is truncated") {}
};

struct VertexNotInPolygonError : Error {
    VertexNotInPolygonError(const std::string& vertex, const std::string& polygon)
        : Error("vertex '" + vertex + "' does not occur in polygon '" + polygon + "'") {}
};

struct SamePolygonError : Error {
    explicit SamePolygonError(const std::string& name)
        : Error("polygons must be distinct, got '" + name + "' twice") {}
};

struct OverflowError : Error {
    using Error::Error;
};

struct InvalidConfigurationError : Error {
    explicit InvalidConfigurationError(std::vector<Violation> violations);

    std::vector<Violation> violations;
};

/// Parse failure at a known position (1-based line and column).
struct SyntaxError : Error {
    SyntaxError(std::size_t line, std::size_t column, const std::string& what);

    std::size_t line;
    std::size_t column;
};

/// Document parsed but the configuration breaks the model axioms.
struct SemanticError : Error {
    explicit SemanticError(std::vector<Violation> violations);

    std::vector<Violation> violations;
};

/// The requested generator bounds admit no valid configuration.
struct UnsatisfiableError : Error {
    using Error::Error;
};

/// File could not be opened or read.
struct FileError : Error {
    explicit FileError(const std::string& path) : Error("cannot read file '" + path + "'") {}
};

}  // namespace brauer
