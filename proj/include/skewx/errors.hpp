#ifndef SKEWX_ERRORS_HPP
#define SKEWX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skewx {

/// Mismatched descriptors/arities, invalid constructions, violated preconditions.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// An enumeration or matrix size exceeded its configured cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Operation requires a nonzero polynomial.
struct ZeroPolynomial : std::runtime_error {
    ZeroPolynomial() : std::runtime_error("operation undefined on the zero polynomial") {}
};

/// sigma is not upper triangular where triangularity is required.
struct NotTriangular : std::runtime_error {
    explicit NotTriangular(const std::string& what) : std::runtime_error(what) {}
};

/// Text input failed to parse; position is a byte offset into the input.
struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

/// A ring-spec document violated the schema or a construction law.
struct SpecError : std::runtime_error {
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace skewx

#endif
