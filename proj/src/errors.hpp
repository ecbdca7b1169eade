#pragma once

#include <stdexcept>
#include <string>

namespace keikit {

// Input text that does not conform to a grammar or file format.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally well-formed input that violates a mathematical contract
// (kei axioms, module relations, diagram consistency, bad modulus, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A computation refused because it exceeds a configured guard.
struct LimitError : std::runtime_error {
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace keikit
