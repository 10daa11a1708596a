#pragma once

#include <stdexcept>
#include <string>

namespace hvg {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (series files, graph documents, code words).
// Messages carry 1-based line/column or character positions where known.
class ParseError : public Error {
public:
    using Error::Error;
};

// A structurally valid input that violates an operation's precondition:
// out-of-range vertices, missing edges, non-realizable graphs, invalid
// degree sequences, non-increasing time axes, and the like.
class DomainError : public Error {
public:
    using Error::Error;
};

// Enumeration request outside the supported size window.
class SizeError : public Error {
public:
    using Error::Error;
};

} // namespace hvg
