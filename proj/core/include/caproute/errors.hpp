#pragma once

#include <stdexcept>
#include <string>

namespace caproute {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input text could not be turned into a graph. `line` is 1-based, 0 when
// the failure is not tied to a specific line (e.g. malformed JSON).
struct ParseError : Error {
    ParseError(const std::string& what, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + what : what),
          line(line_no) {}
    int line;
};

struct SelfLoopError : ParseError {
    using ParseError::ParseError;
};

struct DuplicateEdgeError : ParseError {
    using ParseError::ParseError;
};

struct NegativeLoadError : ParseError {
    using ParseError::ParseError;
};

struct UnknownNodeError : Error {
    using Error::Error;
};

struct EmptyGraphError : Error {
    using Error::Error;
};

// Raised by dense_cover for measures whose qualifying subgraphs cannot be
// listed in polynomial time (k-clique density, squared-degree density).
struct UnsupportedMeasureError : Error {
    using Error::Error;
};

// Oracle routines refuse graphs beyond their exhaustive-enumeration caps.
struct SizeLimitError : Error {
    using Error::Error;
};

struct InvalidParameterError : Error {
    using Error::Error;
};

}  // namespace caproute
