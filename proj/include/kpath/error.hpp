#pragma once

#include <stdexcept>
#include <string>

namespace kpath {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller-supplied argument violates an operation's precondition.
struct param_error : error {
    using error::error;
};

// The request is valid but outside what this build supports
// (e.g. brute-force irreducibility for ell > 16, Held-Karp for n > 25).
struct unsupported_error : error {
    using error::error;
};

// Malformed input text; `line` is 1-based.
struct parse_error : error {
    parse_error(const std::string& what, int line_no)
        : error(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    int line;
};

// Path extraction exhausted its randomness retry budget. Distinct from
// "no path exists": a path was detected but could not be pinned down.
struct extraction_error : error {
    using error::error;
};

}  // namespace kpath
