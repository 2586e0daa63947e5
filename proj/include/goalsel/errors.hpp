#ifndef GOALSEL_ERRORS_HPP
#define GOALSEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace goalsel {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input document (bad JSON, wrong types, missing fields).
struct ParseError : Error {
    using Error::Error;
};

// Structurally well-formed input that violates a knowledge-base invariant.
// The message names the violated invariant.
struct ValidationError : Error {
    using Error::Error;
};

// A bounded enumeration (argument construction, extension enumeration)
// exceeded its configured cap.
struct LimitError : Error {
    using Error::Error;
};

} // namespace goalsel

#endif
