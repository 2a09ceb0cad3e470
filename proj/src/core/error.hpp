#pragma once

#include <stdexcept>
#include <string>

namespace tokentw {

// Bad argument, malformed input, or a precondition the caller could have checked.
class InvalidParameter : public std::invalid_argument {
public:
    explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed JSON document.
class ParseError : public InvalidParameter {
public:
    explicit ParseError(const std::string& what) : InvalidParameter(what) {}
};

// Instance exceeds a configured size cap (token-graph size, oracle vertex cap,
// solver node budget).
class ResourceLimit : public std::runtime_error {
public:
    explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

} // namespace tokentw
