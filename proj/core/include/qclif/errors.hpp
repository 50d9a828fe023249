#pragma once

#include <stdexcept>
#include <string>

namespace qclif {

// Violation of a mathematical precondition of an operation. The CLI maps
// these to exit status 1 and prints the message unchanged.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input (files, expressions, flag values). CLI exit status 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qclif
