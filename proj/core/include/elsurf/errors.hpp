#pragma once

#include <stdexcept>
#include <string>

namespace elsurf {

/// Invalid input: bad labels, malformed weights, preconditions violated by
/// the caller. CLI maps this to exit code 1.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Broken internal invariant. CLI maps this to exit code 2; it is never
/// expected to fire.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace elsurf
