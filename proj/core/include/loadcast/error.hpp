#pragma once

#include <stdexcept>
#include <string>

namespace loadcast {

/// Base class for all loadcast errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad input: missing files, malformed config, violated preconditions on
/// caller-supplied data. Maps to exit code 1 in the CLI.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
};

/// Broken internal invariant. Maps to exit code 2 in the CLI.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

inline void internal_check(bool ok, const std::string& msg) {
    if (!ok) {
        throw InternalError(msg);
    }
}

} // namespace loadcast
