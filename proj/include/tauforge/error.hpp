#pragma once

#include <stdexcept>
#include <string>

namespace tauforge {

/// Raised when an argument violates an operation's precondition.
/// The message names the violated constraint in one line.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace tauforge
