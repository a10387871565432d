#pragma once

#include <stdexcept>
#include <string>

namespace conedef {

/// Request is well-formed but outside what the engine can compute or certify.
class OutOfScopeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computations of the same quantity disagreed. Always an implementation bug.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace conedef
