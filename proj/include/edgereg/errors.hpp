#pragma once

#include <stdexcept>
#include <string>

namespace edgereg {

// Raised when a computation would exceed a configured size cap (lattice size,
// complex size, enumeration box).  Callers that sweep many instances catch
// this and record the instance as skipped; the CLI maps it to exit code 3.
struct ResourceLimitError : std::runtime_error {
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edgereg
