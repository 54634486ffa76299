#pragma once

#include <stdexcept>
#include <string>

namespace torspair {

// Violated mathematical precondition or internal identity (a bug or a
// genuinely inconsistent input object).
struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user-facing parameters ("not coprime", "trivial character
// rejected", ...).  The CLI maps these to exit code 2.
struct ConstraintError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace torspair
