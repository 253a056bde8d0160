#pragma once

#include <stdexcept>
#include <string>

namespace simphom {

// Precondition or domain violation (bad vertex labels, void complex where
// a nonempty one is required, epsilon < 0, ...).
struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed file contents.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File could not be opened.
struct file_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Valid request outside the supported feature set (e.g. composite modulus).
struct unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace simphom
