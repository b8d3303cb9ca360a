#pragma once

#include <stdexcept>
#include <string>

namespace majcol {

// Malformed input: bad graph files, out-of-range weights or colours.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A theorem hypothesis (minimum degree, bipartiteness, ...) does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A post-hoc certification failed. Always a bug or a breached hypothesis.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace majcol
