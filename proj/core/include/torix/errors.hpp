#pragma once

#include <stdexcept>
#include <string>

namespace torix {

/// Bad user input: malformed files, invalid fans, unmet preconditions.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rays do not span the ambient space; quotient by their span first.
class DegenerateFanError : public InputError {
public:
    using InputError::InputError;
};

/// A checked theorem failed on concrete data. Only a bug can raise this.
class TheoremViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Internal consistency check failed (e.g. cohomology outside the degree box).
class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace torix
