#pragma once

#include <stdexcept>
#include <string>

namespace hamstab {

/// Bad user input: malformed literal, non-special-unitary generator, c <= 0, ...
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematical certificate failed (stabilizer, Lagrangian, invariance, ...).
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A square root outside the finite table the field can represent.
class NotExpressible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace hamstab
