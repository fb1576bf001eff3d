#ifndef JOINRIG_ERRORS_HPP
#define JOINRIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace joinrig {

/// Independent random trials produced different answers. With a 61-bit
/// modulus this points at a bug or a degenerate input, not bad luck.
class TrialDisagreement : public std::runtime_error {
public:
    explicit TrialDisagreement(const std::string& what) : std::runtime_error("trial disagreement: " + what) {}
};

/// An operation that requires a generically locally rigid input got a flexible one.
class NotRigidError : public std::logic_error {
public:
    explicit NotRigidError(const std::string& what) : std::logic_error(what) {}
};

/// The graph is not a balanced join, so the quadric test does not apply.
class NotBalancedJoin : public std::invalid_argument {
public:
    explicit NotBalancedJoin(const std::string& what) : std::invalid_argument(what) {}
};

/// A supplied vector violates the linear constraints it is supposed to satisfy.
class ConstraintViolation : public std::invalid_argument {
public:
    explicit ConstraintViolation(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace joinrig

#endif
