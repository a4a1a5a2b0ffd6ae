#pragma once

#include <stdexcept>
#include <string>

namespace vko {

/// Invalid arguments to a builder or operation; the message names the violated constraint.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// A construction that cannot be carried out on the given input.
class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

/// A map failed a general-position predicate.
class GenericityError : public std::runtime_error {
public:
    explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation's documented precondition does not hold.
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// A certificate or result failed exact re-verification.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& what) : std::runtime_error(what) {}
};

/// A computation exceeded its configured cell or time budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

} // namespace vko
