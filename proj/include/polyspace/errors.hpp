#pragma once

#include <stdexcept>
#include <string>

namespace polyspace {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::runtime_error
{
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Input exceeds an enumeration or memory budget.
class CapacityError : public std::runtime_error
{
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A formula that is only valid off the walls was given a non-generic vector.
class GenericityError : public std::runtime_error
{
public:
    explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

/// The polygon space is empty or degenerate where a nonempty one is required.
class EmptinessError : public std::runtime_error
{
public:
    explicit EmptinessError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace polyspace
