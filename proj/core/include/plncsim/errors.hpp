#pragma once

#include <stdexcept>
#include <string>

namespace plncsim {

/// Thrown when a field is requested for a modulus that is not prime.
class CompositeModulusError : public std::invalid_argument {
public:
    explicit CompositeModulusError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown on inversion of the zero element.
class ZeroInverseError : public std::domain_error {
public:
    explicit ZeroInverseError(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when the asymptotic parameter recipe yields an unusable
/// configuration (substring count or length below one).
class DegenerateConfigError : public std::runtime_error {
public:
    explicit DegenerateConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace plncsim
