#pragma once

#include <stdexcept>
#include <string>

namespace tbern {

// Bad caller-supplied parameters (invalid family/i combination, w component
// of zero, unknown character index, ...). The CLI maps this to exit code 2.
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// A value outside the domain an operation is defined on.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

} // namespace tbern
