#pragma once

#include <stdexcept>
#include <string>

namespace narayana {

// Raised for arithmetic failures: division by zero, non-unit inversion,
// inexact division where exactness is required.
class MathError : public std::domain_error {
public:
    explicit MathError(const std::string& what) : std::domain_error(what) {}
};

// Raised when an operation is called outside its documented parameter range.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace narayana
