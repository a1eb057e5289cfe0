#pragma once

#include <stdexcept>
#include <string>

namespace lpsum {

// Shape or domain violation in the inputs (dimension mismatch, bad index,
// malformed space descriptor). The CLI maps it to exit code 2.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// An operation that is only defined for non-zero arguments received zero.
// The CLI maps it to exit code 3.
class DegenerateInputError : public std::domain_error {
public:
  explicit DegenerateInputError(const std::string& what) : std::domain_error(what) {}
};

// The extreme points requested form an infinite set (smooth dual balls) or
// exceed the configured enumeration cap.
class NotEnumerableError : public std::runtime_error {
public:
  explicit NotEnumerableError(const std::string& what) : std::runtime_error(what) {}
};

// polygon_family could not bracket its target.
class ConstructionError : public std::runtime_error {
public:
  explicit ConstructionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lpsum
