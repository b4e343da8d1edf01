#ifndef NILFORM_ERRORS_HPP
#define NILFORM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nilform {

/// Base class for all errors raised by the library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or inconsistent input data (bad rational string, dimension
/// mismatch, antisymmetry/Jacobi violation, unknown gallery name, ...).
class validation_error : public error {
public:
  explicit validation_error(const std::string& msg) : error(msg) {}
};

/// Structural hypothesis of an operation is not met by an otherwise valid
/// input (missing form, non-abelian radical where one is required, ...).
class hypothesis_error : public error {
public:
  explicit hypothesis_error(const std::string& msg) : error(msg) {}
};

/// Internal invariant broke; indicates a bug, never a bad input.
class internal_error : public error {
public:
  explicit internal_error(const std::string& msg) : error(msg) {}
};

} // namespace nilform

#endif
