#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace token_alpha {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument to a constructor or generator (out-of-range vertex,
/// Cycle(2), empty range, ...).
class ParameterError : public Error {
public:
  using Error::Error;
};

/// A closed-form formula evaluated outside the range it is proven for.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Input is too large for the requested method.
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A documented precondition of a construction does not hold.
class ContractError : public Error {
public:
  using Error::Error;
};

class IoError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace token_alpha
