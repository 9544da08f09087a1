#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramikit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed presentation text; line and column are 1-based.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string &message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

class UnknownGenerator : public ParseError {
public:
  UnknownGenerator(std::size_t line, std::size_t column, const std::string &name);

  const std::string &name() const noexcept { return name_; }

private:
  std::string name_;
};

/// The presentation parsed but does not satisfy the knot-group axioms.
class ValidationError : public Error {
public:
  using Error::Error;
};

class PdCodeError : public Error {
public:
  using Error::Error;
};

class CosetLimitExceeded : public Error {
public:
  explicit CosetLimitExceeded(std::size_t max_cosets);

  std::size_t max_cosets() const noexcept { return max_cosets_; }

private:
  std::size_t max_cosets_;
};

class InvalidSubgroupSpec : public Error {
public:
  using Error::Error;
};

/// A permutation assignment that does not send every relator to the identity.
class IncompatiblePermRep : public InvalidSubgroupSpec {
public:
  using InvalidSubgroupSpec::InvalidSubgroupSpec;
};

class NotInSubgroup : public Error {
public:
  using Error::Error;
};

class NotPrime : public Error {
public:
  explicit NotPrime(unsigned long long value);
};

class LongitudeMissing : public Error {
public:
  LongitudeMissing() : Error("longitude required but not declared") {}
};

class RelatorNotKilled : public Error {
public:
  using Error::Error;
};

} // namespace ramikit
