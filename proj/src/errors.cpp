#include "ramikit/errors.hpp"

namespace ramikit {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string &message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

UnknownGenerator::UnknownGenerator(std::size_t line, std::size_t column, const std::string &name)
    : ParseError(line, column, "unknown generator '" + name + "'"), name_(name) {}

CosetLimitExceeded::CosetLimitExceeded(std::size_t max_cosets)
    : Error("coset enumeration exceeded " + std::to_string(max_cosets) +
            " cosets (index may be infinite)"),
      max_cosets_(max_cosets) {}

NotPrime::NotPrime(unsigned long long value) : Error(std::to_string(value) + " is not prime") {}

} // namespace ramikit
