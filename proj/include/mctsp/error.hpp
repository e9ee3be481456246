/**
 * @file error.hpp
 * @brief Exception hierarchy shared by every mctsp module.
 */

#ifndef MCTSP_ERROR_HPP
#define MCTSP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mctsp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Weight vectors or instances of mismatched criterion count.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph objects: too few vertices, broken covers, bad tours.
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an algorithm does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a configured enumeration cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Requested solver backend cannot handle the instance.
class BackendError : public Error {
 public:
  using Error::Error;
};

/// Instance or cover file could not be parsed. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mctsp

#endif  // MCTSP_ERROR_HPP
