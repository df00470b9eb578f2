#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mnet {

// Raised for structurally invalid input (bad arrangements, wrong matrix
// shapes, preconditions the caller is responsible for).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in cyclotomic field") {}
};

class ProportionalLines : public InvalidInput {
 public:
  explicit ProportionalLines(const std::string& what) : InvalidInput(what) {}
};

class AbstractArrangement : public InvalidInput {
 public:
  AbstractArrangement()
      : InvalidInput("operation needs line coordinates; arrangement is abstract") {}
};

class DegreeMismatch : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotComplete : public InvalidInput {
 public:
  explicit NotComplete(long deficit)
      : InvalidInput("multinet is not complete (Euler deficit " + std::to_string(deficit) + ")"),
        deficit_(deficit) {}
  long deficit() const noexcept { return deficit_; }

 private:
  long deficit_;
};

class LineInArrangement : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class SearchSpaceTooLarge : public std::runtime_error {
 public:
  SearchSpaceTooLarge(std::size_t multiple_points, std::uint64_t cap)
      : std::runtime_error("search space of 2^" + std::to_string(multiple_points) +
                           " base-locus candidates exceeds cap " + std::to_string(cap)),
        multiple_points_(multiple_points),
        cap_(cap) {}
  std::size_t multiple_points() const noexcept { return multiple_points_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::size_t multiple_points_;
  std::uint64_t cap_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace mnet
