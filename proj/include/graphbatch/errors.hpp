#pragma once

#include <stdexcept>
#include <string>

namespace graphbatch {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct EmptyBatch : Error { using Error::Error; };
struct CorruptBatch : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct InvalidDummy : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct GraphExceedsBudget : Error { using Error::Error; };
struct EmptyDataset : Error { using Error::Error; };
struct OutOfOrderStep : Error { using Error::Error; };
struct InvalidParams : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct DegenerateSamples : Error { using Error::Error; };
struct InvalidBinWidth : Error { using Error::Error; };
struct MismatchedConfigs : Error { using Error::Error; };
struct MissingQuantity : Error { using Error::Error; };

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error("parse error at line " + std::to_string(line) + ": " + what),
        line(line) {}
  std::size_t line;
};

}  // namespace graphbatch
