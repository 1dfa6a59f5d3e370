#pragma once

#include <stdexcept>
#include <string>

namespace statel {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Syntax errors carry a 1-based source position.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

enum class Fault {
  NonUnitMass,
  NegativeWeight,
  UnknownVariable,
  UnknownPredicate,
  UnknownRelation,
  UnknownWorld,
  UnknownState,
  ArityMismatch,
  DimensionMismatch,
  BadNumber,
  BadInterval,
  MissingScore,
  UndefinedInput,
  EmptyDataset,
  MissingRelation,
  MissingDatasetWorld,
  UndeclaredWorld,
  BadModel,
  BadData,
};

const char* fault_name(Fault f);

struct ModelError : Error {
  Fault fault;
  ModelError(Fault fault_, const std::string& msg)
      : Error(std::string(fault_name(fault_)) + ": " + msg), fault(fault_) {}
};

}  // namespace statel
