#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace subshift {

/// Process exit codes used by the command line tool. Library errors carry one
/// of these so the tool can map an exception to a code without a type switch.
enum class ErrorCode : int {
  ok = 0,
  parse = 2,
  not_some_primitive_components = 3,
  domain = 4,
  budget_exceeded = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string kind, const std::string& what)
      : std::runtime_error(what), code_(code), kind_(std::move(kind)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& kind() const noexcept { return kind_; }

 private:
  ErrorCode code_;
  std::string kind_;
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& what)
      : Error(ErrorCode::domain, "ArgumentError", what) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorCode::parse, "ParseError",
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class NotSomePrimitiveComponents : public Error {
 public:
  explicit NotSomePrimitiveComponents(const std::string& what)
      : Error(ErrorCode::not_some_primitive_components,
              "NotSomePrimitiveComponents", what) {}
};

class LambdaNotDominant : public Error {
 public:
  explicit LambdaNotDominant(const std::string& what)
      : Error(ErrorCode::domain, "LambdaNotDominant", what) {}
};

class ThetaNotAboveOne : public Error {
 public:
  explicit ThetaNotAboveOne(const std::string& what)
      : Error(ErrorCode::domain, "ThetaNotAboveOne", what) {}
};

class WordNotInLevelLanguage : public Error {
 public:
  explicit WordNotInLevelLanguage(const std::string& what)
      : Error(ErrorCode::domain, "WordNotInLevelLanguage", what) {}
};

class MeasureTypeCounting : public Error {
 public:
  explicit MeasureTypeCounting(const std::string& what)
      : Error(ErrorCode::domain, "MeasureTypeCounting", what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error(ErrorCode::budget_exceeded, "BudgetExceeded", what) {}
};

}  // namespace subshift
