#ifndef SIGNLAB_ERROR_H_
#define SIGNLAB_ERROR_H_

#include <stdexcept>
#include <string>

namespace signlab {

// Categories double as CLI exit codes.
enum class ErrorCategory : int {
  kValidation = 2,
  kParse = 3,
  kLimit = 4,
  kConfig = 5,
  kNumerical = 6,
  kInvariant = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const { return category_; }
  int exit_code() const { return static_cast<int>(category_); }

 private:
  ErrorCategory category_;
};

enum class GraphErrorKind { kSelfLoop, kDuplicatePair, kBadSign, kOutOfRange };

class GraphValidationError : public Error {
 public:
  GraphValidationError(GraphErrorKind kind, const std::string& what)
      : Error(ErrorCategory::kValidation, what), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

 private:
  GraphErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error(ErrorCategory::kParse,
              "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Exact enumeration requested beyond the configured size limit.
class LimitError : public Error {
 public:
  explicit LimitError(const std::string& what)
      : Error(ErrorCategory::kLimit, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorCategory::kConfig, what) {}
};

class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& what)
      : Error(ErrorCategory::kInvariant, what) {}
};

}  // namespace signlab

#endif  // SIGNLAB_ERROR_H_
