// Copyright 2026 the aftkit authors

#ifndef AFT_COMMON_ERROR_HPP
#define AFT_COMMON_ERROR_HPP

#include <stdexcept>
#include <string>

namespace aft {

/// Base class of all aftkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An enumeration or iteration exceeded its configured budget.
class BudgetError : public Error {
public:
  BudgetError(const std::string& what, unsigned long long need, unsigned long long have)
      : Error(what + ": needs " + std::to_string(need) + " but budget is " +
              std::to_string(have)),
        needed(need), budget(have) {}
  unsigned long long needed;
  unsigned long long budget;
};

/// Kleene iteration observed a descent; the operator is not monotone.
class MonotonicityError : public Error {
public:
  explicit MonotonicityError(const std::string& msg) : Error(msg) {}
};

/// Input data failed a structural validation (bad splitting, alphabet, ...).
class ValidationError : public Error {
public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// A semantically refused request (distinct from a crash; CLI exit code 2).
class RefusalError : public Error {
public:
  explicit RefusalError(const std::string& msg) : Error(msg) {}
};

/// Lexical or syntactic error with a source location.
class ParseError : public Error {
public:
  ParseError(int line, int col, const std::string& msg)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(col) +
              ": " + msg),
        line(line), col(col) {}
  int line;
  int col;
};

}  // namespace aft

#endif
