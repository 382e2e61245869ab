#pragma once

#include <stdexcept>
#include <string>

namespace rtour {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// An exact search ran out of its node budget. The answer is unknown, which
/// is different from "no solution exists".
class BudgetExceeded : public Error {
public:
  explicit BudgetExceeded(const std::string &what_arg, long long nodes = 0)
      : Error(what_arg), nodes_(nodes) {}
  long long nodes() const noexcept { return nodes_; }

private:
  long long nodes_;
};

/// A randomised procedure used up all of its seeded trials.
class ProbabilisticFailure : public Error {
public:
  using Error::Error;
};

/// Malformed input file; carries the 1-based line number of the problem.
class ParseError : public Error {
public:
  ParseError(int line, const std::string &msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

/// A greedy or inductive embedding could not place a pattern vertex.
/// `index` names the stuck pattern vertex, or the split part / layer / cycle
/// index depending on the raising operation.
class EmbeddingError : public Error {
public:
  EmbeddingError(const std::string &what_arg, int index)
      : Error(what_arg), index_(index) {}
  int index() const noexcept { return index_; }

private:
  int index_;
};

} // namespace rtour
