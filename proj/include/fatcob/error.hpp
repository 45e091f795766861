#pragma once

#include <stdexcept>
#include <string>

namespace fatcob {

enum class ErrorCode {
  DuplicateName,
  DanglingHalfEdge,
  WrongVertexOrder,
  FixedPointInvolution,
  UnknownName,
  UnknownEdge,
  IsolatedVertex,
  NotALeaf,
  InOutOverlap,
  ClosedNotSpecial,
  ClosedSharesCycle,
  NotAdmissible,
  ForestContainsCycle,
  DecorationDestroyed,
  Mismatch,
  BoundExceeded,
  SignatureMismatch,
  EdgeCountMismatch,
  InvalidMatch,
  NotGluablePairMorphism,
  InvalidMorphism,
  NotGluable,
  ParseError,
  SemanticError,
  InvalidArgument,
  Internal,
};

const char* error_code_name(ErrorCode code);

// Every failure raised by the library is an Error; the code says which
// contract clause was violated and what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

class EdgeCountMismatchError : public Error {
 public:
  EdgeCountMismatchError(std::size_t pair, std::size_t k1, std::size_t k2);
  std::size_t pair() const { return pair_; }
  std::size_t k1() const { return k1_; }
  std::size_t k2() const { return k2_; }

 private:
  std::size_t pair_, k1_, k2_;
};

class ParseFailure : public Error {
 public:
  ParseFailure(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_, column_;
  std::string message_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace fatcob
