#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cqa {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed query text. `position` is a 0-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error("syntax error at " + std::to_string(position) + ": " + message), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A relation name used with two different shapes.
class SignatureConflict : public Error {
 public:
  using Error::Error;
};

/// Malformed database file. `line` is 1-based; 0 when not tied to a line.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& message)
      : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ArityMismatch : public FormatError {
 public:
  using FormatError::FormatError;
};

class UnknownRelation : public FormatError {
 public:
  using FormatError::FormatError;
};

/// The input lies outside the scope of the requested algorithm.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

class SchemaMismatch : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

class CyclicQueryError : public PreconditionViolated {
 public:
  CyclicQueryError() : PreconditionViolated("query is not acyclic (no join tree)") {}
};

class SelfJoinError : public PreconditionViolated {
 public:
  SelfJoinError() : PreconditionViolated("query has a self-join") {}
};

/// An input file could not be opened or read.
class FileError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured bound.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace cqa
