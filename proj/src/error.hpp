#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltader {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse,
  Semantic,
  IndexOutOfRange,
  JacobiViolation,
  NotARepresentation,
  AlgebraMismatch,
  NotDiagonal,
  ShapeMismatch,
  Verification,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(ErrorCode::Parse, what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class SemanticError : public Error {
 public:
  explicit SemanticError(const std::string& what) : Error(ErrorCode::Semantic, what) {}
};

class IndexOutOfRange : public Error {
 public:
  explicit IndexOutOfRange(const std::string& what) : Error(ErrorCode::IndexOutOfRange, what) {}
};

class AlgebraMismatch : public Error {
 public:
  explicit AlgebraMismatch(const std::string& what) : Error(ErrorCode::AlgebraMismatch, what) {}
};

class NotDiagonal : public Error {
 public:
  explicit NotDiagonal(const std::string& what) : Error(ErrorCode::NotDiagonal, what) {}
};

class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error(ErrorCode::ShapeMismatch, what) {}
};

/// Internal consistency failure. Never caused by valid input.
class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(const std::string& what) : Error(ErrorCode::Verification, what) {}
};

}  // namespace deltader
