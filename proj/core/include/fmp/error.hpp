/**
 * @file error.hpp
 *
 * Exception hierarchy shared by all fmp modules.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace fmp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A box with zero or negative extent on some axis, or with non-finite corners.
class DegenerateBox : public Error {
 public:
  using Error::Error;
};

/// The reference span used for relative coordinates has hi <= lo.
class DegenerateReference : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DuplicateId : public ParseError {
 public:
  using ParseError::ParseError;
};

class AmbiguousLabel : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Fewer than two objects are shared by the compared scenes.
class InsufficientOverlap : public Error {
 public:
  using Error::Error;
};

/// Table completion produced a cell that contradicts a fixed cell.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Configuration rejected by validation (partition, matching matrices, tables).
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace fmp
