#pragma once

#include <stdexcept>

namespace trimobius {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Value would leave the exact 64-bit (or 128-bit, where noted) integer range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Matrix shape or structure violates the operation's precondition.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Malformed external input (b-file line, DOT file, ...).
class FormatError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace trimobius
