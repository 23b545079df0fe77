#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gammalat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  GroupMismatch() : Error("operands belong to different groups") {}
  explicit GroupMismatch(const std::string& what) : Error(what) {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownGenerator : public Error {
 public:
  using Error::Error;
};

class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

class InvalidGroup : public Error {
 public:
  using Error::Error;
};

class InvalidLattice : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold for valid input failed. Carries a short
/// description of the certificate (what was compared).
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in one of the textual formats. `position` is a 0-based
/// offset into the parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gammalat
