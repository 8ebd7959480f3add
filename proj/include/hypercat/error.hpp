#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypercat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignatureError : public Error {
 public:
  using Error::Error;
};

/// Ill-typed composition or term, carrying the two offending words in the message.
class TypeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Matrix shapes that do not line up.
class ShapeError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypercat
