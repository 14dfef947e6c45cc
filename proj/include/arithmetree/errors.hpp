#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atree {

// Every domain failure derives from Error; the CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : Error {
  std::size_t position;
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

struct ArityError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct InvalidName : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct ResourceError : Error { using Error::Error; };
struct UndefinedExpression : Error { using Error::Error; };
struct PreconditionError : Error { using Error::Error; };
struct SearchFailure : Error { using Error::Error; };

}  // namespace atree
