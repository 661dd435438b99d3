#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dimonoid {

  // Base of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Orders of two objects that must agree do not.
  class DimensionError : public Error {
   public:
    using Error::Error;
  };

  // Malformed text or JSON input. Row and column are 1-based; 0 means
  // "not applicable".
  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t row = 0, std::size_t col = 0)
        : Error(format(what, row, col)), _row(row), _col(col) {}

    std::size_t row() const noexcept {
      return _row;
    }
    std::size_t col() const noexcept {
      return _col;
    }

   private:
    static std::string format(std::string const& what, std::size_t row, std::size_t col) {
      if (row == 0) {
        return what;
      }
      std::string out = "row " + std::to_string(row);
      if (col != 0) {
        out += ", column " + std::to_string(col);
      }
      return out + ": " + what;
    }

    std::size_t _row;
    std::size_t _col;
  };

  // A catalog name with parameters outside their valid range.
  class ParameterError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called on an input that violates its precondition,
  // e.g. adjoining ~1 to a semigroup without identity.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Input that should form a group (or similar algebraic object) does not.
  class StructureError : public Error {
   public:
    using Error::Error;
  };

  // Requested order is outside what the enumerator supports by default.
  class RangeError : public Error {
   public:
    using Error::Error;
  };

}  // namespace dimonoid
