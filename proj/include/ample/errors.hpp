#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ample {

// Base of every error the library raises. `kind()` is the stable class name
// printed by the command line tool.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define AMPLE_DEFINE_ERROR(Name)                                         \
  class Name : public Error {                                            \
   public:                                                               \
    explicit Name(const std::string& what) : Error(#Name, what) {}       \
  }

AMPLE_DEFINE_ERROR(InvalidGroupoid);
AMPLE_DEFINE_ERROR(GroupoidMismatch);
AMPLE_DEFINE_ERROR(NotABisection);
AMPLE_DEFINE_ERROR(SizeLimitExceeded);
AMPLE_DEFINE_ERROR(NotFullBisection);
AMPLE_DEFINE_ERROR(NotCircleValued);
AMPLE_DEFINE_ERROR(NotInvertible);
AMPLE_DEFINE_ERROR(ExponentTwoUnsupported);
AMPLE_DEFINE_ERROR(InvalidExponent);
AMPLE_DEFINE_ERROR(NotACocycle);
AMPLE_DEFINE_ERROR(PartialFunction);
AMPLE_DEFINE_ERROR(DiagonalNotPreserved);
AMPLE_DEFINE_ERROR(NotSpatial);
AMPLE_DEFINE_ERROR(NotWellDefined);
AMPLE_DEFINE_ERROR(NotAutomorphism);
AMPLE_DEFINE_ERROR(EffectivenessRequired);
AMPLE_DEFINE_ERROR(NotAGroupAction);
AMPLE_DEFINE_ERROR(MalformedTable);

#undef AMPLE_DEFINE_ERROR

// Parse failure with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("ParseError", "line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace ample
