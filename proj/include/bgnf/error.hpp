#pragma once

#include <stdexcept>
#include <string>

namespace bgnf {

/// Base class for every error raised by the library. The category lets the
/// command line front end map failures onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  enum class Category { Argument, Parse, QuadraticPart, NotNormalForm, Precondition };

  Error(Category category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  Category category() const noexcept { return category_; }

 private:
  Category category_;
};

inline Error argument_error(const std::string& what) {
  return Error(Error::Category::Argument, what);
}
inline Error precondition_error(const std::string& what) {
  return Error(Error::Category::Precondition, what);
}

/// Raised by the text parser; carries a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(Category::Parse, "line " + std::to_string(line) + ", column " +
                                   std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace bgnf
