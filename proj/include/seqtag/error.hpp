#ifndef SEQTAG_ERROR_HPP
#define SEQTAG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace seqtag {

// Base class for all toolkit errors. The CLI maps subclasses to exit codes:
// usage/parameter -> 1, data/parse/io -> 2, numeric/training -> 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid argument to a library operation (bad k, empty sentence, ...).
class ParamError : public Error {
 public:
  explicit ParamError(const std::string& msg) : Error(msg) {}
};

// Malformed input text. Carries 1-based line and column (0 = unknown).
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column = 0)
      : Error(format(msg, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& msg, std::size_t line,
                            std::size_t column) {
    std::string s = "parse error at line " + std::to_string(line);
    if (column > 0) s += ", column " + std::to_string(column);
    return s + ": " + msg;
  }

  std::size_t line_;
  std::size_t column_;
};

// Semantic problems in otherwise well-formed data (empty corpus,
// tag outside the inventory, model/format version mismatch, ...).
class DataError : public Error {
 public:
  explicit DataError(const std::string& msg) : Error(msg) {}
};

// File system failures; message carries the path.
class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

// Non-finite values or failed numeric procedures during training.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& msg) : Error(msg) {}
};

}  // namespace seqtag

#endif  // SEQTAG_ERROR_HPP
