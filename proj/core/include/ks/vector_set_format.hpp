#pragma once

#include <cstddef>
#include <string>

#include "ks/error.hpp"

namespace ks {

class VectorSetParseError : public InputError {
 public:
  VectorSetParseError(std::size_t line, std::size_t column, const std::string& message)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ks
