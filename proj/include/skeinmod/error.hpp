#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skeinmod {

/// Failure categories. Each maps to a stable CLI exit code.
enum class ErrorKind {
  Usage,      // 1: bad command line
  Parse,      // 2: malformed text or document, schema violation
  Dimension,  // 3: vector length mismatch, component index out of range
  Io,         // 4: unreadable file
  Invalid,    // 5: well-formed but meaningless input (unknown model, bad params)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

std::string_view category_name(ErrorKind kind) noexcept;
int exit_code(ErrorKind kind) noexcept;

}  // namespace skeinmod
