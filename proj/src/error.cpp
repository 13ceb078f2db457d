#include "skeinmod/error.hpp"

namespace skeinmod {

std::string_view category_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Usage: return "usage";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Dimension: return "dimension";
    case ErrorKind::Io: return "io";
    case ErrorKind::Invalid: return "invalid";
  }
  return "unknown";
}

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Usage: return 1;
    case ErrorKind::Parse: return 2;
    case ErrorKind::Dimension: return 3;
    case ErrorKind::Io: return 4;
    case ErrorKind::Invalid: return 5;
  }
  return 1;
}

}  // namespace skeinmod
