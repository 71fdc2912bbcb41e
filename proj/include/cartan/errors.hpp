#pragma once

#include <stdexcept>
#include <string>

namespace cartan {

/// Malformed textual or JSON input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Operands whose arities, ambient dimensions or degrees do not fit together.
class ShapeMismatch : public std::invalid_argument {
 public:
  explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// A cochain that was required to be a cocycle has nonzero coboundary.
class NotACocycle : public std::domain_error {
 public:
  explicit NotACocycle(const std::string& what) : std::domain_error(what) {}
};

}  // namespace cartan
