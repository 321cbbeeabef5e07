#pragma once

#include <stdexcept>
#include <string>

namespace wedgi {

// Base class for every error this library throws on purpose.
struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (monomial, ideal, or graph JSON).
struct parse_error : error {
  explicit parse_error(const std::string& what) : error(what) {}
};

// Operands live in different ambient rings.
struct ring_mismatch : error {
  explicit ring_mismatch(const std::string& what) : error(what) {}
};

// A computation would exceed the polarized-variable budget.
struct budget_error : error {
  explicit budget_error(const std::string& what) : error(what) {}
};

// A family instance violates a structural hypothesis at build time.
struct family_error : error {
  explicit family_error(const std::string& what) : error(what) {}
};

}  // namespace wedgi
