#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqres/polynomial.hpp"

namespace eqres {

/// JSON input: n, p, degree, variables, parameters and either `system`
/// (n polynomial strings) or `polynomial` (one invariant form). An optional
/// `closed_form` holds the expected resultant or discriminant.
struct SystemFile {
  std::size_t n = 0;
  std::size_t p = 0;
  unsigned degree = 0;
  std::vector<std::string> variables;
  std::vector<std::string> parameters;
  ContextPtr context;
  std::vector<Polynomial> system;
  std::optional<Polynomial> polynomial;
  std::optional<Polynomial> closed_form;

  bool is_discriminant() const noexcept { return polynomial.has_value(); }
};

/// Throws IoError for unreadable files, bad JSON, missing fields, count
/// mismatches and unparsable polynomials, ValidationError when the declared
/// degree disagrees with the polynomials.
SystemFile load_system_file(const std::string& path);
SystemFile parse_system_file(const std::string& text);

}  // namespace eqres
