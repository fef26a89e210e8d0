#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "algint/algebra.hpp"
#include "algint/matrix.hpp"

namespace algint {

/// Input error with the 1-based line it was found on (0 when not tied to a
/// line).
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads an algebra definition:
///
///   # comment
///   name: grassmann_1
///   dimension: 2
///   unit_index: 0          (optional)
///   entries:
///   0 0 0 "1" "0"
///   0 1 1 "1"              (imaginary part optional)
///
/// Each entry is i j k re [im]; rationals are "p" or "p/q", quoted or bare.
/// Omitted triples are zero. Duplicate triples, out-of-range indices, bad
/// rationals and a zero dimension are rejected.
StructureConstants parse_algebra(std::string_view text);

/// Canonical text: one entry per nonzero f_ijk in (i, j, k) order.
std::string serialize_algebra(const StructureConstants& sc);

/// Whitespace-separated Gaussian rationals, one matrix row per line.
ExactMatrix parse_matrix(std::string_view text);

/// Comma- or whitespace-separated coefficients; length must equal dim.
AlgebraElement parse_element(std::string_view text, std::size_t dim);

}  // namespace algint
