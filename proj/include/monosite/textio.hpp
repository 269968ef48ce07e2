#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monosite/poly.hpp"

namespace monosite {

// Variables are either a prefix of x, y, z or x1, ..., xn with n <= 9.
struct Ring {
  std::vector<std::string> variables;
  Field field;

  std::size_t nvars() const { return variables.size(); }
};

// "q" (or "Q") for the rationals, "p" for a prime field, "p^m" for an extension.
FieldDescriptor parse_field_spec(std::string_view spec);
std::string format_field_spec(const FieldDescriptor& fd);

std::vector<std::string> parse_ring_spec(std::string_view spec);

SparsePolynomial parse_poly(std::string_view src, const Ring& ring);
// The input must be a single term; its coefficient is dropped.
Monomial parse_monomial(std::string_view src, const Ring& ring);

// Terms in descending lexicographic order with x1 > x2 > ... .
std::string format_poly(const SparsePolynomial& P, const std::vector<std::string>& variables);
std::string format_poly(const SparsePolynomial& P);
std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables);

std::vector<std::string> default_variables(std::size_t n);

}  // namespace monosite
