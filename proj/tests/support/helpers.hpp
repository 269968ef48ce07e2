#pragma once

#include <functional>
#include <string>

#include "monosite/textio.hpp"

namespace monosite::testing {

inline Ring ring_xy(const Field& f) { return Ring{{"x", "y"}, f}; }

inline SparsePolynomial poly(const Field& f, const std::string& s) { return parse_poly(s, ring_xy(f)); }
inline SparsePolynomial qpoly(const std::string& s) { return poly(Field::rationals(), s); }
inline Monomial mono(const std::string& s, std::size_t n = 2) {
  return parse_monomial(s, Ring{default_variables(n), Field::rationals()});
}

inline ErrorKind error_kind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return static_cast<ErrorKind>(-1);
}

}  // namespace monosite::testing
