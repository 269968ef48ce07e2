#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "monosite/error.hpp"

namespace monosite {

namespace gf {
class FiniteField;
}

enum class FieldKind { Prime, Extension, Rational };

struct FieldDescriptor {
  FieldKind kind = FieldKind::Rational;
  std::uint32_t characteristic = 0;
  unsigned degree = 1;
  // Extension fields only: monic, little-endian, size degree + 1.
  std::vector<std::uint32_t> modulus;

  bool is_finite() const { return kind != FieldKind::Rational; }
  std::uint64_t cardinality() const;
  bool operator==(const FieldDescriptor&) const = default;
};

// Finite elements are indices: the base-p digits of the index are the
// coefficients of 1, t, t^2, ... in F_p[t]/(modulus).
class FieldElement {
 public:
  FieldElement() : rep_(std::uint64_t{0}) {}
  static FieldElement finite(std::uint64_t index) { return FieldElement(index); }
  static FieldElement rational(mpq_class v) {
    v.canonicalize();
    return FieldElement(std::move(v));
  }

  bool is_finite() const { return std::holds_alternative<std::uint64_t>(rep_); }
  std::uint64_t index() const { return std::get<std::uint64_t>(rep_); }
  const mpq_class& value() const { return std::get<mpq_class>(rep_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.rep_ == b.rep_; }

 private:
  explicit FieldElement(std::uint64_t i) : rep_(i) {}
  explicit FieldElement(mpq_class v) : rep_(std::move(v)) {}
  std::variant<std::uint64_t, mpq_class> rep_;
};

class Field {
 public:
  Field();

  static Field rationals() { return Field(); }
  static Field finite(std::uint32_t p, unsigned m = 1);
  static Field from_descriptor(const FieldDescriptor& fd);

  const FieldDescriptor& descriptor() const { return fd_; }
  bool is_finite() const { return fd_.is_finite(); }
  std::uint32_t characteristic() const { return fd_.characteristic; }
  unsigned degree() const { return fd_.degree; }
  std::uint64_t size() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t v) const;
  FieldElement from_rational(const mpq_class& v) const;
  FieldElement element(std::uint64_t index) const;
  // The class of t (extension fields only).
  FieldElement generator() const;

  bool is_zero(const FieldElement& a) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;
  FieldElement div(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;

  // All elements in index order (finite fields only).
  std::vector<FieldElement> elements() const;

  std::string format(const FieldElement& a) const;

  const std::shared_ptr<const gf::FiniteField>& engine() const { return engine_; }

  bool operator==(const Field& other) const { return fd_ == other.fd_; }

 private:
  void require_finite() const;

  FieldDescriptor fd_;
  std::shared_ptr<const gf::FiniteField> engine_;
};

// Descriptor for F_{p^m} with the lexicographically least monic irreducible modulus.
FieldDescriptor build_extension(std::uint32_t p, unsigned m);

// Unique c' with c'^p = c.
FieldElement pth_root(const Field& field, const FieldElement& c);

bool is_prime(std::uint64_t n);

}  // namespace monosite
