#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monosite/poly.hpp"

namespace monosite {

struct OracleConfig {
  unsigned max_total_degree = 6;
  unsigned max_variables = 3;
  std::uint64_t max_field_size = 4096;
  // Largest extension degree (over the input field) used by the
  // irreducibility test; 0 lets the oracle choose.
  unsigned extension_sweep_cap = 0;
  unsigned jobs = 1;
};

struct OracleStats {
  std::uint64_t irreducibility_tests = 0;
  std::uint64_t candidates_tested = 0;

  OracleStats& operator+=(const OracleStats& o) {
    irreducibility_tests += o.irreducibility_tests;
    candidates_tested += o.candidates_tested;
    return *this;
  }
};

// Absolute irreducibility of F over the algebraic closure of its field.
bool abs_irreducible(const SparsePolynomial& F, const OracleConfig& cfg = {}, OracleStats* stats = nullptr);

// Image of P in a larger field of the same characteristic.
SparsePolynomial embed(const SparsePolynomial& P, const Field& target);

struct SpectrumReport {
  FieldDescriptor field;
  unsigned degree = 0;
  std::vector<FieldElement> values;
  std::vector<FieldElement> degree_drop_exclusions;
  std::uint64_t bound = 0;
  bool bound_satisfied = false;
  OracleStats stats;
};

// Sweeps every lambda in `field` (which must contain the field of P).
SpectrumReport compute_spectrum(const SparsePolynomial& P, const Monomial& Q, const Field& field,
                                const OracleConfig& cfg = {});

bool verify_bound(const SpectrumReport& report, bool stein_case);

struct OracleTranscript {
  bool generically_irreducible = false;
  FieldDescriptor working_field;
  std::uint64_t trials_per_level = 0;
  // Values for lambda_l, lambda_{l-1}, ..., lambda_1 leading to the witness.
  std::vector<FieldElement> witness_path;
  std::optional<SparsePolynomial> witness;
  // Top-level values tried, in order, when every trial was reducible.
  std::vector<FieldElement> reducible_values;
  std::vector<FieldElement> excluded_values;
  OracleStats stats;
};

OracleTranscript generic_irreducibility(const SparsePolynomial& P, std::span<const Monomial> qs,
                                        const OracleConfig& cfg = {});

// Smallest extension of `field` with more than `min_size` elements.
Field extend_beyond(const Field& field, std::uint64_t min_size);

}  // namespace monosite
