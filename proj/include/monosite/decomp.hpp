#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monosite/newton.hpp"
#include "monosite/poly.hpp"

namespace monosite {

// P = sum_k coeffs[k] * m1^k * m2^(degree - k).
struct MonomialPairDecomposition {
  Monomial m1;
  Monomial m2;
  unsigned degree = 0;
  std::vector<FieldElement> coeffs;

  bool maximal() const;
};

struct RefinementTrace {
  unsigned initial_degree = 0;
  unsigned final_degree = 0;
  unsigned gcd_factor = 1;
};

SparsePolynomial reconstruct(const MonomialPairDecomposition& dec, const Field& field);

// Joint gcd of the exponents of two monomials (0 when both are constant).
unsigned joint_exponent_gcd(const Monomial& m1, const Monomial& m2);

std::optional<MonomialPairDecomposition> two_monomial_decomposition(const SparsePolynomial& P);

std::pair<MonomialPairDecomposition, RefinementTrace> refine_monomial_pair(const MonomialPairDecomposition& dec);

bool binomial_pencil_irreducible(const Monomial& m1, const Monomial& m2);

// { m1^k m2^(d-k) : 0 <= k <= d, degree <= degP }, leading monomial first.
std::vector<Monomial> homogeneous_site_monomials(const MonomialPairDecomposition& dec, unsigned degP);

}  // namespace monosite
