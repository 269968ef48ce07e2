#pragma once

#include <span>
#include <variant>
#include <vector>

#include "monosite/decomp.hpp"
#include "monosite/poly.hpp"
#include "monosite/spectrum.hpp"

namespace monosite {

enum class SiteCase {
  MonomialCaseCharP,
  MonomialCaseHomogeneous,
  HomogeneousCase,
  PurePowerPossibility1,
  PurePowerPossibility2,
  PurePowerPossibility3,
  Case2SingletonPower,
  NotASite,
};

enum class Method { Structural, Oracle };

const char* to_string(SiteCase c);
const char* to_string(Method m);

using SiteWitness = std::variant<std::monostate, MonomialPairDecomposition, PurePowerWitness, OracleTranscript>;

struct SiteVerdict {
  bool yes = false;
  SiteCase site_case = SiteCase::NotASite;
  Method method = Method::Structural;
  SiteWitness witness;
};

SiteVerdict classify_site(const SparsePolynomial& P, std::span<const Monomial> qs, const OracleConfig& cfg = {});

struct HypothesisReport {
  bool degrees_ok = false;
  bool relatively_prime = false;
  bool collinear_with_P = false;
  bool some_not_pth_power = true;
  bool Q_pure_power = false;
  bool P_monomial = false;

  // Collinearity is waived when P is a monomial.
  bool all_pass() const {
    return degrees_ok && relatively_prime && (!collinear_with_P || P_monomial) && some_not_pth_power && !Q_pure_power;
  }
};

HypothesisReport check_theorem_typical(const SparsePolynomial& P, const Monomial& Q);
HypothesisReport check_theorem_typical2(const SparsePolynomial& P, std::span<const Monomial> qs);

}  // namespace monosite
