#pragma once

#include <map>
#include <vector>

#include "gf.hpp"
#include "monosite/spectrum.hpp"

namespace monosite::detail {

using Exps = std::vector<std::uint32_t>;
using GfTerms = std::map<Exps, gf::Elem>;

// Irreducibility of F over the field L itself.
bool irreducible_over(const gf::FiniteField& L, const GfTerms& F, OracleStats& stats);

// Irreducibility over the algebraic closure of `base`.
bool abs_irreducible_gf(const gf::FiniteField& base, const GfTerms& F, unsigned extension_cap, OracleStats& stats);

}  // namespace monosite::detail
