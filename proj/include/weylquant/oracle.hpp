#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "weylquant/charring.hpp"

namespace weylquant::oracle {

/// Every zeta = sum c_j g_j with f(zeta) <= bound, with its number of
/// representations, by plain enumeration of coefficient vectors. `f` must be
/// positive on each generator.
std::map<Weight, std::int64_t> enumerate_partitions(std::span<const Weight> generators, const Functional& f,
                                                    const Rational& bound);

/// All weight multiplicities of V_lam from Kostant's formula
/// m(mu) = sum_w eps(w) P(w(lam+rho) - (mu+rho)), P over the positive roots
/// and counted by enumerate_partitions.
FormalCharacter kostant_character(const RootSystem& g, const Weight& lam);

}  // namespace weylquant::oracle
