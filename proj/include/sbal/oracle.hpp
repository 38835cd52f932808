#pragma once

#include <cstddef>

#include "sbal/balance.hpp"
#include "sbal/census.hpp"
#include "sbal/graph.hpp"

namespace sbal {

// Brute-force reference implementations.  These classify every C(n,3)
// triple directly from dyad states and test all six orderings per triple;
// they share no classification tables with the production modules, so
// agreement between the two is a meaningful check.  Deliberately naive:
// graphs above the node cap are refused.

inline constexpr std::size_t kOracleDefaultCap = 50;

CensusTable brute_force_census(const SignedDigraph& g, std::size_t max_nodes = kOracleDefaultCap);

BalanceReport brute_force_balance(const SignedDigraph& g, std::size_t max_nodes = kOracleDefaultCap);

} // namespace sbal
