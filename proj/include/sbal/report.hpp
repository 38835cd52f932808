#pragma once

#include <string>

#include "sbal/balance.hpp"
#include "sbal/census.hpp"
#include "sbal/graph.hpp"
#include "sbal/metrics.hpp"

namespace sbal {

enum class OutputFormat { Json, Csv, Table };

// All renderers are deterministic: fixed key order, fixed row order, no
// timestamps, shortest round-trip doubles.
std::string render_balance(const BalanceReport& report, OutputFormat format);
std::string render_census(const CensusTable& table, OutputFormat format);
std::string render_stats(const NetworkStats& stats, OutputFormat format);

// Graphviz digraph with per-edge sign="+"|"-" and color green/red.
std::string to_dot(const SignedDigraph& g);

} // namespace sbal
