#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "core/graph.hpp"

namespace cff {

struct OracleResult {
    bool exists = false;
    std::optional<std::pair<FactorSubgraph, Weight>> best;  // min weight (edge count if unweighted)
    long long count = 0;  // number of (connected) f-factors
};

// Streams every edge subset with the required degrees (and connectivity, when
// requested), each exactly once; residual-degree pruning keeps desk-scale
// instances tractable. The visitor returns false to stop. Intended for
// |E| <= ~24; hard-capped well above that.
void enumerate_f_factors(const Graph& g, const DegreeSpec& f, bool connected_only,
                         const std::function<bool(const FactorSubgraph&)>& yield);

// Folds enumerate_f_factors(connected_only=true); minimizes total weight when
// the graph is weighted.
OracleResult brute_force_connected_f_factor(const Graph& g, const DegreeSpec& f);

// Decision-only variant stopping at the first witness.
bool oracle_connected_f_factor_exists(const Graph& g, const DegreeSpec& f);

// Bitmask-DP spanning cycle test. Intended for n <= ~12 (documented soft
// limit); throws SizeLimitError above the hard cap.
bool has_hamiltonian_cycle(const Graph& g);

}  // namespace cff
