#pragma once

#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace cff {

// A set of vertex-disjoint edges of a host graph.
struct Matching {
    std::vector<EdgeId> pairs;  // ascending edge ids
    std::vector<Vertex> mate;   // mate[v], or -1 when v is unmatched
    int size() const { return static_cast<int>(pairs.size()); }
};

// Maximum cardinality matching via blossom shrinking (sparse representation,
// greedy seed). Deterministic: fixed scan order.
Matching max_cardinality_matching(const Graph& g);

// Minimum weight perfect matching via a primal-dual blossom solver on a dense
// weight matrix. Returns nullopt exactly when G has no perfect matching.
// Desk-scale engine: vertex count is capped (see kMinWeightMatchingMaxVertices).
std::optional<Matching> min_weight_perfect_matching(const Graph& g);

inline constexpr int kMinWeightMatchingMaxVertices = 1000;

Weight matching_weight(const Graph& g, const Matching& m);

}  // namespace cff
