#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "core/graph.hpp"

// Shared fixtures and independent reference implementations used as oracles.
namespace cff::test {

// ---- named graphs ----

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);                  // K_{1,leaves}, center 0
Graph prism_graph();                           // triangles {0,1,2},{3,4,5}, matching i - i+3
Graph two_triangles();                         // disjoint triangles on {0,1,2},{3,4,5}
Graph petersen_graph();
Graph circulant_graph(int n, const std::vector<int>& offsets);

Graph with_unit_weights(const Graph& g);
Graph reweighted(const Graph& g, const std::vector<Weight>& w);

// ---- randomness (all deterministic via caller-held engines) ----

using Rng = std::mt19937_64;

Graph random_graph(Rng& rng, int n, double p, bool weighted = false, Weight min_w = 1,
                   Weight max_w = 100);
Graph random_connected_graph(Rng& rng, int n, double p, bool weighted = false, Weight min_w = 1,
                             Weight max_w = 100);
// f with lo <= f(v) <= min(hi, d(v)) and even sum when possible; empty when infeasible.
std::vector<int> random_degree_spec(Rng& rng, const Graph& g, int lo, int hi);

// ---- reference implementations (independent oracles) ----

// Bitmask-DP maximum matching size, n <= ~20.
int brute_max_matching_size(const Graph& g);
// Bitmask-DP minimum weight perfect matching value; nullopt when none exists.
std::optional<Weight> brute_min_weight_perfect_matching(const Graph& g);

// Spanning tree count of the quotient multigraph via the matrix-tree theorem
// (integer Bareiss elimination).
long long kirchhoff_quotient_tree_count(const Graph& g, const Partition& q);

// Degree-constrained subgraph enumeration without the production pruning:
// plain subset recursion, usable for cross-checks on small instances.
std::vector<std::vector<EdgeId>> naive_f_factors(const Graph& g, const std::vector<int>& f,
                                                 bool connected_only);

// ---- isomorphism-free graph generation (n <= 8) ----

// Canonical form: minimum adjacency bitmask over all vertex permutations.
std::uint64_t canonical_form(const Graph& g);
// All non-isomorphic simple graphs on exactly n vertices (as edge bitmasks
// over pairs (i<j) in lexicographic order), grown by vertex extension.
std::vector<std::uint64_t> graph_representatives(int n);
Graph graph_from_mask(int n, std::uint64_t mask);
bool mask_connected(int n, std::uint64_t mask);

}  // namespace cff::test
