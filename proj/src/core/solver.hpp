#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace cff {

enum class Outcome {
    Found,                    // connected f-factor constructed
    NoFFactor,                // G has no f-factor at all (or f is infeasible)
    PartitionUnconnectable,   // witness partition no f-factor can connect
};

struct LevelRecord {
    int level = 0;                 // recursion level, root = 0
    int parts = 0;                 // |Q| worked on at this level
    long long trees_examined = 0;  // candidate spanning trees queried
    bool fallback_used = false;    // next-factor switching dropped in favor of H'
};

struct SolveTrace {
    Outcome outcome = Outcome::NoFFactor;
    std::vector<LevelRecord> levels;
    std::optional<Partition> witness;  // set when outcome == PartitionUnconnectable
    int n = 0;
    int min_f = 0;  // g(n) diagnostic = n / min_f
    int invocations = 0;  // calls into the recursive restricted step

    int recursive_calls() const { return invocations > 0 ? invocations - 1 : 0; }
    bool fallback_used() const;
    int max_parts() const;
    // n >= 2 g(n)^4 with g = n/min_f, i.e. min_f^4 >= 2 n^3 (runtime-bound premise).
    bool size_premise_holds() const;
};

struct SolveResult {
    std::optional<FactorSubgraph> factor;
    SolveTrace trace;
};

struct SolverOptions {
    int threads = 1;  // parallel candidate-tree evaluation inside the connector
};

// Decides existence of (and constructs) a connected f-factor via recursive
// partition refinement. On failure the trace carries either NoFFactor or a
// witness partition that no f-factor connects.
SolveResult connected_f_factor(const Graph& g, const DegreeSpec& f,
                               const SolverOptions& opts = {});

// Weighted variant: minimum-weight connected f-factor. Requires weights.
SolveResult min_connected_f_factor(const Graph& g, const DegreeSpec& f,
                                   const SolverOptions& opts = {});

// One recursion step exposed for direct testing: requires h to be an f-factor
// that connects q (hard error otherwise). Appends level records to trace.
std::optional<FactorSubgraph> restricted_f_factor(const Graph& g, const DegreeSpec& f,
                                                  const FactorSubgraph& h, const Partition& q,
                                                  bool minimize, SolveTrace& trace,
                                                  const SolverOptions& opts = {});

// Finds an f-factor connecting q by scanning spanning trees of G/Q: first
// success in unweighted mode, global minimum over all trees in weighted mode.
// Returns the factor plus the full tree that admitted it.
std::optional<std::pair<FactorSubgraph, std::vector<EdgeId>>> partition_connector(
    const Graph& g, const DegreeSpec& f, const Partition& q, const FactorSubgraph& h_prev,
    bool minimize, long long* trees_examined = nullptr, const SolverOptions& opts = {});

// Transfers q-connectivity from h_new onto h_prev by switching minimal
// alternating circuits covering the freshly forced tree edges; falls back to
// h_new itself when the switched factor fails to connect q (or, in weighted
// mode, fails to match its weight).
FactorSubgraph next_factor(const FactorSubgraph& h_prev, const FactorSubgraph& h_new,
                           const Partition& q, const std::vector<EdgeId>& t_full,
                           bool* fallback_used = nullptr, bool minimize = false);

}  // namespace cff
