#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace cff {

struct ReductionParams {
    double epsilon = 1.0;                       // > 0
    std::optional<int> part_size_override;      // desk mode, >= 3
    std::optional<long long> max_output;        // cap on emitted pairs
};

// One emitted (G', f) pair: cliques glued along an A-copy of the source graph
// minus the path's two middle vertices.
struct ReductionInstance {
    Graph graph;
    DegreeSpec f;
    std::array<int, 4> path_witness;  // u0, u1, u2, u3 in the source graph
    std::vector<int> sigma;           // source vertex -> A vertex of graph; -1 for u1, u2
    Partition parts;                  // the clique partition of graph
};

// Formula-mode parameters for a source graph of N vertices: the huge vertex
// count and the minimum part size. Throws SizeLimitError when n does not fit.
struct FormulaModeParams {
    long long n = 0;
    long long min_part_size = 0;
    int parts = 0;  // N - 2
};
FormulaModeParams formula_mode_params(int source_vertices, double epsilon);

// Emits one instance per ordered 4-vertex path u0,u1,u2,u3 with the fixed
// pivot u1 = vertex 0 of the source graph. Desk mode (part_size_override)
// instantiates parts of exactly that size; formula mode materializes the n from
// the formula and errors with guidance when it does not fit. The visitor
// returns false to stop.
void generate_family(const Graph& source, const ReductionParams& params,
                     const std::function<bool(const ReductionInstance&)>& yield);

std::vector<ReductionInstance> generate_family(const Graph& source,
                                               const ReductionParams& params);

// floor(m / (ceil(m/k)+1)) >= k-2; requires k < sqrt(m).
bool parts_floor_bound(long long m, long long k);

// Oracle round-trip: hamiltonicity of the source iff some emitted instance
// has a connected f-factor.
bool verify_reduction(const Graph& source, const ReductionParams& params);

}  // namespace cff
