#pragma once

#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace cff {

// Gadget reducing f-factor search to perfect matching. Every original vertex v
// contributes d_G(v) external vertices (one per incident edge) and
// d_G(v) - f(v) internal vertices joined completely to v's externals; every
// original edge becomes one external-external gadget edge. The gadget has a
// perfect matching iff G has an f-factor, and the matched external-external
// edges read back exactly the factor's edge set.
struct TutteGadget {
    Graph gadget;                                     // weighted iff source weighted
    std::vector<std::optional<EdgeId>> edge_of;       // gadget edge -> source edge
    std::vector<std::vector<int>> externals;          // externals[v][i] pairs with g.incident(v)[i]
    std::vector<std::vector<int>> internals;          // internals[v], size d(v) - f(v)

    int external_vertex(const Graph& g, Vertex v, EdgeId e) const;
};

// Throws ValidationError when f(v) > d_G(v) or sizes mismatch.
TutteGadget build_gadget(const Graph& g, const DegreeSpec& f);

// Spanning subgraph with d_H(v) = f(v) everywhere, or nullopt when none
// exists (including f(v) > d_G(v) and odd-sum f, which are flagged inputs,
// not errors).
std::optional<FactorSubgraph> f_factor(const Graph& g, const DegreeSpec& f);

// f-factor containing every edge of `forced`: delete the forced
// set, solve the reduced degrees, re-add.
std::optional<FactorSubgraph> f_factor_with_forced(const Graph& g, const DegreeSpec& f,
                                                   const std::vector<EdgeId>& forced);

std::optional<FactorSubgraph> min_weight_f_factor(const Graph& g, const DegreeSpec& f);

std::optional<FactorSubgraph> min_weight_f_factor_with_forced(const Graph& g, const DegreeSpec& f,
                                                              const std::vector<EdgeId>& forced);

bool is_f_factor(const Graph& g, const DegreeSpec& f, const FactorSubgraph& h);

}  // namespace cff
