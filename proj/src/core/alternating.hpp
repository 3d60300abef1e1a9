#pragma once

#include <optional>
#include <vector>

#include "core/graph.hpp"

namespace cff {

// Edge subset of a host graph where every member edge is red or blue
// (disjoint by construction). Per-vertex color degrees are maintained.
class ColoredSubgraph {
public:
    enum class Color : unsigned char { None = 0, Red = 1, Blue = 2 };

    explicit ColoredSubgraph(const Graph& g);

    const Graph& graph() const { return *g_; }
    Color color(EdgeId e) const { return color_[e]; }
    bool contains(EdgeId e) const { return color_[e] != Color::None; }
    bool is_red(EdgeId e) const { return color_[e] == Color::Red; }
    bool is_blue(EdgeId e) const { return color_[e] == Color::Blue; }

    void add_red(EdgeId e);
    void add_blue(EdgeId e);
    void remove(EdgeId e);

    int red_degree(Vertex v) const { return dr_[v]; }
    int blue_degree(Vertex v) const { return db_[v]; }
    int degree(Vertex v) const { return dr_[v] + db_[v]; }

    int edge_count() const { return red_count_ + blue_count_; }
    int red_count() const { return red_count_; }
    int blue_count() const { return blue_count_; }
    bool empty() const { return edge_count() == 0; }

    std::vector<EdgeId> edges() const;  // ascending
    std::vector<EdgeId> red_edges() const;
    std::vector<EdgeId> blue_edges() const;

    // d_R(v) == d_B(v) for every vertex.
    bool balanced() const;

    bool operator==(const ColoredSubgraph& o) const { return g_ == o.g_ && color_ == o.color_; }

private:
    const Graph* g_ = nullptr;
    std::vector<Color> color_;
    std::vector<int> dr_, db_;
    int red_count_ = 0, blue_count_ = 0;
};

// Validated alternating circuit: non-empty, connected, d_R == d_B everywhere
// (the degree criterion is equivalent to admitting an alternating Eulerian
// tour). Minimal when no vertex carries more than two edges of either color.
class AlternatingCircuit {
public:
    static AlternatingCircuit validate(ColoredSubgraph cs);  // throws ValidationError

    const ColoredSubgraph& colored() const { return cs_; }
    bool minimal() const;

private:
    explicit AlternatingCircuit(ColoredSubgraph cs) : cs_(std::move(cs)) {}
    ColoredSubgraph cs_;
};

// Closed walk: edges[i] is traversed from verts[i] to verts[i+1],
// verts.front() == verts.back().
struct ClosedWalk {
    std::vector<Vertex> verts;
    std::vector<EdgeId> edges;
};

// Red edges H1\H2, blue edges H2\H1. Both inputs must be f-factors of the
// same host for the same f; a per-vertex red/blue degree imbalance (the
// observable symptom) raises ValidationError.
ColoredSubgraph color_difference(const FactorSubgraph& h1, const FactorSubgraph& h2);

// Groups the colored edges into connected components (each a ColoredSubgraph).
std::vector<ColoredSubgraph> colored_components(const ColoredSubgraph& cs);

// Alternating Eulerian tour of a connected balanced colored subgraph, built by
// per-vertex red/blue pairing (ascending edge id) and walk merging. Returns
// nullopt when the subgraph is imbalanced or disconnected or empty.
std::optional<ClosedWalk> alternating_euler_tour(const ColoredSubgraph& cs);

bool is_alternating_circuit(const ColoredSubgraph& cs);

// Minimal alternating circuit inside U (Find-Min-AC). U itself when already
// minimal. Throws ValidationError when U is not an alternating circuit.
AlternatingCircuit find_min_ac(const AlternatingCircuit& u);

// Partitions E(U) into edge-disjoint minimal alternating circuits.
std::vector<AlternatingCircuit> decompose_min_acs(const AlternatingCircuit& u);

// Edge-disjoint minimal alternating circuits inside U, each containing at
// least one edge of `cover`, whose union covers `cover` (Min-AC-Set). Throws
// when cover is not a subset of E(U).
std::vector<AlternatingCircuit> min_ac_set(const AlternatingCircuit& u,
                                           const std::vector<EdgeId>& cover);

// Removes the switch's red edges from H and adds its blue edges. Requires
// red ⊆ H, blue ∩ H = ∅, and componentwise balance; degrees are preserved.
FactorSubgraph switching(const FactorSubgraph& h, const ColoredSubgraph& sw);
FactorSubgraph switching(const FactorSubgraph& h, const std::vector<AlternatingCircuit>& circuits);

// W(S) = w(blue) - w(red); host weights required.
Weight circuit_weight(const ColoredSubgraph& cs);

}  // namespace cff
