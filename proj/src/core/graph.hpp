#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "core/errors.hpp"

namespace cff {

using Vertex = int;
using EdgeId = int;
using Weight = long long;

struct Edge {
    Vertex u, v;  // normalized u < v
};

// Simple undirected graph with dense 0-based vertex ids and stable edge ids
// (insertion order). Optionally carries one exact integer weight per edge.
// Immutable once built; all algorithms take it by const reference.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n, bool weighted = false);

    EdgeId add_edge(Vertex u, Vertex v);
    EdgeId add_edge(Vertex u, Vertex v, Weight w);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool weighted() const { return weighted_; }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    Weight weight(EdgeId e) const;
    Weight total_weight() const;

    bool has_edge(Vertex u, Vertex v) const;
    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

    int degree(Vertex v) const { return static_cast<int>(incident_[v].size()); }
    // Edge ids incident to v, ascending.
    const std::vector<EdgeId>& incident(Vertex v) const { return incident_[v]; }
    Vertex other_end(EdgeId e, Vertex v) const;

    // Copy with the edges in `removed` dropped (ids renumbered). back_map[new id] = old id.
    Graph remove_edges(const std::vector<EdgeId>& removed, std::vector<EdgeId>* back_map = nullptr) const;

private:
    void check_endpoints(Vertex u, Vertex v) const;
    static std::uint64_t key(Vertex u, Vertex v);

    int n_ = 0;
    bool weighted_ = false;
    std::vector<Edge> edges_;
    std::vector<Weight> weights_;
    std::vector<std::vector<EdgeId>> incident_;
    std::unordered_map<std::uint64_t, EdgeId> index_;
};

// Degree requirement f: V -> N. Values above d_G(v) are admissible input;
// they simply force "no factor" (validation helpers flag them).
class DegreeSpec {
public:
    DegreeSpec() = default;
    explicit DegreeSpec(std::vector<int> values);
    static DegreeSpec uniform(int n, int f);

    int size() const { return static_cast<int>(values_.size()); }
    int operator()(Vertex v) const { return values_[v]; }
    const std::vector<int>& values() const { return values_; }

    long long sum() const;
    bool parity_ok() const { return sum() % 2 == 0; }  // odd sum => no f-factor
    bool fits(const Graph& g) const;                   // f(v) <= d_G(v) everywhere
    int min_value() const;

private:
    std::vector<int> values_;
};

// Partition of [0, n) into non-empty parts. Canonical form: parts ordered by
// their minimum vertex, vertices ascending inside each part.
class Partition {
public:
    Partition() = default;
    static Partition single(int n);
    static Partition of_parts(int n, std::vector<std::vector<int>> parts);
    static Partition from_part_of(std::vector<int> part_of);

    int vertex_count() const { return static_cast<int>(part_of_.size()); }
    int size() const { return static_cast<int>(parts_.size()); }
    const std::vector<std::vector<int>>& parts() const { return parts_; }
    const std::vector<int>& part(int i) const { return parts_[i]; }
    int part_of(Vertex v) const { return part_of_[v]; }

    bool operator==(const Partition& o) const { return part_of_ == o.part_of_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

    // True if every part of *this is contained in a part of coarser.
    bool refines(const Partition& coarser) const;

private:
    void canonicalize();

    std::vector<std::vector<int>> parts_;
    std::vector<int> part_of_;
};

// Quotient multigraph G/Q: one edge per cross-part edge of G, loops dropped,
// parallel edges retained. Each quotient edge back-references its source edge.
struct QuotientEdge {
    int part_u, part_v;  // normalized part_u < part_v
    EdgeId original;
};

class QuotientGraph {
public:
    QuotientGraph(Partition parts, std::vector<QuotientEdge> edges)
        : parts_(std::move(parts)), edges_(std::move(edges)) {}

    const Partition& partition() const { return parts_; }
    int part_count() const { return parts_.size(); }
    const std::vector<QuotientEdge>& edges() const { return edges_; }
    bool connected() const;

private:
    Partition parts_;
    std::vector<QuotientEdge> edges_;
};

// Spanning subgraph of a host graph, stored as an edge-id set with maintained
// per-vertex degrees. Parent identity is the Graph object's address.
class FactorSubgraph {
public:
    explicit FactorSubgraph(const Graph& g);
    FactorSubgraph(const Graph& g, const std::vector<EdgeId>& edges);

    const Graph& graph() const { return *g_; }
    bool contains(EdgeId e) const { return in_[e] != 0; }
    int degree(Vertex v) const { return deg_[v]; }
    int edge_count() const { return count_; }
    std::vector<EdgeId> edge_ids() const;  // ascending
    Weight total_weight() const;

    void add(EdgeId e);
    void remove(EdgeId e);

    bool operator==(const FactorSubgraph& o) const { return g_ == o.g_ && in_ == o.in_; }

private:
    const Graph* g_ = nullptr;
    std::vector<char> in_;
    std::vector<int> deg_;
    int count_ = 0;
};

// ---- graph-core operations ----

// Connected components of the spanning subgraph ([0,n), given edges); isolated
// vertices are singleton components. Components ordered by minimum vertex.
std::vector<std::vector<int>> components(int n, const std::vector<std::pair<int, int>>& edges);
std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<EdgeId>& edges);
std::vector<std::vector<int>> components_of(const FactorSubgraph& h);

bool is_connected(int n, const std::vector<std::pair<int, int>>& edges);
bool is_connected(const FactorSubgraph& h);

QuotientGraph quotient(const Graph& g, const Partition& q);

// Components of H[X] over all X in Q; a refinement of Q, equal to Q exactly
// when every H[X] is connected.
Partition refine_partition(const FactorSubgraph& h, const Partition& q);

// Enumerates every edge set T of G with |T| = |Q|-1 whose quotient edges form
// a spanning tree of G/Q. Trees are emitted in lexicographic edge-id order and
// each exactly once; the visitor returns false to stop early.
// Requires |Q| >= 2; yields nothing when G/Q is disconnected.
void for_each_spanning_tree(const Graph& g, const Partition& q,
                            const std::function<bool(const std::vector<EdgeId>&)>& visit);

std::vector<std::vector<EdgeId>> spanning_trees(const Graph& g, const Partition& q);

}  // namespace cff
