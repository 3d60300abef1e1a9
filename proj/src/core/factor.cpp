#include "core/factor.hpp"

#include <algorithm>

#include "core/matching.hpp"

namespace cff {

namespace {

void check_spec(const Graph& g, const DegreeSpec& f) {
    if (f.size() != g.vertex_count()) throw ValidationError("factor: degree spec size mismatch");
}

// Inputs that can never have a factor but are admissible: flagged by nullopt.
bool trivially_infeasible(const Graph& g, const DegreeSpec& f) {
    return !f.parity_ok() || !f.fits(g);
}

std::optional<FactorSubgraph> factor_via_gadget(const Graph& g, const DegreeSpec& f,
                                                bool minimize) {
    check_spec(g, f);
    if (trivially_infeasible(g, f)) return std::nullopt;

    // Degenerate fast path: f == d everywhere means H = G.
    bool all_full = true;
    for (Vertex v = 0; v < g.vertex_count() && all_full; ++v)
        if (f(v) != g.degree(v)) all_full = false;
    if (all_full) {
        std::vector<EdgeId> all(g.edge_count());
        for (EdgeId e = 0; e < g.edge_count(); ++e) all[e] = e;
        return FactorSubgraph(g, all);
    }

    TutteGadget gadget = build_gadget(g, f);

    std::vector<EdgeId> picked;
    if (minimize) {
        auto pm = min_weight_perfect_matching(gadget.gadget);
        if (!pm) return std::nullopt;
        for (EdgeId ge : pm->pairs)
            if (gadget.edge_of[ge]) picked.push_back(*gadget.edge_of[ge]);
    } else {
        Matching pm = max_cardinality_matching(gadget.gadget);
        if (2 * pm.size() != gadget.gadget.vertex_count()) return std::nullopt;
        for (EdgeId ge : pm.pairs)
            if (gadget.edge_of[ge]) picked.push_back(*gadget.edge_of[ge]);
    }
    std::sort(picked.begin(), picked.end());
    return FactorSubgraph(g, picked);
}

std::optional<FactorSubgraph> forced_factor(const Graph& g, const DegreeSpec& f,
                                            const std::vector<EdgeId>& forced, bool minimize) {
    check_spec(g, f);
    std::vector<char> seen(g.edge_count(), 0);
    std::vector<int> forced_deg(g.vertex_count(), 0);
    for (EdgeId e : forced) {
        if (e < 0 || e >= g.edge_count()) throw ValidationError("forced factor: bad edge id");
        if (seen[e]) throw ValidationError("forced factor: duplicate forced edge");
        seen[e] = 1;
        ++forced_deg[g.edge(e).u];
        ++forced_deg[g.edge(e).v];
    }
    std::vector<int> reduced(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        reduced[v] = f(v) - forced_deg[v];
        if (reduced[v] < 0) return std::nullopt;  // the forced set itself violates degrees
    }

    std::vector<EdgeId> back_map;
    Graph rest = g.remove_edges(forced, &back_map);
    auto sub = factor_via_gadget(rest, DegreeSpec(std::move(reduced)), minimize);
    if (!sub) return std::nullopt;

    FactorSubgraph out(g, forced);
    for (EdgeId e : sub->edge_ids()) out.add(back_map[e]);
    return out;
}

}  // namespace

int TutteGadget::external_vertex(const Graph& g, Vertex v, EdgeId e) const {
    const auto& inc = g.incident(v);
    auto it = std::find(inc.begin(), inc.end(), e);
    if (it == inc.end()) throw ValidationError("gadget: edge not incident to vertex");
    return externals[v][it - inc.begin()];
}

TutteGadget build_gadget(const Graph& g, const DegreeSpec& f) {
    check_spec(g, f);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (f(v) < 0) throw ValidationError("gadget: negative degree requirement");
        if (f(v) > g.degree(v)) throw ValidationError("gadget: f(v) exceeds vertex degree");
    }

    TutteGadget out;
    out.externals.resize(g.vertex_count());
    out.internals.resize(g.vertex_count());

    int total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) total += 2 * g.degree(v) - f(v);
    out.gadget = Graph(total, g.weighted());

    int next = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out.externals[v].resize(g.degree(v));
        for (int i = 0; i < g.degree(v); ++i) out.externals[v][i] = next++;
        out.internals[v].resize(g.degree(v) - f(v));
        for (int i = 0; i < g.degree(v) - f(v); ++i) out.internals[v][i] = next++;
    }

    // internal-external complete bipartite join per vertex; weight 0
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        for (int iv : out.internals[v])
            for (int ev : out.externals[v]) {
                if (g.weighted())
                    out.gadget.add_edge(iv, ev, 0);
                else
                    out.gadget.add_edge(iv, ev);
                out.edge_of.push_back(std::nullopt);
            }

    // one external-external edge per source edge, carrying its weight
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        int a = out.external_vertex(g, ed.u, e);
        int b = out.external_vertex(g, ed.v, e);
        if (g.weighted())
            out.gadget.add_edge(a, b, g.weight(e));
        else
            out.gadget.add_edge(a, b);
        out.edge_of.push_back(e);
    }
    return out;
}

std::optional<FactorSubgraph> f_factor(const Graph& g, const DegreeSpec& f) {
    return factor_via_gadget(g, f, false);
}

std::optional<FactorSubgraph> f_factor_with_forced(const Graph& g, const DegreeSpec& f,
                                                   const std::vector<EdgeId>& forced) {
    return forced_factor(g, f, forced, false);
}

std::optional<FactorSubgraph> min_weight_f_factor(const Graph& g, const DegreeSpec& f) {
    if (!g.weighted()) throw ValidationError("min-weight factor: graph must be weighted");
    return factor_via_gadget(g, f, true);
}

std::optional<FactorSubgraph> min_weight_f_factor_with_forced(const Graph& g, const DegreeSpec& f,
                                                              const std::vector<EdgeId>& forced) {
    if (!g.weighted()) throw ValidationError("min-weight factor: graph must be weighted");
    return forced_factor(g, f, forced, true);
}

bool is_f_factor(const Graph& g, const DegreeSpec& f, const FactorSubgraph& h) {
    check_spec(g, f);
    if (&h.graph() != &g) throw ValidationError("is_f_factor: subgraph has a different parent");
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (h.degree(v) != f(v)) return false;
    return true;
}

}  // namespace cff
