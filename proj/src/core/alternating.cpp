#include "core/alternating.hpp"

#include <algorithm>
#include <numeric>

namespace cff {

namespace {

using Color = ColoredSubgraph::Color;

// Per-incidence red<->blue pairing, ascending edge id at every vertex.
// partner[2e + side] = edge paired with e at its side-0 (u) or side-1 (v) end.
struct Pairing {
    std::vector<EdgeId> partner;
    const Graph* g;

    EdgeId at(Vertex v, EdgeId e) const {
        return partner[2 * e + (g->edge(e).u == v ? 0 : 1)];
    }
};

Pairing build_pairing(const ColoredSubgraph& cs) {
    const Graph& g = cs.graph();
    Pairing p{std::vector<EdgeId>(2 * g.edge_count(), -1), &g};
    std::vector<EdgeId> reds, blues;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (cs.degree(v) == 0) continue;
        reds.clear();
        blues.clear();
        for (EdgeId e : g.incident(v)) {
            if (cs.is_red(e)) reds.push_back(e);
            if (cs.is_blue(e)) blues.push_back(e);
        }
        if (reds.size() != blues.size()) throw std::logic_error("pairing requires balance");
        for (size_t k = 0; k < reds.size(); ++k) {
            EdgeId r = reds[k], b = blues[k];
            p.partner[2 * r + (g.edge(r).u == v ? 0 : 1)] = b;
            p.partner[2 * b + (g.edge(b).u == v ? 0 : 1)] = r;
        }
    }
    return p;
}

// Follows pairing transitions from e0's u-side until the trail closes. Marks
// edges used. The resulting closed walk alternates colors, wrap included.
ClosedWalk extract_trail(const ColoredSubgraph& cs, const Pairing& p, EdgeId e0,
                         std::vector<char>& used) {
    const Graph& g = cs.graph();
    ClosedWalk w;
    Vertex start = g.edge(e0).u;
    w.verts.push_back(start);
    Vertex x = start;
    EdgeId e = e0;
    while (true) {
        used[e] = 1;
        w.edges.push_back(e);
        x = g.other_end(e, x);
        w.verts.push_back(x);
        EdgeId next = p.at(x, e);
        if (x == start && next == e0) break;
        e = next;
    }
    return w;
}

void rotate_walk(ClosedWalk& w, int pos) {
    if (pos == 0) return;
    std::rotate(w.edges.begin(), w.edges.begin() + pos, w.edges.end());
    w.verts.pop_back();  // drop duplicated closing vertex
    std::rotate(w.verts.begin(), w.verts.begin() + pos, w.verts.end());
    w.verts.push_back(w.verts.front());
}

void reverse_walk(ClosedWalk& w) {
    std::reverse(w.edges.begin(), w.edges.end());
    std::reverse(w.verts.begin(), w.verts.end());
}

// Splices other into tour at a shared vertex, flipping other's orientation
// when needed to keep color alternation at both junctions.
void splice(const ColoredSubgraph& cs, ClosedWalk& tour, ClosedWalk other) {
    int pos = -1;
    std::vector<char> in_other(cs.graph().vertex_count(), 0);
    for (size_t i = 0; i + 1 < other.verts.size(); ++i) in_other[other.verts[i]] = 1;
    for (size_t i = 0; i + 1 < tour.verts.size(); ++i)
        if (in_other[tour.verts[i]]) {
            pos = static_cast<int>(i);
            break;
        }
    if (pos < 0) throw std::logic_error("splice: walks share no vertex");
    Vertex x = tour.verts[pos];

    int opos = 0;
    while (other.verts[opos] != x) ++opos;
    rotate_walk(other, opos);

    const int L = static_cast<int>(tour.edges.size());
    Color entering = cs.color(tour.edges[(pos - 1 + L) % L]);
    if (cs.color(other.edges.front()) == entering) {
        reverse_walk(other);  // wrap edges differ in color, so this always fixes it
    }

    tour.edges.insert(tour.edges.begin() + pos, other.edges.begin(), other.edges.end());
    tour.verts.insert(tour.verts.begin() + pos, other.verts.begin(), other.verts.end() - 1);
}

// Tour of one connected balanced piece, assuming cs is such a piece.
ClosedWalk tour_connected(const ColoredSubgraph& cs) {
    Pairing pairing = build_pairing(cs);
    std::vector<char> used(cs.graph().edge_count(), 0);
    std::vector<ClosedWalk> trails;
    for (EdgeId e : cs.edges())
        if (!used[e]) trails.push_back(extract_trail(cs, pairing, e, used));

    ClosedWalk tour = std::move(trails.front());
    std::vector<char> merged(trails.size(), 0);
    merged[0] = 1;
    size_t remaining = trails.size() - 1;
    while (remaining > 0) {
        std::vector<char> on_tour(cs.graph().vertex_count(), 0);
        for (Vertex v : tour.verts) on_tour[v] = 1;
        bool progress = false;
        for (size_t t = 1; t < trails.size(); ++t) {
            if (merged[t]) continue;
            bool shares = false;
            for (size_t i = 0; i + 1 < trails[t].verts.size(); ++i)
                if (on_tour[trails[t].verts[i]]) {
                    shares = true;
                    break;
                }
            if (!shares) continue;
            splice(cs, tour, std::move(trails[t]));
            merged[t] = 1;
            --remaining;
            progress = true;
            break;
        }
        if (!progress) throw std::logic_error("tour: piece is not connected");
    }
    return tour;
}

ColoredSubgraph subgraph_from_edges(const ColoredSubgraph& src, const std::vector<EdgeId>& edges) {
    ColoredSubgraph out(src.graph());
    for (EdgeId e : edges) {
        if (src.is_red(e))
            out.add_red(e);
        else
            out.add_blue(e);
    }
    return out;
}

// Walk shrinking step of Find-Min-AC: rotate to a heavy vertex, keep the
// closed sub-walk delimited by the first departure/returns so that the kept
// wrap alternates.
ClosedWalk shrink_once(const ColoredSubgraph& colors, ClosedWalk walk, Vertex heavy) {
    int first = 0;
    while (walk.verts[first] != heavy) ++first;
    rotate_walk(walk, first);

    const int L = static_cast<int>(walk.edges.size());
    int j1 = -1, j2 = -1;
    for (int i = 1; i <= L; ++i) {
        if (walk.verts[i] == heavy) {
            if (j1 < 0) {
                j1 = i;
            } else {
                j2 = i;
                break;
            }
        }
    }
    if (j2 < 0) throw std::logic_error("find-min-ac: heavy vertex with fewer than two returns");

    Color c1 = colors.color(walk.edges[0]);
    Color c2 = colors.color(walk.edges[j1 - 1]);
    Color c3 = colors.color(walk.edges[j1]);
    Color c4 = colors.color(walk.edges[j2 - 1]);

    ClosedWalk next;
    auto keep = [&](int from, int to) {  // edges [from, to), verts [from, to]
        next.edges.assign(walk.edges.begin() + from, walk.edges.begin() + to);
        next.verts.assign(walk.verts.begin() + from, walk.verts.begin() + to + 1);
    };
    if (c2 != c1) {
        keep(0, j1);
    } else if (c4 != c3) {
        keep(j1, j2);
    } else {
        keep(0, j2);  // e1 and e4 differ here, so the wrap still alternates
    }
    return next;
}

ClosedWalk find_min_ac_walk(const ColoredSubgraph& cs) {
    ClosedWalk walk = tour_connected(cs);
    std::vector<int> dr(cs.graph().vertex_count(), 0), db(cs.graph().vertex_count(), 0);
    while (true) {
        std::fill(dr.begin(), dr.end(), 0);
        std::fill(db.begin(), db.end(), 0);
        for (EdgeId e : walk.edges) {
            const Edge& ed = cs.graph().edge(e);
            auto& d = cs.is_red(e) ? dr : db;
            ++d[ed.u];
            ++d[ed.v];
        }
        // smallest-id heavy vertex, for reproducible decompositions
        Vertex heavy = -1;
        for (size_t i = 0; i + 1 < walk.verts.size(); ++i) {
            Vertex v = walk.verts[i];
            if ((dr[v] > 2 || db[v] > 2) && (heavy < 0 || v < heavy)) heavy = v;
        }
        if (heavy < 0) return walk;
        walk = shrink_once(cs, std::move(walk), heavy);
    }
}

void peel_min_acs(const AlternatingCircuit& u, const std::vector<char>* keep_mask,
                  std::vector<AlternatingCircuit>& out) {
    std::vector<ColoredSubgraph> work{u.colored()};
    while (!work.empty()) {
        ColoredSubgraph piece = std::move(work.back());
        work.pop_back();
        if (piece.empty()) continue;
        ClosedWalk walk = find_min_ac_walk(piece);
        ColoredSubgraph circuit = subgraph_from_edges(piece, walk.edges);
        bool keep = true;
        if (keep_mask) {
            keep = false;
            for (EdgeId e : walk.edges)
                if ((*keep_mask)[e]) {
                    keep = true;
                    break;
                }
        }
        if (keep) out.push_back(AlternatingCircuit::validate(circuit));
        for (EdgeId e : walk.edges) piece.remove(e);
        if (piece.empty()) continue;
        for (ColoredSubgraph& comp : colored_components(piece)) work.push_back(std::move(comp));
    }
}

}  // namespace

// ---- ColoredSubgraph ----

ColoredSubgraph::ColoredSubgraph(const Graph& g)
    : g_(&g),
      color_(g.edge_count(), Color::None),
      dr_(g.vertex_count(), 0),
      db_(g.vertex_count(), 0) {}

void ColoredSubgraph::add_red(EdgeId e) {
    if (e < 0 || e >= g_->edge_count()) throw ValidationError("colored subgraph: bad edge id");
    if (color_[e] != Color::None) throw ValidationError("colored subgraph: edge already colored");
    color_[e] = Color::Red;
    ++dr_[g_->edge(e).u];
    ++dr_[g_->edge(e).v];
    ++red_count_;
}

void ColoredSubgraph::add_blue(EdgeId e) {
    if (e < 0 || e >= g_->edge_count()) throw ValidationError("colored subgraph: bad edge id");
    if (color_[e] != Color::None) throw ValidationError("colored subgraph: edge already colored");
    color_[e] = Color::Blue;
    ++db_[g_->edge(e).u];
    ++db_[g_->edge(e).v];
    ++blue_count_;
}

void ColoredSubgraph::remove(EdgeId e) {
    if (e < 0 || e >= g_->edge_count() || color_[e] == Color::None)
        throw ValidationError("colored subgraph: edge not present");
    auto& d = color_[e] == Color::Red ? dr_ : db_;
    --d[g_->edge(e).u];
    --d[g_->edge(e).v];
    (color_[e] == Color::Red ? red_count_ : blue_count_)--;
    color_[e] = Color::None;
}

std::vector<EdgeId> ColoredSubgraph::edges() const {
    std::vector<EdgeId> out;
    out.reserve(edge_count());
    for (EdgeId e = 0; e < static_cast<EdgeId>(color_.size()); ++e)
        if (color_[e] != Color::None) out.push_back(e);
    return out;
}

std::vector<EdgeId> ColoredSubgraph::red_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(color_.size()); ++e)
        if (color_[e] == Color::Red) out.push_back(e);
    return out;
}

std::vector<EdgeId> ColoredSubgraph::blue_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(color_.size()); ++e)
        if (color_[e] == Color::Blue) out.push_back(e);
    return out;
}

bool ColoredSubgraph::balanced() const {
    return dr_ == db_;
}

// ---- AlternatingCircuit ----

AlternatingCircuit AlternatingCircuit::validate(ColoredSubgraph cs) {
    if (cs.empty()) throw ValidationError("alternating circuit: empty edge set");
    if (!cs.balanced()) throw ValidationError("alternating circuit: red/blue degree imbalance");
    if (colored_components(cs).size() != 1)
        throw ValidationError("alternating circuit: not connected");
    return AlternatingCircuit(std::move(cs));
}

bool AlternatingCircuit::minimal() const {
    for (Vertex v = 0; v < cs_.graph().vertex_count(); ++v)
        if (cs_.red_degree(v) > 2 || cs_.blue_degree(v) > 2) return false;
    return true;
}

// ---- operations ----

ColoredSubgraph color_difference(const FactorSubgraph& h1, const FactorSubgraph& h2) {
    if (&h1.graph() != &h2.graph())
        throw ValidationError("color difference: factors live on different graphs");
    ColoredSubgraph out(h1.graph());
    for (EdgeId e = 0; e < h1.graph().edge_count(); ++e) {
        bool a = h1.contains(e), b = h2.contains(e);
        if (a && !b) out.add_red(e);
        if (b && !a) out.add_blue(e);
    }
    if (!out.balanced())
        throw ValidationError("color difference: degree imbalance (inputs are not f-factors "
                              "of the same f)");
    return out;
}

std::vector<ColoredSubgraph> colored_components(const ColoredSubgraph& cs) {
    const Graph& g = cs.graph();
    std::vector<EdgeId> all = cs.edges();
    std::vector<std::vector<int>> comps = components_of(g, all);
    std::vector<int> comp_of(g.vertex_count(), -1);
    std::vector<int> index;  // component order by minimum vertex, non-trivial only
    for (const auto& c : comps) {
        if (c.size() == 1 && cs.degree(c.front()) == 0) continue;
        for (int v : c) comp_of[v] = static_cast<int>(index.size());
        index.push_back(0);
    }
    std::vector<ColoredSubgraph> out(index.size(), ColoredSubgraph(g));
    for (EdgeId e : all) {
        int c = comp_of[g.edge(e).u];
        if (cs.is_red(e))
            out[c].add_red(e);
        else
            out[c].add_blue(e);
    }
    return out;
}

std::optional<ClosedWalk> alternating_euler_tour(const ColoredSubgraph& cs) {
    if (cs.empty() || !cs.balanced()) return std::nullopt;
    if (colored_components(cs).size() != 1) return std::nullopt;
    return tour_connected(cs);
}

bool is_alternating_circuit(const ColoredSubgraph& cs) {
    return !cs.empty() && cs.balanced() && colored_components(cs).size() == 1;
}

AlternatingCircuit find_min_ac(const AlternatingCircuit& u) {
    ClosedWalk walk = find_min_ac_walk(u.colored());
    return AlternatingCircuit::validate(subgraph_from_edges(u.colored(), walk.edges));
}

std::vector<AlternatingCircuit> decompose_min_acs(const AlternatingCircuit& u) {
    std::vector<AlternatingCircuit> out;
    peel_min_acs(u, nullptr, out);
    return out;
}

std::vector<AlternatingCircuit> min_ac_set(const AlternatingCircuit& u,
                                           const std::vector<EdgeId>& cover) {
    const ColoredSubgraph& cs = u.colored();
    std::vector<char> mask(cs.graph().edge_count(), 0);
    for (EdgeId e : cover) {
        if (e < 0 || e >= cs.graph().edge_count() || !cs.contains(e))
            throw ValidationError("min-ac-set: cover edge outside the circuit");
        mask[e] = 1;
    }
    std::vector<AlternatingCircuit> out;
    peel_min_acs(u, &mask, out);
    return out;
}

FactorSubgraph switching(const FactorSubgraph& h, const ColoredSubgraph& sw) {
    if (&h.graph() != &sw.graph())
        throw ValidationError("switching: switch lives on a different graph");
    if (!sw.balanced()) throw ValidationError("switching: not a switch (degree imbalance)");
    FactorSubgraph out = h;
    for (EdgeId e : sw.red_edges()) {
        if (!h.contains(e)) throw ValidationError("switching: red edge not in host subgraph");
        out.remove(e);
    }
    for (EdgeId e : sw.blue_edges()) {
        if (h.contains(e)) throw ValidationError("switching: blue edge already in host subgraph");
        out.add(e);
    }
    return out;
}

FactorSubgraph switching(const FactorSubgraph& h, const std::vector<AlternatingCircuit>& circuits) {
    ColoredSubgraph merged(h.graph());
    for (const AlternatingCircuit& c : circuits) {
        for (EdgeId e : c.colored().red_edges()) merged.add_red(e);    // throws on overlap
        for (EdgeId e : c.colored().blue_edges()) merged.add_blue(e);
    }
    return switching(h, merged);
}

Weight circuit_weight(const ColoredSubgraph& cs) {
    if (!cs.graph().weighted())
        throw ValidationError("circuit weight: host graph carries no weights");
    Weight w = 0;
    for (EdgeId e : cs.blue_edges()) w += cs.graph().weight(e);
    for (EdgeId e : cs.red_edges()) w -= cs.graph().weight(e);
    return w;
}

}  // namespace cff
