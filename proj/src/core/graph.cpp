#include "core/graph.hpp"

#include <algorithm>
#include <numeric>

namespace cff {

namespace {

// Plain union-find, path halving.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);  // keep the smaller root for determinism
        parent[b] = a;
        return true;
    }
};

std::vector<std::vector<int>> groups_from_dsu(Dsu& dsu, int n) {
    std::vector<std::vector<int>> by_root(n);
    for (int v = 0; v < n; ++v) by_root[dsu.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (int r = 0; r < n; ++r)
        if (!by_root[r].empty()) out.push_back(std::move(by_root[r]));
    return out;  // roots are component minima, so order is by minimum vertex
}

}  // namespace

// ---- Graph ----

Graph::Graph(int n, bool weighted) : n_(n), weighted_(weighted), incident_(n) {
    if (n < 0) throw ValidationError("graph: negative vertex count");
}

void Graph::check_endpoints(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw ValidationError("graph: endpoint out of range");
    if (u == v) throw ValidationError("graph: self-loop");
}

std::uint64_t Graph::key(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

EdgeId Graph::add_edge(Vertex u, Vertex v) {
    if (weighted_) throw ValidationError("graph: weighted graph requires an edge weight");
    check_endpoints(u, v);
    if (u > v) std::swap(u, v);
    if (index_.count(key(u, v))) throw ValidationError("graph: parallel edge");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    index_.emplace(key(u, v), id);
    return id;
}

EdgeId Graph::add_edge(Vertex u, Vertex v, Weight w) {
    if (!weighted_) throw ValidationError("graph: unweighted graph cannot take edge weights");
    if (w < 0) throw ValidationError("graph: negative edge weight");
    check_endpoints(u, v);
    if (u > v) std::swap(u, v);
    if (index_.count(key(u, v))) throw ValidationError("graph: parallel edge");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    weights_.push_back(w);
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    index_.emplace(key(u, v), id);
    return id;
}

Weight Graph::weight(EdgeId e) const {
    if (!weighted_) throw ValidationError("graph: weight requested from unweighted graph");
    return weights_[e];
}

Weight Graph::total_weight() const {
    if (!weighted_) throw ValidationError("graph: weight requested from unweighted graph");
    Weight s = 0;
    for (Weight w : weights_) s += w;
    return s;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    return find_edge(u, v).has_value();
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return std::nullopt;
    auto it = index_.find(key(u, v));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vertex Graph::other_end(EdgeId e, Vertex v) const {
    const Edge& ed = edges_[e];
    return ed.u == v ? ed.v : ed.u;
}

Graph Graph::remove_edges(const std::vector<EdgeId>& removed, std::vector<EdgeId>* back_map) const {
    std::vector<char> drop(edges_.size(), 0);
    for (EdgeId e : removed) {
        if (e < 0 || e >= edge_count()) throw ValidationError("graph: bad edge id");
        drop[e] = 1;
    }
    Graph out(n_, weighted_);
    if (back_map) back_map->clear();
    for (EdgeId e = 0; e < edge_count(); ++e) {
        if (drop[e]) continue;
        if (weighted_)
            out.add_edge(edges_[e].u, edges_[e].v, weights_[e]);
        else
            out.add_edge(edges_[e].u, edges_[e].v);
        if (back_map) back_map->push_back(e);
    }
    return out;
}

// ---- DegreeSpec ----

DegreeSpec::DegreeSpec(std::vector<int> values) : values_(std::move(values)) {
    for (int f : values_)
        if (f < 0) throw ValidationError("degree spec: negative value");
}

DegreeSpec DegreeSpec::uniform(int n, int f) {
    return DegreeSpec(std::vector<int>(n, f));
}

long long DegreeSpec::sum() const {
    return std::accumulate(values_.begin(), values_.end(), 0LL);
}

bool DegreeSpec::fits(const Graph& g) const {
    if (g.vertex_count() != size()) throw ValidationError("degree spec: size mismatch");
    for (Vertex v = 0; v < size(); ++v)
        if (values_[v] > g.degree(v)) return false;
    return true;
}

int DegreeSpec::min_value() const {
    if (values_.empty()) return 0;
    return *std::min_element(values_.begin(), values_.end());
}

// ---- Partition ----

void Partition::canonicalize() {
    for (auto& p : parts_) std::sort(p.begin(), p.end());
    std::sort(parts_.begin(), parts_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (int i = 0; i < static_cast<int>(parts_.size()); ++i)
        for (int v : parts_[i]) part_of_[v] = i;
}

Partition Partition::single(int n) {
    if (n <= 0) throw ValidationError("partition: empty vertex set");
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    Partition q;
    q.parts_.push_back(std::move(all));
    q.part_of_.assign(n, 0);
    return q;
}

Partition Partition::of_parts(int n, std::vector<std::vector<int>> parts) {
    Partition q;
    q.part_of_.assign(n, -1);
    for (auto& p : parts) {
        if (p.empty()) throw ValidationError("partition: empty part");
        for (int v : p) {
            if (v < 0 || v >= n) throw ValidationError("partition: vertex out of range");
            if (q.part_of_[v] == -2) throw ValidationError("partition: parts overlap");
            q.part_of_[v] = -2;  // mark seen
        }
    }
    for (int v = 0; v < n; ++v)
        if (q.part_of_[v] == -1) throw ValidationError("partition: vertex not covered");
    q.parts_ = std::move(parts);
    q.canonicalize();
    return q;
}

Partition Partition::from_part_of(std::vector<int> part_of) {
    int n = static_cast<int>(part_of.size());
    if (n == 0) throw ValidationError("partition: empty vertex set");
    std::unordered_map<int, int> remap;
    std::vector<std::vector<int>> parts;
    for (int v = 0; v < n; ++v) {
        auto [it, fresh] = remap.emplace(part_of[v], static_cast<int>(parts.size()));
        if (fresh) parts.emplace_back();
        parts[it->second].push_back(v);
    }
    return of_parts(n, std::move(parts));
}

bool Partition::refines(const Partition& coarser) const {
    if (vertex_count() != coarser.vertex_count()) return false;
    for (const auto& p : parts_) {
        int host = coarser.part_of(p.front());
        for (int v : p)
            if (coarser.part_of(v) != host) return false;
    }
    return true;
}

// ---- QuotientGraph ----

bool QuotientGraph::connected() const {
    Dsu dsu(part_count());
    for (const auto& qe : edges_) dsu.unite(qe.part_u, qe.part_v);
    int roots = 0;
    for (int p = 0; p < part_count(); ++p)
        if (dsu.find(p) == p) ++roots;
    return roots <= 1;
}

// ---- FactorSubgraph ----

FactorSubgraph::FactorSubgraph(const Graph& g)
    : g_(&g), in_(g.edge_count(), 0), deg_(g.vertex_count(), 0) {}

FactorSubgraph::FactorSubgraph(const Graph& g, const std::vector<EdgeId>& edges)
    : FactorSubgraph(g) {
    for (EdgeId e : edges) add(e);
}

void FactorSubgraph::add(EdgeId e) {
    if (e < 0 || e >= g_->edge_count()) throw ValidationError("factor subgraph: bad edge id");
    if (in_[e]) throw ValidationError("factor subgraph: edge already present");
    in_[e] = 1;
    ++deg_[g_->edge(e).u];
    ++deg_[g_->edge(e).v];
    ++count_;
}

void FactorSubgraph::remove(EdgeId e) {
    if (e < 0 || e >= g_->edge_count() || !in_[e])
        throw ValidationError("factor subgraph: edge not present");
    in_[e] = 0;
    --deg_[g_->edge(e).u];
    --deg_[g_->edge(e).v];
    --count_;
}

std::vector<EdgeId> FactorSubgraph::edge_ids() const {
    std::vector<EdgeId> out;
    out.reserve(count_);
    for (EdgeId e = 0; e < static_cast<EdgeId>(in_.size()); ++e)
        if (in_[e]) out.push_back(e);
    return out;
}

Weight FactorSubgraph::total_weight() const {
    Weight s = 0;
    for (EdgeId e = 0; e < static_cast<EdgeId>(in_.size()); ++e)
        if (in_[e]) s += g_->weight(e);
    return s;
}

// ---- operations ----

std::vector<std::vector<int>> components(int n, const std::vector<std::pair<int, int>>& edges) {
    Dsu dsu(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ValidationError("components: endpoint out of range");
        dsu.unite(u, v);
    }
    return groups_from_dsu(dsu, n);
}

std::vector<std::vector<int>> components_of(const Graph& g, const std::vector<EdgeId>& edges) {
    Dsu dsu(g.vertex_count());
    for (EdgeId e : edges) dsu.unite(g.edge(e).u, g.edge(e).v);
    return groups_from_dsu(dsu, g.vertex_count());
}

std::vector<std::vector<int>> components_of(const FactorSubgraph& h) {
    return components_of(h.graph(), h.edge_ids());
}

bool is_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    return components(n, edges).size() <= 1;
}

bool is_connected(const FactorSubgraph& h) {
    return components_of(h).size() <= 1;
}

QuotientGraph quotient(const Graph& g, const Partition& q) {
    if (q.vertex_count() != g.vertex_count())
        throw ValidationError("quotient: partition does not match graph");
    std::vector<QuotientEdge> qe;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int pu = q.part_of(g.edge(e).u);
        int pv = q.part_of(g.edge(e).v);
        if (pu == pv) continue;
        if (pu > pv) std::swap(pu, pv);
        qe.push_back({pu, pv, e});
    }
    return QuotientGraph(q, std::move(qe));
}

Partition refine_partition(const FactorSubgraph& h, const Partition& q) {
    const Graph& g = h.graph();
    if (q.vertex_count() != g.vertex_count())
        throw ValidationError("refine: partition does not match graph");
    Dsu dsu(g.vertex_count());
    for (EdgeId e : h.edge_ids()) {
        const Edge& ed = g.edge(e);
        if (q.part_of(ed.u) == q.part_of(ed.v)) dsu.unite(ed.u, ed.v);
    }
    // Roots are component minima and components never span parts, so the root
    // itself is a valid raw part id.
    std::vector<int> part_of(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) part_of[v] = dsu.find(v);
    return Partition::from_part_of(std::move(part_of));
}

void for_each_spanning_tree(const Graph& g, const Partition& q,
                            const std::function<bool(const std::vector<EdgeId>&)>& visit) {
    if (q.size() < 2) throw ValidationError("spanning trees: partition must have at least 2 parts");
    QuotientGraph gq = quotient(g, q);
    const auto& qe = gq.edges();  // ascending by original edge id by construction
    const int need = q.size() - 1;
    const int m = static_cast<int>(qe.size());

    // Backtracking in lexicographic edge order over a rollback union-find.
    std::vector<int> parent(q.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };

    std::vector<EdgeId> chosen;
    chosen.reserve(need);
    bool stop = false;

    std::function<void(int, int)> rec = [&](int idx, int picked) {
        if (stop) return;
        if (picked == need) {
            if (!visit(chosen)) stop = true;
            return;
        }
        if (m - idx < need - picked) return;  // not enough edges left
        for (int i = idx; i <= m - (need - picked) && !stop; ++i) {
            int ra = find(qe[i].part_u);
            int rb = find(qe[i].part_v);
            if (ra == rb) continue;
            if (ra > rb) std::swap(ra, rb);
            parent[rb] = ra;
            chosen.push_back(qe[i].original);
            rec(i + 1, picked + 1);
            chosen.pop_back();
            parent[rb] = rb;
        }
    };
    rec(0, 0);
}

std::vector<std::vector<EdgeId>> spanning_trees(const Graph& g, const Partition& q) {
    std::vector<std::vector<EdgeId>> out;
    for_each_spanning_tree(g, q, [&](const std::vector<EdgeId>& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

}  // namespace cff
