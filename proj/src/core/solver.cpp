#include "core/solver.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "core/alternating.hpp"
#include "core/factor.hpp"

namespace cff {

namespace {

bool connects_partition(const FactorSubgraph& h, const Partition& q) {
    if (q.size() <= 1) return true;
    std::vector<int> parent(q.size());
    for (int i = 0; i < q.size(); ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int merges = 0;
    const Graph& g = h.graph();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!h.contains(e)) continue;
        int a = find(q.part_of(g.edge(e).u));
        int b = find(q.part_of(g.edge(e).v));
        if (a != b) {
            parent[a] = b;
            ++merges;
        }
    }
    return merges == q.size() - 1;
}

// Spanning tree of H/Q drawn from H's own edges, ascending edge ids.
std::vector<EdgeId> witness_tree(const FactorSubgraph& h, const Partition& q) {
    std::vector<int> parent(q.size());
    for (int i = 0; i < q.size(); ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<EdgeId> tree;
    const Graph& g = h.graph();
    for (EdgeId e = 0; e < g.edge_count() && static_cast<int>(tree.size()) < q.size() - 1; ++e) {
        if (!h.contains(e)) continue;
        int a = find(q.part_of(g.edge(e).u));
        int b = find(q.part_of(g.edge(e).v));
        if (a == b) continue;
        parent[a] = b;
        tree.push_back(e);
    }
    if (static_cast<int>(tree.size()) != q.size() - 1)
        throw std::logic_error("witness tree: factor does not connect the partition");
    return tree;
}

// One candidate tree: query with the freshly needed edges first (tree minus
// H_prev); when tree edges sitting inside H_prev leave the reduced answer
// short of connecting Q, retry forcing the whole tree, which pins it. The
// returned tree is one the candidate actually contains.
std::optional<std::pair<FactorSubgraph, std::vector<EdgeId>>> connect_via_tree(
    const Graph& g, const DegreeSpec& f, const Partition& q, const FactorSubgraph& h_prev,
    const std::vector<EdgeId>& t_full, bool minimize) {
    std::vector<EdgeId> t_forced;
    t_forced.reserve(t_full.size());
    for (EdgeId e : t_full)
        if (!h_prev.contains(e)) t_forced.push_back(e);

    auto cand = minimize ? min_weight_f_factor_with_forced(g, f, t_forced)
                         : f_factor_with_forced(g, f, t_forced);
    if (cand && t_forced.size() == t_full.size())
        return {{std::move(*cand), t_full}};  // whole tree forced, connects by construction
    if (cand) {
        bool full = true;
        for (EdgeId e : t_full)
            if (!cand->contains(e)) full = false;
        if (full) return {{std::move(*cand), t_full}};
        if (connects_partition(*cand, q)) {
            std::vector<EdgeId> realized = witness_tree(*cand, q);
            return {{std::move(*cand), std::move(realized)}};
        }
        cand = minimize ? min_weight_f_factor_with_forced(g, f, t_full)
                        : f_factor_with_forced(g, f, t_full);
    }
    if (!cand) return std::nullopt;
    return {{std::move(*cand), t_full}};
}

struct WeightedBest {
    bool has = false;
    Weight weight = 0;
    std::vector<EdgeId> edges;
    std::optional<FactorSubgraph> factor;
    std::vector<EdgeId> tree;

    // (weight, edge-id lexicographic) order keeps the reduction deterministic
    void offer(Weight w, FactorSubgraph h, const std::vector<EdgeId>& t) {
        std::vector<EdgeId> ids = h.edge_ids();
        if (has && (weight < w || (weight == w && edges <= ids))) return;
        has = true;
        weight = w;
        edges = std::move(ids);
        factor = std::move(h);
        tree = t;
    }
};

}  // namespace

bool SolveTrace::fallback_used() const {
    for (const auto& rec : levels)
        if (rec.fallback_used) return true;
    return false;
}

int SolveTrace::max_parts() const {
    int p = 0;
    for (const auto& rec : levels) p = std::max(p, rec.parts);
    return p;
}

bool SolveTrace::size_premise_holds() const {
    if (min_f <= 0) return false;
    long long mf = min_f;
    return mf * mf * mf * mf >= 2LL * n * n * n;
}

std::optional<std::pair<FactorSubgraph, std::vector<EdgeId>>> partition_connector(
    const Graph& g, const DegreeSpec& f, const Partition& q, const FactorSubgraph& h_prev,
    bool minimize, long long* trees_examined, const SolverOptions& opts) {
    long long examined = 0;
    std::optional<std::pair<FactorSubgraph, std::vector<EdgeId>>> result;
    WeightedBest best;

    const int threads = std::max(1, opts.threads);
    const size_t batch_size = static_cast<size_t>(threads) * 8;
    std::vector<std::vector<EdgeId>> batch;
    using Candidate = std::optional<std::pair<FactorSubgraph, std::vector<EdgeId>>>;

    auto flush = [&]() -> bool {  // returns true to stop the stream
        if (batch.empty()) return false;
        examined += static_cast<long long>(batch.size());
        std::vector<Candidate> found(batch.size());
        if (threads == 1) {
            for (size_t i = 0; i < batch.size(); ++i) {
                found[i] = connect_via_tree(g, f, q, h_prev, batch[i], minimize);
                if (found[i] && !minimize) break;  // first success wins
            }
        } else {
            std::atomic<size_t> next{0};
            std::atomic<size_t> won{batch.size()};
            std::vector<std::exception_ptr> errors(threads);
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) {
                pool.emplace_back([&, t]() {
                    try {
                        while (true) {
                            size_t i = next.fetch_add(1);
                            if (i >= batch.size()) return;
                            if (!minimize && i > won.load()) continue;  // already beaten
                            auto r = connect_via_tree(g, f, q, h_prev, batch[i], minimize);
                            if (r && !minimize) {
                                size_t cur = won.load();
                                while (i < cur && !won.compare_exchange_weak(cur, i)) {
                                }
                            }
                            found[i] = std::move(r);
                        }
                    } catch (...) {
                        errors[t] = std::current_exception();
                    }
                });
            }
            for (auto& th : pool) th.join();
            for (auto& err : errors)
                if (err) std::rethrow_exception(err);
        }
        for (size_t i = 0; i < batch.size(); ++i) {
            if (!found[i]) continue;
            if (!minimize) {
                result = std::move(found[i]);
                batch.clear();
                return true;
            }
            Weight w = found[i]->first.total_weight();
            best.offer(w, std::move(found[i]->first), found[i]->second);
        }
        batch.clear();
        return false;
    };

    for_each_spanning_tree(g, q, [&](const std::vector<EdgeId>& tree) {
        batch.push_back(tree);
        if (batch.size() >= batch_size) return !flush();
        return true;
    });
    if (!result) flush();

    if (trees_examined) *trees_examined += examined;
    if (result) return result;
    if (best.has) return {{std::move(*best.factor), std::move(best.tree)}};
    return std::nullopt;
}

FactorSubgraph next_factor(const FactorSubgraph& h_prev, const FactorSubgraph& h_new,
                           const Partition& q, const std::vector<EdgeId>& t_full,
                           bool* fallback_used, bool minimize) {
    if (&h_prev.graph() != &h_new.graph())
        throw std::logic_error("next-factor: factors live on different graphs");
    const Graph& g = h_prev.graph();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (h_prev.degree(v) != h_new.degree(v))
            throw std::logic_error("next-factor: degree mismatch between factors");
    for (EdgeId e : t_full)
        if (!h_new.contains(e)) throw std::logic_error("next-factor: tree not inside new factor");
    if (!connects_partition(h_new, q))
        throw std::logic_error("next-factor: new factor does not connect the partition");

    if (fallback_used) *fallback_used = false;

    std::vector<EdgeId> t_forced;
    for (EdgeId e : t_full)
        if (!h_prev.contains(e)) t_forced.push_back(e);

    ColoredSubgraph diff = color_difference(h_prev, h_new);

    FactorSubgraph switched = h_prev;
    if (!t_forced.empty() && !diff.empty()) {
        std::vector<AlternatingCircuit> circuits;
        std::vector<char> mask(g.edge_count(), 0);
        for (EdgeId e : t_forced) mask[e] = 1;
        for (ColoredSubgraph& comp : colored_components(diff)) {
            std::vector<EdgeId> cover;
            for (EdgeId e : comp.edges())
                if (mask[e]) cover.push_back(e);
            if (cover.empty()) continue;
            auto part = min_ac_set(AlternatingCircuit::validate(std::move(comp)), cover);
            for (auto& c : part) circuits.push_back(std::move(c));
        }
        switched = switching(h_prev, circuits);
    }

    bool ok = connects_partition(switched, q);
    if (ok && minimize && switched.total_weight() != h_new.total_weight()) ok = false;
    if (ok) return switched;
    if (fallback_used) *fallback_used = true;
    return h_new;  // connects q by construction; in weighted mode it is the optimum
}

std::optional<FactorSubgraph> restricted_f_factor(const Graph& g, const DegreeSpec& f,
                                                  const FactorSubgraph& h, const Partition& q,
                                                  bool minimize, SolveTrace& trace,
                                                  const SolverOptions& opts) {
    if (!is_f_factor(g, f, h)) throw std::logic_error("restricted: input is not an f-factor");
    if (!connects_partition(h, q))
        throw std::logic_error("restricted: input does not connect the partition");

    ++trace.invocations;
    trace.levels.push_back({static_cast<int>(trace.levels.size()), q.size(), 0, false});
    const size_t rec_idx = trace.levels.size() - 1;

    Partition q_next = refine_partition(h, q);
    if (q_next == q) return h;  // every part is internally connected: H is connected

    auto connected = partition_connector(g, f, q_next, h, minimize,
                                         &trace.levels[rec_idx].trees_examined, opts);
    if (!connected) {
        trace.outcome = Outcome::PartitionUnconnectable;
        trace.witness = q_next;
        return std::nullopt;
    }

    bool fallback = false;
    FactorSubgraph h_next =
        next_factor(h, connected->first, q_next, connected->second, &fallback, minimize);
    trace.levels[rec_idx].fallback_used = fallback;

    return restricted_f_factor(g, f, h_next, q_next, minimize, trace, opts);
}

namespace {

SolveResult solve(const Graph& g, const DegreeSpec& f, bool minimize, const SolverOptions& opts) {
    if (f.size() != g.vertex_count()) throw ValidationError("solver: degree spec size mismatch");

    SolveResult out;
    out.trace.n = g.vertex_count();
    out.trace.min_f = f.min_value();

    if (g.vertex_count() == 0) {
        out.trace.outcome = Outcome::Found;
        out.factor = FactorSubgraph(g);
        return out;
    }

    auto h0 = minimize ? min_weight_f_factor(g, f) : f_factor(g, f);
    if (!h0) {
        out.trace.outcome = Outcome::NoFFactor;
        return out;
    }

    out.factor = restricted_f_factor(g, f, *h0, Partition::single(g.vertex_count()), minimize,
                                     out.trace, opts);
    if (out.factor) out.trace.outcome = Outcome::Found;
    return out;
}

}  // namespace

SolveResult connected_f_factor(const Graph& g, const DegreeSpec& f, const SolverOptions& opts) {
    return solve(g, f, false, opts);
}

SolveResult min_connected_f_factor(const Graph& g, const DegreeSpec& f,
                                   const SolverOptions& opts) {
    if (!g.weighted()) throw ValidationError("solver: minimum-weight mode requires edge weights");
    return solve(g, f, true, opts);
}

}  // namespace cff
