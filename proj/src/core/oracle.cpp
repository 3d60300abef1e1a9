#include "core/oracle.hpp"

#include <algorithm>
#include <bit>

namespace cff {

namespace {

constexpr int kEnumerationEdgeCap = 40;  // soft limit is ~24; refuse far beyond it
constexpr int kHamiltonHardCap = 24;

class FactorEnumerator {
public:
    FactorEnumerator(const Graph& g, const DegreeSpec& f, bool connected_only,
                     const std::function<bool(const FactorSubgraph&)>& yield)
        : g_(g), connected_only_(connected_only), yield_(yield), need_(f.values()),
          avail_(g.vertex_count(), 0), current_(g) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) avail_[v] = g.degree(v);
        for (int nv : need_) total_need_ += nv;
    }

    void run() {
        // quick infeasibility: odd total or f(v) beyond degree
        if (total_need_ % 2 != 0) return;
        for (Vertex v = 0; v < g_.vertex_count(); ++v)
            if (need_[v] > avail_[v]) return;
        rec(0);
    }

private:
    bool dead(Vertex v) const { return need_[v] > avail_[v]; }

    void rec(EdgeId idx) {
        if (stop_) return;
        if (total_need_ > 2LL * (g_.edge_count() - idx)) return;
        if (idx == g_.edge_count()) {
            if (total_need_ != 0) return;
            if (connected_only_ && !is_connected(current_)) return;
            if (!yield_(current_)) stop_ = true;
            return;
        }
        const Edge& ed = g_.edge(idx);
        // include idx
        if (need_[ed.u] > 0 && need_[ed.v] > 0) {
            --need_[ed.u];
            --need_[ed.v];
            --avail_[ed.u];
            --avail_[ed.v];
            total_need_ -= 2;
            current_.add(idx);
            if (!dead(ed.u) && !dead(ed.v)) rec(idx + 1);
            current_.remove(idx);
            total_need_ += 2;
            ++need_[ed.u];
            ++need_[ed.v];
            ++avail_[ed.u];
            ++avail_[ed.v];
        }
        if (stop_) return;
        // exclude idx
        --avail_[ed.u];
        --avail_[ed.v];
        if (!dead(ed.u) && !dead(ed.v)) rec(idx + 1);
        ++avail_[ed.u];
        ++avail_[ed.v];
    }

    const Graph& g_;
    bool connected_only_;
    const std::function<bool(const FactorSubgraph&)>& yield_;
    std::vector<int> need_;
    std::vector<int> avail_;
    long long total_need_ = 0;
    FactorSubgraph current_;
    bool stop_ = false;
};

}  // namespace

void enumerate_f_factors(const Graph& g, const DegreeSpec& f, bool connected_only,
                         const std::function<bool(const FactorSubgraph&)>& yield) {
    if (f.size() != g.vertex_count()) throw ValidationError("oracle: degree spec size mismatch");
    if (g.edge_count() > kEnumerationEdgeCap)
        throw SizeLimitError("oracle: too many edges for exhaustive enumeration");
    FactorEnumerator it(g, f, connected_only, yield);
    it.run();
}

OracleResult brute_force_connected_f_factor(const Graph& g, const DegreeSpec& f) {
    OracleResult out;
    enumerate_f_factors(g, f, true, [&](const FactorSubgraph& h) {
        Weight w = g.weighted() ? h.total_weight() : h.edge_count();
        ++out.count;
        if (!out.exists || w < out.best->second) out.best = {h, w};
        out.exists = true;
        return true;
    });
    return out;
}

bool oracle_connected_f_factor_exists(const Graph& g, const DegreeSpec& f) {
    bool found = false;
    enumerate_f_factors(g, f, true, [&](const FactorSubgraph&) {
        found = true;
        return false;
    });
    return found;
}

bool has_hamiltonian_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kHamiltonHardCap)
        throw SizeLimitError("oracle: hamiltonicity test capped at small n");
    if (n == 0) return false;
    if (n == 1) return false;  // a spanning cycle needs at least 3 vertices
    if (n == 2) return false;

    std::vector<std::uint32_t> adj(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        adj[g.edge(e).u] |= 1u << g.edge(e).v;
        adj[g.edge(e).v] |= 1u << g.edge(e).u;
    }
    // dp[mask] = endpoints v of paths 0..v spanning mask (0 in mask)
    std::vector<std::uint32_t> dp(std::size_t{1} << n, 0);
    dp[1] = 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (!(mask & 1) || !dp[mask]) continue;
        std::uint32_t ends = dp[mask];
        while (ends) {
            int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t nexts = adj[v] & ~mask;
            while (nexts) {
                int u = std::countr_zero(nexts);
                nexts &= nexts - 1;
                dp[mask | (1u << u)] |= 1u << u;
            }
        }
    }
    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::uint32_t closing = dp[full] & adj[0] & ~1u;
    return closing != 0;
}

}  // namespace cff
