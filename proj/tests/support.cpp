#include "support.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "core/errors.hpp"

namespace cff::test {

namespace {

// colex pair index: (i, j) with i < j maps to C(j,2) + i, so graphs on k-1
// vertices are bit prefixes of their k-vertex extensions
inline int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

}  // namespace

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph prism_graph() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    g.add_edge(0, 3);
    g.add_edge(1, 4);
    g.add_edge(2, 5);
    return g;
}

Graph two_triangles() {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(3, 5);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);        // outer cycle
    for (int i = 0; i < 5; ++i) g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    for (int i = 0; i < 5; ++i) g.add_edge(i, 5 + i);              // spokes
    return g;
}

Graph circulant_graph(int n, const std::vector<int>& offsets) {
    Graph g(n);
    for (int off : offsets) {
        if (off <= 0 || 2 * off > n)
            throw std::invalid_argument("circulant offset out of range");
        for (int v = 0; v < n; ++v) {
            int u = (v + off) % n;
            if (!g.has_edge(v, u)) g.add_edge(v, u);
        }
    }
    return g;
}

Graph with_unit_weights(const Graph& g) {
    Graph out(g.vertex_count(), true);
    for (EdgeId e = 0; e < g.edge_count(); ++e) out.add_edge(g.edge(e).u, g.edge(e).v, 1);
    return out;
}

Graph reweighted(const Graph& g, const std::vector<Weight>& w) {
    Graph out(g.vertex_count(), true);
    for (EdgeId e = 0; e < g.edge_count(); ++e) out.add_edge(g.edge(e).u, g.edge(e).v, w[e]);
    return out;
}

Graph random_graph(Rng& rng, int n, double p, bool weighted, Weight min_w, Weight max_w) {
    Graph g(n, weighted);
    std::bernoulli_distribution take(p);
    std::uniform_int_distribution<Weight> w(min_w, max_w);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (take(rng)) {
                if (weighted)
                    g.add_edge(i, j, w(rng));
                else
                    g.add_edge(i, j);
            }
    return g;
}

Graph random_connected_graph(Rng& rng, int n, double p, bool weighted, Weight min_w,
                             Weight max_w) {
    Graph g(n, weighted);
    std::uniform_int_distribution<Weight> w(min_w, max_w);
    std::bernoulli_distribution take(p);
    auto add = [&](int a, int b) {
        if (weighted)
            g.add_edge(a, b, w(rng));
        else
            g.add_edge(a, b);
    };
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        add(v, parent(rng));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j) && take(rng)) add(i, j);
    return g;
}

std::vector<int> random_degree_spec(Rng& rng, const Graph& g, int lo, int hi) {
    const int n = g.vertex_count();
    std::vector<int> f(n);
    for (int v = 0; v < n; ++v) {
        int top = std::min(hi, g.degree(v));
        if (top < lo) return {};
        std::uniform_int_distribution<int> pick(lo, top);
        f[v] = pick(rng);
    }
    long long sum = std::accumulate(f.begin(), f.end(), 0LL);
    if (sum % 2 == 0) return f;
    for (int v = 0; v < n; ++v) {
        if (f[v] + 1 <= std::min(hi, g.degree(v))) {
            ++f[v];
            return f;
        }
        if (f[v] - 1 >= lo) {
            --f[v];
            return f;
        }
    }
    return {};
}

int brute_max_matching_size(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 22) throw std::invalid_argument("brute matcher capped at 22 vertices");
    std::vector<std::uint32_t> adj(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        adj[g.edge(e).u] |= 1u << g.edge(e).v;
        adj[g.edge(e).v] |= 1u << g.edge(e).u;
    }
    std::vector<signed char> dp(std::size_t{1} << n, -1);
    dp[0] = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        int v = std::countr_zero(mask);
        std::uint32_t without = mask & (mask - 1);
        signed char best = dp[without];  // leave v unmatched
        std::uint32_t mates = adj[v] & without;
        while (mates) {
            int u = std::countr_zero(mates);
            mates &= mates - 1;
            best = std::max<signed char>(best,
                                         static_cast<signed char>(1 + dp[without & ~(1u << u)]));
        }
        dp[mask] = best;
    }
    return dp.back();
}

std::optional<Weight> brute_min_weight_perfect_matching(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 22) throw std::invalid_argument("brute matcher capped at 22 vertices");
    if (n % 2 != 0) return std::nullopt;
    if (n == 0) return 0;
    constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;
    std::vector<Weight> wmat(static_cast<std::size_t>(n) * n, kInf);
    std::vector<std::uint32_t> adj(n, 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        wmat[static_cast<std::size_t>(ed.u) * n + ed.v] = g.weight(e);
        wmat[static_cast<std::size_t>(ed.v) * n + ed.u] = g.weight(e);
        adj[ed.u] |= 1u << ed.v;
        adj[ed.v] |= 1u << ed.u;
    }
    std::vector<Weight> dp(std::size_t{1} << n, kInf);
    dp[0] = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;
        int v = std::countr_zero(mask);
        std::uint32_t without = mask & (mask - 1);
        Weight best = kInf;
        std::uint32_t mates = adj[v] & without;
        while (mates) {
            int u = std::countr_zero(mates);
            mates &= mates - 1;
            Weight rest = dp[without & ~(1u << u)];
            if (rest < kInf)
                best = std::min(best, rest + wmat[static_cast<std::size_t>(v) * n + u]);
        }
        dp[mask] = best;
    }
    if (dp.back() >= kInf) return std::nullopt;
    return dp.back();
}

long long kirchhoff_quotient_tree_count(const Graph& g, const Partition& q) {
    const int r = q.size();
    if (r == 1) return 1;
    std::vector<std::vector<long long>> lap(r, std::vector<long long>(r, 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int a = q.part_of(g.edge(e).u);
        int b = q.part_of(g.edge(e).v);
        if (a == b) continue;
        ++lap[a][a];
        ++lap[b][b];
        --lap[a][b];
        --lap[b][a];
    }
    // Bareiss fraction-free elimination on the (0,0)-minor
    const int d = r - 1;
    std::vector<std::vector<long long>> m(d, std::vector<long long>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m[i][j] = lap[i + 1][j + 1];
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < d; ++k) {
        if (m[k][k] == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < d; ++i)
                if (m[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i)
            for (int j = k + 1; j < d; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign * m[d - 1][d - 1];
}

std::vector<std::vector<EdgeId>> naive_f_factors(const Graph& g, const std::vector<int>& f,
                                                 bool connected_only) {
    const int m = g.edge_count();
    if (m > 22) throw std::invalid_argument("naive enumeration capped at 22 edges");
    std::vector<std::vector<EdgeId>> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> deg(g.vertex_count(), 0);
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) {
                ++deg[g.edge(e).u];
                ++deg[g.edge(e).v];
            }
        if (deg != f) continue;
        std::vector<EdgeId> ids;
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) ids.push_back(e);
        if (connected_only && !is_connected(FactorSubgraph(g, ids))) continue;
        out.push_back(std::move(ids));
    }
    return out;
}

std::uint64_t canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) edges.emplace_back(g.edge(e).u, g.edge(e).v);

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t img = 0;
        for (const auto& [i, j] : edges)
            img |= std::uint64_t{1} << pair_index(perm[i], perm[j]);
        best = std::min(best, img);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (mask & (std::uint64_t{1} << pair_index(i, j))) g.add_edge(i, j);
    return g;
}

bool mask_connected(int n, std::uint64_t mask) {
    Graph g = graph_from_mask(n, mask);
    std::vector<EdgeId> all(g.edge_count());
    std::iota(all.begin(), all.end(), 0);
    return is_connected(FactorSubgraph(g, all));
}

std::vector<std::uint64_t> graph_representatives(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("representative generator supports 1..8");
    static std::vector<std::vector<std::uint64_t>> cache(9);  // memoized per vertex count
    if (!cache[n].empty()) return cache[n];
    std::vector<std::uint64_t> reps{0};  // the single graph on one vertex
    for (int k = 2; k <= n; ++k) {
        const int base_bits = (k - 1) * (k - 2) / 2;
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> next;
        for (std::uint64_t rep : reps) {
            for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
                std::uint64_t candidate = rep | (nb << base_bits);
                std::uint64_t canon = canonical_form(graph_from_mask(k, candidate));
                if (seen.insert(canon).second) next.push_back(canon);
            }
        }
        std::sort(next.begin(), next.end());
        reps = std::move(next);
        if (cache[k].empty()) cache[k] = reps;
    }
    return reps;
}

}  // namespace cff::test
