#include "core/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace cff {

namespace {

// Edmonds blossom shrinking over adjacency lists, one BFS per free vertex,
// blossoms tracked through base[]. Greedy seed keeps the phase count low on
// large factor gadgets.
class CardinalityBlossom {
public:
    explicit CardinalityBlossom(const Graph& g)
        : g_(g),
          n_(g.vertex_count()),
          match_(n_, -1),
          parent_(n_, -1),
          base_(n_),
          used_(n_, 0),
          in_blossom_(n_, 0),
          lca_mark_(n_, 0) {}

    std::vector<int> run() {
        for (Vertex v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            for (EdgeId e : g_.incident(v)) {
                Vertex u = g_.other_end(e, v);
                if (match_[u] == -1) {
                    match_[v] = u;
                    match_[u] = v;
                    break;
                }
            }
        }
        for (Vertex v = 0; v < n_; ++v) {
            if (match_[v] != -1) continue;
            int leaf = find_path(v);
            while (leaf != -1) {
                int pv = parent_[leaf];
                int next = match_[pv];
                match_[leaf] = pv;
                match_[pv] = leaf;
                leaf = next;
            }
        }
        return match_;
    }

private:
    int lca(int a, int b) {
        ++stamp_;
        int x = a;
        while (true) {
            x = base_[x];
            lca_mark_[x] = stamp_;
            if (match_[x] == -1) break;
            x = parent_[match_[x]];
        }
        int y = b;
        while (true) {
            y = base_[y];
            if (lca_mark_[y] == stamp_) return y;
            y = parent_[match_[y]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        std::deque<int> queue{root};
        used_[root] = 1;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (EdgeId e : g_.incident(v)) {
                int to = g_.other_end(e, v);
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur_base;
                            if (!used_[i]) {
                                used_[i] = 1;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) return to;
                    used_[match_[to]] = 1;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, in_blossom_;
    std::vector<int> lca_mark_;
    int stamp_ = 0;
};

// Primal-dual blossom solver for maximum weight matching on a dense matrix
// (Galil's formulation). Vertices are 1..n, shrunken blossoms take ids above
// n. Weights must be positive; w == 0 marks a non-edge.
class DenseWeightedBlossom {
public:
    DenseWeightedBlossom(int n, const std::vector<std::vector<Weight>>& w)
        : n_(n), cap_(3 * n / 2 + 2) {
        g_.assign(cap_, std::vector<Cell>(cap_));
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) g_[u][v] = {u, v, w[u - 1][v - 1]};
        lab_.assign(cap_, 0);
        match_.assign(cap_, 0);
        slack_.assign(cap_, 0);
        st_.assign(cap_, 0);
        pa_.assign(cap_, 0);
        s_.assign(cap_, 0);
        vis_.assign(cap_, 0);
        flower_.assign(cap_, {});
        flower_from_.assign(cap_, std::vector<int>(n_ + 1, 0));
    }

    // Runs augmenting phases to exhaustion; returns mate[] over 1..n (0 = free).
    std::vector<int> run() {
        n_x_ = n_;
        Weight w_max = 0;
        for (int u = 1; u <= n_; ++u) {
            st_[u] = u;
            flower_[u].clear();
            for (int v = 1; v <= n_; ++v) {
                flower_from_[u][v] = (u == v ? u : 0);
                w_max = std::max(w_max, g_[u][v].w);
            }
        }
        for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
        while (phase()) {
        }
        return match_;
    }

private:
    struct Cell {
        int u = 0, v = 0;
        Weight w = 0;
    };

    Weight e_delta(const Cell& e) const { return lab_[e.u] + lab_[e.v] - e.w * 2; }

    void update_slack(int u, int x) {
        if (!slack_[x] || e_delta(g_[u][x]) < e_delta(g_[slack_[x]][x])) slack_[x] = u;
    }

    void set_slack(int x) {
        slack_[x] = 0;
        for (int u = 1; u <= n_; ++u)
            if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
    }

    void q_push(int x) {
        if (x <= n_) {
            q_.push_back(x);
        } else {
            for (int sub : flower_[x]) q_push(sub);
        }
    }

    void set_st(int x, int b) {
        st_[x] = b;
        if (x > n_)
            for (int sub : flower_[x]) set_st(sub, b);
    }

    int get_pr(int b, int xr) {
        int pr = static_cast<int>(std::find(flower_[b].begin(), flower_[b].end(), xr) -
                                  flower_[b].begin());
        if (pr % 2 == 1) {
            std::reverse(flower_[b].begin() + 1, flower_[b].end());
            return static_cast<int>(flower_[b].size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[u] = g_[u][v].v;
        if (u <= n_) return;
        Cell e = g_[u][v];
        int xr = flower_from_[u][e.u];
        int pr = get_pr(u, xr);
        for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
        set_match(xr, v);
        std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
    }

    void augment(int u, int v) {
        while (true) {
            int xnv = st_[match_[u]];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[pa_[xnv]]);
            u = st_[pa_[xnv]];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        for (++stamp_; u || v; std::swap(u, v)) {
            if (u == 0) continue;
            if (vis_[u] == stamp_) return u;
            vis_[u] = stamp_;
            u = st_[match_[u]];
            if (u) u = st_[pa_[u]];
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[b]) ++b;
        if (b > n_x_) ++n_x_;
        lab_[b] = 0;
        s_[b] = 0;
        match_[b] = match_[lca];
        flower_[b].clear();
        flower_[b].push_back(lca);
        for (int x = u, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            q_push(y);
        }
        std::reverse(flower_[b].begin() + 1, flower_[b].end());
        for (int x = v, y; x != lca; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) g_[b][x].w = g_[x][b].w = 0;
        for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
        for (int xs : flower_[b]) {
            for (int x = 1; x <= n_x_; ++x)
                if (g_[b][x].w == 0 || e_delta(g_[xs][x]) < e_delta(g_[b][x])) {
                    g_[b][x] = g_[xs][x];
                    g_[x][b] = g_[x][xs];
                }
            for (int x = 1; x <= n_; ++x)
                if (flower_from_[xs][x]) flower_from_[b][x] = xs;
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        for (int sub : flower_[b]) set_st(sub, sub);
        int xr = flower_from_[b][g_[b][pa_[b]].u];
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = flower_[b][i];
            int xns = flower_[b][i + 1];
            pa_[xs] = g_[xns][xs].u;
            s_[xs] = 1;
            s_[xns] = 0;
            slack_[xs] = 0;
            set_slack(xns);
            q_push(xns);
        }
        s_[xr] = 1;
        pa_[xr] = pa_[b];
        for (int i = pr + 1; i < static_cast<int>(flower_[b].size()); ++i) {
            int xs = flower_[b][i];
            s_[xs] = -1;
            set_slack(xs);
        }
        st_[b] = 0;
    }

    bool on_found_edge(const Cell& e) {
        int u = st_[e.u];
        int v = st_[e.v];
        if (s_[v] == -1) {
            pa_[v] = e.u;
            s_[v] = 1;
            int nu = st_[match_[v]];
            slack_[v] = slack_[nu] = 0;
            s_[nu] = 0;
            q_push(nu);
        } else if (s_[v] == 0) {
            int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool phase() {
        std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
        q_.clear();
        for (int x = 1; x <= n_x_; ++x)
            if (st_[x] == x && !match_[x]) {
                pa_[x] = 0;
                s_[x] = 0;
                q_push(x);
            }
        if (q_.empty()) return false;
        long long rounds = 0;
        const long long round_cap = 64LL * (n_ + 4) * (n_ + 4);
        while (true) {
            if (++rounds > round_cap)
                throw std::logic_error("weighted matching: dual update did not converge");
            while (!q_.empty()) {
                int u = q_.front();
                q_.pop_front();
                if (s_[st_[u]] == 1) continue;
                for (int v = 1; v <= n_; ++v)
                    if (g_[u][v].w > 0 && st_[u] != st_[v]) {
                        if (e_delta(g_[u][v]) == 0) {
                            if (on_found_edge(g_[u][v])) return true;
                        } else {
                            update_slack(u, st_[v]);
                        }
                    }
            }
            Weight d = std::numeric_limits<Weight>::max();
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x]) {
                    if (s_[x] == -1)
                        d = std::min(d, e_delta(g_[slack_[x]][x]));
                    else if (s_[x] == 0)
                        d = std::min(d, e_delta(g_[slack_[x]][x]) / 2);
                }
            for (int u = 1; u <= n_; ++u) {
                if (s_[st_[u]] == 0) {
                    if (lab_[u] <= d) return false;
                    lab_[u] -= d;
                } else if (s_[st_[u]] == 1) {
                    lab_[u] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b) {
                    if (s_[b] == 0)
                        lab_[b] += d * 2;
                    else if (s_[b] == 1)
                        lab_[b] -= d * 2;
                }
            q_.clear();
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
                    e_delta(g_[slack_[x]][x]) == 0)
                    if (on_found_edge(g_[slack_[x]][x])) return true;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
        }
    }

    int n_;
    int cap_;
    int n_x_ = 0;
    int stamp_ = 0;
    std::vector<std::vector<Cell>> g_;
    std::vector<Weight> lab_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
    std::deque<int> q_;
};

Matching matching_from_mates(const Graph& g, const std::vector<int>& mate) {
    Matching m;
    m.mate = mate;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (mate[v] > v) {
            auto e = g.find_edge(v, mate[v]);
            if (!e) throw std::logic_error("matching: mate pair is not an edge");
            m.pairs.push_back(*e);
        }
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

}  // namespace

Matching max_cardinality_matching(const Graph& g) {
    CardinalityBlossom solver(g);
    return matching_from_mates(g, solver.run());
}

std::optional<Matching> min_weight_perfect_matching(const Graph& g) {
    if (!g.weighted()) throw ValidationError("min-weight matching: graph must be weighted");
    const int n = g.vertex_count();
    if (n > kMinWeightMatchingMaxVertices)
        throw SizeLimitError("min-weight matching: desk-scale engine, too many vertices");
    if (n % 2 != 0) return std::nullopt;
    if (n == 0) return Matching{{}, {}};

    // Maximize shifted weights L - w: cardinality dominates, then the original
    // weight is minimized. A vertex left free means no perfect matching.
    Weight w_max = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) w_max = std::max(w_max, g.weight(e));
    if (w_max > std::numeric_limits<Weight>::max() / (4LL * (n + 2) * (n + 2)))
        throw SizeLimitError("min-weight matching: weights too large for exact arithmetic");
    const Weight shift = static_cast<Weight>(n) * w_max + 1;

    std::vector<std::vector<Weight>> w(n, std::vector<Weight>(n, 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        w[ed.u][ed.v] = w[ed.v][ed.u] = shift - g.weight(e);
    }

    DenseWeightedBlossom solver(n, w);
    std::vector<int> raw = solver.run();
    std::vector<int> mate(n, -1);
    for (Vertex v = 0; v < n; ++v) {
        if (raw[v + 1] == 0) return std::nullopt;  // some vertex stayed free
        mate[v] = raw[v + 1] - 1;
    }
    return matching_from_mates(g, mate);
}

Weight matching_weight(const Graph& g, const Matching& m) {
    Weight s = 0;
    for (EdgeId e : m.pairs) s += g.weight(e);
    return s;
}

}  // namespace cff
