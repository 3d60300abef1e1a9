#include "core/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "core/oracle.hpp"

namespace cff {

namespace {

constexpr long long kFormulaModeVertexCap = 50000;
constexpr long long kFormulaModeEdgeCap = 2000000;

std::vector<int> part_sizes_for(const Graph& source, const ReductionParams& params) {
    const int big_n = source.vertex_count();
    const int parts = big_n - 2;
    if (params.part_size_override) {
        int s = *params.part_size_override;
        if (s < 3) throw ValidationError("reduction: part size override must be at least 3");
        return std::vector<int>(parts, s);
    }
    FormulaModeParams pm = formula_mode_params(big_n, params.epsilon);
    if (pm.min_part_size * parts > pm.n)
        throw SizeLimitError(
            "reduction: formula-mode partition infeasible at this size; "
            "pass a part-size override");
    // generator self-check against the floor bound, in its precondition range
    if (static_cast<long long>(big_n) * big_n < pm.n && !parts_floor_bound(pm.n, big_n))
        throw std::logic_error("reduction: floor bound violated");
    // distribute n as evenly as possible; equal split maximizes the minimum
    std::vector<int> sizes(parts, static_cast<int>(pm.n / parts));
    for (long long i = 0; i < pm.n % parts; ++i) ++sizes[static_cast<size_t>(i)];
    if (sizes.back() < pm.min_part_size)
        throw SizeLimitError(
            "reduction: formula-mode parts fall below the minimum size; "
            "pass a part-size override");
    return sizes;
}

ReductionInstance build_instance(const Graph& source, const std::vector<int>& sizes, int u0,
                                 int u1, int u2, int u3) {
    const int big_n = source.vertex_count();
    const int parts = big_n - 2;

    long long total = 0;
    for (int s : sizes) total += s;

    std::vector<std::vector<int>> part_sets(parts);
    std::vector<int> a_vertex(parts);
    std::vector<int> part_of(static_cast<size_t>(total));
    {
        int next = 0;
        for (int j = 0; j < parts; ++j) {
            a_vertex[j] = next;  // lowest vertex of the block represents it in A
            for (int i = 0; i < sizes[j]; ++i) {
                part_of[next] = j;
                part_sets[j].push_back(next++);
            }
        }
    }

    Graph gp(static_cast<int>(total));
    for (int j = 0; j < parts; ++j)
        for (size_t a = 0; a < part_sets[j].size(); ++a)
            for (size_t b = a + 1; b < part_sets[j].size(); ++b)
                gp.add_edge(part_sets[j][a], part_sets[j][b]);

    // sigma: sources except u1,u2 ascending -> A ascending
    std::vector<int> sigma(big_n, -1);
    {
        int j = 0;
        for (int v = 0; v < big_n; ++v) {
            if (v == u1 || v == u2) continue;
            sigma[v] = a_vertex[j++];
        }
    }
    for (EdgeId e = 0; e < source.edge_count(); ++e) {
        int x = source.edge(e).u, y = source.edge(e).v;
        if (x == u1 || x == u2 || y == u1 || y == u2) continue;
        gp.add_edge(sigma[x], sigma[y]);
    }

    std::vector<int> f(static_cast<size_t>(total));
    for (int j = 0; j < parts; ++j) {
        for (int v : part_sets[j]) f[v] = sizes[j] - 1;  // clique degree
        f[a_vertex[j]] = sizes[j] + 1;                   // clique degree + 2
    }
    f[sigma[u0]] = sizes[part_of[sigma[u0]]];  // clique degree + 1: path endpoint
    f[sigma[u3]] = sizes[part_of[sigma[u3]]];

    ReductionInstance inst{std::move(gp), DegreeSpec(std::move(f)),
                           {u0, u1, u2, u3}, std::move(sigma),
                           Partition::of_parts(static_cast<int>(total), std::move(part_sets))};
    return inst;
}

}  // namespace

FormulaModeParams formula_mode_params(int source_vertices, double epsilon) {
    if (source_vertices < 4) throw ValidationError("reduction: source needs at least 4 vertices");
    if (!(epsilon > 0)) throw ValidationError("reduction: epsilon must be positive");

    const long double N = source_vertices;
    const long double expo = std::pow(N, 1.0L / (1.0L + static_cast<long double>(epsilon)));
    const long double n_ld = std::exp2(expo);
    if (!(n_ld < static_cast<long double>(kFormulaModeVertexCap)))
        throw SizeLimitError(
            "reduction: formula-mode n = ceil(2^(N^(1/(1+eps)))) does not fit; "
            "pass a part-size override");
    FormulaModeParams out;
    out.n = static_cast<long long>(std::ceil(n_ld));
    const long double lg = std::log2(static_cast<long double>(out.n));
    out.min_part_size =
        static_cast<long long>(std::ceil(static_cast<long double>(out.n) /
                                         std::pow(lg, 1.0L + static_cast<long double>(epsilon)))) +
        1;
    out.parts = source_vertices - 2;

    const long double avg_part = static_cast<long double>(out.n) / out.parts;
    if (out.n > kFormulaModeVertexCap ||
        static_cast<long double>(out.n) * avg_part / 2 > static_cast<long double>(kFormulaModeEdgeCap))
        throw SizeLimitError("reduction: formula-mode instance too large; pass a part-size override");
    return out;
}

void generate_family(const Graph& source, const ReductionParams& params,
                     const std::function<bool(const ReductionInstance&)>& yield) {
    const int big_n = source.vertex_count();
    if (big_n < 4) throw ValidationError("reduction: source needs at least 4 vertices");
    if (!(params.epsilon > 0)) throw ValidationError("reduction: epsilon must be positive");

    std::vector<int> sizes = part_sizes_for(source, params);

    const int u1 = 0;  // fixed pivot; every Hamiltonian cycle passes through it
    std::vector<Vertex> nb1;
    for (EdgeId e : source.incident(u1)) nb1.push_back(source.other_end(e, u1));
    std::sort(nb1.begin(), nb1.end());

    long long emitted = 0;
    // Each iteration rebuilds G' from scratch: the reset of the A-copy
    // edges and of f is realized without carried state.
    for (Vertex u0 : nb1) {
        for (Vertex u2 : nb1) {
            if (u2 == u0) continue;
            std::vector<Vertex> nb2;
            for (EdgeId e : source.incident(u2)) nb2.push_back(source.other_end(e, u2));
            std::sort(nb2.begin(), nb2.end());
            for (Vertex u3 : nb2) {
                if (u3 == u0 || u3 == u1) continue;
                if (params.max_output && emitted >= *params.max_output) return;
                ++emitted;
                if (!yield(build_instance(source, sizes, u0, u1, u2, u3))) return;
            }
        }
    }
}

std::vector<ReductionInstance> generate_family(const Graph& source,
                                               const ReductionParams& params) {
    std::vector<ReductionInstance> out;
    generate_family(source, params, [&](const ReductionInstance& inst) {
        out.push_back(inst);
        return true;
    });
    return out;
}

bool parts_floor_bound(long long m, long long k) {
    if (k <= 0 || m <= 0) throw ValidationError("floor bound: positive arguments required");
    if (k * k >= m) throw ValidationError("floor bound: requires k < sqrt(m)");
    long long ceil_mk = (m + k - 1) / k;
    return m / (ceil_mk + 1) >= k - 2;
}

bool verify_reduction(const Graph& source, const ReductionParams& params) {
    bool ham = has_hamiltonian_cycle(source);
    bool any = false;
    generate_family(source, params, [&](const ReductionInstance& inst) {
        if (oracle_connected_f_factor_exists(inst.graph, inst.f)) {
            any = true;
            return false;
        }
        return true;
    });
    return ham == any;
}

}  // namespace cff
