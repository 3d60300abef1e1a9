#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "core/oracle.hpp"
#include "support.hpp"

using namespace cff;
using namespace cff::test;

TEST_CASE("enumeration on fixed graphs") {
    Graph k4 = complete_graph(4);
    long long count = 0;
    enumerate_f_factors(k4, DegreeSpec::uniform(4, 2), false, [&](const FactorSubgraph& h) {
        CHECK(is_connected(h));  // every 2-factor of K4 is a 4-cycle
        ++count;
        return true;
    });
    CHECK(count == 3);

    Graph prism = prism_graph();
    long long total = 0, connected = 0;
    enumerate_f_factors(prism, DegreeSpec::uniform(6, 2), false, [&](const FactorSubgraph&) {
        ++total;
        return true;
    });
    enumerate_f_factors(prism, DegreeSpec::uniform(6, 2), true, [&](const FactorSubgraph&) {
        ++connected;
        return true;
    });
    CHECK(total == 4);      // triangle pair + 3 Hamiltonian cycles
    CHECK(connected == 3);

    long long none = 0;
    enumerate_f_factors(two_triangles(), DegreeSpec::uniform(6, 2), true,
                        [&](const FactorSubgraph&) {
                            ++none;
                            return true;
                        });
    CHECK(none == 0);
}

TEST_CASE("enumeration agrees with the naive subset scan") {
    Rng rng(2024);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 3 + static_cast<int>(rng() % 4);
        Graph g = random_graph(rng, n, 0.6);
        if (g.edge_count() > 15) continue;
        std::vector<int> f(n);
        for (int v = 0; v < n; ++v) f[v] = static_cast<int>(rng() % (g.degree(v) + 2));
        bool connected_only = rng() % 2 == 0;

        std::vector<std::vector<EdgeId>> mine;
        enumerate_f_factors(g, DegreeSpec{std::vector<int>(f)}, connected_only,
                            [&](const FactorSubgraph& h) {
                                mine.push_back(h.edge_ids());
                                return true;
                            });
        std::sort(mine.begin(), mine.end());
        auto ref = naive_f_factors(g, f, connected_only);
        std::sort(ref.begin(), ref.end());
        CHECK(mine == ref);
    }
}

TEST_CASE("enumeration is duplicate-free") {
    Rng rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        Graph g = random_graph(rng, 6, 0.7);
        std::vector<int> f = random_degree_spec(rng, g, 1, 3);
        if (f.empty()) continue;
        std::set<std::vector<EdgeId>> seen;
        long long count = 0;
        enumerate_f_factors(g, DegreeSpec{std::move(f)}, false, [&](const FactorSubgraph& h) {
            seen.insert(h.edge_ids());
            ++count;
            return true;
        });
        CHECK(static_cast<long long>(seen.size()) == count);
    }
}

TEST_CASE("brute force connected factor fold") {
    Graph prism = prism_graph();
    std::vector<Weight> w(9, 1);
    for (EdgeId e = 0; e < 9; ++e)
        if (prism.edge(e).u + 3 == prism.edge(e).v) w[e] = 10;
    Graph weighted = reweighted(prism, w);

    OracleResult r = brute_force_connected_f_factor(weighted, DegreeSpec::uniform(6, 2));
    CHECK(r.exists);
    CHECK(r.count == 3);
    REQUIRE(r.best.has_value());
    CHECK(r.best->second == 24);

    OracleResult c6 = brute_force_connected_f_factor(cycle_graph(6), DegreeSpec::uniform(6, 2));
    CHECK(c6.exists);
    CHECK(c6.count == 1);

    OracleResult tt = brute_force_connected_f_factor(two_triangles(), DegreeSpec::uniform(6, 2));
    CHECK_FALSE(tt.exists);
    CHECK(tt.count == 0);
    CHECK_FALSE(tt.best.has_value());
}

TEST_CASE("hamiltonicity on fixed graphs") {
    CHECK(has_hamiltonian_cycle(complete_graph(4)));
    CHECK_FALSE(has_hamiltonian_cycle(star_graph(3)));
    CHECK_FALSE(has_hamiltonian_cycle(petersen_graph()));
    CHECK(has_hamiltonian_cycle(cycle_graph(8)));
    CHECK_FALSE(has_hamiltonian_cycle(path_graph(5)));
    CHECK_FALSE(has_hamiltonian_cycle(Graph(1)));
    Graph k33 = complete_bipartite(3, 3);
    CHECK(has_hamiltonian_cycle(k33));
    CHECK_FALSE(has_hamiltonian_cycle(complete_bipartite(2, 3)));
}

TEST_CASE("connected 2-factor enumeration matches the cycle search") {
    // exhaustive representatives up to 7 vertices
    for (int n = 3; n <= 7; ++n) {
        for (std::uint64_t rep : graph_representatives(n)) {
            Graph g = graph_from_mask(n, rep);
            bool via_enum = false;
            enumerate_f_factors(g, DegreeSpec::uniform(n, 2), true, [&](const FactorSubgraph&) {
                via_enum = true;
                return false;
            });
            CHECK(via_enum == has_hamiltonian_cycle(g));
        }
    }
}

TEST_CASE("size limits raise") {
    Graph big = complete_graph(10);  // 45 edges
    CHECK_THROWS_AS(enumerate_f_factors(big, DegreeSpec::uniform(10, 2), false,
                                        [](const FactorSubgraph&) { return true; }),
                    SizeLimitError);
    CHECK_THROWS_AS(has_hamiltonian_cycle(Graph(30)), SizeLimitError);
}
