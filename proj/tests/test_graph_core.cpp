#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "core/graph.hpp"
#include "support.hpp"

using namespace cff;
using namespace cff::test;

TEST_CASE("graph construction rejects bad edges") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(0, 0), ValidationError);
    CHECK_THROWS_AS(g.add_edge(1, 0), ValidationError);  // parallel
    CHECK_THROWS_AS(g.add_edge(0, 3), ValidationError);
    CHECK_THROWS_AS(g.add_edge(0, 2, 5), ValidationError);  // weight on unweighted graph

    Graph w(2, true);
    CHECK_THROWS_AS(w.add_edge(0, 1), ValidationError);  // missing weight
    CHECK_THROWS_AS(w.add_edge(0, 1, -1), ValidationError);
    w.add_edge(0, 1, 7);
    CHECK(w.weight(0) == 7);
}

TEST_CASE("components") {
    Graph g = two_triangles();
    std::vector<EdgeId> all(g.edge_count());
    std::iota(all.begin(), all.end(), 0);
    auto comps = components_of(g, all);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1, 2});
    CHECK(comps[1] == std::vector<int>{3, 4, 5});

    CHECK(components(3, {}).size() == 3);  // isolated vertices are singletons

    Graph c6 = cycle_graph(6);
    std::vector<EdgeId> c6edges(c6.edge_count());
    std::iota(c6edges.begin(), c6edges.end(), 0);
    CHECK(components_of(c6, c6edges).size() == 1);
    CHECK(is_connected(FactorSubgraph(c6, c6edges)));
    CHECK_FALSE(is_connected(FactorSubgraph(g, all)));
    CHECK(is_connected(1, {}));  // single vertex
}

TEST_CASE("quotient drops inner edges and keeps parallels") {
    // path a-b-c with {a,b},{c}
    Graph p = path_graph(3);
    auto q = Partition::of_parts(3, {{0, 1}, {2}});
    auto gq = quotient(p, q);
    REQUIRE(gq.edges().size() == 1);
    CHECK(gq.edges()[0].original == p.find_edge(1, 2).value());

    // prism with triangle parts: the three matching edges survive as parallels
    Graph prism = prism_graph();
    auto qq = Partition::of_parts(6, {{0, 1, 2}, {3, 4, 5}});
    auto pq = quotient(prism, qq);
    REQUIRE(pq.edges().size() == 3);
    std::set<EdgeId> originals;
    for (const auto& e : pq.edges()) originals.insert(e.original);
    CHECK(originals == std::set<EdgeId>{prism.find_edge(0, 3).value(),
                                        prism.find_edge(1, 4).value(),
                                        prism.find_edge(2, 5).value()});

    // whole-vertex-set partition: no quotient edges
    CHECK(quotient(prism, Partition::single(6)).edges().empty());
}

TEST_CASE("refine_partition") {
    Graph g = prism_graph();
    std::vector<EdgeId> tri{g.find_edge(0, 1).value(), g.find_edge(1, 2).value(),
                            g.find_edge(0, 2).value(), g.find_edge(3, 4).value(),
                            g.find_edge(4, 5).value(), g.find_edge(3, 5).value()};
    FactorSubgraph triangles(g, tri);

    auto refined = refine_partition(triangles, Partition::single(6));
    CHECK(refined == Partition::of_parts(6, {{0, 1, 2}, {3, 4, 5}}));

    // fixpoint on a connected factor
    Graph c6 = cycle_graph(6);
    std::vector<EdgeId> all(c6.edge_count());
    std::iota(all.begin(), all.end(), 0);
    FactorSubgraph h(c6, all);
    CHECK(refine_partition(h, Partition::single(6)) == Partition::single(6));

    // fixpoint on a disconnected factor whose parts are internally connected
    CHECK(refine_partition(triangles, refined) == refined);
}

TEST_CASE("refinement is monotone on random subgraphs") {
    Rng rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        Graph g = random_graph(rng, 8, 0.5);
        std::vector<EdgeId> sub;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (rng() % 2) sub.push_back(e);
        FactorSubgraph h(g, sub);
        auto base = rng() % 2 ? Partition::single(8)
                              : Partition::of_parts(8, {{0, 1, 2, 3}, {4, 5, 6, 7}});
        Partition refined = refine_partition(h, base);
        CHECK(refined.refines(base));
        CHECK(refined.size() >= base.size());
        // idempotent
        CHECK(refine_partition(h, refined) == refined);
    }
}

TEST_CASE("spanning trees of the prism quotient") {
    Graph prism = prism_graph();
    auto q = Partition::of_parts(6, {{0, 1, 2}, {3, 4, 5}});
    auto trees = spanning_trees(prism, q);
    REQUIRE(trees.size() == 3);  // one per matching edge
    std::set<EdgeId> seen;
    for (const auto& t : trees) {
        REQUIRE(t.size() == 1);
        seen.insert(t[0]);
    }
    CHECK(seen == std::set<EdgeId>{prism.find_edge(0, 3).value(), prism.find_edge(1, 4).value(),
                                   prism.find_edge(2, 5).value()});
}

TEST_CASE("spanning trees of a triangle with singleton parts") {
    Graph tri = cycle_graph(3);
    auto q = Partition::of_parts(3, {{0}, {1}, {2}});
    auto trees = spanning_trees(tri, q);
    CHECK(trees.size() == 3);  // each pair of edges
    for (const auto& t : trees) CHECK(t.size() == 2);
}

TEST_CASE("spanning trees require at least two parts") {
    Graph tri = cycle_graph(3);
    CHECK_THROWS_AS(spanning_trees(tri, Partition::single(3)), ValidationError);
}

TEST_CASE("no trees across a disconnected quotient") {
    Graph g = two_triangles();
    auto q = Partition::of_parts(6, {{0, 1, 2}, {3, 4, 5}});
    CHECK(spanning_trees(g, q).empty());
}

TEST_CASE("tree stream agrees with the matrix-tree count") {
    Rng rng(7);
    int nontrivial = 0;
    for (int iter = 0; iter < 300; ++iter) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph g = random_graph(rng, n, 0.55);
        int parts = 2 + static_cast<int>(rng() % std::min(5, n - 1));
        std::vector<int> part_of(n);
        for (int v = 0; v < n; ++v) part_of[v] = static_cast<int>(rng() % parts);
        // ensure every part id appears
        for (int p = 0; p < parts && p < n; ++p) part_of[p] = p;
        Partition q = Partition::from_part_of(part_of);
        if (q.size() < 2 || q.size() > 6) continue;

        long long streamed = 0;
        for_each_spanning_tree(g, q, [&](const std::vector<EdgeId>& t) {
            CHECK(static_cast<int>(t.size()) == q.size() - 1);
            // the tree connects the partition
            std::vector<std::pair<int, int>> contracted;
            for (EdgeId e : t)
                contracted.emplace_back(q.part_of(g.edge(e).u), q.part_of(g.edge(e).v));
            CHECK(is_connected(q.size(), contracted));
            ++streamed;
            return true;
        });
        CHECK(streamed == kirchhoff_quotient_tree_count(g, q));
        if (streamed > 0) ++nontrivial;
    }
    CHECK(nontrivial > 50);
}

TEST_CASE("tree stream yields distinct edge sets") {
    Rng rng(99);
    for (int iter = 0; iter < 50; ++iter) {
        Graph g = random_graph(rng, 7, 0.6);
        Partition q = Partition::of_parts(7, {{0, 1}, {2, 3}, {4, 5}, {6}});
        std::set<std::vector<EdgeId>> all;
        long long count = 0;
        for_each_spanning_tree(g, q, [&](const std::vector<EdgeId>& t) {
            all.insert(t);
            ++count;
            return true;
        });
        CHECK(static_cast<long long>(all.size()) == count);
    }
}

TEST_CASE("factor subgraph bookkeeping") {
    Graph g = cycle_graph(4);
    FactorSubgraph h(g);
    h.add(0);
    h.add(2);
    CHECK(h.edge_count() == 2);
    CHECK(h.degree(0) == 1);
    CHECK_THROWS_AS(h.add(0), ValidationError);
    h.remove(0);
    CHECK_THROWS_AS(h.remove(0), ValidationError);
    CHECK(h.edge_ids() == std::vector<EdgeId>{2});
}

TEST_CASE("graph representative generator hits the known counts") {
    // number of simple graphs up to isomorphism, and connected ones
    const long long all[] = {0, 1, 2, 4, 11, 34, 156, 1044};
    const long long conn[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        auto reps = graph_representatives(n);
        CHECK(static_cast<long long>(reps.size()) == all[n]);
        long long connected = 0;
        for (std::uint64_t rep : reps)
            if (mask_connected(n, rep)) ++connected;
        CHECK(connected == conn[n]);
    }
}

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition::of_parts(3, {{0, 1}}), ValidationError);          // not covering
    CHECK_THROWS_AS(Partition::of_parts(3, {{0, 1}, {1, 2}}), ValidationError);  // overlap
    CHECK_THROWS_AS(Partition::of_parts(3, {{0, 1, 2}, {}}), ValidationError);   // empty part
    auto q = Partition::of_parts(4, {{2, 3}, {0, 1}});
    CHECK(q.part_of(0) == 0);  // canonical order by minimum vertex
    CHECK(q.part_of(2) == 1);
}
