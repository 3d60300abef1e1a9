#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/instance_io.hpp"
#include "support.hpp"

using namespace cff;
using namespace cff::test;

namespace {

bool same_instance(const Instance& a, const Instance& b) {
    if (a.graph.vertex_count() != b.graph.vertex_count()) return false;
    if (a.graph.edge_count() != b.graph.edge_count()) return false;
    if (a.graph.weighted() != b.graph.weighted()) return false;
    if (a.f.values() != b.f.values()) return false;
    for (EdgeId e = 0; e < a.graph.edge_count(); ++e) {
        if (a.graph.edge(e).u != b.graph.edge(e).u) return false;
        if (a.graph.edge(e).v != b.graph.edge(e).v) return false;
        if (a.graph.weighted() && a.graph.weight(e) != b.graph.weight(e)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parse a plain instance") {
    Instance inst = parse_instance("p ffactor 3 3 0\nf 2 2 2\ne 0 1\ne 1 2\ne 0 2\n");
    CHECK(inst.graph.vertex_count() == 3);
    CHECK(inst.graph.edge_count() == 3);
    CHECK_FALSE(inst.graph.weighted());
    CHECK(inst.f.values() == std::vector<int>{2, 2, 2});
    CHECK_FALSE(parity_warning(inst));
}

TEST_CASE("comments, blank lines and split f lines") {
    Instance inst = parse_instance(
        "c generated fixture\n\np ffactor 4 2 1\nc degrees follow\nf 1 1\nf 1 1\n"
        "e 0 1 10\ne 2 3 4\n");
    CHECK(inst.graph.weighted());
    CHECK(inst.graph.weight(1) == 4);
    CHECK(inst.f.values() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("parse errors carry positions") {
    auto expect_error = [](const char* text, const char* needle, int line) {
        try {
            parse_instance(text);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
            CHECK(e.line() == line);
            CHECK(e.column() >= 1);
        }
    };
    expect_error("p ffactor 2 1 1\nf 1 1\ne 0 1\n", "missing weight", 3);
    expect_error("p ffactor 2 1 0\nf 1 1\ne 0 1 5\n", "unexpected weight", 3);
    expect_error("p ffactor 2 1 0\nf 1 1\ne 0 0\n", "self-loop", 3);
    expect_error("p ffactor 3 2 0\nf 0 0 0\ne 0 1\ne 1 0\n", "duplicate edge", 4);
    expect_error("p ffactor 2 1 0\nf 1 1\ne 0 7\n", "out of range", 3);
    expect_error("p ffactor 2 0 0\nf 1 1 1\n", "more degree values", 2);
    expect_error("p ffactor 2 0 0\nf 1\n", "exactly one value per vertex", 3);
    expect_error("p ffactor 2 2 0\nf 1 1\ne 0 1\n", "fewer edge lines", 4);
    expect_error("e 0 1\n", "header", 1);
    expect_error("p ffactor 2 0 2\nf 1 1\n", "weighted flag", 1);
    expect_error("p ffactor 2 0 0\nq 1 1\n", "unknown line type", 2);
    expect_error("p ffactor 2 x 0\nf 1 1\n", "expected integer", 1);
}

TEST_CASE("serialize then parse is the identity") {
    Rng rng(321);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 1 + static_cast<int>(rng() % 9);
        bool weighted = rng() % 2 == 0;
        Graph g = random_graph(rng, n, 0.5, weighted, 0, 50);
        std::vector<int> f(n);
        for (int v = 0; v < n; ++v) f[v] = static_cast<int>(rng() % (n + 1));
        Instance inst{std::move(g), DegreeSpec(std::move(f))};
        Instance back = parse_instance(serialize_instance(inst));
        CHECK(same_instance(inst, back));
        // serialization is canonical: a second round trip is textually equal
        CHECK(serialize_instance(back) == serialize_instance(inst));
    }
}

TEST_CASE("file round trip") {
    Graph g = prism_graph();
    Instance inst{std::move(g), DegreeSpec::uniform(6, 2)};
    std::string path = "/tmp/cff_io_test_instance.cff";
    write_instance_file(inst, path);
    Instance back = read_instance_file(path);
    CHECK(same_instance(inst, back));
    CHECK_THROWS_AS(read_instance_file("/tmp/definitely_missing_dir/x.cff"), ValidationError);
}

TEST_CASE("parity warning flags odd degree sums") {
    Instance odd = parse_instance("p ffactor 3 3 0\nf 2 2 1\ne 0 1\ne 1 2\ne 0 2\n");
    CHECK(parity_warning(odd));
}

TEST_CASE("parser survives mutated and random inputs") {
    const std::string base = "p ffactor 4 3 1\nf 1 2 2 1\ne 0 1 10\ne 1 2 4\ne 2 3 9\n";
    Rng rng(0xF00D);
    const char alphabet[] = "pfce 0123456789-\n\tx";
    int accepted = 0, rejected = 0;
    for (int iter = 0; iter < 4000; ++iter) {
        std::string text = base;
        int mutations = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < mutations; ++t) {
            size_t pos = rng() % text.size();
            char c = alphabet[rng() % (sizeof(alphabet) - 1)];
            switch (rng() % 3) {
                case 0: text[pos] = c; break;
                case 1: text.insert(text.begin() + pos, c); break;
                case 2: text.erase(text.begin() + pos); break;
            }
        }
        try {
            Instance inst = parse_instance(text);
            ++accepted;  // a mutation can stay well-formed; round trip must hold
            CHECK(same_instance(inst, parse_instance(serialize_instance(inst))));
        } catch (const ParseError& e) {
            ++rejected;
            CHECK(e.line() >= 1);
        } catch (const ValidationError&) {
            ++rejected;  // structurally fine but semantically rejected (dup edges etc.)
        }
    }
    CHECK(accepted + rejected == 4000);
    CHECK(rejected > 1000);
}
