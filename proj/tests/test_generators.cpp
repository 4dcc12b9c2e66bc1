#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "gwalk/error.hpp"
#include "gwalk/generators.hpp"

using namespace gwalk;

namespace {

std::string serialized(const DirectedGraph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

/// Weakly connected components by union-find.
std::size_t weak_components(const DirectedGraph& g) {
    std::vector<NodeId> parent(g.node_count());
    for (NodeId v = 0; v < parent.size(); ++v) parent[v] = v;
    auto find = [&](NodeId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : g.edges()) parent[find(e.src)] = find(e.dst);
    std::size_t roots = 0;
    for (NodeId v = 0; v < parent.size(); ++v) roots += find(v) == v ? 1 : 0;
    return roots;
}

}  // namespace

TEST_CASE("complete bidirected graph") {
    const auto g = generate(GenSpec::complete(4));
    CHECK(g.edge_count() == 12);
    CHECK(mutual_proportion(g) == 1.0);
}

TEST_CASE("union keeps components apart") {
    const auto g = generate(parse_gen_spec("union(complete(n=3),complete(n=3))"));
    CHECK(g.node_count() == 6);
    CHECK(g.edge_count() == 12);
    CHECK(weak_components(g) == 2);

    const auto parts = std::vector<DirectedGraph>{generate(GenSpec::ring_of(5)), fixtures::g3()};
    const auto u = disjoint_union(parts);
    CHECK(u.node_count() == 8);
    CHECK(u.edge_count() == 8);
}

TEST_CASE("erdos-renyi is deterministic per seed") {
    const auto a = generate(GenSpec::erdos_renyi(100, 0.05, 7));
    const auto b = generate(GenSpec::erdos_renyi(100, 0.05, 7));
    const auto c = generate(GenSpec::erdos_renyi(100, 0.05, 8));
    CHECK(a.edges() == b.edges());
    CHECK(serialized(a) == serialized(b));
    CHECK(a.edges() != c.edges());
    // mean out-degree near (n-1)p
    const double mean = static_cast<double>(a.edge_count()) / 100.0;
    CHECK(mean > 3.5);
    CHECK(mean < 6.5);

    CHECK(generate(GenSpec::erdos_renyi(10, 0.0, 1)).edge_count() == 0);
    CHECK(generate(GenSpec::erdos_renyi(10, 1.0, 1)).edge_count() == 90);
}

TEST_CASE("ring") {
    const auto g = generate(GenSpec::ring_of(5));
    CHECK(g.edge_count() == 5);
    CHECK(g.has_edge(4, 0));
    CHECK(generate(GenSpec::ring_of(1)).edge_count() == 0);
}

TEST_CASE("invalid specs") {
    CHECK_THROWS_AS(generate(GenSpec::erdos_renyi(0, 0.1, 1)), Error);
    CHECK_THROWS_AS(generate(GenSpec::erdos_renyi(10, 1.5, 1)), Error);
    CHECK_THROWS_AS(generate(GenSpec::erdos_renyi(10, -0.1, 1)), Error);
    CHECK_THROWS_AS(parse_gen_spec("er(n=10,p=0.1"), Error);
    CHECK_THROWS_AS(parse_gen_spec("pentagon(n=5)"), Error);
    CHECK_THROWS_AS(parse_gen_spec("er(p=0.1)"), Error);
    CHECK_THROWS_AS(parse_gen_spec("er(n=ten)"), Error);
    CHECK_THROWS_AS(parse_gen_spec("union()"), Error);
    CHECK_THROWS_AS(parse_gen_spec("complete(n=3) trailing"), Error);
}

TEST_CASE("spec text round trip") {
    for (const char* text : {"er(n=100,p=0.05,seed=7)", "ring(n=10)", "complete(n=4)",
                             "union(complete(n=3),sym(er(n=20,p=0.3,seed=1)),ring(n=2))"}) {
        CAPTURE(text);
        const auto spec = parse_gen_spec(text);
        CHECK(to_string(spec) == text);
        CHECK(generate(parse_gen_spec(to_string(spec))).content_hash() == generate(spec).content_hash());
    }
    CHECK(to_string(parse_gen_spec(" erdos_renyi_directed( n = 5 , p = 0.5 , seed = 3 ) ")) == "er(n=5,p=0.5,seed=3)");
}

TEST_CASE("symmetrize") {
    const auto g3 = fixtures::g3();
    const auto s = symmetrize(g3);
    CHECK(s.edge_count() == 4);
    CHECK(mutual_proportion(s) == 1.0);
    CHECK(s.node_count() == g3.node_count());
    CHECK(s.external_ids() == g3.external_ids());

    const auto complete = generate(GenSpec::complete(5));
    CHECK(symmetrize(complete).edges() == complete.edges());

    const auto edgeless = parse_edge_list("# Nodes: 4\n");
    CHECK(symmetrize(edgeless).edge_count() == 0);
}

TEST_CASE("symmetrize properties on random graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto g = generate(GenSpec::erdos_renyi(30, 0.05, seed));
        const auto s = symmetrize(g);
        CHECK(symmetrize(s).edges() == s.edges());
        if (g.edge_count() > 0) CHECK(mutual_proportion(s) == 1.0);
        for (const Edge& e : g.edges()) CHECK(s.has_edge(e.dst, e.src));
    }
}

TEST_CASE("union preserves counts") {
    const auto a = generate(GenSpec::erdos_renyi(40, 0.1, 3));
    const auto b = generate(GenSpec::ring_of(9));
    const auto c = generate(GenSpec::complete(4));
    const auto u = disjoint_union({a, b, c});
    CHECK(u.node_count() == a.node_count() + b.node_count() + c.node_count());
    CHECK(u.edge_count() == a.edge_count() + b.edge_count() + c.edge_count());
}
