#include <doctest.h>

#include <zlib.h>

#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "gwalk/error.hpp"
#include "gwalk/graph.hpp"
#include "gwalk/rng.hpp"

using namespace gwalk;

TEST_CASE("edge list parsing") {
    SUBCASE("basic") {
        auto g = parse_edge_list("0 1\n1 0\n1 2");
        CHECK(g.node_count() == 3);
        CHECK(g.edge_count() == 3);
    }
    SUBCASE("duplicates collapse") {
        auto g = parse_edge_list("0 1\n0 1\n");
        CHECK(g.edge_count() == 1);
        CHECK(g.build_stats().duplicate_edges == 1);
    }
    SUBCASE("self loops dropped and counted") {
        auto g = parse_edge_list("0 0\n0 1\n");
        CHECK(g.edge_count() == 1);
        CHECK(g.build_stats().self_loops == 1);
        CHECK(g.node_count() == 2);
    }
    SUBCASE("comments, tabs and blank lines") {
        auto g = parse_edge_list("# a comment\n\n5\t9\r\n  9 5  \n");
        CHECK(g.node_count() == 2);
        CHECK(g.edge_count() == 2);
        CHECK(g.external_id(0) == 5);
        CHECK(g.external_id(1) == 9);
        CHECK(g.index_of(9) == NodeId{1});
        CHECK_FALSE(g.index_of(7).has_value());
    }
    SUBCASE("node-count header keeps isolated nodes") {
        auto g = parse_edge_list("# Nodes: 5 Edges: 1\n0 1\n");
        CHECK(g.node_count() == 5);
        CHECK(g.build_stats().declared_nodes == 5);
        auto edgeless = parse_edge_list("# Nodes: 5\n");
        CHECK(edgeless.node_count() == 5);
        CHECK(edgeless.edge_count() == 0);
    }
    SUBCASE("header ignored when ids do not fit") {
        auto g = parse_edge_list("# Nodes: 3\n1 3\n3 2\n");
        CHECK(g.node_count() == 3);
        CHECK(g.external_id(0) == 1);
    }
    SUBCASE("malformed line reports its number") {
        try {
            parse_edge_list("0 1\n# ok\n2 x\n");
            FAIL("expected a parse error");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::parse);
            CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        }
        CHECK_THROWS_AS(parse_edge_list("1 -2\n"), Error);
        CHECK_THROWS_AS(parse_edge_list("1\n"), Error);
        CHECK_THROWS_AS(parse_edge_list("1 2 3\n"), Error);
    }
    SUBCASE("empty input") {
        CHECK_THROWS_AS(parse_edge_list(""), Error);
        CHECK_THROWS_AS(parse_edge_list("# only comments\n"), Error);
    }
    SUBCASE("istream and file") {
        std::istringstream in("1 2\n2 1\n2 3\n");
        auto g = load_edge_list(in);
        CHECK(g.content_hash() == fixtures::g3().content_hash());
        CHECK_THROWS_AS(load_edge_list_file("/nonexistent/graph.txt"), Error);
    }
}

TEST_CASE("degrees on G3") {
    const auto g = fixtures::g3();
    const NodeId n1 = *g.index_of(1), n2 = *g.index_of(2), n3 = *g.index_of(3);
    CHECK(g.in_degree(n2) == 1);
    CHECK(g.in_degree(n3) == 1);
    CHECK(g.out_degree(n2) == 2);
    CHECK(g.out_degree(n3) == 0);
    CHECK(g.out_degree(n1) == 1);
    CHECK_THROWS_AS(g.in_degree(3), Error);
    CHECK_THROWS_AS(g.out_degree(99), Error);

    const auto isolated = parse_edge_list("# Nodes: 3\n0 1\n");
    CHECK(isolated.in_degree(2) == 0);
    CHECK(isolated.out_degree(2) == 0);
    const auto single = parse_edge_list("# Nodes: 1\n");
    CHECK(single.out_degree(0) == 0);
}

TEST_CASE("degree distributions") {
    const auto g = fixtures::g3();
    const auto in = degree_distribution(g, Direction::in);
    CHECK(in.masses().size() == 1);
    CHECK(in.mass(1) == doctest::Approx(1.0));
    const auto out = degree_distribution(g, Direction::out);
    for (Distribution::Key k : {0, 1, 2}) CHECK(out.mass(k) == doctest::Approx(1.0 / 3));

    const auto edgeless = parse_edge_list("# Nodes: 5\n");
    CHECK(degree_distribution(edgeless, Direction::out).mass(0) == 1.0);
    CHECK_THROWS_AS(degree_distribution(DirectedGraph{}, Direction::in), Error);
}

TEST_CASE("follower ratio and its average") {
    const auto g = fixtures::g3();
    CHECK(follower_ratio(g, *g.index_of(2)) == doctest::Approx(0.5));
    CHECK_FALSE(follower_ratio(g, *g.index_of(3)).has_value());
    CHECK(follower_ratio(g, *g.index_of(1)) == doctest::Approx(1.0));

    const auto avg = ratio_average(g);
    CHECK(avg.value == doctest::Approx(0.75));
    CHECK(avg.excluded == 1);

    CHECK(ratio_average(parse_edge_list("0 1\n1 0\n1 2\n2 1\n")).value == 1.0);
    CHECK_THROWS_AS(ratio_average(parse_edge_list("# Nodes: 4\n")), Error);
}

TEST_CASE("mutual proportion") {
    CHECK(mutual_proportion(fixtures::g3()) == doctest::Approx(2.0 / 3));
    CHECK(mutual_proportion(parse_edge_list("0 1\n1 0\n")) == 1.0);
    CHECK(mutual_proportion(fixtures::inward_star(4)) == 0.0);
    CHECK_THROWS_AS(mutual_proportion(parse_edge_list("# Nodes: 2\n")), Error);
}

TEST_CASE("has_edge") {
    const auto g = fixtures::g3();
    const NodeId n1 = *g.index_of(1), n2 = *g.index_of(2), n3 = *g.index_of(3);
    CHECK(g.has_edge(n1, n2));
    CHECK_FALSE(g.has_edge(n3, n1));
    for (NodeId v = 0; v < 3; ++v) CHECK_FALSE(g.has_edge(v, v));
    CHECK_THROWS_AS(g.has_edge(0, 3), Error);
    CHECK_THROWS_AS(g.has_edge(3, 0), Error);
}

namespace {

DirectedGraph random_graph(std::uint64_t seed, NodeId n, double p) {
    Rng rng(seed);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = 0; j < n; ++j)
            if (rng.bernoulli(p)) edges.push_back({i, j});
    return DirectedGraph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("graph invariants on random graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto n = static_cast<NodeId>(1 + seed * 2);
        const auto g = random_graph(seed, n, 0.2);
        CAPTURE(seed);

        std::size_t out_sum = 0, in_sum = 0;
        for (NodeId v = 0; v < n; ++v) {
            out_sum += g.out_degree(v);
            in_sum += g.in_degree(v);
            for (NodeId w : g.out_neighbors(v)) {
                const auto back = g.in_neighbors(w);
                CHECK(std::find(back.begin(), back.end(), v) != back.end());
            }
        }
        CHECK(out_sum == g.edge_count());
        CHECK(in_sum == g.edge_count());

        // degree histograms reconstruct N exactly
        for (Direction dir : {Direction::in, Direction::out}) {
            double total = 0.0;
            const auto dist = degree_distribution(g, dir);
            for (const auto& [k, m] : dist.masses()) total += m * static_cast<double>(n);
            CHECK(total == doctest::Approx(static_cast<double>(n)));
        }

        // exhaustive has_edge against adjacency membership
        for (NodeId i = 0; i < n; ++i) {
            const auto nb = g.out_neighbors(i);
            for (NodeId j = 0; j < n; ++j)
                CHECK(g.has_edge(i, j) == (std::find(nb.begin(), nb.end(), j) != nb.end()));
        }

        if (g.edge_count() > 0) CHECK(mutual_proportion(g) == mutual_proportion(g.transpose()));
    }
}

TEST_CASE("ratio average is 1 when in- and out-adjacency coincide") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        auto g = random_graph(seed, 15, 0.3);
        auto edges = g.edges();
        for (const Edge& e : g.edges()) edges.push_back({e.dst, e.src});
        const auto sym = DirectedGraph::from_edges(15, edges);
        if (sym.edge_count() == 0) continue;
        CHECK(ratio_average(sym).value == 1.0);
    }
}

TEST_CASE("edge list round trip keeps ids and isolated nodes") {
    const auto g = parse_edge_list("# Nodes: 6\n0 3\n3 0\n5 1\n");
    std::ostringstream out;
    write_edge_list(out, g);
    const auto back = parse_edge_list(out.str());
    CHECK(back.content_hash() == g.content_hash());
    CHECK(back.node_count() == 6);
}

TEST_CASE("gzip-compressed edge lists load transparently") {
    const auto path = std::filesystem::temp_directory_path() / "gwalk_test_g3.txt.gz";
    gzFile f = gzopen(path.c_str(), "wb");
    REQUIRE(f != nullptr);
    const std::string text = "1 2\n2 1\n2 3\n";
    gzwrite(f, text.data(), static_cast<unsigned>(text.size()));
    gzclose(f);
    const auto g = load_edge_list_file(path);
    CHECK(g.content_hash() == fixtures::g3().content_hash());
    std::filesystem::remove(path);
}
