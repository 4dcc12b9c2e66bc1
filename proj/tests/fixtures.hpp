#pragma once

#include <vector>

#include "gwalk/generators.hpp"
#include "gwalk/graph.hpp"

namespace fixtures {

/// Edges (1,2), (2,1), (2,3) over ids {1,2,3}; dense indices 0,1,2.
inline gwalk::DirectedGraph g3() { return gwalk::parse_edge_list("1 2\n2 1\n2 3\n"); }

/// Every leaf points at node 0, nothing points back.
inline gwalk::DirectedGraph inward_star(gwalk::NodeId leaves) {
    std::vector<gwalk::Edge> edges;
    for (gwalk::NodeId v = 1; v <= leaves; ++v) edges.push_back({v, 0});
    return gwalk::DirectedGraph::from_edges(leaves + 1, edges);
}

inline gwalk::DirectedGraph graph_from(std::size_t n, std::vector<gwalk::Edge> edges) {
    return gwalk::DirectedGraph::from_edges(n, std::move(edges));
}

}  // namespace fixtures
