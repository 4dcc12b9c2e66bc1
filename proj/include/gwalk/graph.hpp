#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gwalk/distribution.hpp"

namespace gwalk {

/// Dense internal node index in [0, node_count).
using NodeId = std::uint32_t;
/// Node id as it appears in the input edge list.
using ExternalId = std::uint64_t;

enum class Direction { in, out };

struct Edge {
    NodeId src;
    NodeId dst;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Counters collected while building a graph from raw edges.
struct BuildStats {
    std::uint64_t duplicate_edges = 0;
    std::uint64_t self_loops = 0;
    std::uint64_t declared_nodes = 0;  // from a "# Nodes: N" header, 0 if absent
};

/// Immutable directed graph in compressed adjacency form. Neighbor lists are
/// sorted, so edge lookup is a binary search. Safe for concurrent reads.
class DirectedGraph {
public:
    DirectedGraph() = default;

    /// Builds a graph over nodes [0, node_count). Self-loops are dropped and
    /// duplicates collapsed; both are counted in build_stats(). When
    /// `external_ids` is empty the identity mapping is used.
    static DirectedGraph from_edges(std::size_t node_count, std::vector<Edge> edges,
                                    std::vector<ExternalId> external_ids = {});

    std::size_t node_count() const noexcept { return external_ids_.size(); }
    std::size_t edge_count() const noexcept { return out_targets_.size(); }
    bool empty() const noexcept { return node_count() == 0; }

    std::size_t out_degree(NodeId v) const;
    std::size_t in_degree(NodeId v) const;
    std::size_t degree(NodeId v, Direction dir) const {
        return dir == Direction::in ? in_degree(v) : out_degree(v);
    }

    std::span<const NodeId> out_neighbors(NodeId v) const;
    std::span<const NodeId> in_neighbors(NodeId v) const;

    /// True iff the directed edge (i -> j) exists. O(log out_degree(i)).
    bool has_edge(NodeId i, NodeId j) const;

    ExternalId external_id(NodeId v) const;
    std::optional<NodeId> index_of(ExternalId id) const;
    const std::vector<ExternalId>& external_ids() const noexcept { return external_ids_; }

    /// All edges in (src, dst) order.
    std::vector<Edge> edges() const;

    DirectedGraph transpose() const;

    const BuildStats& build_stats() const noexcept { return stats_; }
    void set_declared_nodes(std::uint64_t n) noexcept { stats_.declared_nodes = n; }

    /// FNV-1a over node ids and the sorted edge list. Identifies the graph in
    /// trace file headers.
    std::uint64_t content_hash() const noexcept { return hash_; }

private:
    void check_node(NodeId v) const;

    std::vector<std::size_t> out_offsets_{0};
    std::vector<NodeId> out_targets_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<NodeId> in_sources_;
    std::vector<ExternalId> external_ids_;
    BuildStats stats_;
    std::uint64_t hash_ = 0;
};

/// Parses a SNAP-style edge list: one "src dst" pair of non-negative decimal
/// ids per line, '#' lines are comments. A "# Nodes: N" comment declares
/// ids [0, N) as nodes when every id seen fits in that range, which keeps
/// isolated nodes. Ids are remapped to dense indices in increasing id order.
DirectedGraph parse_edge_list(std::string_view text);
DirectedGraph load_edge_list(std::istream& in);
/// Reads plain or gzip-compressed files.
DirectedGraph load_edge_list_file(const std::filesystem::path& path);

/// Writes the graph as an edge list using external ids, with a node-count
/// header so isolated nodes survive a round trip.
void write_edge_list(std::ostream& out, const DirectedGraph& g);

// Ground-truth properties.

/// Fraction of nodes with each degree.
Distribution degree_distribution(const DirectedGraph& g, Direction dir);

/// In-degree over out-degree; empty when the out-degree is zero.
std::optional<double> follower_ratio(const DirectedGraph& g, NodeId v);

struct RatioAverage {
    double value = 0.0;
    std::size_t excluded = 0;  // nodes with zero out-degree
};
/// Mean follower ratio over the nodes where it is defined.
RatioAverage ratio_average(const DirectedGraph& g);

/// Number of edges (i -> j) whose reverse (j -> i) also exists.
std::size_t reciprocated_edge_count(const DirectedGraph& g);

/// Reciprocated edges over all edges.
double mutual_proportion(const DirectedGraph& g);

}  // namespace gwalk
