#include "gwalk/graph.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>

#include "gwalk/error.hpp"

namespace gwalk {

namespace {

constexpr std::uint64_t fnv_offset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t fnv_prime = 0x100000001b3ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t value) {
    for (int byte = 0; byte < 8; ++byte) {
        h ^= (value >> (8 * byte)) & 0xFF;
        h *= fnv_prime;
    }
}

void build_csr(std::size_t n, const std::vector<Edge>& sorted, bool by_src,
               std::vector<std::size_t>& offsets, std::vector<NodeId>& targets) {
    offsets.assign(n + 1, 0);
    for (const Edge& e : sorted) ++offsets[(by_src ? e.src : e.dst) + 1];
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    targets.resize(sorted.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const Edge& e : sorted) {
        if (by_src)
            targets[cursor[e.src]++] = e.dst;
        else
            targets[cursor[e.dst]++] = e.src;
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<std::uint64_t> declared_node_count(std::string_view comment) {
    const auto pos = comment.find("Nodes:");
    if (pos == std::string_view::npos) return std::nullopt;
    auto rest = trim(comment.substr(pos + 6));
    std::uint64_t n = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
    if (ec != std::errc{} || ptr == rest.data()) return std::nullopt;
    return n;
}

}  // namespace

DirectedGraph DirectedGraph::from_edges(std::size_t node_count, std::vector<Edge> edges,
                                        std::vector<ExternalId> external_ids) {
    if (node_count > std::numeric_limits<NodeId>::max())
        fail(ErrorCode::invalid_argument, "graph exceeds the 32-bit node index range");
    if (external_ids.empty()) {
        external_ids.resize(node_count);
        for (std::size_t i = 0; i < node_count; ++i) external_ids[i] = i;
    } else if (external_ids.size() != node_count) {
        fail(ErrorCode::invalid_argument, "external id table does not match node count");
    } else if (std::adjacent_find(external_ids.begin(), external_ids.end(), std::greater_equal<>{}) !=
               external_ids.end()) {
        fail(ErrorCode::invalid_argument, "external ids must be strictly increasing");
    }

    DirectedGraph g;
    for (const Edge& e : edges) {
        if (e.src >= node_count || e.dst >= node_count)
            fail(ErrorCode::out_of_range, "edge endpoint outside node range");
    }
    const auto loops = std::erase_if(edges, [](const Edge& e) { return e.src == e.dst; });
    g.stats_.self_loops = loops;
    std::sort(edges.begin(), edges.end());
    const auto before = edges.size();
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.stats_.duplicate_edges = before - edges.size();

    g.external_ids_ = std::move(external_ids);
    build_csr(node_count, edges, true, g.out_offsets_, g.out_targets_);
    build_csr(node_count, edges, false, g.in_offsets_, g.in_sources_);
    for (std::size_t v = 0; v < node_count; ++v) {
        std::sort(g.in_sources_.begin() + static_cast<std::ptrdiff_t>(g.in_offsets_[v]),
                  g.in_sources_.begin() + static_cast<std::ptrdiff_t>(g.in_offsets_[v + 1]));
    }

    std::uint64_t h = fnv_offset;
    fnv_mix(h, node_count);
    for (ExternalId id : g.external_ids_) fnv_mix(h, id);
    for (const Edge& e : edges) fnv_mix(h, (static_cast<std::uint64_t>(e.src) << 32) | e.dst);
    g.hash_ = h;
    return g;
}

void DirectedGraph::check_node(NodeId v) const {
    if (v >= node_count())
        fail(ErrorCode::out_of_range,
             "node index " + std::to_string(v) + " out of range (N=" + std::to_string(node_count()) + ")");
}

std::size_t DirectedGraph::out_degree(NodeId v) const {
    check_node(v);
    return out_offsets_[v + 1] - out_offsets_[v];
}

std::size_t DirectedGraph::in_degree(NodeId v) const {
    check_node(v);
    return in_offsets_[v + 1] - in_offsets_[v];
}

std::span<const NodeId> DirectedGraph::out_neighbors(NodeId v) const {
    check_node(v);
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
}

std::span<const NodeId> DirectedGraph::in_neighbors(NodeId v) const {
    check_node(v);
    return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

bool DirectedGraph::has_edge(NodeId i, NodeId j) const {
    check_node(j);
    const auto nbrs = out_neighbors(i);
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

ExternalId DirectedGraph::external_id(NodeId v) const {
    check_node(v);
    return external_ids_[v];
}

std::optional<NodeId> DirectedGraph::index_of(ExternalId id) const {
    auto it = std::lower_bound(external_ids_.begin(), external_ids_.end(), id);
    if (it == external_ids_.end() || *it != id) return std::nullopt;
    return static_cast<NodeId>(it - external_ids_.begin());
}

std::vector<Edge> DirectedGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (NodeId v = 0; v < node_count(); ++v) {
        for (NodeId w : out_neighbors(v)) out.push_back({v, w});
    }
    return out;
}

DirectedGraph DirectedGraph::transpose() const {
    auto es = edges();
    for (Edge& e : es) std::swap(e.src, e.dst);
    return from_edges(node_count(), std::move(es), external_ids_);
}

DirectedGraph parse_edge_list(std::string_view text) {
    std::vector<std::pair<ExternalId, ExternalId>> raw;
    std::optional<std::uint64_t> declared;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '#') {
            if (!declared) declared = declared_node_count(line);
            continue;
        }
        ExternalId ids[2];
        const char* p = line.data();
        const char* end = line.data() + line.size();
        for (int t = 0; t < 2; ++t) {
            while (p < end && (*p == ' ' || *p == '\t')) ++p;
            auto [next, ec] = std::from_chars(p, end, ids[t]);
            if (ec != std::errc{} || next == p || (next < end && *next != ' ' && *next != '\t'))
                fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": expected two non-negative integer ids");
            p = next;
        }
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        if (p != end)
            fail(ErrorCode::parse, "line " + std::to_string(line_no) + ": unexpected trailing token");
        raw.emplace_back(ids[0], ids[1]);
    }

    std::vector<ExternalId> ids;
    ids.reserve(raw.size() * 2);
    for (const auto& [a, b] : raw) {
        ids.push_back(a);
        ids.push_back(b);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (declared && *declared > ids.size() && (ids.empty() || ids.back() < *declared)) {
        ids.resize(*declared);
        for (std::uint64_t i = 0; i < *declared; ++i) ids[i] = i;
    }
    if (ids.empty()) fail(ErrorCode::parse, "edge list is empty");

    std::unordered_map<ExternalId, NodeId> index;
    index.reserve(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], static_cast<NodeId>(i));
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (const auto& [a, b] : raw) edges.push_back({index.at(a), index.at(b)});

    const auto n = ids.size();
    auto g = DirectedGraph::from_edges(n, std::move(edges), std::move(ids));
    if (declared) g.set_declared_nodes(*declared);
    return g;
}

DirectedGraph load_edge_list(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_edge_list(text);
}

DirectedGraph load_edge_list_file(const std::filesystem::path& path) {
    gzFile file = gzopen(path.c_str(), "rb");
    if (file == nullptr) fail(ErrorCode::io, "cannot open graph file: " + path.string());
    std::string text;
    char buf[1 << 16];
    int got = 0;
    while ((got = gzread(file, buf, sizeof buf)) > 0) text.append(buf, static_cast<std::size_t>(got));
    const bool read_error = got < 0;
    gzclose(file);
    if (read_error) fail(ErrorCode::io, "error reading graph file: " + path.string());
    try {
        return parse_edge_list(text);
    } catch (const Error& e) {
        fail(e.code(), path.string() + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const DirectedGraph& g) {
    out << "# Nodes: " << g.node_count() << " Edges: " << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << g.external_id(e.src) << ' ' << g.external_id(e.dst) << '\n';
}

Distribution degree_distribution(const DirectedGraph& g, Direction dir) {
    if (g.empty()) fail(ErrorCode::invalid_argument, "degree distribution of an empty graph");
    std::map<Distribution::Key, double> counts;
    for (NodeId v = 0; v < g.node_count(); ++v) counts[g.degree(v, dir)] += 1.0;
    return Distribution::from_weights(counts);
}

std::optional<double> follower_ratio(const DirectedGraph& g, NodeId v) {
    const auto out = g.out_degree(v);
    if (out == 0) return std::nullopt;
    return static_cast<double>(g.in_degree(v)) / static_cast<double>(out);
}

RatioAverage ratio_average(const DirectedGraph& g) {
    RatioAverage result;
    double sum = 0.0;
    std::size_t defined = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        if (auto r = follower_ratio(g, v)) {
            sum += *r;
            ++defined;
        } else {
            ++result.excluded;
        }
    }
    if (defined == 0) fail(ErrorCode::undefined_estimate, "ratio average undefined: every node has out-degree 0");
    result.value = sum / static_cast<double>(defined);
    return result;
}

std::size_t reciprocated_edge_count(const DirectedGraph& g) {
    std::size_t count = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        for (NodeId w : g.out_neighbors(v)) {
            if (g.has_edge(w, v)) ++count;
        }
    }
    return count;
}

double mutual_proportion(const DirectedGraph& g) {
    if (g.edge_count() == 0) fail(ErrorCode::invalid_argument, "mutual proportion of an edgeless graph");
    return static_cast<double>(reciprocated_edge_count(g)) / static_cast<double>(g.edge_count());
}

}  // namespace gwalk
