#include "gwalk/trace_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "gwalk/error.hpp"

namespace gwalk {

namespace {

constexpr std::string_view magic = "gwalk-trace 1";

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

template <typename T>
T parse_number(const std::string& s, const std::string& what, int base = 10) {
    T value{};
    std::from_chars_result r{};
    if constexpr (std::is_floating_point_v<T>)
        r = std::from_chars(s.data(), s.data() + s.size(), value);
    else
        r = std::from_chars(s.data(), s.data() + s.size(), value, base);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size()) fail(ErrorCode::parse, "trace: bad " + what + " '" + s + "'");
    return value;
}

NodeId lookup(const DirectedGraph& g, ExternalId id) {
    auto v = g.index_of(id);
    if (!v) fail(ErrorCode::mismatch, "trace references node " + std::to_string(id) + " not in the graph");
    return *v;
}

}  // namespace

std::string format_real(double x) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, end);
}

void write_trace(std::ostream& out, const WalkSample& s, const DirectedGraph& g) {
    const auto& c = s.config;
    out << "# " << magic << '\n';
    out << "# method " << to_string(s.method) << '\n';
    out << "# budget " << c.budget << '\n';
    out << "# walk_prob " << format_real(c.walk_prob) << '\n';
    out << "# jump_weight " << format_real(c.jump_weight) << '\n';
    out << "# rng_seed " << c.rng_seed << '\n';
    out << "# seed_node ";
    if (c.seed_node)
        out << g.external_id(*c.seed_node) << '\n';
    else
        out << "uniform-random\n";
    out << "# start_node " << g.external_id(s.start) << '\n';
    out << "# graph_hash " << hex64(g.content_hash()) << '\n';
    for (std::size_t i = 0; i < s.trace.size(); ++i)
        out << i << ' ' << g.external_id(s.trace[i]) << ' ' << to_string(s.steps[i].kind) << '\n';
    for (const Edge& e : s.collected_edges) out << "E " << g.external_id(e.src) << ' ' << g.external_id(e.dst) << '\n';
}

void write_trace_file(const std::filesystem::path& path, const WalkSample& s, const DirectedGraph& g) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot write trace file: " + path.string());
    write_trace(out, s, g);
    if (!out) fail(ErrorCode::io, "error writing trace file: " + path.string());
}

WalkSample read_trace(std::istream& in, const DirectedGraph& g) {
    std::map<std::string, std::string> header;
    WalkSample s;
    std::string line;
    bool saw_magic = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string first;
        fields >> first;
        if (first == "#") {
            std::string key, value;
            fields >> key;
            std::getline(fields >> std::ws, value);
            if (key + " " + value == magic) saw_magic = true;
            else header[key] = value;
        } else if (first == "E") {
            std::string a, b;
            fields >> a >> b;
            s.collected_edges.push_back({lookup(g, parse_number<ExternalId>(a, "edge endpoint")),
                                         lookup(g, parse_number<ExternalId>(b, "edge endpoint"))});
        } else {
            std::string node, kind;
            fields >> node >> kind;
            if (parse_number<std::size_t>(first, "step index") != s.trace.size())
                fail(ErrorCode::parse, "trace: step index out of sequence at line " + std::to_string(line_no));
            s.trace.push_back(lookup(g, parse_number<ExternalId>(node, "node id")));
            s.steps.push_back({parse_step_kind(kind), 0});
        }
    }
    if (!saw_magic) fail(ErrorCode::parse, "not a gwalk trace file");
    auto field = [&](const std::string& key) -> const std::string& {
        auto it = header.find(key);
        if (it == header.end()) fail(ErrorCode::parse, "trace header lacks '" + key + "'");
        return it->second;
    };

    const auto recorded_hash = parse_number<std::uint64_t>(field("graph_hash"), "graph hash", 16);
    if (recorded_hash != g.content_hash())
        fail(ErrorCode::mismatch, "trace was recorded on a different graph (hash " + field("graph_hash") +
                                      ", graph has " + hex64(g.content_hash()) + ")");

    s.method = parse_method(field("method"));
    s.config.budget = parse_number<std::uint64_t>(field("budget"), "budget");
    s.config.walk_prob = parse_number<double>(field("walk_prob"), "walk_prob");
    s.config.jump_weight = parse_number<double>(field("jump_weight"), "jump_weight");
    s.config.rng_seed = parse_number<std::uint64_t>(field("rng_seed"), "rng_seed");
    if (field("seed_node") != "uniform-random")
        s.config.seed_node = lookup(g, parse_number<ExternalId>(field("seed_node"), "seed node"));
    s.start = lookup(g, parse_number<ExternalId>(field("start_node"), "start node"));
    if (s.trace.size() != s.config.budget) fail(ErrorCode::parse, "trace length does not match its budget");

    NodeId prev = s.start;
    for (std::size_t i = 0; i < s.trace.size(); ++i) {
        s.steps[i].from = prev;
        prev = s.trace[i];
    }
    return s;
}

WalkSample read_trace_file(const std::filesystem::path& path, const DirectedGraph& g) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io, "cannot open trace file: " + path.string());
    try {
        return read_trace(in, g);
    } catch (const Error& e) {
        fail(e.code(), path.string() + ": " + e.what());
    }
}

}  // namespace gwalk
