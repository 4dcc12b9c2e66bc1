#include "gwalk/generators.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "gwalk/error.hpp"
#include "gwalk/rng.hpp"

namespace gwalk {

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    GenSpec parse() {
        GenSpec spec = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) error("unexpected trailing input");
        return spec;
    }

private:
    GenSpec parse_spec() {
        const auto name = identifier();
        expect('(');
        GenSpec spec;
        if (name == "union") {
            spec.family = GenSpec::Family::union_of;
            spec.components.push_back(parse_spec());
            while (accept(',')) spec.components.push_back(parse_spec());
            expect(')');
            return spec;
        }
        if (name == "sym" || name == "symmetrize") {
            spec.family = GenSpec::Family::symmetrized;
            spec.components.push_back(parse_spec());
            expect(')');
            return spec;
        }
        if (name == "er" || name == "erdos_renyi_directed")
            spec.family = GenSpec::Family::erdos_renyi_directed;
        else if (name == "ring")
            spec.family = GenSpec::Family::ring;
        else if (name == "complete" || name == "complete_bidirected")
            spec.family = GenSpec::Family::complete_bidirected;
        else
            error("unknown graph family '" + std::string(name) + "'");

        bool have_n = false;
        if (!accept(')')) {
            do {
                const auto key = identifier();
                expect('=');
                const auto value = token();
                if (key == "n") {
                    spec.n = number<std::uint64_t>(value);
                    have_n = true;
                } else if (key == "p") {
                    spec.p = number<double>(value);
                } else if (key == "seed") {
                    spec.rng_seed = number<std::uint64_t>(value);
                } else {
                    error("unknown parameter '" + std::string(key) + "'");
                }
            } while (accept(','));
            expect(')');
        }
        if (!have_n) error("missing parameter n");
        return spec;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }

    std::string_view identifier() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) error("expected a name");
        return text_.substr(start, pos_ - start);
    }

    std::string_view token() {
        skip_ws();
        const auto start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' &&
               !std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_) error("expected a value");
        return text_.substr(start, pos_ - start);
    }

    template <typename T>
    T number(std::string_view s) {
        T value{};
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size()) error("bad number '" + std::string(s) + "'");
        return value;
    }

    [[noreturn]] void error(const std::string& what) const {
        fail(ErrorCode::parse, "graph spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void validate(const GenSpec& spec) {
    switch (spec.family) {
    case GenSpec::Family::union_of:
    case GenSpec::Family::symmetrized:
        if (spec.components.empty()) fail(ErrorCode::invalid_argument, "composite graph spec has no components");
        if (spec.family == GenSpec::Family::symmetrized && spec.components.size() != 1)
            fail(ErrorCode::invalid_argument, "sym() takes exactly one component");
        break;
    default:
        if (spec.n < 1) fail(ErrorCode::invalid_argument, "graph spec requires n >= 1");
        if (!(spec.p >= 0.0 && spec.p <= 1.0)) fail(ErrorCode::invalid_argument, "edge probability must lie in [0, 1]");
        break;
    }
}

}  // namespace

GenSpec parse_gen_spec(std::string_view text) {
    auto spec = SpecParser(text).parse();
    validate(spec);
    return spec;
}

std::string to_string(const GenSpec& spec) {
    std::ostringstream out;
    switch (spec.family) {
    case GenSpec::Family::erdos_renyi_directed: {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, spec.p);
        out << "er(n=" << spec.n << ",p=" << std::string_view(buf, static_cast<std::size_t>(end - buf))
            << ",seed=" << spec.rng_seed << ')';
        break;
    }
    case GenSpec::Family::ring:
        out << "ring(n=" << spec.n << ')';
        break;
    case GenSpec::Family::complete_bidirected:
        out << "complete(n=" << spec.n << ')';
        break;
    case GenSpec::Family::union_of:
    case GenSpec::Family::symmetrized:
        out << (spec.family == GenSpec::Family::union_of ? "union(" : "sym(");
        for (std::size_t i = 0; i < spec.components.size(); ++i) {
            if (i) out << ',';
            out << to_string(spec.components[i]);
        }
        out << ')';
        break;
    }
    return out.str();
}

DirectedGraph generate(const GenSpec& spec) {
    validate(spec);
    std::vector<Edge> edges;
    const auto n = spec.n;
    switch (spec.family) {
    case GenSpec::Family::erdos_renyi_directed: {
        Rng rng(spec.rng_seed);
        for (std::uint64_t i = 0; i < n; ++i) {
            for (std::uint64_t j = 0; j < n; ++j) {
                if (i != j && rng.bernoulli(spec.p))
                    edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
            }
        }
        break;
    }
    case GenSpec::Family::ring:
        if (n > 1) {
            for (std::uint64_t i = 0; i < n; ++i)
                edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>((i + 1) % n)});
        }
        break;
    case GenSpec::Family::complete_bidirected:
        for (std::uint64_t i = 0; i < n; ++i) {
            for (std::uint64_t j = 0; j < n; ++j) {
                if (i != j) edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
            }
        }
        break;
    case GenSpec::Family::union_of: {
        std::vector<DirectedGraph> parts;
        parts.reserve(spec.components.size());
        for (const auto& c : spec.components) parts.push_back(generate(c));
        return disjoint_union(parts);
    }
    case GenSpec::Family::symmetrized:
        return symmetrize(generate(spec.components.front()));
    }
    return DirectedGraph::from_edges(n, std::move(edges));
}

DirectedGraph symmetrize(const DirectedGraph& g) {
    auto edges = g.edges();
    const auto original = edges.size();
    edges.reserve(2 * original);
    for (std::size_t i = 0; i < original; ++i) edges.push_back({edges[i].dst, edges[i].src});
    return DirectedGraph::from_edges(g.node_count(), std::move(edges), g.external_ids());
}

DirectedGraph disjoint_union(const std::vector<DirectedGraph>& parts) {
    std::vector<Edge> edges;
    std::size_t offset = 0;
    for (const auto& part : parts) {
        for (const Edge& e : part.edges())
            edges.push_back({static_cast<NodeId>(e.src + offset), static_cast<NodeId>(e.dst + offset)});
        offset += part.node_count();
    }
    return DirectedGraph::from_edges(offset, std::move(edges));
}

}  // namespace gwalk
