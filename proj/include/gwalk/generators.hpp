#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gwalk/graph.hpp"

namespace gwalk {

/// Recipe for a synthetic graph. Text form, as accepted by the CLI:
///
///   er(n=100,p=0.05,seed=7)          directed Erdos-Renyi G(n, p)
///   ring(n=10)                       directed cycle 0->1->...->n-1->0
///   complete(n=4)                    every ordered pair connected
///   union(complete(n=3),ring(n=5))   disjoint union, ids offset in order
///   sym(er(n=20,p=0.3,seed=1))       symmetrized component
struct GenSpec {
    enum class Family { erdos_renyi_directed, ring, complete_bidirected, union_of, symmetrized };

    Family family = Family::ring;
    std::uint64_t n = 1;
    double p = 0.0;
    std::uint64_t rng_seed = 0;
    std::vector<GenSpec> components;

    static GenSpec erdos_renyi(std::uint64_t n, double p, std::uint64_t seed) {
        return {Family::erdos_renyi_directed, n, p, seed, {}};
    }
    static GenSpec ring_of(std::uint64_t n) { return {Family::ring, n, 0.0, 0, {}}; }
    static GenSpec complete(std::uint64_t n) { return {Family::complete_bidirected, n, 0.0, 0, {}}; }
    static GenSpec disjoint_union(std::vector<GenSpec> parts) {
        return {Family::union_of, 0, 0.0, 0, std::move(parts)};
    }
    static GenSpec symmetrized_of(GenSpec inner) { return {Family::symmetrized, 0, 0.0, 0, {std::move(inner)}}; }
};

GenSpec parse_gen_spec(std::string_view text);
/// Canonical text form; parse_gen_spec(to_string(s)) reproduces s.
std::string to_string(const GenSpec& spec);

/// Same spec, same graph.
DirectedGraph generate(const GenSpec& spec);

/// Adds (j -> i) for every (i -> j). Node set and ids unchanged.
DirectedGraph symmetrize(const DirectedGraph& g);

/// Disjoint union. Ids of each part are shifted past the previous parts.
DirectedGraph disjoint_union(const std::vector<DirectedGraph>& parts);

}  // namespace gwalk
