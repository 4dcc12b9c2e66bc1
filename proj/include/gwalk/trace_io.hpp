#pragma once

#include <filesystem>
#include <iosfwd>

#include "gwalk/graph.hpp"
#include "gwalk/samplers.hpp"

namespace gwalk {

// Trace file layout (node ids are external ids):
//
//   # gwalk-trace 1
//   # method mhrw
//   # budget 4
//   # walk_prob 0.85
//   # jump_weight 10
//   # rng_seed 42
//   # seed_node uniform-random        (or an id)
//   # start_node 7
//   # graph_hash 9c1f0e3a5b2d4c61
//   0 8 walk
//   1 8 rejection
//   2 3 jump
//   3 5 walk
//   E 7 8
//   E 3 5
//
// Reals are written in shortest round-trip form, so output is identical
// across platforms for a fixed seed.

void write_trace(std::ostream& out, const WalkSample& s, const DirectedGraph& g);
void write_trace_file(const std::filesystem::path& path, const WalkSample& s, const DirectedGraph& g);

/// Throws `mismatch` when the trace was recorded on a different graph.
WalkSample read_trace(std::istream& in, const DirectedGraph& g);
WalkSample read_trace_file(const std::filesystem::path& path, const DirectedGraph& g);

std::string format_real(double x);

}  // namespace gwalk
