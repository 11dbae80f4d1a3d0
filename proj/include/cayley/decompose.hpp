#pragma once

#include "cayley/graph.hpp"

#include <cstdint>
#include <optional>

namespace cayley {

/// Greedy cluster merging. Starts from one cluster per edge and repeatedly
/// replaces three clusters that pairwise share exactly one vertex (three
/// distinct shared vertices) by their union. Accepts iff a single cluster
/// spanning g remains. Disconnected graphs are rejected.
///
/// With `shuffle_seed` set, the merge order is randomized; the answer must not
/// depend on it.
bool is_triangle_decomposable(const Graph& g, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// recognize_henneberg(g, e) succeeds. Throws EdgeNotInGraph.
bool is_henneberg_with_base(const Graph& g, Edge e);

} // namespace cayley
