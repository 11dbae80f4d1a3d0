#pragma once

#include "cayley/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cayley {

/// Isomorphism-invariant key. With `root`, only isomorphisms mapping the root
/// pair onto itself (as a set) are allowed. Intended for |V| <= 11.
std::string canonical_form(const Graph& g, std::optional<Edge> root = std::nullopt);

/// Simple 1-dof Henneberg-I graphs with base non-edge (0,1), on 3..max_vertices
/// vertices, one per isomorphism class of the pair (G, f). With
/// `triangle_free`, only graphs without a 3-clique are kept.
std::vector<Graph> enumerate_simple_1dof(std::size_t max_vertices, bool triangle_free);

/// Henneberg-I graphs on 3..max_vertices vertices up to isomorphism.
std::vector<Graph> enumerate_henneberg(std::size_t max_vertices);

} // namespace cayley
