#pragma once

#include "cayley/graph.hpp"

#include <optional>
#include <vector>

namespace cayley {

enum class MinorPattern {
    K33,
    Prism,
    K5,
    K6,
};

const char* to_string(MinorPattern p) noexcept;

/// The pattern graph: K33 has parts {0,1,2},{3,4,5}; the prism is prism_graph().
Graph pattern_graph(MinorPattern p);

/// Branch sets, indexed by pattern vertex, in host vertex ids.
using MinorModel = std::vector<std::vector<VertexId>>;

/// Branch-set search. The pattern must be connected, have at most 6
/// vertices and minimum degree 3 (all of the fixed patterns qualify);
/// otherwise throws PreconditionViolated.
std::optional<MinorModel> find_minor_model(const Graph& host, const Graph& pattern);

bool has_minor(const Graph& host, MinorPattern pattern);
bool has_minor(const Graph& host, const Graph& pattern);

/// K6 minor; implies both K33 and prism minors.
bool k6_family_check(const Graph& host);

} // namespace cayley
