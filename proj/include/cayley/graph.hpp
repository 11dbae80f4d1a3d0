#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace cayley {

using VertexId = int;

/// Unordered vertex pair, stored with a < b.
struct Edge {
    VertexId a = 0;
    VertexId b = 0;

    constexpr Edge() = default;
    constexpr Edge(VertexId u, VertexId v)
        : a(u < v ? u : v)
        , b(u < v ? v : u)
    {
    }

    constexpr bool touches(VertexId v) const { return a == v || b == v; }
    constexpr VertexId other(VertexId v) const { return v == a ? b : a; }

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on dense vertex ids [0, vertex_count).
/// Immutable once built; the edge list is kept sorted.
class Graph {
public:
    Graph() = default;

    /// Throws Error{SelfLoop | DuplicateEdge | VertexOutOfRange}.
    Graph(std::size_t vertex_count, std::span<const Edge> edges);
    Graph(std::size_t vertex_count, std::initializer_list<Edge> edges)
        : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(VertexId u, VertexId v) const;
    bool has_edge(Edge e) const { return has_edge(e.a, e.b); }
    std::optional<std::size_t> edge_index(Edge e) const;

    const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    std::size_t degree(VertexId v) const { return neighbors(v).size(); }

    Graph with_edge(Edge e) const;
    Graph without_edge(Edge e) const;

    /// Induced subgraph on `keep`; vertex i of the result is keep[i].
    Graph induced(std::span<const VertexId> keep) const;

    /// Removes the listed vertices. Returns the new graph and, for each new
    /// vertex, the id it had in this graph.
    std::pair<Graph, std::vector<VertexId>> without_vertices(std::span<const VertexId> drop) const;

    bool is_connected() const;

    friend bool operator==(const Graph& lhs, const Graph& rhs)
    {
        return lhs.n_ == rhs.n_ && lhs.edges_ == rhs.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<std::uint8_t> matrix_;
};

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges);

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t left, std::size_t right);
/// Triangular prism C3 x C2.
Graph prism_graph();
Graph path_graph(std::size_t n);

// ---------------------------------------------------------------------------
// Combinatorial rigidity

enum class RigidityStatus {
    Wellconstrained,
    Underconstrained,
    Overconstrained,
    WellOverconstrained,
    FlexibleWithDependence,
};

const char* to_string(RigidityStatus status) noexcept;

/// Result of running the (2,3) pebble game over all edges.
struct PebbleResult {
    std::size_t rank = 0;
    std::vector<bool> independent; // per edge, in Graph::edges() order
};

PebbleResult pebble_game(const Graph& g);

/// True iff no subgraph violates |E'| <= 2|V'| - 3.
bool is_independent(const Graph& g);

/// True iff g plus edge e is still independent (e must not be an edge of g).
bool stays_independent_with(const Graph& g, Edge e);

bool is_rigid(const Graph& g);

/// Requires at least two vertices.
///   independent, 2|V|-3 edges                -> Wellconstrained
///   independent, fewer edges                 -> Underconstrained
///   dependent and flexible                   -> FlexibleWithDependence
///   dependent, rigid, every edge redundant   -> Overconstrained
///   dependent, rigid, some edge critical     -> WellOverconstrained
RigidityStatus rigidity_status(const Graph& g);

// ---------------------------------------------------------------------------
// Henneberg-I constructions

struct ConstructionStep {
    VertexId new_vertex = 0;
    Edge base_pair;

    friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

struct HennebergConstruction {
    std::size_t vertex_count = 0;
    Edge base_edge;
    std::vector<ConstructionStep> steps;

    /// Throws Error{InvalidConstruction} when the step list is not a valid
    /// construction on vertex_count vertices.
    void validate() const;
};

/// Graph with base edge plus two edges per step. Throws InvalidConstruction.
Graph apply_construction(const HennebergConstruction& c);

/// Reverse peeling of degree-2 vertices not incident to f, lowest id first.
/// Returns the construction in build order, or nullopt if the residue is not
/// exactly the edge f. Throws EdgeNotInGraph if f is not an edge of h.
std::optional<HennebergConstruction> recognize_henneberg(const Graph& h, Edge f);

/// Same peeling, but f is a non-edge of g (the Simple 1-dof case).
std::optional<HennebergConstruction> recognize_simple_1dof(const Graph& g, Edge f);

/// All edges f of h for which recognize_henneberg(h, f) succeeds.
/// Throws NotWellconstrained.
std::vector<Edge> enumerate_base_edges(const Graph& h);

/// Exactly one vertex other than the endpoints of f has degree 2.
bool is_1path(const Graph& g, Edge f);

bool is_triangle_free(const Graph& g);

} // namespace cayley
