#pragma once

#include "cayley/graph.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace cayley {

struct WeightedEdge {
    VertexId u = 0;
    VertexId v = 0;
    double length = 0.0;
};

/// Distance constraint system (G, delta) with a base non-edge f such that
/// G + f is Henneberg-I from f. Immutable.
class Linkage {
public:
    /// Throws NotHennebergFromF, NonpositiveLength, plus the Graph errors.
    /// `labels` are the vertex names used for reporting (default: the ids).
    static Linkage load(std::size_t vertex_count, std::span<const WeightedEdge> edges, Edge base_nonedge,
        std::vector<std::int64_t> labels = {});

    const Graph& graph() const { return graph_; }
    Edge base_nonedge() const { return f_; }
    /// Canonical construction of graph() + f from f.
    const HennebergConstruction& construction() const { return construction_; }
    std::size_t step_count() const { return construction_.steps.size(); }

    /// Lengths indexed like graph().edges().
    const std::vector<double>& lengths() const { return lengths_; }
    /// Throws EdgeNotInGraph.
    double length(Edge e) const;
    double length(VertexId u, VertexId v) const { return length(Edge(u, v)); }

    /// The two lengths incident to the step's new vertex, toward base_pair.a
    /// and base_pair.b.
    std::array<double, 2> step_lengths(std::size_t k) const;

    /// Step k has equal incident lengths (the collinear-coincidence case).
    bool step_degenerate(std::size_t k) const { return degenerate_[k]; }
    bool has_degenerate_distances() const;

    const std::vector<std::int64_t>& labels() const { return labels_; }
    std::int64_t label(VertexId v) const { return labels_[static_cast<std::size_t>(v)]; }

    std::vector<WeightedEdge> weighted_edges() const;
    double total_length() const;

private:
    Graph graph_;
    Edge f_;
    HennebergConstruction construction_;
    std::vector<double> lengths_;
    std::vector<bool> degenerate_;
    std::vector<std::int64_t> labels_;
};

inline Linkage load_linkage(std::size_t vertex_count, std::span<const WeightedEdge> edges, Edge base_nonedge)
{
    return Linkage::load(vertex_count, edges, base_nonedge);
}

/// Variant 1 has the sum of the step's incident lengths on (u,w), variant 2
/// the absolute difference.
struct ExtremeLinkage {
    std::size_t step_index = 0;
    int variant = 1;
    Graph graph; // G + (u,w)
    Edge added;
    double added_length = 0.0;
};

struct ExtremeStatus {
    std::size_t step_index = 0;
    Edge base_pair;
    bool suppressed = false;
    Graph graph;                       // G + (u,w); empty when suppressed
    std::array<double, 2> lengths{};   // variant 1, variant 2

    bool defined() const { return !suppressed; }
    /// j in {1,2}. Requires defined().
    ExtremeLinkage variant(int j) const;
};

/// Combinatorial part only: is G + base_pair(k) wellconstrained?
/// Suppressed when base_pair is already an edge or closes a dependency.
bool extreme_defined(const Graph& g, Edge base_pair);

/// Throws StepOutOfRange.
ExtremeStatus extreme_status(const Linkage& l, std::size_t k);

/// Removes every rigid flap hinged on a single edge (a,b): a set of vertices
/// whose steps only use {a,b} and each other and that touch nothing else.
/// The flap is replaced by the edge with its own length. Throws
/// SubsystemUnrealizable when a flap cannot be realized on its hinge.
Linkage two_sum_reduce(const Linkage& l);

} // namespace cayley
