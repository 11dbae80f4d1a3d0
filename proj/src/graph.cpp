#include "cayley/graph.hpp"

#include "cayley/error.hpp"

#include <algorithm>
#include <string>

namespace cayley {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::InvalidConstruction: return "InvalidConstruction";
    case ErrorCode::EdgeNotInGraph: return "EdgeNotInGraph";
    case ErrorCode::NotWellconstrained: return "NotWellconstrained";
    case ErrorCode::NotHennebergFromF: return "NotHennebergFromF";
    case ErrorCode::NonpositiveLength: return "NonpositiveLength";
    case ErrorCode::StepOutOfRange: return "StepOutOfRange";
    case ErrorCode::SubsystemUnrealizable: return "SubsystemUnrealizable";
    case ErrorCode::CoincidentCenters: return "CoincidentCenters";
    case ErrorCode::DegenerateStep: return "DegenerateStep";
    case ErrorCode::TooManyOrientations: return "TooManyOrientations";
    case ErrorCode::EmptyFeasibility: return "EmptyFeasibility";
    case ErrorCode::NotSimple1DofHenneberg: return "NotSimple1DofHenneberg";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotHenneberg: return "NotHenneberg";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : n_(vertex_count)
    , adjacency_(vertex_count)
    , matrix_(vertex_count * vertex_count, 0)
{
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.a == e.b) {
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(e.a));
        }
        if (e.a < 0 || static_cast<std::size_t>(e.b) >= n_) {
            throw Error(ErrorCode::VertexOutOfRange,
                "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") outside [0,"
                    + std::to_string(n_) + ")");
        }
        auto& cell = matrix_[static_cast<std::size_t>(e.a) * n_ + static_cast<std::size_t>(e.b)];
        if (cell != 0) {
            throw Error(ErrorCode::DuplicateEdge,
                "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") listed twice");
        }
        cell = 1;
        matrix_[static_cast<std::size_t>(e.b) * n_ + static_cast<std::size_t>(e.a)] = 1;
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    for (const Edge& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.a)].push_back(e.b);
        adjacency_[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    for (auto& row : adjacency_) {
        std::sort(row.begin(), row.end());
    }
}

bool Graph::has_edge(VertexId u, VertexId v) const
{
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_) {
        return false;
    }
    return matrix_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] != 0;
}

std::optional<std::size_t> Graph::edge_index(Edge e) const
{
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::with_edge(Edge e) const
{
    std::vector<Edge> edges = edges_;
    edges.push_back(e);
    return Graph(n_, edges);
}

Graph Graph::without_edge(Edge e) const
{
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    bool found = false;
    for (const Edge& x : edges_) {
        if (x == e) {
            found = true;
        } else {
            edges.push_back(x);
        }
    }
    if (!found) {
        throw Error(ErrorCode::EdgeNotInGraph, "cannot remove a missing edge");
    }
    return Graph(n_, edges);
}

Graph Graph::induced(std::span<const VertexId> keep) const
{
    std::vector<int> remap(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        remap[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (const Edge& e : edges_) {
        const int a = remap[static_cast<std::size_t>(e.a)];
        const int b = remap[static_cast<std::size_t>(e.b)];
        if (a >= 0 && b >= 0) {
            edges.emplace_back(a, b);
        }
    }
    return Graph(keep.size(), edges);
}

std::pair<Graph, std::vector<VertexId>> Graph::without_vertices(std::span<const VertexId> drop) const
{
    std::vector<bool> dropped(n_, false);
    for (VertexId v : drop) {
        dropped[static_cast<std::size_t>(v)] = true;
    }
    std::vector<VertexId> keep;
    for (std::size_t v = 0; v < n_; ++v) {
        if (!dropped[v]) {
            keep.push_back(static_cast<VertexId>(v));
        }
    }
    Graph g = induced(keep);
    return {std::move(g), std::move(keep)};
}

bool Graph::is_connected() const
{
    if (n_ == 0) {
        return true;
    }
    std::vector<bool> seen(n_, false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges)
{
    return Graph(vertex_count, edges);
}

Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    }
    return Graph(n, edges);
}

Graph complete_bipartite(std::size_t left, std::size_t right)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < left; ++i) {
        for (std::size_t j = 0; j < right; ++j) {
            edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(left + j));
        }
    }
    return Graph(left + right, edges);
}

Graph prism_graph()
{
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(i + 1));
    }
    return Graph(n, edges);
}

bool is_1path(const Graph& g, Edge f)
{
    int count = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto id = static_cast<VertexId>(v);
        if (!f.touches(id) && g.degree(id) == 2) {
            ++count;
        }
    }
    return count == 1;
}

bool is_triangle_free(const Graph& g)
{
    for (const Edge& e : g.edges()) {
        for (VertexId w : g.neighbors(e.a)) {
            if (w != e.b && g.has_edge(w, e.b)) {
                return false;
            }
        }
    }
    return true;
}

} // namespace cayley
