#include "cayley/error.hpp"
#include "cayley/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace cayley {

void HennebergConstruction::validate() const
{
    const auto n = vertex_count;
    auto in_range = [n](VertexId v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
    if (n < 2 || !in_range(base_edge.a) || !in_range(base_edge.b) || base_edge.a == base_edge.b) {
        throw Error(ErrorCode::InvalidConstruction, "bad base edge");
    }
    if (steps.size() != n - 2) {
        throw Error(ErrorCode::InvalidConstruction,
            "expected " + std::to_string(n - 2) + " steps, got " + std::to_string(steps.size()));
    }
    std::vector<bool> built(n, false);
    built[static_cast<std::size_t>(base_edge.a)] = true;
    built[static_cast<std::size_t>(base_edge.b)] = true;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const auto& s = steps[k];
        const std::string where = "step " + std::to_string(k);
        if (!in_range(s.new_vertex) || built[static_cast<std::size_t>(s.new_vertex)]) {
            throw Error(ErrorCode::InvalidConstruction, where + ": new vertex already placed or out of range");
        }
        const Edge p = s.base_pair;
        if (!in_range(p.a) || !in_range(p.b) || p.a == p.b
            || !built[static_cast<std::size_t>(p.a)] || !built[static_cast<std::size_t>(p.b)]) {
            throw Error(ErrorCode::InvalidConstruction, where + ": base pair not yet placed");
        }
        built[static_cast<std::size_t>(s.new_vertex)] = true;
    }
}

Graph apply_construction(const HennebergConstruction& c)
{
    c.validate();
    std::vector<Edge> edges{c.base_edge};
    for (const auto& s : c.steps) {
        edges.emplace_back(s.new_vertex, s.base_pair.a);
        edges.emplace_back(s.new_vertex, s.base_pair.b);
    }
    return Graph(c.vertex_count, edges);
}

std::optional<HennebergConstruction> recognize_henneberg(const Graph& h, Edge f)
{
    if (!h.has_edge(f)) {
        throw Error(ErrorCode::EdgeNotInGraph,
            "(" + std::to_string(f.a) + "," + std::to_string(f.b) + ") is not an edge");
    }
    const std::size_t n = h.vertex_count();
    if (h.edge_count() != 2 * n - 3) {
        return std::nullopt;
    }
    std::vector<std::size_t> deg(n);
    std::vector<bool> removed(n, false);
    std::set<VertexId> ready;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = h.degree(static_cast<VertexId>(v));
        if (deg[v] == 2 && !f.touches(static_cast<VertexId>(v))) {
            ready.insert(static_cast<VertexId>(v));
        }
    }
    std::vector<ConstructionStep> peeled;
    while (!ready.empty()) {
        const VertexId v = *ready.begin();
        ready.erase(ready.begin());
        std::vector<VertexId> live;
        for (VertexId w : h.neighbors(v)) {
            if (!removed[static_cast<std::size_t>(w)]) {
                live.push_back(w);
            }
        }
        peeled.push_back({v, Edge(live[0], live[1])});
        removed[static_cast<std::size_t>(v)] = true;
        for (VertexId w : live) {
            auto& d = deg[static_cast<std::size_t>(w)];
            --d;
            if (f.touches(w)) {
                continue;
            }
            if (d == 2) {
                ready.insert(w);
            } else {
                ready.erase(w);
            }
        }
    }
    if (peeled.size() != n - 2) {
        return std::nullopt;
    }
    HennebergConstruction c;
    c.vertex_count = n;
    c.base_edge = f;
    c.steps.assign(peeled.rbegin(), peeled.rend());
    return c;
}

std::optional<HennebergConstruction> recognize_simple_1dof(const Graph& g, Edge f)
{
    if (f.a == f.b || g.has_edge(f) || f.a < 0 || static_cast<std::size_t>(f.b) >= g.vertex_count()) {
        return std::nullopt;
    }
    return recognize_henneberg(g.with_edge(f), f);
}

std::vector<Edge> enumerate_base_edges(const Graph& h)
{
    if (h.vertex_count() < 2 || rigidity_status(h) != RigidityStatus::Wellconstrained) {
        throw Error(ErrorCode::NotWellconstrained, "graph is not wellconstrained");
    }
    std::vector<Edge> out;
    for (const Edge& e : h.edges()) {
        if (recognize_henneberg(h, e)) {
            out.push_back(e);
        }
    }
    return out;
}

} // namespace cayley
