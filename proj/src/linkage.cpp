#include "cayley/linkage.hpp"

#include "cayley/error.hpp"
#include "cayley/realize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace cayley {

Linkage Linkage::load(
    std::size_t vertex_count, std::span<const WeightedEdge> edges, Edge base_nonedge, std::vector<std::int64_t> labels)
{
    Linkage l;
    std::vector<Edge> plain;
    plain.reserve(edges.size());
    for (const auto& e : edges) {
        plain.emplace_back(e.u, e.v);
    }
    l.graph_ = Graph(vertex_count, plain);
    l.lengths_.assign(edges.size(), 0.0);
    for (const auto& e : edges) {
        if (!std::isfinite(e.length) || e.length <= 0.0) {
            throw Error(ErrorCode::NonpositiveLength,
                "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") needs a positive length");
        }
        l.lengths_[*l.graph_.edge_index(Edge(e.u, e.v))] = e.length;
    }
    const Edge f = base_nonedge;
    if (f.a == f.b || f.a < 0 || static_cast<std::size_t>(f.b) >= vertex_count) {
        throw Error(ErrorCode::NotHennebergFromF, "base non-edge is not a pair of distinct vertices");
    }
    if (l.graph_.has_edge(f)) {
        throw Error(ErrorCode::NotHennebergFromF, "base non-edge is an edge of the graph");
    }
    auto c = recognize_simple_1dof(l.graph_, f);
    if (!c) {
        throw Error(ErrorCode::NotHennebergFromF, "graph plus base non-edge is not Henneberg-I from it");
    }
    l.f_ = f;
    l.construction_ = std::move(*c);
    l.degenerate_.resize(l.construction_.steps.size());
    for (std::size_t k = 0; k < l.construction_.steps.size(); ++k) {
        const auto r = l.step_lengths(k);
        l.degenerate_[k] = std::abs(r[0] - r[1]) <= 1e-12 * std::max(r[0], r[1]);
    }
    if (labels.empty()) {
        labels.resize(vertex_count);
        std::iota(labels.begin(), labels.end(), std::int64_t{0});
    } else if (labels.size() != vertex_count) {
        throw Error(ErrorCode::PreconditionViolated, "one label per vertex required");
    }
    l.labels_ = std::move(labels);
    return l;
}

double Linkage::length(Edge e) const
{
    auto i = graph_.edge_index(e);
    if (!i) {
        throw Error(ErrorCode::EdgeNotInGraph,
            "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ") has no length");
    }
    return lengths_[*i];
}

std::array<double, 2> Linkage::step_lengths(std::size_t k) const
{
    const auto& s = construction_.steps.at(k);
    return {length(s.new_vertex, s.base_pair.a), length(s.new_vertex, s.base_pair.b)};
}

bool Linkage::has_degenerate_distances() const
{
    return std::find(degenerate_.begin(), degenerate_.end(), true) != degenerate_.end();
}

std::vector<WeightedEdge> Linkage::weighted_edges() const
{
    std::vector<WeightedEdge> out;
    out.reserve(lengths_.size());
    for (std::size_t i = 0; i < lengths_.size(); ++i) {
        out.push_back({graph_.edges()[i].a, graph_.edges()[i].b, lengths_[i]});
    }
    return out;
}

double Linkage::total_length() const
{
    return std::accumulate(lengths_.begin(), lengths_.end(), 0.0);
}

ExtremeLinkage ExtremeStatus::variant(int j) const
{
    if (suppressed || (j != 1 && j != 2)) {
        throw Error(ErrorCode::PreconditionViolated, "variant of a suppressed extreme or bad variant index");
    }
    return {step_index, j, graph, base_pair, lengths[static_cast<std::size_t>(j - 1)]};
}

bool extreme_defined(const Graph& g, Edge base_pair)
{
    return !g.has_edge(base_pair) && stays_independent_with(g, base_pair);
}

ExtremeStatus extreme_status(const Linkage& l, std::size_t k)
{
    if (k >= l.step_count()) {
        throw Error(ErrorCode::StepOutOfRange,
            "step " + std::to_string(k) + " of " + std::to_string(l.step_count()));
    }
    ExtremeStatus st;
    st.step_index = k;
    st.base_pair = l.construction().steps[k].base_pair;
    st.suppressed = !extreme_defined(l.graph(), st.base_pair);
    if (!st.suppressed) {
        st.graph = l.graph().with_edge(st.base_pair);
        const auto r = l.step_lengths(k);
        st.lengths = {r[0] + r[1], std::abs(r[0] - r[1])};
    }
    return st;
}

namespace {

// Flap hinged on `hinge`, or empty.
std::vector<bool> find_flap(const Linkage& l, Edge hinge)
{
    const auto& g = l.graph();
    const std::size_t n = g.vertex_count();
    std::vector<bool> in(n, false);
    auto inside = [&](VertexId v) { return hinge.touches(v) || in[static_cast<std::size_t>(v)]; };
    for (const auto& s : l.construction().steps) {
        if (inside(s.base_pair.a) && inside(s.base_pair.b)) {
            in[static_cast<std::size_t>(s.new_vertex)] = true;
        }
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (!in[v]) {
                continue;
            }
            for (VertexId w : g.neighbors(static_cast<VertexId>(v))) {
                if (!inside(w)) {
                    in[v] = false;
                    changed = true;
                    break;
                }
            }
        }
    }
    return in;
}

bool flap_realizable(const Linkage& l, Edge hinge, const std::vector<bool>& in)
{
    std::vector<int> local(l.graph().vertex_count(), -1);
    int next = 0;
    local[static_cast<std::size_t>(hinge.a)] = next++;
    local[static_cast<std::size_t>(hinge.b)] = next++;
    HennebergConstruction c;
    c.base_edge = Edge(0, 1);
    for (const auto& s : l.construction().steps) {
        if (in[static_cast<std::size_t>(s.new_vertex)]) {
            local[static_cast<std::size_t>(s.new_vertex)] = next++;
        }
    }
    HennebergLinkage h;
    h.base_length = l.length(hinge);
    for (const auto& s : l.construction().steps) {
        if (!in[static_cast<std::size_t>(s.new_vertex)]) {
            continue;
        }
        auto id = [&](VertexId v) { return static_cast<VertexId>(local[static_cast<std::size_t>(v)]); };
        c.steps.push_back({id(s.new_vertex), Edge(id(s.base_pair.a), id(s.base_pair.b))});
        // Lengths follow the local base pair order.
        const Edge lp(id(s.base_pair.a), id(s.base_pair.b));
        const VertexId ga = lp.a == id(s.base_pair.a) ? s.base_pair.a : s.base_pair.b;
        const VertexId gb = ga == s.base_pair.a ? s.base_pair.b : s.base_pair.a;
        h.step_lengths.push_back({l.length(s.new_vertex, ga), l.length(s.new_vertex, gb)});
    }
    c.vertex_count = static_cast<std::size_t>(next);
    h.construction = std::move(c);
    return any_orientation_realizes(h, Tolerance{}, h.construction.steps.size());
}

Linkage drop_vertices(const Linkage& l, const std::vector<bool>& drop)
{
    const std::size_t n = l.graph().vertex_count();
    std::vector<int> id(n, -1);
    std::vector<std::int64_t> labels;
    int next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (!drop[v]) {
            id[v] = next++;
            labels.push_back(l.labels()[v]);
        }
    }
    std::vector<WeightedEdge> edges;
    for (const auto& e : l.weighted_edges()) {
        const int a = id[static_cast<std::size_t>(e.u)];
        const int b = id[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) {
            edges.push_back({a, b, e.length});
        }
    }
    const Edge f = l.base_nonedge();
    return Linkage::load(static_cast<std::size_t>(next), edges,
        Edge(id[static_cast<std::size_t>(f.a)], id[static_cast<std::size_t>(f.b)]), std::move(labels));
}

} // namespace

Linkage two_sum_reduce(const Linkage& l)
{
    Linkage current = l;
    for (bool reduced = true; reduced;) {
        reduced = false;
        for (const Edge& hinge : current.graph().edges()) {
            auto flap = find_flap(current, hinge);
            if (std::find(flap.begin(), flap.end(), true) == flap.end()) {
                continue;
            }
            if (!flap_realizable(current, hinge, flap)) {
                throw Error(ErrorCode::SubsystemUnrealizable,
                    "rigid part hinged on (" + std::to_string(current.label(hinge.a)) + ","
                        + std::to_string(current.label(hinge.b)) + ") cannot be realized");
            }
            current = drop_vertices(current, flap);
            reduced = true;
            break;
        }
    }
    return current;
}

} // namespace cayley
