#include "cayley/error.hpp"
#include "cayley/graph.hpp"

#include <vector>

namespace cayley {

namespace {

// (2,3) pebble game. Every vertex starts with two pebbles; an accepted edge is
// covered by one pebble from its tail and oriented tail -> head.
class PebbleGame {
public:
    explicit PebbleGame(std::size_t n)
        : pebbles_(n, 2)
        , out_(n)
        , mark_(n, 0)
    {
    }

    bool try_insert(Edge e)
    {
        const VertexId u = e.a;
        const VertexId v = e.b;
        while (pebbles_[idx(u)] < 2 && gather(u, v)) { }
        while (pebbles_[idx(v)] < 2 && gather(v, u)) { }
        if (pebbles_[idx(u)] + pebbles_[idx(v)] < 4) {
            return false;
        }
        --pebbles_[idx(u)];
        out_[idx(u)].push_back(v);
        return true;
    }

private:
    static std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

    // Moves one free pebble to `root` along a directed path avoiding `pinned`.
    bool gather(VertexId root, VertexId pinned)
    {
        ++epoch_;
        std::vector<VertexId> parent(pebbles_.size(), -1);
        std::vector<VertexId> stack{root};
        mark_[idx(root)] = epoch_;
        mark_[idx(pinned)] = epoch_;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : out_[idx(x)]) {
                if (mark_[idx(y)] == epoch_) {
                    continue;
                }
                mark_[idx(y)] = epoch_;
                parent[idx(y)] = x;
                if (pebbles_[idx(y)] > 0) {
                    reverse_path(root, y, parent);
                    return true;
                }
                stack.push_back(y);
            }
        }
        return false;
    }

    void reverse_path(VertexId root, VertexId found, const std::vector<VertexId>& parent)
    {
        --pebbles_[idx(found)];
        VertexId y = found;
        while (y != root) {
            VertexId x = parent[idx(y)];
            auto& row = out_[idx(x)];
            for (auto it = row.begin(); it != row.end(); ++it) {
                if (*it == y) {
                    row.erase(it);
                    break;
                }
            }
            out_[idx(y)].push_back(x);
            y = x;
        }
        ++pebbles_[idx(root)];
    }

    std::vector<int> pebbles_;
    std::vector<std::vector<VertexId>> out_;
    std::vector<unsigned> mark_;
    unsigned epoch_ = 0;
};

std::size_t rank_without(const Graph& g, std::size_t skip)
{
    PebbleGame game(g.vertex_count());
    std::size_t rank = 0;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i != skip && game.try_insert(edges[i])) {
            ++rank;
        }
    }
    return rank;
}

} // namespace

const char* to_string(RigidityStatus status) noexcept
{
    switch (status) {
    case RigidityStatus::Wellconstrained: return "Wellconstrained";
    case RigidityStatus::Underconstrained: return "Underconstrained";
    case RigidityStatus::Overconstrained: return "Overconstrained";
    case RigidityStatus::WellOverconstrained: return "WellOverconstrained";
    case RigidityStatus::FlexibleWithDependence: return "FlexibleWithDependence";
    }
    return "Unknown";
}

PebbleResult pebble_game(const Graph& g)
{
    PebbleGame game(g.vertex_count());
    PebbleResult result;
    result.independent.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        const bool ok = game.try_insert(e);
        result.independent.push_back(ok);
        if (ok) {
            ++result.rank;
        }
    }
    return result;
}

bool is_independent(const Graph& g)
{
    return pebble_game(g).rank == g.edge_count();
}

bool stays_independent_with(const Graph& g, Edge e)
{
    PebbleGame game(g.vertex_count());
    for (const Edge& x : g.edges()) {
        if (!game.try_insert(x)) {
            return false;
        }
    }
    return game.try_insert(e);
}

bool is_rigid(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n < 2) {
        return true;
    }
    return pebble_game(g).rank == 2 * n - 3;
}

RigidityStatus rigidity_status(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n < 2) {
        throw Error(ErrorCode::PreconditionViolated, "rigidity status needs at least two vertices");
    }
    const std::size_t full = 2 * n - 3;
    const std::size_t rank = pebble_game(g).rank;
    if (rank == g.edge_count()) {
        return rank == full ? RigidityStatus::Wellconstrained : RigidityStatus::Underconstrained;
    }
    if (rank < full) {
        return RigidityStatus::FlexibleWithDependence;
    }
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (rank_without(g, i) < rank) {
            return RigidityStatus::WellOverconstrained;
        }
    }
    return RigidityStatus::Overconstrained;
}

} // namespace cayley
