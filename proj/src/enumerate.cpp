#include "cayley/enumerate.hpp"

#include "cayley/error.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

namespace cayley {

namespace {

std::vector<int> refine_colors(const Graph& g, std::optional<Edge> root)
{
    const std::size_t n = g.vertex_count();
    std::vector<int> color(n, 0);
    if (root) {
        color[static_cast<std::size_t>(root->a)] = 1;
        color[static_cast<std::size_t>(root->b)] = 1;
    }
    std::size_t classes = 0;
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> nb;
            for (VertexId w : g.neighbors(static_cast<VertexId>(v))) {
                nb.push_back(color[static_cast<std::size_t>(w)]);
            }
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (std::size_t v = 0; v < n; ++v) {
            color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        }
        if (distinct.size() == classes) {
            return color;
        }
        classes = distinct.size();
    }
}

} // namespace

std::string canonical_form(const Graph& g, std::optional<Edge> root)
{
    const std::size_t n = g.vertex_count();
    if (n > 11) {
        throw Error(ErrorCode::PreconditionViolated, "canonical form supports at most 11 vertices");
    }
    const auto color = refine_colors(g, root);
    std::vector<VertexId> order(n);
    for (std::size_t v = 0; v < n; ++v) {
        order[v] = static_cast<VertexId>(v);
    }
    std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
        return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
    });
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && color[static_cast<std::size_t>(order[j])] == color[static_cast<std::size_t>(order[i])]) {
            ++j;
        }
        blocks.emplace_back(i, j);
        i = j;
    }
    std::uint64_t best = ~std::uint64_t{0};
    auto encode = [&] {
        std::uint64_t bits = 0;
        int pos = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j, ++pos) {
                if (g.has_edge(order[i], order[j])) {
                    bits |= std::uint64_t{1} << (63 - pos);
                }
            }
        }
        best = std::min(best, bits);
    };
    auto permute = [&](auto&& self, std::size_t block) -> void {
        if (block == blocks.size()) {
            encode();
            return;
        }
        auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[block].first);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[block].second);
        std::sort(first, last);
        do {
            self(self, block + 1);
        } while (std::next_permutation(first, last));
    };
    permute(permute, 0);
    std::string key = std::to_string(n) + ":";
    for (VertexId v : order) {
        key += std::to_string(color[static_cast<std::size_t>(v)]) + ",";
    }
    key += ":" + std::to_string(best);
    return key;
}

namespace {

Graph extend(const Graph& h, Edge pair)
{
    std::vector<Edge> edges = h.edges();
    const auto v = static_cast<VertexId>(h.vertex_count());
    edges.emplace_back(v, pair.a);
    edges.emplace_back(v, pair.b);
    return Graph(h.vertex_count() + 1, edges);
}

} // namespace

std::vector<Graph> enumerate_simple_1dof(std::size_t max_vertices, bool triangle_free)
{
    const Edge f(0, 1);
    std::vector<Graph> level{Graph(2, {f})};
    std::vector<Graph> out;
    for (std::size_t n = 2; n < max_vertices; ++n) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& h : level) {
            for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) {
                for (VertexId w = u + 1; w < static_cast<VertexId>(n); ++w) {
                    const Edge pair(u, w);
                    if (triangle_free && pair != f && h.has_edge(pair)) {
                        continue;
                    }
                    Graph x = extend(h, pair);
                    if (seen.insert(canonical_form(x, f)).second) {
                        next.push_back(std::move(x));
                    }
                }
            }
        }
        for (const Graph& x : next) {
            out.push_back(x.without_edge(f));
        }
        level = std::move(next);
    }
    return out;
}

std::vector<Graph> enumerate_henneberg(std::size_t max_vertices)
{
    std::vector<Graph> level{Graph(2, {Edge(0, 1)})};
    std::vector<Graph> out;
    for (std::size_t n = 2; n < max_vertices; ++n) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& h : level) {
            for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) {
                for (VertexId w = u + 1; w < static_cast<VertexId>(n); ++w) {
                    Graph x = extend(h, Edge(u, w));
                    if (seen.insert(canonical_form(x)).second) {
                        next.push_back(std::move(x));
                    }
                }
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

} // namespace cayley
