#include "fixtures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

namespace fixtures {

using cayley::ConstructionStep;
using cayley::WeightedEdge;

namespace {

Linkage make(std::size_t n, std::initializer_list<WeightedEdge> edges)
{
    std::vector<WeightedEdge> list(edges);
    return Linkage::load(n, list, Edge(0, 1));
}

struct Builder {
    std::size_t n = 0;
    std::vector<ConstructionStep> steps;

    VertexId add(VertexId a, VertexId b)
    {
        const auto v = static_cast<VertexId>(n++);
        steps.push_back({v, Edge(a, b)});
        return v;
    }

    HennebergConstruction done() const { return {n, Edge(0, 1), steps}; }
};

/// Strip of triangles on base (a,b): each new vertex attaches to the two
/// previous ones. Returns the last vertex.
VertexId triangle_strip(Builder& b, VertexId x, VertexId y, std::size_t count)
{
    VertexId p = x;
    VertexId q = y;
    for (std::size_t i = 0; i < count; ++i) {
        const VertexId v = b.add(p, q);
        p = q;
        q = v;
    }
    return q;
}

/// Seven-vertex block on base edge (x,y) with a prism minor. Returns its last vertex.
VertexId prism_block(Builder& b, VertexId x, VertexId y)
{
    const VertexId p = b.add(x, y);
    const VertexId q = b.add(x, y);
    const VertexId r = b.add(x, p);
    const VertexId s = b.add(y, q);
    return b.add(r, s);
}

} // namespace

Linkage tri3()
{
    return make(3, {{0, 2, 3.0}, {1, 2, 4.0}});
}

Linkage tri3_equal()
{
    return make(3, {{0, 2, 3.0}, {1, 2, 3.0}});
}

Linkage quad5()
{
    return make(5, {{0, 2, 7.0}, {1, 2, 7.0}, {0, 3, 6.0}, {1, 3, 8.0}, {2, 4, 4.5}, {3, 4, 0.5}});
}

HennebergConstruction construction(std::size_t n, std::initializer_list<std::array<VertexId, 3>> steps)
{
    HennebergConstruction c{n, Edge(0, 1), {}};
    for (const auto& s : steps) {
        c.steps.push_back({s[0], Edge(s[1], s[2])});
    }
    c.validate();
    return c;
}

HennebergConstruction ste7_construction()
{
    return construction(7, {{2, 0, 1}, {3, 0, 1}, {4, 0, 2}, {5, 1, 3}, {6, 4, 5}});
}

HennebergConstruction fig4_construction()
{
    return construction(7, {{2, 0, 1}, {3, 0, 1}, {4, 2, 3}, {5, 0, 1}, {6, 4, 5}});
}

HennebergConstruction fig8e_construction()
{
    return construction(7, {{2, 0, 1}, {3, 0, 1}, {4, 2, 3}, {5, 2, 3}, {6, 4, 5}});
}

HennebergConstruction fig8f_construction()
{
    return construction(7, {{2, 0, 1}, {3, 0, 1}, {4, 2, 3}, {5, 1, 4}, {6, 3, 5}});
}

HennebergConstruction m3_construction()
{
    return construction(7, {{2, 0, 1}, {3, 0, 1}, {4, 0, 1}, {5, 2, 3}, {6, 4, 5}});
}

HennebergConstruction triangle_free_counter()
{
    return construction(14,
        {{2, 0, 1}, {3, 0, 2}, {4, 0, 2}, {5, 3, 4}, {6, 0, 2}, {7, 5, 6}, {8, 1, 2}, {9, 1, 2}, {10, 1, 8},
            {11, 2, 9}, {12, 10, 11}, {13, 7, 12}});
}

Graph counter_block1()
{
    const std::vector<VertexId> keep{0, 2, 3, 4, 5, 6, 7};
    return without_base(triangle_free_counter()).induced(keep);
}

Graph counter_block2()
{
    const std::vector<VertexId> keep{1, 2, 8, 9, 10, 11, 12};
    return without_base(triangle_free_counter()).induced(keep);
}

TriCounter general_tri_counter(std::size_t m)
{
    Builder b{2, {}};
    const VertexId v3 = b.add(0, 1);
    // Block on (v1, v3), grown from a triangle so that it contracts to K_m.
    const std::size_t block_start = b.n;
    std::vector<VertexId> reps{0, v3, b.add(0, v3)};
    for (std::size_t k = 3; k < m; ++k) {
        VertexId w = b.add(reps[0], reps[1]);
        for (std::size_t i = 2; i < reps.size(); ++i) {
            w = b.add(w, reps[i]);
        }
        reps.push_back(w);
    }
    const VertexId last1 = reps.back();
    const std::size_t block_end = b.n;
    const VertexId last2 = prism_block(b, 1, v3);
    b.add(last1, last2);

    TriCounter out{b.done(), {}};
    std::vector<VertexId> keep{0, v3};
    for (std::size_t v = block_start; v < block_end; ++v) {
        keep.push_back(static_cast<VertexId>(v));
    }
    out.block = without_base(out.construction).induced(keep);
    return out;
}

Graph one_path_counter()
{
    std::vector<Edge> edges;
    for (VertexId hub : {2, 3}) {
        for (VertexId leaf : {0, 1, 4, 5}) {
            edges.emplace_back(hub, leaf);
        }
    }
    const std::vector<Edge> pairs{{0, 1}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 3}, {4, 5}};
    VertexId v = 6;
    for (const Edge& p : pairs) {
        edges.emplace_back(v, p.a);
        edges.emplace_back(v, p.b);
        ++v;
    }
    return Graph(13, edges);
}

HennebergConstruction good_rcc()
{
    Builder b{2, {}};
    const VertexId v3 = b.add(0, 1);
    const VertexId last1 = triangle_strip(b, 0, v3, 12);
    const VertexId last2 = triangle_strip(b, 1, v3, 11);
    b.add(last1, last2);
    return b.done();
}

Graph without_base(const HennebergConstruction& c)
{
    return cayley::apply_construction(c).without_edge(c.base_edge);
}

Linkage linkage_from_points(const Graph& g, Edge f, const std::vector<std::array<double, 2>>& pts)
{
    std::vector<WeightedEdge> list;
    for (const Edge& e : g.edges()) {
        const auto& p = pts[static_cast<std::size_t>(e.a)];
        const auto& q = pts[static_cast<std::size_t>(e.b)];
        list.push_back({e.a, e.b, std::hypot(p[0] - q[0], p[1] - q[1])});
    }
    return Linkage::load(g.vertex_count(), list, f);
}

Linkage random_linkage(std::mt19937_64& rng, std::size_t n)
{
    Builder b{2, {}};
    while (b.n < n) {
        std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(b.n) - 1);
        VertexId x = pick(rng);
        VertexId y = pick(rng);
        while (y == x) {
            y = pick(rng);
        }
        b.add(x, y);
    }
    std::uniform_real_distribution<double> coord(0.0, 10.0);
    std::vector<std::array<double, 2>> pts(n);
    for (auto& p : pts) {
        p = {coord(rng), coord(rng)};
    }
    return linkage_from_points(without_base(b.done()), Edge(0, 1), pts);
}

// ---------------------------------------------------------------------------

namespace {

bool subset_counts_ok(std::size_t n, const std::vector<Edge>& edges)
{
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const int k = std::popcount(mask);
        if (k < 2) {
            continue;
        }
        int inside = 0;
        for (const Edge& e : edges) {
            if ((mask >> e.a & 1u) && (mask >> e.b & 1u)) {
                ++inside;
            }
        }
        if (inside > 2 * k - 3) {
            return false;
        }
    }
    return true;
}

std::size_t counting_rank(const Graph& g)
{
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        kept.push_back(e);
        if (!subset_counts_ok(g.vertex_count(), kept)) {
            kept.pop_back();
        }
    }
    return kept.size();
}

} // namespace

bool counting_independent(const Graph& g)
{
    return subset_counts_ok(g.vertex_count(), g.edges());
}

bool counting_rigid(const Graph& g)
{
    const std::size_t n = g.vertex_count();
    if (n < 2) {
        return true;
    }
    return counting_rank(g) == 2 * n - 3;
}

namespace {

using Rows = std::vector<std::uint32_t>;

bool contains_pattern(const Rows& host, const Graph& pattern)
{
    std::vector<int> perm(host.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const Edge& e : pattern.edges()) {
            const auto a = static_cast<std::size_t>(perm[static_cast<std::size_t>(e.a)]);
            const auto b = static_cast<std::size_t>(perm[static_cast<std::size_t>(e.b)]);
            if (!(host[a] >> b & 1u)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::size_t edge_total(const Rows& r)
{
    std::size_t t = 0;
    for (auto row : r) {
        t += static_cast<std::size_t>(std::popcount(row));
    }
    return t / 2;
}

Rows drop_vertex(const Rows& r, std::size_t v)
{
    Rows out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i == v) {
            continue;
        }
        std::uint32_t row = 0;
        std::size_t j2 = 0;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (j == v) {
                continue;
            }
            if (r[i] >> j & 1u) {
                row |= 1u << j2;
            }
            ++j2;
        }
        out.push_back(row);
    }
    return out;
}

Rows contract(Rows r, std::size_t a, std::size_t b)
{
    const std::uint32_t merged = (r[a] | r[b]) & ~(1u << a) & ~(1u << b);
    r[a] = merged;
    for (std::size_t j = 0; j < r.size(); ++j) {
        if (merged >> j & 1u) {
            r[j] |= 1u << a;
        }
    }
    return drop_vertex(r, b);
}

struct MinorSearch {
    const Graph& pattern;
    std::map<Rows, bool> memo;

    bool run(const Rows& r)
    {
        const std::size_t k = pattern.vertex_count();
        if (r.size() < k || edge_total(r) < pattern.edge_count()) {
            return false;
        }
        if (auto it = memo.find(r); it != memo.end()) {
            return it->second;
        }
        bool found = false;
        if (r.size() == k) {
            found = contains_pattern(r, pattern);
        } else {
            for (std::size_t v = 0; v < r.size() && !found; ++v) {
                found = run(drop_vertex(r, v));
            }
            for (std::size_t a = 0; a < r.size() && !found; ++a) {
                for (std::size_t b = a + 1; b < r.size() && !found; ++b) {
                    if (r[a] >> b & 1u) {
                        found = run(contract(r, a, b));
                    }
                }
            }
        }
        memo.emplace(r, found);
        return found;
    }
};

} // namespace

bool naive_has_minor(const Graph& host, const Graph& pattern)
{
    Rows r(host.vertex_count(), 0);
    for (const Edge& e : host.edges()) {
        r[static_cast<std::size_t>(e.a)] |= 1u << e.b;
        r[static_cast<std::size_t>(e.b)] |= 1u << e.a;
    }
    MinorSearch s{pattern, {}};
    return s.run(r);
}

double cayley_menger4(const double d2[4][4])
{
    long double m[5][5];
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            if (i == 0 || j == 0) {
                m[i][j] = (i == j) ? 0.0L : 1.0L;
            } else {
                m[i][j] = d2[i - 1][j - 1];
            }
        }
    }
    long double det = 1.0L;
    for (int c = 0; c < 5; ++c) {
        int p = c;
        for (int r = c + 1; r < 5; ++r) {
            if (std::fabs(m[r][c]) > std::fabs(m[p][c])) {
                p = r;
            }
        }
        if (m[p][c] == 0.0L) {
            return 0.0;
        }
        if (p != c) {
            for (int j = 0; j < 5; ++j) {
                std::swap(m[p][j], m[c][j]);
            }
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < 5; ++r) {
            const long double factor = m[r][c] / m[c][c];
            for (int j = c; j < 5; ++j) {
                m[r][j] -= factor * m[c][j];
            }
        }
    }
    return static_cast<double>(det);
}

} // namespace fixtures
