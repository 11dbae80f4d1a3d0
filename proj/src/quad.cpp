#include "cayley/cspace.hpp"

#include "cayley/error.hpp"

#include <algorithm>
#include <cmath>

namespace cayley {

namespace {

// Apex of the triangle on base (0,0)-(base,0) with side `a` to the origin and
// `b` to the other end, upper half plane; slacks clamped at zero.
Point apex(double a, double b, double base)
{
    const double x = (a * a + base * base - b * b) / (2.0 * base);
    const double s1 = std::max(0.0, a + b - base);
    const double s2 = std::max(0.0, a - b + base);
    const double s3 = std::max(0.0, -a + b + base);
    return {x, std::sqrt((a + b + base) * s1 * s2 * s3) / (2.0 * base)};
}

struct Critical {
    double e = 0.0;
    double f = 0.0;
    bool branch[2] = {false, false};
};

// f is extremal along the motion exactly when E0 or E1 lies on line F0F1.
std::vector<Critical> critical_points(const QuadMap& q, const Interval& domain, double tol)
{
    std::vector<Critical> out;
    struct Side {
        double on_line_f0, on_line_f1, off_f0, off_f1;
    };
    const Side sides[2] = {
        {q.f0_e0, q.f1_e0, q.f0_e1, q.f1_e1},
        {q.f0_e1, q.f1_e1, q.f0_e0, q.f1_e0},
    };
    for (const Side& s : sides) {
        for (double fc : {std::abs(s.on_line_f0 - s.on_line_f1), s.on_line_f0 + s.on_line_f1}) {
            if (fc <= tol) {
                continue;
            }
            if (fc < std::abs(s.off_f0 - s.off_f1) - tol || fc > s.off_f0 + s.off_f1 + tol) {
                continue;
            }
            const double xl = (s.on_line_f0 * s.on_line_f0 + fc * fc - s.on_line_f1 * s.on_line_f1) / (2.0 * fc);
            const Point other = apex(s.off_f0, s.off_f1, fc);
            const double e = std::hypot(xl - other.x, other.y);
            if (e < domain.lo - tol || e > domain.hi + tol) {
                continue;
            }
            Critical c;
            c.e = std::clamp(e, domain.lo, domain.hi);
            c.f = fc;
            const auto br = quad_branches(q, c.e);
            const double d0 = std::abs(br[0] - fc);
            const double d1 = std::abs(br[1] - fc);
            const double slack = 1e-9 * std::max(1.0, fc);
            c.branch[0] = d0 <= std::min(d0, d1) + slack;
            c.branch[1] = d1 <= std::min(d0, d1) + slack;
            out.push_back(c);
        }
    }
    return out;
}

Linkage sublinkage(const Linkage& l, const std::vector<VertexId>& drop, Edge f_old)
{
    const std::size_t n = l.graph().vertex_count();
    std::vector<int> id(n, 0);
    for (VertexId v : drop) {
        id[static_cast<std::size_t>(v)] = -1;
    }
    std::vector<std::int64_t> labels;
    int next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        if (id[v] == 0) {
            id[v] = next++;
            labels.push_back(l.labels()[v]);
        } else {
            id[v] = -1;
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
    return Linkage::load(static_cast<std::size_t>(next), edges,
        Edge(id[static_cast<std::size_t>(f_old.a)], id[static_cast<std::size_t>(f_old.b)]), std::move(labels));
}

std::optional<IntervalSet> chain(const Linkage& l, const Tolerance& tol)
{
    const Graph& g = l.graph();
    const Edge f = l.base_nonedge();
    std::vector<VertexId> common;
    for (VertexId v : g.neighbors(f.a)) {
        if (g.has_edge(v, f.b)) {
            common.push_back(v);
        }
    }
    if (g.vertex_count() == 3 && common.size() == 1) {
        const double a = l.length(common[0], f.a);
        const double b = l.length(common[0], f.b);
        IntervalSet seed = IntervalSet::normalized({Interval{std::abs(a - b), a + b, {}, {}}}, 0.0);
        return seed;
    }
    if (common.size() != 2) {
        return std::nullopt;
    }
    const VertexId u1 = common[0];
    const VertexId u2 = common[1];
    const bool short_a = g.degree(f.a) == 2;
    const bool short_b = g.degree(f.b) == 2;
    std::vector<VertexId> drop;
    if (short_a) {
        drop.push_back(f.a);
    }
    if (short_b) {
        drop.push_back(f.b);
    }
    if (drop.empty() || g.has_edge(u1, u2)) {
        return std::nullopt;
    }
    std::optional<IntervalSet> inner;
    try {
        inner = chain(sublinkage(l, drop, Edge(u1, u2)), tol);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotHennebergFromF) {
            return std::nullopt;
        }
        throw;
    }
    if (!inner || inner->empty()) {
        return inner;
    }
    const QuadMap q{l.length(f.a, u1), l.length(f.b, u1), l.length(f.a, u2), l.length(f.b, u2)};
    try {
        return quad_diagonal_map(q, *inner, tol);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::EmptyFeasibility) {
            return IntervalSet{};
        }
        throw;
    }
}

} // namespace

Interval quad_domain(const QuadMap& q)
{
    Interval d;
    d.lo = std::max(std::abs(q.f0_e0 - q.f0_e1), std::abs(q.f1_e0 - q.f1_e1));
    d.hi = std::min(q.f0_e0 + q.f0_e1, q.f1_e0 + q.f1_e1);
    return d;
}

std::array<double, 2> quad_branches(const QuadMap& q, double e)
{
    const double base = std::max(e, 1e-12 * std::max({q.f0_e0, q.f1_e0, q.f0_e1, q.f1_e1}));
    const Point p0 = apex(q.f0_e0, q.f0_e1, base);
    const Point p1 = apex(q.f1_e0, q.f1_e1, base);
    return {std::hypot(p0.x - p1.x, p0.y - p1.y), std::hypot(p0.x - p1.x, p0.y + p1.y)};
}

IntervalSet quad_diagonal_map(const QuadMap& q, const IntervalSet& input, const Tolerance& tol)
{
    const Interval domain = quad_domain(q);
    const auto crit = critical_points(q, domain, tol.abs_tol);
    std::vector<Interval> items;
    bool feasible = false;
    for (const Interval& in : input.intervals()) {
        double l = std::max(in.lo, domain.lo);
        double r = std::min(in.hi, domain.hi);
        if (l > r + tol.abs_tol) {
            continue;
        }
        if (l > r) {
            l = r = std::clamp(0.5 * (l + r), domain.lo, domain.hi);
        }
        feasible = true;
        const auto at_l = quad_branches(q, l);
        const auto at_r = quad_branches(q, r);
        for (std::size_t b = 0; b < 2; ++b) {
            double lo = std::min(at_l[b], at_r[b]);
            double hi = std::max(at_l[b], at_r[b]);
            for (const Critical& c : crit) {
                if (c.branch[b] && c.e >= l - tol.abs_tol && c.e <= r + tol.abs_tol) {
                    lo = std::min(lo, c.f);
                    hi = std::max(hi, c.f);
                }
            }
            items.push_back({lo, hi, {}, {}});
        }
    }
    if (!feasible) {
        throw Error(ErrorCode::EmptyFeasibility, "no input diagonal value closes both triangles");
    }
    return IntervalSet::normalized(std::move(items), tol.abs_tol);
}

std::optional<IntervalSet> qdim_config_space(const Linkage& l, const Tolerance& tol)
{
    if (!is_triangle_free(l.graph()) || !is_1path(l.graph(), l.base_nonedge())) {
        return std::nullopt;
    }
    return chain(l, tol);
}

} // namespace cayley
