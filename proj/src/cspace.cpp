#include "cayley/cspace.hpp"

#include "cayley/error.hpp"
#include "cayley/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace cayley {

namespace {

bool refuses_analytic(const Linkage& l)
{
    for (std::size_t k = 0; k < l.step_count(); ++k) {
        if (l.step_degenerate(k) && l.construction().steps[k].base_pair != l.base_nonedge()) {
            return true;
        }
    }
    return false;
}

std::optional<HennebergConstruction> henneberg_base_for(const Graph& x, Edge preferred)
{
    if (auto c = recognize_henneberg(x, preferred)) {
        return c;
    }
    for (const Edge& e : x.edges()) {
        if (e != preferred) {
            if (auto c = recognize_henneberg(x, e)) {
                return c;
            }
        }
    }
    return std::nullopt;
}

// Steps of G + f needed to place u and w, in construction order.
std::vector<std::size_t> ancestor_steps(const Linkage& l, Edge pair)
{
    const auto& steps = l.construction().steps;
    std::vector<int> step_of(l.graph().vertex_count(), -1);
    for (std::size_t k = 0; k < steps.size(); ++k) {
        step_of[static_cast<std::size_t>(steps[k].new_vertex)] = static_cast<int>(k);
    }
    std::vector<bool> need(steps.size(), false);
    std::vector<VertexId> stack{pair.a, pair.b};
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        const int k = step_of[static_cast<std::size_t>(v)];
        if (k < 0 || need[static_cast<std::size_t>(k)]) {
            continue;
        }
        need[static_cast<std::size_t>(k)] = true;
        stack.push_back(steps[static_cast<std::size_t>(k)].base_pair.a);
        stack.push_back(steps[static_cast<std::size_t>(k)].base_pair.b);
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        if (need[k]) {
            out.push_back(k);
        }
    }
    return out;
}

// Values of delta*(f) at which some placement of u, w (through their
// ancestor steps) has d(u, w) = target.
std::vector<std::pair<double, OrientationSeq>> fallback_roots(
    const Linkage& l, Edge pair, double target, const CspaceOptions& opts)
{
    const auto chain = ancestor_steps(l, pair);
    if (chain.size() > opts.step_cap) {
        throw Error(ErrorCode::TooManyOrientations, "too many steps for the fallback search");
    }
    HennebergLinkage h = completed(l, 1.0);
    const auto& steps = h.construction.steps;
    const double total = l.total_length();
    const double lo = 1e-9 * total;
    const double hi = total;
    const std::size_t n = std::max<std::size_t>(opts.fallback_grid, 3);
    const double scale = std::max(1.0, target);
    std::vector<std::pair<double, OrientationSeq>> roots;

    for (std::uint64_t index = 0; index < (std::uint64_t{1} << chain.size()); ++index) {
        OrientationSeq sigma(steps.size());
        for (std::size_t i = 0; i < chain.size(); ++i) {
            sigma.set(chain[i], ((index >> i) & 1U) == 0);
        }
        std::vector<Point> pts(h.construction.vertex_count);
        auto eval = [&](double x) -> std::optional<double> {
            pts[static_cast<std::size_t>(h.construction.base_edge.b)] = {x, 0.0};
            for (std::size_t k : chain) {
                const auto& s = steps[k];
                std::optional<Intersection> hit;
                try {
                    hit = circle_intersect(pts[static_cast<std::size_t>(s.base_pair.a)], h.step_lengths[k][0],
                        pts[static_cast<std::size_t>(s.base_pair.b)], h.step_lengths[k][1], sigma.plus(k), opts.tol);
                } catch (const Error&) {
                    return std::nullopt;
                }
                if (!hit) {
                    return std::nullopt;
                }
                pts[static_cast<std::size_t>(s.new_vertex)] = hit->point;
            }
            const Point a = pts[static_cast<std::size_t>(pair.a)];
            const Point b = pts[static_cast<std::size_t>(pair.b)];
            return std::hypot(a.x - b.x, a.y - b.y) - target;
        };
        std::vector<double> xs(n);
        std::vector<std::optional<double>> gs(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
            gs[i] = eval(xs[i]);
        }
        auto push = [&](double x) { roots.emplace_back(x, sigma); };
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const auto& g0 = gs[i];
            const auto& g1 = gs[i + 1];
            if (g0 && *g0 == 0.0) {
                push(xs[i]);
                continue;
            }
            if (g0 && g1 && (*g0 < 0.0) != (*g1 < 0.0) && *g1 != 0.0) {
                double a = xs[i];
                double b = xs[i + 1];
                double ga = *g0;
                for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, b); ++it) {
                    const double m = 0.5 * (a + b);
                    const auto gm = eval(m);
                    if (!gm) {
                        break;
                    }
                    if ((*gm < 0.0) == (ga < 0.0)) {
                        a = m;
                        ga = *gm;
                    } else {
                        b = m;
                    }
                }
                push(0.5 * (a + b));
            } else if (g0.has_value() != g1.has_value()) {
                // Edge of the prefix's realizable range: keep it if g vanishes there.
                double in = g0 ? xs[i] : xs[i + 1];
                double out = g0 ? xs[i + 1] : xs[i];
                for (int it = 0; it < 200 && std::abs(in - out) > 1e-15 * std::max(1.0, in); ++it) {
                    const double m = 0.5 * (in + out);
                    (eval(m) ? in : out) = m;
                }
                if (auto ge = eval(in); ge && std::abs(*ge) <= 1e-7 * scale) {
                    push(in);
                }
            }
        }
        // Tangential roots: local minima of |g| without a sign change.
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (!gs[i - 1] || !gs[i] || !gs[i + 1]) {
                continue;
            }
            const double a0 = std::abs(*gs[i - 1]);
            const double a1 = std::abs(*gs[i]);
            const double a2 = std::abs(*gs[i + 1]);
            const bool same_sign = (*gs[i - 1] < 0.0) == (*gs[i] < 0.0) && (*gs[i] < 0.0) == (*gs[i + 1] < 0.0);
            if (!same_sign || a1 > a0 || a1 > a2 || a1 == 0.0) {
                continue;
            }
            double a = xs[i - 1];
            double b = xs[i + 1];
            const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
            auto absg = [&](double x) {
                const auto g = eval(x);
                return g ? std::abs(*g) : std::numeric_limits<double>::infinity();
            };
            for (int it = 0; it < 200 && b - a > 1e-14 * std::max(1.0, b); ++it) {
                const double c = b - phi * (b - a);
                const double d = a + phi * (b - a);
                if (absg(c) < absg(d)) {
                    b = d;
                } else {
                    a = c;
                }
            }
            const double x = 0.5 * (a + b);
            if (absg(x) <= 1e-9 * scale) {
                push(x);
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    std::vector<std::pair<double, OrientationSeq>> unique;
    for (auto& r : roots) {
        if (unique.empty() || r.first - unique.back().first > 1e-9 * std::max(1.0, r.first)) {
            unique.push_back(std::move(r));
        }
    }
    return unique;
}

struct Probe {
    HennebergLinkage h;
    OrientationSeq sigma;
    Tolerance tol;

    bool operator()(double x)
    {
        if (!(x > 0.0)) {
            return false;
        }
        h.base_length = x;
        try {
            return rc_realize(h, sigma, tol).has_value();
        } catch (const Error& e) {
            if (e.code() == ErrorCode::DegenerateStep) {
                return false;
            }
            throw;
        }
    }
};

} // namespace

CandidateSet candidate_endpoints(const Linkage& l, const CspaceOptions& opts)
{
    if (refuses_analytic(l)) {
        throw Error(ErrorCode::PreconditionViolated, "equal incident lengths on a step off the base non-edge");
    }
    const Edge f = l.base_nonedge();
    CandidateSet cs;
    for (std::size_t k = 0; k < l.step_count(); ++k) {
        const ExtremeStatus st = extreme_status(l, k);
        if (st.suppressed) {
            cs.suppressed_steps.push_back(k);
            continue;
        }
        const auto& step = l.construction().steps[k];
        Provenance base;
        base.step = k;
        base.triple = {step.new_vertex, step.base_pair.a, step.base_pair.b};
        if (st.base_pair == f) {
            for (int j = 1; j <= 2; ++j) {
                Provenance p = base;
                p.variant = j;
                cs.items.push_back({st.lengths[static_cast<std::size_t>(j - 1)], p});
            }
            continue;
        }
        const auto c = henneberg_base_for(st.graph, st.base_pair);
        for (int j = 1; j <= 2; ++j) {
            const double dj = st.lengths[static_cast<std::size_t>(j - 1)];
            Provenance p = base;
            p.variant = j;
            if (c) {
                const auto hx = with_lengths(*c, [&](VertexId u, VertexId v) {
                    return Edge(u, v) == st.base_pair ? dj : l.length(u, v);
                });
                const auto all = realize_all_orientations(hx, opts.tol, opts.step_cap);
                for (std::size_t m = 0; m < all.size(); ++m) {
                    p.orientation = all[m].first;
                    p.realization = m;
                    cs.items.push_back({measured_distance(all[m].second, f.a, f.b), p});
                }
            } else {
                cs.oracle_fallback_used = true;
                p.oracle_fallback = true;
                const auto roots = fallback_roots(l, st.base_pair, dj, opts);
                for (std::size_t m = 0; m < roots.size(); ++m) {
                    p.orientation = roots[m].second;
                    p.realization = m;
                    cs.items.push_back({roots[m].first, p});
                }
            }
        }
    }
    std::stable_sort(cs.items.begin(), cs.items.end(),
        [](const CandidateEndpoint& a, const CandidateEndpoint& b) { return a.value < b.value; });
    return cs;
}

Assembly assemble_intervals(const Linkage& l, const CandidateSet& cands, const CspaceOptions& opts)
{
    std::vector<const CandidateEndpoint*> values;
    for (const auto& c : cands.items) {
        if (c.value < 0.0) {
            continue;
        }
        if (!values.empty() && c.value - values.back()->value <= 1e-9 * std::max(1.0, c.value)) {
            continue;
        }
        values.push_back(&c);
    }
    const std::size_t s = l.step_count();
    if (s > opts.step_cap) {
        throw Error(ErrorCode::TooManyOrientations,
            std::to_string(s) + " steps exceed the cap of " + std::to_string(opts.step_cap));
    }
    Assembly out;
    Probe probe{completed(l, 1.0), OrientationSeq(s), opts.tol};
    std::vector<Interval> all;
    const std::size_t m = values.size();
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << s); ++index) {
        probe.sigma = OrientationSeq::from_index(s, index);
        if (m == 0) {
            if (probe(0.5 * l.total_length())) {
                out.incomplete = true;
            }
            continue;
        }
        std::vector<bool> at(m);
        std::vector<bool> gap(m, false);
        for (std::size_t i = 0; i < m; ++i) {
            at[i] = probe(values[i]->value);
            if (i + 1 < m) {
                gap[i] = probe(0.5 * (values[i]->value + values[i + 1]->value));
            }
        }
        const double first = values.front()->value;
        const double last = values.back()->value;
        if ((first > 0.0 && probe(0.5 * first)) || probe(last + 1.0)) {
            out.incomplete = true;
        }
        for (std::size_t i = 0; i < m; ++i) {
            if (!(at[i] || gap[i])) {
                continue;
            }
            std::size_t j = i;
            while (j + 1 < m && gap[j]) {
                ++j;
            }
            Interval piece{values[i]->value, values[j]->value, values[i]->provenance, values[j]->provenance};
            out.pieces.push_back({probe.sigma, piece});
            all.push_back(std::move(piece));
            i = j;
        }
    }
    out.intervals = IntervalSet::normalized(std::move(all), opts.tol.abs_tol);
    return out;
}

CspaceResult compute_config_space(const Linkage& l, const CspaceOptions& opts)
{
    CspaceResult r;
    r.reduced = two_sum_reduce(l);
    if (!refuses_analytic(r.reduced)) {
        r.candidates = candidate_endpoints(r.reduced, opts);
        Assembly a = assemble_intervals(r.reduced, r.candidates, opts);
        if (!a.incomplete) {
            r.intervals = std::move(a.intervals);
            r.pieces = std::move(a.pieces);
            r.method = "extremes";
            return r;
        }
    }
    r.intervals = oracle_config_space(r.reduced, 1401, opts.tol, opts.step_cap);
    r.method = "oracle";
    return r;
}

} // namespace cayley
