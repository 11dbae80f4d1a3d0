// Acceptance run: one PASS/FAIL line per criterion, details indented below it.

#include "fixtures.hpp"

#include "cayley/classify.hpp"
#include "cayley/cspace.hpp"
#include "cayley/enumerate.hpp"
#include "cayley/error.hpp"
#include "cayley/minors.hpp"
#include "cayley/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace cayley;

namespace {

// Pinned tolerances and limits.
constexpr double kTriTol = 1e-12;
constexpr double kClosedFormTol = 1e-9;
constexpr double kOracleTol = 1e-6;
constexpr std::size_t kOracleGrid = 1401;
constexpr double kQdimTol = 1e-9;
constexpr double kEdgeTol = 1e-9;
constexpr double kCollinearTol = 1e-7;

constexpr double kLimitC1 = 1e-3;
constexpr double kLimitC2 = 1.0;
constexpr double kLimitC3 = 300.0;
constexpr double kLimitC4 = 10.0;
constexpr double kLimitC5 = 120.0;
constexpr double kLimitC6 = 120.0;
constexpr double kLimitC7 = 60.0;
constexpr double kLimitC8 = 30.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = false;
    std::vector<std::string> notes;
};

std::string fmt(const char* f, double x)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

int failures = 0;

void run(int id, const char* title, double limit, const std::function<Outcome()>& body)
{
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double t = seconds_since(t0);
    const bool in_time = t < limit;
    const bool pass = o.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("%s %d %s (%.3f s, limit %g s)\n", pass ? "PASS" : "FAIL", id, title, t, limit);
    if (!in_time) {
        std::printf("    over the time limit\n");
    }
    for (const auto& n : o.notes) {
        std::printf("    %s\n", n.c_str());
    }
    std::fflush(stdout);
}

std::vector<std::array<double, 2>> random_points(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> coord(0.0, 10.0);
    std::vector<std::array<double, 2>> pts(n);
    for (auto& p : pts) {
        p = {coord(rng), coord(rng)};
    }
    return pts;
}

/// Endpoints against bisection boundaries, grid membership against the
/// realizability profile.
bool oracle_equivalent(const Linkage& l, std::string& why)
{
    const IntervalSet phi = config_space(l);
    const auto range = default_sweep_range(l);
    const SweepProfile p = sweep(l, range.lo, range.hi, kOracleGrid);
    const IntervalSet oracle = profile_intervals(p, true);
    const double diff = max_bound_difference(phi, oracle);
    if (!(diff < kOracleTol)) {
        why = "endpoint discrepancy " + fmt("%.3g", diff);
        return false;
    }
    for (std::size_t i = 0; i < p.grid.size(); ++i) {
        const double x = p.grid[i];
        if (phi.distance_to_bound(x) <= kOracleTol) {
            continue;
        }
        if (p.realizable[i] != phi.contains(x)) {
            why = "grid point " + fmt("%.12g", x) + " disagrees";
            return false;
        }
    }
    return true;
}

} // namespace

int main()
{
    run(1, "triangle base case: config_space(TRI3) = [1, 7]", kLimitC1, [] {
        Outcome o;
        const Linkage t = fixtures::tri3();
        IntervalSet r = config_space(t);
        std::vector<double> times;
        for (int i = 0; i < 21; ++i) {
            const auto t0 = Clock::now();
            r = config_space(t);
            times.push_back(seconds_since(t0));
        }
        std::sort(times.begin(), times.end());
        o.pass = r.size() == 1 && std::abs(r.intervals()[0].lo - 1.0) <= kTriTol
            && std::abs(r.intervals()[0].hi - 7.0) <= kTriTol && times[10] < kLimitC1;
        if (r.size() == 1) {
            o.notes.push_back("interval [" + fmt("%.17g", r.intervals()[0].lo) + ", " + fmt("%.17g", r.intervals()[0].hi) + "]");
        }
        o.notes.push_back("median single call " + fmt("%.1f us", times[10] * 1e6));
        return o;
    });

    run(2, "QUAD5 closed forms among candidate endpoints", kLimitC2, [] {
        Outcome o;
        const Linkage q = fixtures::quad5();
        const double low = 0.4 * std::sqrt(565.0 - 360.0 * std::sqrt(2.0));
        const double high = 0.4 * std::sqrt(565.0 + 360.0 * std::sqrt(2.0));
        const double mid = std::sqrt(6214.0 - 90.0 * std::sqrt(17.0 * 209.0)) / 8.0;
        const double other = std::sqrt(6214.0 + 6.0 * std::sqrt(17.0 * 209.0)) / 8.0;
        const CandidateSet c = candidate_endpoints(q);
        auto nearest = [&](double x) {
            double best = 1e300;
            for (const auto& item : c.items) {
                best = std::min(best, std::abs(item.value - x));
            }
            return best;
        };
        o.pass = true;
        for (auto [name, x] : {std::pair{"(2/5)sqrt(565-360sqrt2)", low}, std::pair{"(2/5)sqrt(565+360sqrt2)", high},
                 std::pair{"(1/8)sqrt(6214-90sqrt3553)", mid}}) {
            const double d = nearest(x);
            o.pass = o.pass && d <= kClosedFormTol;
            o.notes.push_back(std::string(name) + " = " + fmt("%.12f", x) + ", nearest candidate off by " + fmt("%.2e", d));
        }
        const IntervalSet phi = config_space(q);
        o.notes.push_back("recorded: (1/8)sqrt(6214+6sqrt3553) = " + fmt("%.12f", other) + "; nearest candidate off by "
            + fmt("%.3g", nearest(other)) + "; in config space: " + (phi.contains(other, kClosedFormTol) ? "yes" : "no")
            + "; realizable: " + (realizable_at(q, other) ? "yes" : "no"));
        std::string iv;
        for (const auto& i : phi.intervals()) {
            iv += "[" + fmt("%.12f", i.lo) + ", " + fmt("%.12f", i.hi) + "] ";
        }
        o.notes.push_back("config space " + iv);
        return o;
    });

    run(3, "oracle equivalence: QUAD5 and 200 random linkages", kLimitC3, [] {
        Outcome o;
        std::string why;
        o.pass = true;
        if (!oracle_equivalent(fixtures::quad5(), why)) {
            o.pass = false;
            o.notes.push_back("QUAD5: " + why);
        }
        std::mt19937_64 rng(2024);
        std::size_t bad = 0;
        std::size_t oracle_method = 0;
        for (int trial = 0; trial < 200; ++trial) {
            const Linkage l = fixtures::random_linkage(rng, 3 + static_cast<std::size_t>(trial % 6));
            oracle_method += compute_config_space(l).method == "oracle" ? 1 : 0;
            if (!oracle_equivalent(l, why)) {
                ++bad;
                if (bad <= 5) {
                    o.notes.push_back("trial " + std::to_string(trial) + ": " + why);
                }
            }
        }
        o.pass = o.pass && bad == 0;
        o.notes.push_back("random linkages disagreeing: " + std::to_string(bad) + " of 200; oracle fallback used "
            + std::to_string(oracle_method) + " times");
        return o;
    });

    run(4, "qdim equals extremes on triangle-free 1-path low-sampling fixtures", kLimitC4, [] {
        Outcome o;
        o.pass = true;
        std::size_t compared = 0;
        double worst = 0.0;
        auto compare = [&](const Linkage& l, const char* name) {
            const auto q = qdim_config_space(l);
            if (!q) {
                o.pass = false;
                o.notes.push_back(std::string(name) + ": qdim not applicable");
                return;
            }
            const double d = max_bound_difference(*q, config_space(l));
            worst = std::max(worst, d);
            o.pass = o.pass && d < kQdimTol;
            ++compared;
        };
        compare(fixtures::quad5(), "QUAD5");
        std::mt19937_64 rng(4);
        std::vector<HennebergConstruction> chains{fixtures::fig8e_construction(), fixtures::fig8f_construction()};
        for (const Graph& g : enumerate_simple_1dof(7, true)) {
            if (is_1path(g, Edge(0, 1)) && low_sampling_complexity(g, Edge(0, 1)).low_sampling) {
                chains.push_back(*recognize_simple_1dof(g, Edge(0, 1)));
            }
        }
        for (const auto& c : chains) {
            const Graph g = fixtures::without_base(c);
            for (int trial = 0; trial < 20; ++trial) {
                compare(fixtures::linkage_from_points(g, Edge(0, 1), random_points(rng, c.vertex_count)), "chain fixture");
            }
        }
        const Linkage rcc = fixtures::linkage_from_points(
            fixtures::without_base(fixtures::good_rcc()), Edge(0, 1), random_points(rng, fixtures::good_rcc().vertex_count));
        const bool rcc_na = !qdim_config_space(rcc).has_value();
        o.pass = o.pass && rcc_na;
        o.notes.push_back(std::to_string(compared) + " linkages over " + std::to_string(chains.size() + 1)
            + " graphs compared, worst bound difference " + fmt("%.3g", worst));
        o.notes.push_back(std::string("GoodRCC qdim: ") + (rcc_na ? "not applicable" : "returned intervals"));
        return o;
    });

    run(5, "triangle-free 1-path characterizations agree (exhaustive, <= 8 vertices)", kLimitC5, [] {
        Outcome o;
        std::size_t instances = 0;
        std::size_t low = 0;
        std::size_t disagree = 0;
        for (const Graph& g : enumerate_simple_1dof(8, true)) {
            if (!is_1path(g, Edge(0, 1))) {
                continue;
            }
            const auto r = classify_triangle_free_1path(g, Edge(0, 1));
            ++instances;
            low += r.low_sampling ? 1 : 0;
            disagree += r.all_agree() ? 0 : 1;
        }
        o.pass = instances > 0 && disagree == 0;
        o.notes.push_back(std::to_string(instances) + " graphs, " + std::to_string(low) + " low sampling, "
            + std::to_string(disagree) + " disagreements");
        return o;
    });

    run(6, "quantifier exchange (exhaustive, <= 7 vertices)", kLimitC6, [] {
        Outcome o;
        std::size_t graphs = 0;
        std::size_t disagree = 0;
        for (const Graph& h : enumerate_henneberg(7)) {
            ++graphs;
            const auto t = quantifier_exchange_check(h);
            if (t.agree) {
                continue;
            }
            ++disagree;
            if (disagree <= 3) {
                std::string edges;
                for (const Edge& e : h.edges()) {
                    edges += "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ")";
                }
                std::string rows;
                for (const auto& row : t.rows) {
                    rows += "(" + std::to_string(row.base_edge.a) + "," + std::to_string(row.base_edge.b) + ")="
                        + (row.low_sampling ? "T " : "F ");
                }
                o.notes.push_back("disagreeing graph " + edges);
                o.notes.push_back("  verdicts " + rows);
            }
        }
        o.pass = disagree == 0;
        o.notes.push_back(std::to_string(graphs) + " Henneberg graphs, " + std::to_string(disagree) + " with disagreeing base edges");
        return o;
    });

    run(7, "tightness fixtures: Fig. 6 graph and the K5 planting generator", kLimitC7, [] {
        Outcome o;
        const Graph g6 = fixtures::without_base(fixtures::triangle_free_counter());
        const bool low6 = low_sampling_complexity(g6, Edge(0, 1)).low_sampling;
        const bool k33 = has_minor(g6, MinorPattern::K33);
        const bool prism = has_minor(g6, MinorPattern::Prism);
        const auto t = fixtures::general_tri_counter(5);
        const Graph g5 = fixtures::without_base(t.construction);
        const bool low5 = low_sampling_complexity(g5, Edge(0, 1)).low_sampling;
        const bool k5 = has_minor(g5, complete_graph(5));
        const bool naive = fixtures::naive_has_minor(t.block, complete_graph(5));
        o.pass = low6 && k33 && prism && low5 && k5 && naive;
        o.notes.push_back(std::string("14-vertex graph: low sampling ") + (low6 ? "true" : "false") + ", K33 "
            + (k33 ? "true" : "false") + ", prism " + (prism ? "true" : "false"));
        o.notes.push_back("m = 5 generator (" + std::to_string(g5.vertex_count()) + " vertices): low sampling "
            + (low5 ? "true" : "false") + ", K5 minor " + (k5 ? "true" : "false") + ", delete/contract check "
            + (naive ? "true" : "false"));
        return o;
    });

    run(8, "realization round-trip on 1000 random triples", kLimitC8, [] {
        Outcome o;
        std::mt19937_64 rng(8);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::size_t triples = 0;
        std::size_t failed = 0;
        std::size_t endpoints = 0;
        std::size_t not_collinear = 0;
        double worst_edge = 0.0;
        double worst_collinear = 0.0;
        while (triples < 1000) {
            const Linkage l = fixtures::random_linkage(rng, 3 + rng() % 6);
            const auto r = compute_config_space(l);
            if (r.pieces.empty()) {
                continue;
            }
            const auto& piece = r.pieces[rng() % r.pieces.size()];
            const double dstar = piece.interval.lo + unit(rng) * (piece.interval.hi - piece.interval.lo);
            const auto h = completed(r.reduced, dstar);
            const auto p = rc_realize(h, piece.sigma);
            ++triples;
            if (!p) {
                ++failed;
                continue;
            }
            double err = std::abs(measured_distance(*p, 0, 1) - dstar);
            for (std::size_t k = 0; k < h.construction.steps.size(); ++k) {
                const auto& s = h.construction.steps[k];
                err = std::max(err, std::abs(measured_distance(*p, s.new_vertex, s.base_pair.a) - h.step_lengths[k][0]));
                err = std::max(err, std::abs(measured_distance(*p, s.new_vertex, s.base_pair.b) - h.step_lengths[k][1]));
            }
            worst_edge = std::max(worst_edge, err);
            failed += err <= kEdgeTol ? 0 : 1;

            for (double x : {piece.interval.lo, piece.interval.hi}) {
                const auto he = completed(r.reduced, x);
                const auto pe = rc_realize(he, piece.sigma);
                ++endpoints;
                if (!pe) {
                    ++not_collinear;
                    continue;
                }
                double best = 1e300;
                for (std::size_t k = 0; k < he.construction.steps.size(); ++k) {
                    best = std::min(best, collinearity_defect(he, *pe, k));
                }
                worst_collinear = std::max(worst_collinear, best);
                not_collinear += best <= kCollinearTol ? 0 : 1;
            }
        }
        o.pass = failed == 0 && not_collinear == 0;
        o.notes.push_back(std::to_string(triples) + " triples, " + std::to_string(failed)
            + " failed; worst edge error " + fmt("%.3g", worst_edge));
        o.notes.push_back(std::to_string(endpoints) + " endpoint configurations, " + std::to_string(not_collinear)
            + " without a collinear step; worst defect " + fmt("%.3g", worst_collinear));
        return o;
    });

    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
