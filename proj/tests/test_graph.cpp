#include "doctest.h"
#include "fixtures.hpp"

#include "cayley/decompose.hpp"
#include "cayley/enumerate.hpp"
#include "cayley/error.hpp"
#include "cayley/graph.hpp"
#include "cayley/minors.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace cayley;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::SchemaError;
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) {
        for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

Graph relabeled(const Graph& g, const std::vector<VertexId>& perm)
{
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        edges.emplace_back(perm[static_cast<std::size_t>(e.a)], perm[static_cast<std::size_t>(e.b)]);
    }
    return Graph(g.vertex_count(), edges);
}

Graph random_henneberg(std::mt19937_64& rng, std::size_t n)
{
    std::vector<Edge> edges{{0, 1}};
    for (VertexId v = 2; v < static_cast<VertexId>(n); ++v) {
        std::uniform_int_distribution<VertexId> pick(0, v - 1);
        VertexId a = pick(rng);
        VertexId b = pick(rng);
        while (b == a) {
            b = pick(rng);
        }
        edges.emplace_back(v, a);
        edges.emplace_back(v, b);
    }
    return Graph(n, edges);
}

} // namespace

TEST_CASE("build_graph validates input")
{
    const std::vector<Edge> path{{0, 2}, {1, 2}};
    const Graph g = build_graph(3, path);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(2) == 2);

    const std::vector<Edge> dup{{0, 2}, {2, 0}};
    CHECK(code_of([&] { build_graph(3, dup); }) == ErrorCode::DuplicateEdge);
    const std::vector<Edge> loop{{1, 1}};
    CHECK(code_of([&] { build_graph(3, loop); }) == ErrorCode::SelfLoop);
    const std::vector<Edge> far{{0, 3}};
    CHECK(code_of([&] { build_graph(3, far); }) == ErrorCode::VertexOutOfRange);

    const Graph ste7 = fixtures::without_base(fixtures::ste7_construction());
    CHECK(ste7.vertex_count() == 7);
    CHECK(ste7.edge_count() == 10);
}

TEST_CASE("edge order does not matter")
{
    std::vector<Edge> edges = apply_construction(fixtures::ste7_construction()).edges();
    std::mt19937_64 rng(5);
    std::shuffle(edges.begin(), edges.end(), rng);
    const Graph shuffled(7, edges);
    CHECK(shuffled == apply_construction(fixtures::ste7_construction()));
}

TEST_CASE("rigidity status examples")
{
    CHECK(rigidity_status(complete_graph(3)) == RigidityStatus::Wellconstrained);
    CHECK(rigidity_status(fixtures::without_base(fixtures::ste7_construction())) == RigidityStatus::Underconstrained);
    CHECK(rigidity_status(complete_graph(4)) == RigidityStatus::Overconstrained);
    // K4 with a pendant triangle: dependent, rigid, but the pendant edges are critical.
    const Graph mixed(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(rigidity_status(mixed) == RigidityStatus::WellOverconstrained);
    // K4 plus an isolated vertex: dependent and flexible.
    const Graph loose(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(rigidity_status(loose) == RigidityStatus::FlexibleWithDependence);
}

TEST_CASE("pebble game agrees with subset counting")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
        const Graph g = random_graph(rng, n, 0.25 + 0.1 * (trial % 5));
        CAPTURE(trial);
        CHECK(is_independent(g) == fixtures::counting_independent(g));
        CHECK(is_rigid(g) == fixtures::counting_rigid(g));
        for (VertexId u = 0; u < static_cast<VertexId>(n); ++u) {
            for (VertexId v = u + 1; v < static_cast<VertexId>(n); ++v) {
                if (!g.has_edge(u, v) && is_independent(g)) {
                    CHECK(stays_independent_with(g, Edge(u, v)) == fixtures::counting_independent(g.with_edge(Edge(u, v))));
                }
            }
        }
    }
}

TEST_CASE("apply_construction examples")
{
    const Graph k3 = apply_construction(fixtures::construction(3, {{2, 0, 1}}));
    CHECK(k3 == complete_graph(3));
    const Graph fig3a = apply_construction(fixtures::ste7_construction());
    CHECK(fig3a.edge_count() == 11);
    CHECK(rigidity_status(fig3a) == RigidityStatus::Wellconstrained);

    const HennebergConstruction bad{4, Edge(0, 1), {{2, Edge(0, 3)}, {3, Edge(0, 1)}}};
    CHECK(code_of([&] { apply_construction(bad); }) == ErrorCode::InvalidConstruction);
}

TEST_CASE("recognize_henneberg examples")
{
    const Graph k3 = complete_graph(3);
    for (const Edge& e : k3.edges()) {
        const auto c = recognize_henneberg(k3, e);
        REQUIRE(c);
        CHECK(c->steps.size() == 1);
    }
    const Graph fig3a = apply_construction(fixtures::ste7_construction());
    const auto c = recognize_henneberg(fig3a, Edge(0, 1));
    REQUIRE(c);
    CHECK(apply_construction(*c) == fig3a);
    // Partial order of the caption: 4 after 2, 5 after 3, 6 after 4 and 5.
    auto pos = [&](VertexId v) {
        return std::find_if(c->steps.begin(), c->steps.end(), [&](const ConstructionStep& s) { return s.new_vertex == v; })
            - c->steps.begin();
    };
    CHECK(pos(4) > pos(2));
    CHECK(pos(5) > pos(3));
    CHECK(pos(6) > pos(4));
    CHECK(pos(6) > pos(5));

    const Graph k33 = complete_bipartite(3, 3);
    CHECK_FALSE(recognize_henneberg(k33, k33.edges().front()));
    CHECK(code_of([&] { recognize_henneberg(fig3a, Edge(0, 6)); }) == ErrorCode::EdgeNotInGraph);
}

TEST_CASE("recognize then apply is identity on random Henneberg graphs")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph h = random_henneberg(rng, 3 + static_cast<std::size_t>(trial % 9));
        const auto c = recognize_henneberg(h, Edge(0, 1));
        REQUIRE(c);
        CHECK(apply_construction(*c) == h);
    }
}

TEST_CASE("enumerate_base_edges examples")
{
    CHECK(enumerate_base_edges(complete_graph(3)).size() == 3);

    // The listed pairs are base non-edges of the 13-vertex graph: each completes it to a
    // Henneberg graph with that pair as base edge.
    const Graph fig7 = fixtures::one_path_counter();
    for (const Edge& e : {Edge(0, 1), Edge(2, 3), Edge(4, 5), Edge(0, 4), Edge(1, 5)}) {
        CHECK_FALSE(fig7.has_edge(e));
        const auto bases = enumerate_base_edges(fig7.with_edge(e));
        CHECK(std::find(bases.begin(), bases.end(), e) != bases.end());
    }
    const auto fig3 = enumerate_base_edges(apply_construction(fixtures::ste7_construction()));
    CHECK(std::find(fig3.begin(), fig3.end(), Edge(0, 1)) != fig3.end());

    CHECK(code_of([] { enumerate_base_edges(complete_graph(4)); }) == ErrorCode::NotWellconstrained);
}

TEST_CASE("1-path and triangle-free examples")
{
    CHECK(is_1path(path_graph(3), Edge(0, 2)));
    CHECK(is_1path(Graph(3, {{0, 2}, {1, 2}}), Edge(0, 1)));
    CHECK_FALSE(is_1path(fixtures::one_path_counter(), Edge(0, 1)));
    CHECK(is_1path(fixtures::without_base(fixtures::ste7_construction()), Edge(0, 1)));

    CHECK_FALSE(is_triangle_free(complete_graph(3)));
    CHECK(is_triangle_free(complete_bipartite(3, 4)));
    CHECK(is_triangle_free(complete_bipartite(2, 5)));
    CHECK_FALSE(is_triangle_free(fixtures::without_base(fixtures::triangle_free_counter())));
}

// ---------------------------------------------------------------------------

TEST_CASE("triangle decomposition examples")
{
    CHECK(is_triangle_decomposable(Graph(2, {{0, 1}})));
    CHECK_FALSE(is_triangle_decomposable(complete_bipartite(3, 3)));
    CHECK(is_triangle_decomposable(apply_construction(fixtures::ste7_construction())));
    CHECK_FALSE(is_triangle_decomposable(Graph(4, {{0, 1}, {2, 3}})));

    CHECK(is_henneberg_with_base(complete_graph(3), Edge(0, 2)));
    const Graph prism = prism_graph();
    CHECK_FALSE(is_henneberg_with_base(prism, prism.edges().front()));
    const Graph block1 = fixtures::counter_block1();
    CHECK(is_henneberg_with_base(block1, Edge(0, 1)));
}

TEST_CASE("triangle decomposition is confluent")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(trial % 6);
        const Graph g = trial % 2 ? random_henneberg(rng, n) : random_graph(rng, n, 0.55);
        if (!g.is_connected()) {
            continue;
        }
        const bool base = is_triangle_decomposable(g);
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            CHECK(is_triangle_decomposable(g, seed) == base);
        }
    }
}

TEST_CASE("every Henneberg graph is triangle-decomposable")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        CHECK(is_triangle_decomposable(random_henneberg(rng, 3 + static_cast<std::size_t>(trial % 10))));
    }
}

// ---------------------------------------------------------------------------

TEST_CASE("minor examples")
{
    CHECK(has_minor(complete_bipartite(3, 3), MinorPattern::K33));
    CHECK_FALSE(has_minor(prism_graph(), MinorPattern::K33));
    CHECK(has_minor(fixtures::counter_block1(), MinorPattern::K33));
    CHECK(has_minor(fixtures::counter_block2(), MinorPattern::Prism));

    CHECK(k6_family_check(complete_graph(6)));
    CHECK_FALSE(k6_family_check(prism_graph()));
    CHECK_FALSE(k6_family_check(path_graph(9)));
    CHECK(k6_family_check(fixtures::one_path_counter()));
}

TEST_CASE("minor model is a valid witness")
{
    const Graph host = fixtures::one_path_counter();
    const Graph k6 = complete_graph(6);
    const auto model = find_minor_model(host, k6);
    REQUIRE(model);
    std::vector<int> owner(host.vertex_count(), -1);
    for (std::size_t i = 0; i < model->size(); ++i) {
        REQUIRE_FALSE((*model)[i].empty());
        for (VertexId v : (*model)[i]) {
            CHECK(owner[static_cast<std::size_t>(v)] == -1);
            owner[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
        const auto& set = (*model)[i];
        CHECK(host.induced(set).is_connected());
    }
    for (const Edge& e : k6.edges()) {
        bool joined = false;
        for (const Edge& h : host.edges()) {
            const int a = owner[static_cast<std::size_t>(h.a)];
            const int b = owner[static_cast<std::size_t>(h.b)];
            joined = joined || (a == e.a && b == e.b) || (a == e.b && b == e.a);
        }
        CHECK(joined);
    }
}

TEST_CASE("minor search agrees with naive delete/contract")
{
    std::mt19937_64 rng(29);
    const std::vector<MinorPattern> patterns{MinorPattern::K33, MinorPattern::Prism, MinorPattern::K5};
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 5 + static_cast<std::size_t>(trial % 4);
        const Graph g = trial % 3 == 0 ? random_henneberg(rng, n) : random_graph(rng, n, 0.45 + 0.05 * (trial % 5));
        for (MinorPattern p : patterns) {
            CAPTURE(trial);
            CAPTURE(to_string(p));
            CHECK(has_minor(g, p) == fixtures::naive_has_minor(g, pattern_graph(p)));
        }
    }
}

TEST_CASE("minor containment is monotone under edge addition")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = random_graph(rng, 7 + static_cast<std::size_t>(trial % 3), 0.4);
        for (MinorPattern p : {MinorPattern::K33, MinorPattern::Prism}) {
            if (!has_minor(g, p)) {
                continue;
            }
            for (VertexId u = 0; u < static_cast<VertexId>(g.vertex_count()); ++u) {
                for (VertexId v = u + 1; v < static_cast<VertexId>(g.vertex_count()); ++v) {
                    if (!g.has_edge(u, v)) {
                        CHECK(has_minor(g.with_edge(Edge(u, v)), p));
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------

TEST_CASE("Henneberg enumeration counts")
{
    // Laman graph counts minus the cubic ones (K33 and the prism at six vertices).
    const auto all = enumerate_henneberg(6);
    std::array<int, 7> count{};
    for (const Graph& g : all) {
        ++count[g.vertex_count()];
        CHECK(rigidity_status(g) == RigidityStatus::Wellconstrained);
    }
    CHECK(count[3] == 1);
    CHECK(count[4] == 1);
    CHECK(count[5] == 3);
    CHECK(count[6] == 11);
}

TEST_CASE("canonical form is invariant under relabeling")
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 3 + static_cast<std::size_t>(trial % 7);
        const Graph g = random_graph(rng, n, 0.5);
        std::vector<VertexId> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(g) == canonical_form(relabeled(g, perm)));
        const Edge root(perm[0], perm[1]);
        CHECK(canonical_form(g, Edge(0, 1)) == canonical_form(relabeled(g, perm), root));
    }
    CHECK(canonical_form(path_graph(4)) != canonical_form(complete_bipartite(1, 3)));
}

TEST_CASE("simple 1-dof enumeration produces valid instances")
{
    const auto graphs = enumerate_simple_1dof(7, true);
    CHECK_FALSE(graphs.empty());
    for (const Graph& g : graphs) {
        CHECK_FALSE(g.has_edge(0, 1));
        CHECK(recognize_simple_1dof(g, Edge(0, 1)));
        CHECK(is_triangle_free(g));
    }
}
