#pragma once

#include "cayley/graph.hpp"
#include "cayley/linkage.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace fixtures {

using cayley::Edge;
using cayley::Graph;
using cayley::HennebergConstruction;
using cayley::Linkage;
using cayley::VertexId;

// Vertex v_i of the figures is id i-1 throughout.

Linkage tri3();
Linkage tri3_equal();
Linkage quad5();

/// Base (0,1); steps given as {new, a, b}.
HennebergConstruction construction(std::size_t n, std::initializer_list<std::array<VertexId, 3>> steps);

/// Seven-vertex example with both base vertices of degree 3 (G + f).
HennebergConstruction ste7_construction();
HennebergConstruction fig4_construction();
HennebergConstruction fig8e_construction();
HennebergConstruction fig8f_construction();
/// Three vertices on the base pair.
HennebergConstruction m3_construction();

/// 14-vertex example: two rigid blocks hinged at v3 and joined by v14.
HennebergConstruction triangle_free_counter();
/// Induced blocks of triangle_free_counter(): {v1,v3,v4..v8} and {v2,v3,v9..v13}.
Graph counter_block1();
Graph counter_block2();

struct TriCounter {
    HennebergConstruction construction; // G + f
    Graph block;                        // G1, which carries the planted clique
};
/// Clique-planting generator: the first block contracts to K_m.
TriCounter general_tri_counter(std::size_t m);

/// 13-vertex triangle-free, not 1-path, K6 subdivision (G without f).
Graph one_path_counter();

/// 27 vertices: two triangle strips on (v1,v3) and (v2,v3), joined at the end.
HennebergConstruction good_rcc();

Graph without_base(const HennebergConstruction& c);

/// Lengths taken from the given points.
Linkage linkage_from_points(const Graph& g, Edge f, const std::vector<std::array<double, 2>>& pts);

/// Random construction on n vertices with base (0,1) and lengths from random
/// points in [0,10]^2.
Linkage random_linkage(std::mt19937_64& rng, std::size_t n);

// ---------------------------------------------------------------------------
// Independent oracles

/// |E'| <= 2|V'| - 3 for every vertex subset with at least two vertices.
bool counting_independent(const Graph& g);
bool counting_rigid(const Graph& g);

/// Delete/contract search with a memo on the labeled graph.
bool naive_has_minor(const Graph& host, const Graph& pattern);

/// 5x5 Cayley-Menger determinant of four points given by squared distances
/// d[i][j]; zero for planar configurations.
double cayley_menger4(const double d2[4][4]);

} // namespace fixtures
