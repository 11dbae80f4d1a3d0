#pragma once

#include "cayley/intervals.hpp"
#include "cayley/linkage.hpp"
#include "cayley/realize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cayley {

struct CspaceOptions {
    Tolerance tol;
    std::size_t step_cap = kDefaultStepCap;
    /// Grid used when an extreme graph is not Henneberg-I and its
    /// f-distances are found by root finding.
    std::size_t fallback_grid = 4001;
};

struct CandidateEndpoint {
    double value = 0.0;
    Provenance provenance;
};

struct CandidateSet {
    std::vector<CandidateEndpoint> items; // ascending by value
    std::vector<std::size_t> suppressed_steps;
    bool oracle_fallback_used = false;
};

/// Candidate interval endpoints from every defined extreme linkage.
/// Requires no degenerate step outside the base non-edge (throws
/// PreconditionViolated). Throws TooManyOrientations.
CandidateSet candidate_endpoints(const Linkage& l, const CspaceOptions& opts = {});

/// One interval of realizability for one orientation of G + f.
struct SigmaPiece {
    OrientationSeq sigma;
    Interval interval;
};

struct Assembly {
    IntervalSet intervals;
    std::vector<SigmaPiece> pieces;
    /// A probe outside the candidate range was realizable: the candidate set
    /// is incomplete and the caller should use the oracle.
    bool incomplete = false;
};

/// Per orientation: probe each candidate, each gap midpoint, and one point
/// beyond either end; then take the union.
Assembly assemble_intervals(const Linkage& l, const CandidateSet& cands, const CspaceOptions& opts = {});

struct CspaceResult {
    IntervalSet intervals;
    std::vector<SigmaPiece> pieces; // in terms of `reduced`
    Linkage reduced;
    CandidateSet candidates;
    /// "extremes", or "oracle" when the analytic path was refused.
    std::string method;
};

/// two_sum_reduce, then candidates and assembly. Degenerate steps off the
/// base non-edge, and incomplete assemblies, go to the oracle instead.
CspaceResult compute_config_space(const Linkage& l, const CspaceOptions& opts = {});

inline IntervalSet config_space(const Linkage& l, const CspaceOptions& opts = {})
{
    return compute_config_space(l, opts).intervals;
}

/// Quadrilateral F0 E0 F1 E1 with the four side lengths. The input diagonal
/// is e = (E0, E1), the output diagonal f = (F0, F1).
struct QuadMap {
    double f0_e0 = 0.0;
    double f1_e0 = 0.0;
    double f0_e1 = 0.0;
    double f1_e1 = 0.0;
};

/// Values of e for which both triangles on e exist.
Interval quad_domain(const QuadMap& q);

/// f with F0, F1 on the same side of line E0E1 ([0]) and on opposite sides ([1]).
std::array<double, 2> quad_branches(const QuadMap& q, double e);

/// Image of `input` under the quadrilateral's diagonal relation.
/// Throws EmptyFeasibility when no input value lies in quad_domain.
IntervalSet quad_diagonal_map(const QuadMap& q, const IntervalSet& input, const Tolerance& tol = {});

/// Chain of quadrilateral maps seeded by the innermost triangle. nullopt when
/// the graph is not triangle-free 1-path or the chain breaks.
std::optional<IntervalSet> qdim_config_space(const Linkage& l, const Tolerance& tol = {});

} // namespace cayley
