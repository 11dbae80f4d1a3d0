#pragma once

#include "cayley/graph.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cayley {

struct ExtremeReport {
    std::size_t step = 0;
    Edge base_pair;
    bool wellconstrained = false;
    bool triangle_decomposable = false;
    /// G + base_pair is Henneberg-I with base edge base_pair.
    bool henneberg_from_pair = false;
};

struct MinorWitnesses {
    bool k33 = false;
    bool prism = false;
};

/// Method names used as keys below.
inline constexpr const char* kDefinitional = "definitional";
inline constexpr const char* kForbiddenMinor = "forbidden_minor";
inline constexpr const char* kAllExtremesHenneberg = "all_extremes_henneberg";
inline constexpr const char* kChain = "chain";

struct ClassificationReport {
    /// All defined extreme graphs are triangle-decomposable.
    bool low_sampling = false;
    std::vector<ExtremeReport> per_extreme;
    std::optional<MinorWitnesses> minor_witnesses;
    /// Answer of each method; nullopt when the method does not apply.
    std::map<std::string, std::optional<bool>> method_answers;
    /// Method answer equals low_sampling; nullopt when not applicable.
    std::map<std::string, std::optional<bool>> method_agreement;

    bool all_agree() const;
};

/// Definitional decision. Throws NotSimple1DofHenneberg.
ClassificationReport low_sampling_complexity(const Graph& g, Edge f);

/// Definitional, forbidden-minor and all-extremes-Henneberg answers.
/// Throws PreconditionViolated unless g is triangle-free and 1-path.
ClassificationReport classify_triangle_free_1path(const Graph& g, Edge f);

/// Degree-2 reduction chain; nullopt when it ends with one vertex on the base
/// non-edge and more than three vertices (undecided by the chain).
std::optional<bool> chain_decision(const Graph& g, Edge f);

/// Definitional answer plus the chain decision. Throws PreconditionViolated
/// unless g is 1-path.
ClassificationReport classify_1path(const Graph& g, Edge f);

struct QuantifierRow {
    Edge base_edge;
    bool low_sampling = false;
};

struct QuantifierTable {
    bool agree = true;
    std::vector<QuantifierRow> rows;
};

/// low_sampling of h - f for every base edge f of h. Throws NotHenneberg.
QuantifierTable quantifier_exchange_check(const Graph& h);

} // namespace cayley
