#pragma once

#include "cayley/cspace.hpp"
#include "cayley/graph.hpp"
#include "cayley/linkage.hpp"
#include "cayley/realize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cayley::io {

/// Parsed linkage file. Vertex ids are dense; `labels[i]` is the name used in
/// the file for vertex i.
struct LinkageFile {
    std::size_t vertex_count = 0;
    std::vector<std::int64_t> labels;
    std::vector<Edge> edges;
    /// Same order as `edges`; empty when the file has no lengths.
    std::vector<double> lengths;
    std::optional<Edge> base_nonedge;

    bool has_lengths() const { return !lengths.empty() || edges.empty(); }
    Graph graph() const;
    /// Throws SchemaError when lengths or the base non-edge are missing.
    Linkage linkage() const;
    std::int64_t label(VertexId v) const { return labels[static_cast<std::size_t>(v)]; }
};

/// Accepts numbers, decimal strings and "p/q" strings. Throws ParseError.
double parse_length(std::string_view text);

/// Throws ParseError (malformed JSON) or SchemaError (unknown keys, wrong
/// shapes, unknown vertices).
LinkageFile parse_linkage_file(std::string_view json_text);

/// Shortest decimal that reads back to the same double.
std::string format_double(double x);

struct CspaceRequest {
    /// "extremes", "qdim" or "oracle".
    std::string method = "extremes";
    Tolerance tol;
    bool verify = false;
    std::size_t oracle_grid = 1401;
};

/// Result document; nullopt when the qdim chain does not apply.
std::optional<std::string> cspace_result(const LinkageFile& file, const CspaceRequest& req);

/// Throws SchemaError unless `json_text` is a well-formed result document.
void validate_result(std::string_view json_text);

std::string check_report(const LinkageFile& file);
std::string classify_report(const LinkageFile& file);
std::string quantifier_report(const LinkageFile& file);

struct ExhaustiveSummary {
    struct Row {
        std::size_t vertices = 0;
        std::size_t instances = 0;
        std::size_t low_sampling = 0;
        std::size_t disagreements = 0;
    };
    std::size_t max_vertices = 0;
    std::vector<Row> triangle_free;  // three characterizations
    std::vector<Row> chain;          // chain vs definitional, 1-path graphs
    std::vector<Row> quantifier;     // Henneberg graphs, base-edge agreement
    bool all_agree() const;
};

/// Triangle-free and chain checks up to `max_vertices`, quantifier exchange
/// up to min(max_vertices, 7).
ExhaustiveSummary classify_exhaustive(std::size_t max_vertices);
std::string exhaustive_report(const ExhaustiveSummary& s);
std::string exhaustive_table(const ExhaustiveSummary& s);

/// nullopt when dstar is not in the configuration space.
std::optional<std::string> render_realization(const LinkageFile& file, double dstar);
std::string render_intervals(const LinkageFile& file);

/// Default range when lo >= hi.
std::string oracle_report(const LinkageFile& file, double lo, double hi, std::size_t n);

} // namespace cayley::io
