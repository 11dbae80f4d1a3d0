#include "cayley/io.hpp"

#include "cayley/classify.hpp"
#include "cayley/decompose.hpp"
#include "cayley/enumerate.hpp"
#include "cayley/error.hpp"
#include "cayley/minors.hpp"
#include "cayley/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace cayley::io {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema(const std::string& what)
{
    throw Error(ErrorCode::SchemaError, what);
}

std::int64_t as_label(const json& j, const char* where)
{
    if (!j.is_number_integer()) {
        schema(std::string(where) + ": vertex must be an integer");
    }
    return j.get<std::int64_t>();
}

double length_value(const json& j)
{
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        return parse_length(j.get<std::string>());
    }
    schema("edge length must be a number or a string");
}

ordered_json pair_json(const LinkageFile& f, Edge e)
{
    return ordered_json::array({f.label(e.a), f.label(e.b)});
}

ordered_json intervals_json(const IntervalSet& s)
{
    ordered_json out = ordered_json::array();
    for (const auto& i : s.intervals()) {
        out.push_back(ordered_json::array({i.lo, i.hi}));
    }
    return out;
}

std::string fixed(double x, int digits = 3)
{
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::fixed, digits);
    std::string s(buf, r.ptr);
    if (s == "-0.000") {
        s = "0.000";
    }
    return s;
}

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += c;
        }
    }
    return out;
}

struct Computed {
    IntervalSet intervals;
    std::string method;
    std::optional<Linkage> reduced; // provenance vertex ids refer to this
};

Computed extremes(const Linkage& l, const CspaceOptions& opts)
{
    Computed c;
    try {
        auto r = compute_config_space(l, opts);
        c.intervals = std::move(r.intervals);
        c.method = r.method;
        c.reduced = std::move(r.reduced);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SubsystemUnrealizable) {
            throw;
        }
        c.method = "extremes";
    }
    return c;
}

ordered_json endpoint_json(double value, const std::optional<Provenance>& p, const std::optional<Linkage>& reduced)
{
    ordered_json e;
    e["value"] = value;
    if (p && reduced && !p->oracle_fallback) {
        e["step"] = p->step;
        e["variant"] = p->variant;
        e["orientation"] = p->orientation.str();
        ordered_json triple = ordered_json::array();
        for (VertexId v : p->triple) {
            triple.push_back(reduced->label(v));
        }
        e["collinear_triple"] = triple;
    } else {
        e["step"] = nullptr;
        e["variant"] = nullptr;
        e["orientation"] = nullptr;
        e["collinear_triple"] = nullptr;
    }
    return e;
}

ordered_json endpoints_json(const Computed& c)
{
    ordered_json out = ordered_json::array();
    for (const auto& i : c.intervals.intervals()) {
        out.push_back(endpoint_json(i.lo, i.lo_from, c.reduced));
        if (!i.isolated()) {
            out.push_back(endpoint_json(i.hi, i.hi_from, c.reduced));
        }
    }
    return out;
}

std::optional<bool> opt_bool(const std::optional<bool>& b)
{
    return b;
}

ordered_json opt_json(const std::optional<bool>& b)
{
    return b ? ordered_json(*b) : ordered_json(nullptr);
}

} // namespace

// ---------------------------------------------------------------------------

Graph LinkageFile::graph() const
{
    return Graph(vertex_count, edges);
}

Linkage LinkageFile::linkage() const
{
    if (!has_lengths()) {
        schema("edge lengths are required");
    }
    if (!base_nonedge) {
        schema("base_nonedge is required");
    }
    std::vector<WeightedEdge> list;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        list.push_back({edges[i].a, edges[i].b, lengths[i]});
    }
    return Linkage::load(vertex_count, list, *base_nonedge, labels);
}

double parse_length(std::string_view text)
{
    auto number = [&](std::string_view s) {
        double v = 0.0;
        const char* first = s.data();
        const char* last = s.data() + s.size();
        if (first != last && *first == '+') {
            ++first;
        }
        auto r = std::from_chars(first, last, v);
        if (r.ec != std::errc() || r.ptr != last || first == last) {
            throw Error(ErrorCode::ParseError, "bad length \"" + std::string(text) + "\"");
        }
        return v;
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return number(text);
    }
    const double p = number(text.substr(0, slash));
    const double q = number(text.substr(slash + 1));
    if (q == 0.0) {
        throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
    }
    return p / q;
}

LinkageFile parse_linkage_file(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object()) {
        schema("top level must be an object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "vertices" && key != "edges" && key != "base_nonedge") {
            schema("unknown key \"" + key + "\"");
        }
    }
    if (!doc.contains("vertices") || !doc.contains("edges")) {
        schema("\"vertices\" and \"edges\" are required");
    }

    std::vector<std::array<std::int64_t, 2>> raw;
    std::vector<std::optional<double>> raw_len;
    const json& edges = doc["edges"];
    if (!edges.is_array()) {
        schema("\"edges\" must be an array");
    }
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3) {
            schema("each edge must be [u, v] or [u, v, length]");
        }
        raw.push_back({as_label(e[0], "edges"), as_label(e[1], "edges")});
        raw_len.push_back(e.size() == 3 ? std::optional<double>(length_value(e[2])) : std::nullopt);
    }
    std::optional<std::array<std::int64_t, 2>> base;
    if (doc.contains("base_nonedge")) {
        const json& b = doc["base_nonedge"];
        if (!b.is_array() || b.size() != 2) {
            schema("\"base_nonedge\" must be [u, v]");
        }
        base = std::array<std::int64_t, 2>{as_label(b[0], "base_nonedge"), as_label(b[1], "base_nonedge")};
    }

    LinkageFile f;
    const json& vs = doc["vertices"];
    if (vs.is_array()) {
        for (const auto& v : vs) {
            f.labels.push_back(as_label(v, "vertices"));
        }
        std::set<std::int64_t> distinct(f.labels.begin(), f.labels.end());
        if (distinct.size() != f.labels.size()) {
            schema("duplicate vertex label");
        }
    } else if (vs.is_number_integer() && vs.get<std::int64_t>() >= 0) {
        const auto n = vs.get<std::int64_t>();
        std::set<std::int64_t> used;
        for (const auto& e : raw) {
            used.insert(e[0]);
            used.insert(e[1]);
        }
        if (base) {
            used.insert((*base)[0]);
            used.insert((*base)[1]);
        }
        const bool dense = used.empty() || (*used.begin() >= 0 && *used.rbegin() < n);
        if (dense) {
            for (std::int64_t i = 0; i < n; ++i) {
                f.labels.push_back(i);
            }
        } else if (static_cast<std::int64_t>(used.size()) == n) {
            f.labels.assign(used.begin(), used.end());
        } else {
            schema("vertex names do not match \"vertices\": " + std::to_string(n));
        }
    } else {
        schema("\"vertices\" must be a count or a list of labels");
    }
    f.vertex_count = f.labels.size();

    std::map<std::int64_t, VertexId> id;
    for (std::size_t i = 0; i < f.labels.size(); ++i) {
        id[f.labels[i]] = static_cast<VertexId>(i);
    }
    auto lookup = [&](std::int64_t label) {
        auto it = id.find(label);
        if (it == id.end()) {
            schema("unknown vertex " + std::to_string(label));
        }
        return it->second;
    };
    const bool any_len = std::any_of(raw_len.begin(), raw_len.end(), [](const auto& x) { return x.has_value(); });
    const bool all_len = std::all_of(raw_len.begin(), raw_len.end(), [](const auto& x) { return x.has_value(); });
    if (any_len && !all_len) {
        schema("either every edge has a length or none does");
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        f.edges.emplace_back(lookup(raw[i][0]), lookup(raw[i][1]));
        if (raw[i][0] == raw[i][1]) {
            throw Error(ErrorCode::SelfLoop, "edge (" + std::to_string(raw[i][0]) + "," + std::to_string(raw[i][1]) + ")");
        }
        if (any_len) {
            f.lengths.push_back(*raw_len[i]);
        }
    }
    if (base) {
        f.base_nonedge = Edge(lookup((*base)[0]), lookup((*base)[1]));
    }
    // Structural validation (duplicates, ranges).
    (void)f.graph();
    return f;
}

std::string format_double(double x)
{
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

// ---------------------------------------------------------------------------

std::optional<std::string> cspace_result(const LinkageFile& file, const CspaceRequest& req)
{
    const Linkage l = file.linkage();
    CspaceOptions opts;
    opts.tol = req.tol;
    Computed c;
    if (req.method == "extremes") {
        c = extremes(l, opts);
    } else if (req.method == "qdim") {
        auto q = qdim_config_space(l, req.tol);
        if (!q) {
            return std::nullopt;
        }
        c.intervals = std::move(*q);
        c.method = "qdim";
    } else if (req.method == "oracle") {
        c.intervals = oracle_config_space(l, req.oracle_grid, req.tol);
        c.method = "oracle";
    } else {
        schema("unknown method \"" + req.method + "\"");
    }

    ordered_json doc;
    doc["intervals"] = intervals_json(c.intervals);
    doc["endpoints"] = endpoints_json(c);
    doc["method"] = c.method;
    if (req.verify) {
        const IntervalSet oracle = oracle_config_space(l, req.oracle_grid, req.tol);
        const double diff = max_bound_difference(c.intervals, oracle);
        ordered_json v;
        v["oracle_intervals"] = intervals_json(oracle);
        v["interval_count_match"] = oracle.size() == c.intervals.size();
        v["max_endpoint_discrepancy"] = std::isfinite(diff) ? ordered_json(diff) : ordered_json(nullptr);
        doc["verify"] = v;
    }
    return doc.dump(2) + "\n";
}

void validate_result(std::string_view json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object()) {
        schema("result must be an object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "intervals" && key != "endpoints" && key != "method" && key != "verify") {
            schema("unknown key \"" + key + "\"");
        }
    }
    if (!doc.contains("intervals") || !doc.contains("endpoints") || !doc.contains("method")) {
        schema("intervals, endpoints and method are required");
    }
    const auto& method = doc["method"];
    if (!method.is_string() || (method != "extremes" && method != "qdim" && method != "oracle")) {
        schema("bad method");
    }
    std::vector<double> bounds;
    double prev = -1.0;
    for (const auto& i : doc["intervals"]) {
        if (!i.is_array() || i.size() != 2 || !i[0].is_number() || !i[1].is_number()) {
            schema("interval must be [a, b]");
        }
        const double a = i[0].get<double>();
        const double b = i[1].get<double>();
        if (a > b || a <= prev) {
            schema("intervals must be sorted and disjoint");
        }
        prev = b;
        bounds.push_back(a);
        bounds.push_back(b);
    }
    for (const auto& e : doc["endpoints"]) {
        if (!e.is_object() || !e.contains("value") || !e["value"].is_number()) {
            schema("endpoint needs a numeric value");
        }
        for (const auto& [key, value] : e.items()) {
            if (key != "value" && key != "step" && key != "variant" && key != "orientation"
                && key != "collinear_triple") {
                schema("unknown endpoint key \"" + key + "\"");
            }
        }
        if (std::find(bounds.begin(), bounds.end(), e["value"].get<double>()) == bounds.end()) {
            schema("endpoint value is not an interval bound");
        }
    }
}

// ---------------------------------------------------------------------------

std::string check_report(const LinkageFile& file)
{
    const Graph g = file.graph();
    ordered_json doc;
    doc["vertices"] = file.vertex_count;
    doc["edges"] = g.edge_count();
    doc["labels"] = file.labels;
    doc["rigidity_status"] = g.vertex_count() >= 2 ? ordered_json(to_string(rigidity_status(g))) : ordered_json(nullptr);
    doc["triangle_free"] = is_triangle_free(g);
    doc["base_nonedge"] = file.base_nonedge ? pair_json(file, *file.base_nonedge) : ordered_json(nullptr);

    const Graph h = file.base_nonedge && !g.has_edge(*file.base_nonedge) ? g.with_edge(*file.base_nonedge) : g;
    const std::string h_status = h.vertex_count() >= 2 ? to_string(rigidity_status(h)) : "";
    ordered_json bases = ordered_json::array();
    if (h.vertex_count() >= 2 && rigidity_status(h) == RigidityStatus::Wellconstrained) {
        for (const Edge& e : enumerate_base_edges(h)) {
            bases.push_back(pair_json(file, e));
        }
    }
    doc["completion_status"] = h_status.empty() ? ordered_json(nullptr) : ordered_json(h_status);
    doc["base_edges"] = bases;

    if (file.base_nonedge) {
        const auto c = recognize_simple_1dof(g, *file.base_nonedge);
        doc["henneberg_from_base"] = c.has_value();
        doc["one_path"] = c ? ordered_json(is_1path(g, *file.base_nonedge)) : ordered_json(nullptr);
        ordered_json steps = ordered_json::array();
        if (c) {
            for (const auto& s : c->steps) {
                ordered_json st;
                st["vertex"] = file.label(s.new_vertex);
                st["base_pair"] = pair_json(file, s.base_pair);
                steps.push_back(st);
            }
        }
        doc["steps"] = steps;
        if (c && file.has_lengths()) {
            const Linkage l = file.linkage();
            ordered_json degenerate = ordered_json::array();
            for (std::size_t k = 0; k < l.step_count(); ++k) {
                if (l.step_degenerate(k)) {
                    degenerate.push_back(k);
                }
            }
            doc["degenerate_steps"] = degenerate;
        }
    }
    return doc.dump(2) + "\n";
}

std::string classify_report(const LinkageFile& file)
{
    if (!file.base_nonedge) {
        schema("base_nonedge is required");
    }
    const Graph g = file.graph();
    const Edge f = *file.base_nonedge;
    ClassificationReport r = low_sampling_complexity(g, f);
    const bool one_path = is_1path(g, f);
    const bool tri_free = is_triangle_free(g);
    if (one_path && tri_free) {
        r = classify_triangle_free_1path(g, f);
    }
    if (one_path) {
        const auto chain = classify_1path(g, f);
        r.method_answers[kChain] = chain.method_answers.at(kChain);
        r.method_agreement[kChain] = chain.method_agreement.at(kChain);
    }
    MinorWitnesses w = r.minor_witnesses ? *r.minor_witnesses
                                         : MinorWitnesses{has_minor(g, MinorPattern::K33), has_minor(g, MinorPattern::Prism)};

    ordered_json doc;
    doc["base_nonedge"] = pair_json(file, f);
    doc["low_sampling"] = r.low_sampling;
    doc["one_path"] = one_path;
    doc["triangle_free"] = tri_free;
    ordered_json ext = ordered_json::array();
    for (const auto& x : r.per_extreme) {
        ordered_json e;
        e["step"] = x.step;
        e["base_pair"] = pair_json(file, x.base_pair);
        e["wellconstrained"] = x.wellconstrained;
        e["triangle_decomposable"] = x.wellconstrained ? ordered_json(x.triangle_decomposable) : ordered_json(nullptr);
        e["henneberg_from_pair"] = x.wellconstrained ? ordered_json(x.henneberg_from_pair) : ordered_json(nullptr);
        ext.push_back(e);
    }
    doc["per_extreme"] = ext;
    doc["minors"] = {{"K33", w.k33}, {"Prism", w.prism}};
    ordered_json methods;
    for (const char* name : {kDefinitional, kForbiddenMinor, kAllExtremesHenneberg, kChain}) {
        auto a = r.method_answers.find(name);
        auto b = r.method_agreement.find(name);
        ordered_json m;
        m["answer"] = a == r.method_answers.end() ? ordered_json(nullptr) : opt_json(opt_bool(a->second));
        m["agrees"] = b == r.method_agreement.end() ? ordered_json(nullptr) : opt_json(b->second);
        methods[name] = m;
    }
    doc["methods"] = methods;
    doc["all_agree"] = r.all_agree();
    return doc.dump(2) + "\n";
}

std::string quantifier_report(const LinkageFile& file)
{
    Graph h = file.graph();
    if (file.base_nonedge && !h.has_edge(*file.base_nonedge)) {
        h = h.with_edge(*file.base_nonedge);
    }
    const auto t = quantifier_exchange_check(h);
    ordered_json doc;
    doc["edges"] = h.edge_count();
    doc["agree"] = t.agree;
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows) {
        rows.push_back({{"base_edge", pair_json(file, row.base_edge)}, {"low_sampling", row.low_sampling}});
    }
    doc["rows"] = rows;
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

bool ExhaustiveSummary::all_agree() const
{
    for (const auto* rows : {&triangle_free, &chain, &quantifier}) {
        for (const auto& r : *rows) {
            if (r.disagreements != 0) {
                return false;
            }
        }
    }
    return true;
}

ExhaustiveSummary classify_exhaustive(std::size_t max_vertices)
{
    if (max_vertices < 3 || max_vertices > 9) {
        throw Error(ErrorCode::PreconditionViolated, "exhaustive range is 3..9 vertices");
    }
    ExhaustiveSummary s;
    s.max_vertices = max_vertices;
    auto row = [](std::vector<ExhaustiveSummary::Row>& rows, std::size_t n) -> ExhaustiveSummary::Row& {
        while (rows.size() <= n - 3) {
            rows.push_back({rows.size() + 3, 0, 0, 0});
        }
        return rows[n - 3];
    };
    const Edge f(0, 1);
    for (const Graph& g : enumerate_simple_1dof(max_vertices, true)) {
        if (!is_1path(g, f)) {
            continue;
        }
        const auto r = classify_triangle_free_1path(g, f);
        auto& x = row(s.triangle_free, g.vertex_count());
        ++x.instances;
        x.low_sampling += r.low_sampling ? 1 : 0;
        x.disagreements += r.all_agree() ? 0 : 1;
    }
    for (const Graph& g : enumerate_simple_1dof(max_vertices, false)) {
        if (!is_1path(g, f)) {
            continue;
        }
        const auto r = classify_1path(g, f);
        auto& x = row(s.chain, g.vertex_count());
        ++x.instances;
        x.low_sampling += r.low_sampling ? 1 : 0;
        x.disagreements += r.all_agree() ? 0 : 1;
    }
    for (const Graph& h : enumerate_henneberg(std::min<std::size_t>(max_vertices, 7))) {
        const auto t = quantifier_exchange_check(h);
        auto& x = row(s.quantifier, h.vertex_count());
        ++x.instances;
        x.low_sampling += t.rows.front().low_sampling ? 1 : 0;
        x.disagreements += t.agree ? 0 : 1;
    }
    return s;
}

std::string exhaustive_report(const ExhaustiveSummary& s)
{
    auto rows = [](const std::vector<ExhaustiveSummary::Row>& rs) {
        ordered_json out = ordered_json::array();
        for (const auto& r : rs) {
            out.push_back({{"vertices", r.vertices}, {"instances", r.instances}, {"low_sampling", r.low_sampling},
                {"disagreements", r.disagreements}});
        }
        return out;
    };
    ordered_json doc;
    doc["max_vertices"] = s.max_vertices;
    doc["triangle_free_1path"] = rows(s.triangle_free);
    doc["chain"] = rows(s.chain);
    doc["quantifier_exchange"] = rows(s.quantifier);
    doc["agree"] = s.all_agree();
    return doc.dump(2) + "\n";
}

std::string exhaustive_table(const ExhaustiveSummary& s)
{
    std::ostringstream out;
    char line[128];
    std::snprintf(line, sizeof line, "%-22s %8s %10s %13s %14s\n", "check", "vertices", "instances", "low_sampling",
        "disagreements");
    out << line;
    auto emit = [&](const char* name, const std::vector<ExhaustiveSummary::Row>& rs) {
        for (const auto& r : rs) {
            std::snprintf(line, sizeof line, "%-22s %8zu %10zu %13zu %14zu\n", name, r.vertices, r.instances,
                r.low_sampling, r.disagreements);
            out << line;
        }
    };
    emit("triangle-free 1-path", s.triangle_free);
    emit("chain vs definition", s.chain);
    emit("quantifier exchange", s.quantifier);
    out << "agree: " << (s.all_agree() ? "true" : "false") << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------

std::optional<std::string> render_realization(const LinkageFile& file, double dstar)
{
    const Linkage l = file.linkage();
    if (!(dstar > 0.0)) {
        return std::nullopt;
    }
    const auto h = completed(l, dstar);
    const auto all = realize_all_orientations(h);
    if (all.empty()) {
        return std::nullopt;
    }
    const auto& [sigma, p] = all.front();

    const double size = 480.0;
    const double margin = 40.0;
    double x0 = p.points[0].x, x1 = x0, y0 = p.points[0].y, y1 = y0;
    for (const Point& q : p.points) {
        x0 = std::min(x0, q.x);
        x1 = std::max(x1, q.x);
        y0 = std::min(y0, q.y);
        y1 = std::max(y1, q.y);
    }
    const double span = std::max({x1 - x0, y1 - y0, 1e-9});
    const double scale = (size - 2.0 * margin) / span;
    const double ox = margin + (size - 2.0 * margin - (x1 - x0) * scale) / 2.0;
    const double oy = margin + (size - 2.0 * margin - (y1 - y0) * scale) / 2.0;
    auto sx = [&](const Point& q) { return fixed(ox + (q.x - x0) * scale, 2); };
    auto sy = [&](const Point& q) { return fixed(size - oy - (q.y - y0) * scale, 2); };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"480\" height=\"480\" viewBox=\"0 0 480 480\">\n";
    svg << "<rect width=\"480\" height=\"480\" fill=\"white\"/>\n";
    svg << "<text x=\"12\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\">d*(" << file.label(l.base_nonedge().a)
        << "," << file.label(l.base_nonedge().b) << ") = " << format_double(dstar) << "  orientation "
        << sigma.str() << "</text>\n";
    for (const Edge& e : l.graph().edges()) {
        const Point& a = p.points[static_cast<std::size_t>(e.a)];
        const Point& b = p.points[static_cast<std::size_t>(e.b)];
        svg << "<line x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b) << "\" y2=\"" << sy(b)
            << "\" stroke=\"#222\" stroke-width=\"2\"/>\n";
    }
    {
        const Point& a = p.points[static_cast<std::size_t>(l.base_nonedge().a)];
        const Point& b = p.points[static_cast<std::size_t>(l.base_nonedge().b)];
        svg << "<line x1=\"" << sx(a) << "\" y1=\"" << sy(a) << "\" x2=\"" << sx(b) << "\" y2=\"" << sy(b)
            << "\" stroke=\"#c0392b\" stroke-width=\"2\" stroke-dasharray=\"6 4\"/>\n";
    }
    for (std::size_t v = 0; v < p.points.size(); ++v) {
        const Point& q = p.points[v];
        svg << "<circle cx=\"" << sx(q) << "\" cy=\"" << sy(q) << "\" r=\"5\" fill=\"#1f4e79\"/>\n";
        svg << "<text x=\"" << fixed(ox + (q.x - x0) * scale + 7.0, 2) << "\" y=\""
            << fixed(size - oy - (q.y - y0) * scale - 7.0, 2)
            << "\" font-family=\"sans-serif\" font-size=\"12\">" << file.label(static_cast<VertexId>(v))
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string render_intervals(const LinkageFile& file)
{
    const Linkage l = file.linkage();
    const Computed c = extremes(l, CspaceOptions{});

    const double width = 720.0;
    const double left = 40.0;
    const double right = 40.0;
    const double axis_y = 120.0;
    double xmax = l.total_length();
    if (!c.intervals.empty()) {
        xmax = c.intervals.intervals().back().hi * 1.1;
    }
    xmax = std::max(xmax, 1e-9);
    auto px = [&](double v) { return left + v / xmax * (width - left - right); };

    const double raw = xmax / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) {
            step = m * mag;
            break;
        }
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"200\" viewBox=\"0 0 720 200\">\n";
    svg << "<rect width=\"720\" height=\"200\" fill=\"white\"/>\n";
    svg << "<text x=\"12\" y=\"20\" font-family=\"sans-serif\" font-size=\"13\">configuration space of d*("
        << file.label(l.base_nonedge().a) << "," << file.label(l.base_nonedge().b) << "), method "
        << xml_escape(c.method) << "</text>\n";
    svg << "<line x1=\"" << fixed(px(0.0), 2) << "\" y1=\"" << axis_y << "\" x2=\"" << fixed(px(xmax), 2) << "\" y2=\""
        << axis_y << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    for (int i = 0; i * step <= xmax + 1e-12; ++i) {
        const double v = i * step;
        svg << "<line x1=\"" << fixed(px(v), 2) << "\" y1=\"" << axis_y - 4 << "\" x2=\"" << fixed(px(v), 2)
            << "\" y2=\"" << axis_y + 4 << "\" stroke=\"#888\"/>\n";
        svg << "<text x=\"" << fixed(px(v), 2) << "\" y=\"" << axis_y + 18
            << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">" << format_double(v)
            << "</text>\n";
    }
    auto label = [&](double v, const std::optional<Provenance>& p, bool low) {
        const double y = low ? axis_y - 30 : axis_y - 16;
        svg << "<text x=\"" << fixed(px(v), 2) << "\" y=\"" << y
            << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">" << fixed(v);
        if (p && !p->oracle_fallback && c.method == "extremes") {
            svg << " (step " << p->step << ", v" << p->variant << ")";
        }
        svg << "</text>\n";
    };
    bool stagger = false;
    for (const auto& i : c.intervals.intervals()) {
        if (i.isolated()) {
            svg << "<circle cx=\"" << fixed(px(i.lo), 2) << "\" cy=\"" << axis_y
                << "\" r=\"4\" fill=\"#1f4e79\"/>\n";
            label(i.lo, i.lo_from, stagger);
            stagger = !stagger;
            continue;
        }
        svg << "<line x1=\"" << fixed(px(i.lo), 2) << "\" y1=\"" << axis_y << "\" x2=\"" << fixed(px(i.hi), 2)
            << "\" y2=\"" << axis_y << "\" stroke=\"#1f4e79\" stroke-width=\"8\"/>\n";
        label(i.lo, i.lo_from, stagger);
        stagger = !stagger;
        label(i.hi, i.hi_from, stagger);
        stagger = !stagger;
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string oracle_report(const LinkageFile& file, double lo, double hi, std::size_t n)
{
    const Linkage l = file.linkage();
    const bool default_range = !(lo < hi);
    if (default_range) {
        const auto r = default_sweep_range(l);
        lo = r.lo;
        hi = r.hi;
    }
    if (n < 2 || !(lo > 0.0)) {
        throw Error(ErrorCode::PreconditionViolated, "sweep needs 0 < lo < hi and at least two points");
    }
    const auto p = sweep(l, lo, hi, n);
    std::size_t count = 0;
    for (bool b : p.realizable) {
        count += b ? 1 : 0;
    }
    ordered_json doc;
    doc["lo"] = lo;
    doc["hi"] = hi;
    doc["points"] = n;
    doc["realizable_points"] = count;
    doc["boundaries"] = p.boundaries;
    doc["intervals"] = intervals_json(profile_intervals(p, default_range));
    return doc.dump(2) + "\n";
}

} // namespace cayley::io
