#include "cayley/classify.hpp"

#include "cayley/decompose.hpp"
#include "cayley/error.hpp"
#include "cayley/linkage.hpp"
#include "cayley/minors.hpp"

namespace cayley {

bool ClassificationReport::all_agree() const
{
    for (const auto& [name, agrees] : method_agreement) {
        if (agrees.has_value() && !*agrees) {
            return false;
        }
    }
    return true;
}

namespace {

void record(ClassificationReport& r, const char* name, std::optional<bool> answer)
{
    r.method_answers[name] = answer;
    r.method_agreement[name] = answer ? std::optional<bool>(*answer == r.low_sampling) : std::nullopt;
}

} // namespace

ClassificationReport low_sampling_complexity(const Graph& g, Edge f)
{
    auto c = recognize_simple_1dof(g, f);
    if (!c) {
        throw Error(ErrorCode::NotSimple1DofHenneberg, "graph plus base non-edge is not Henneberg-I from it");
    }
    ClassificationReport r;
    r.low_sampling = true;
    for (std::size_t k = 0; k < c->steps.size(); ++k) {
        ExtremeReport x;
        x.step = k;
        x.base_pair = c->steps[k].base_pair;
        x.wellconstrained = extreme_defined(g, x.base_pair);
        if (x.wellconstrained) {
            const Graph ext = g.with_edge(x.base_pair);
            x.triangle_decomposable = is_triangle_decomposable(ext);
            x.henneberg_from_pair = is_henneberg_with_base(ext, x.base_pair);
            r.low_sampling = r.low_sampling && x.triangle_decomposable;
        }
        r.per_extreme.push_back(x);
    }
    record(r, kDefinitional, r.low_sampling);
    return r;
}

ClassificationReport classify_triangle_free_1path(const Graph& g, Edge f)
{
    if (!is_triangle_free(g) || !is_1path(g, f)) {
        throw Error(ErrorCode::PreconditionViolated, "graph must be triangle-free and 1-path");
    }
    ClassificationReport r = low_sampling_complexity(g, f);
    MinorWitnesses w{has_minor(g, MinorPattern::K33), has_minor(g, MinorPattern::Prism)};
    r.minor_witnesses = w;
    record(r, kForbiddenMinor, !(w.k33 || w.prism));
    bool all_henneberg = true;
    for (const auto& x : r.per_extreme) {
        all_henneberg = all_henneberg && x.wellconstrained && x.henneberg_from_pair;
    }
    record(r, kAllExtremesHenneberg, all_henneberg);
    return r;
}

std::optional<bool> chain_decision(const Graph& g, Edge f)
{
    std::vector<VertexId> common;
    for (VertexId v : g.neighbors(f.a)) {
        if (g.has_edge(v, f.b)) {
            common.push_back(v);
        }
    }
    if (common.size() >= 3) {
        return false;
    }
    if (common.size() == 1) {
        if (g.vertex_count() == 3) {
            return true;
        }
        return std::nullopt;
    }
    if (common.size() != 2) {
        return false;
    }
    const bool short_a = g.degree(f.a) == 2;
    const bool short_b = g.degree(f.b) == 2;
    if (!short_a && !short_b) {
        return false;
    }
    std::vector<VertexId> drop;
    if (short_a) {
        drop.push_back(f.a);
    }
    if (short_b) {
        drop.push_back(f.b);
    }
    auto [sub, old_ids] = g.without_vertices(drop);
    VertexId n1 = -1;
    VertexId n2 = -1;
    for (std::size_t i = 0; i < old_ids.size(); ++i) {
        if (old_ids[i] == common[0]) {
            n1 = static_cast<VertexId>(i);
        }
        if (old_ids[i] == common[1]) {
            n2 = static_cast<VertexId>(i);
        }
    }
    const Edge next(n1, n2);
    if (!recognize_simple_1dof(sub, next) || !is_1path(sub, next)) {
        return false;
    }
    return chain_decision(sub, next);
}

ClassificationReport classify_1path(const Graph& g, Edge f)
{
    if (!is_1path(g, f)) {
        throw Error(ErrorCode::PreconditionViolated, "graph must be 1-path");
    }
    ClassificationReport r = low_sampling_complexity(g, f);
    record(r, kChain, chain_decision(g, f));
    return r;
}

QuantifierTable quantifier_exchange_check(const Graph& h)
{
    if (h.vertex_count() < 2 || rigidity_status(h) != RigidityStatus::Wellconstrained) {
        throw Error(ErrorCode::NotHenneberg, "graph is not wellconstrained");
    }
    const auto bases = enumerate_base_edges(h);
    if (bases.empty()) {
        throw Error(ErrorCode::NotHenneberg, "graph has no Henneberg-I base edge");
    }
    QuantifierTable t;
    for (const Edge& e : bases) {
        const bool low = low_sampling_complexity(h.without_edge(e), e).low_sampling;
        if (!t.rows.empty() && t.rows.front().low_sampling != low) {
            t.agree = false;
        }
        t.rows.push_back({e, low});
    }
    return t;
}

} // namespace cayley
