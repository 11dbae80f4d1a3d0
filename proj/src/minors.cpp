#include "cayley/minors.hpp"

#include "cayley/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

namespace cayley {

namespace {

using Mask = std::uint64_t;

constexpr std::size_t kMaxPattern = 6;
constexpr std::size_t kMaxHost = 64;

// Host after deleting degree <= 1 vertices and suppressing degree-2 vertices.
// members[v] lists the original vertices folded into v.
struct Reduced {
    std::size_t n = 0;
    std::vector<std::vector<char>> adj;
    std::vector<bool> alive;
    std::vector<std::vector<VertexId>> members;
};

Reduced reduce(const Graph& host)
{
    Reduced r;
    r.n = host.vertex_count();
    r.adj.assign(r.n, std::vector<char>(r.n, 0));
    r.alive.assign(r.n, true);
    r.members.resize(r.n);
    std::vector<std::size_t> deg(r.n, 0);
    for (std::size_t v = 0; v < r.n; ++v) {
        r.members[v] = {static_cast<VertexId>(v)};
        deg[v] = host.degree(static_cast<VertexId>(v));
    }
    for (const Edge& e : host.edges()) {
        r.adj[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(e.b)] = 1;
        r.adj[static_cast<std::size_t>(e.b)][static_cast<std::size_t>(e.a)] = 1;
    }
    std::vector<std::size_t> work(r.n);
    std::iota(work.begin(), work.end(), std::size_t{0});
    while (!work.empty()) {
        const std::size_t v = work.back();
        work.pop_back();
        if (!r.alive[v] || deg[v] > 2) {
            continue;
        }
        std::vector<std::size_t> nb;
        for (std::size_t w = 0; w < r.n; ++w) {
            if (r.alive[w] && r.adj[v][w]) {
                nb.push_back(w);
            }
        }
        r.alive[v] = false;
        for (std::size_t w : nb) {
            r.adj[v][w] = r.adj[w][v] = 0;
        }
        if (nb.size() == 2) {
            const std::size_t a = nb[0];
            const std::size_t b = nb[1];
            auto& folded = r.members[a];
            folded.insert(folded.end(), r.members[v].begin(), r.members[v].end());
            if (!r.adj[a][b]) {
                r.adj[a][b] = r.adj[b][a] = 1;
                continue;
            }
        }
        for (std::size_t w : nb) {
            --deg[w];
            work.push_back(w);
        }
    }
    return r;
}

struct PatternTable {
    std::size_t k = 0;
    std::size_t min_degree = 0;
    std::size_t edge_count = 0;
    std::array<std::array<int, kMaxPattern>, kMaxPattern> pair_bit{};
    std::vector<std::uint32_t> images; // pattern edge masks under every relabeling
    std::vector<char> accept;          // indexed by quotient mask
};

PatternTable build_table(const Graph& pattern)
{
    PatternTable t;
    t.k = pattern.vertex_count();
    t.edge_count = pattern.edge_count();
    int bit = 0;
    for (std::size_t i = 0; i < t.k; ++i) {
        for (std::size_t j = i + 1; j < t.k; ++j) {
            t.pair_bit[i][j] = t.pair_bit[j][i] = bit++;
        }
    }
    t.min_degree = t.k;
    for (std::size_t v = 0; v < t.k; ++v) {
        t.min_degree = std::min(t.min_degree, pattern.degree(static_cast<VertexId>(v)));
    }
    std::vector<int> perm(t.k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::uint32_t m = 0;
        for (const Edge& e : pattern.edges()) {
            m |= std::uint32_t{1} << t.pair_bit[static_cast<std::size_t>(perm[static_cast<std::size_t>(e.a)])]
                                             [static_cast<std::size_t>(perm[static_cast<std::size_t>(e.b)])];
        }
        t.images.push_back(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(t.images.begin(), t.images.end());
    t.images.erase(std::unique(t.images.begin(), t.images.end()), t.images.end());
    const std::size_t masks = std::size_t{1} << bit;
    t.accept.assign(masks, 0);
    for (std::size_t m = 0; m < masks; ++m) {
        for (auto img : t.images) {
            if ((m & img) == img) {
                t.accept[m] = 1;
                break;
            }
        }
    }
    return t;
}

class PartitionSearch {
public:
    PartitionSearch(const PatternTable& table, std::vector<Mask> adj)
        : t_(table)
        , n_(adj.size())
        , adj_(std::move(adj))
    {
        // BFS order from a maximum-degree vertex.
        std::size_t start = 0;
        for (std::size_t v = 1; v < n_; ++v) {
            if (std::popcount(adj_[v]) > std::popcount(adj_[start])) {
                start = v;
            }
        }
        std::vector<bool> seen(n_, false);
        order_.push_back(start);
        seen[start] = true;
        for (std::size_t i = 0; i < order_.size(); ++i) {
            for (std::size_t w = 0; w < n_; ++w) {
                if (!seen[w] && (adj_[order_[i]] >> w & 1U)) {
                    seen[w] = true;
                    order_.push_back(w);
                }
            }
        }
    }

    bool run()
    {
        parts_.fill(0);
        unassigned_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        return assign(0, 0);
    }

    std::array<Mask, kMaxPattern> parts() const { return parts_; }
    std::uint32_t quotient() const { return quotient_mask(); }

private:
    Mask neighbours(Mask set) const
    {
        Mask out = 0;
        while (set != 0) {
            const int v = std::countr_zero(set);
            set &= set - 1;
            out |= adj_[static_cast<std::size_t>(v)];
        }
        return out;
    }

    // False when some component of the part can no longer join the rest.
    bool part_viable(Mask part) const
    {
        Mask rest = part;
        int components = 0;
        bool stranded = false;
        while (rest != 0) {
            Mask comp = rest & (~rest + 1);
            for (;;) {
                const Mask grown = comp | (neighbours(comp) & part);
                if (grown == comp) {
                    break;
                }
                comp = grown;
            }
            rest &= ~comp;
            ++components;
            if ((neighbours(comp) & unassigned_) == 0) {
                stranded = true;
            }
        }
        return components <= 1 || !stranded;
    }

    std::uint32_t quotient_mask() const
    {
        std::uint32_t m = 0;
        for (std::size_t p = 0; p < t_.k; ++p) {
            const Mask np = neighbours(parts_[p]);
            for (std::size_t q = p + 1; q < t_.k; ++q) {
                if (np & parts_[q]) {
                    m |= std::uint32_t{1} << t_.pair_bit[p][q];
                }
            }
        }
        return m;
    }

    bool degrees_viable(std::size_t used) const
    {
        for (std::size_t p = 0; p < used; ++p) {
            const Mask np = neighbours(parts_[p]);
            if (np & unassigned_) {
                continue;
            }
            std::size_t d = 0;
            for (std::size_t q = 0; q < used; ++q) {
                if (q != p && (np & parts_[q])) {
                    ++d;
                }
            }
            if (d < t_.min_degree) {
                return false;
            }
        }
        return true;
    }

    bool assign(std::size_t i, std::size_t used)
    {
        if (i == n_) {
            return used == t_.k && t_.accept[quotient_mask()] != 0;
        }
        const std::size_t v = order_[i];
        const Mask bit = Mask{1} << v;
        const std::size_t limit = std::min(used + 1, t_.k);
        for (std::size_t label = 0; label < limit; ++label) {
            const std::size_t now_used = std::max(used, label + 1);
            if (n_ - i - 1 < t_.k - now_used) {
                continue;
            }
            parts_[label] |= bit;
            unassigned_ &= ~bit;
            bool ok = degrees_viable(now_used);
            for (std::size_t p = 0; ok && p < now_used; ++p) {
                ok = part_viable(parts_[p]);
            }
            if (ok && assign(i + 1, now_used)) {
                return true;
            }
            parts_[label] &= ~bit;
            unassigned_ |= bit;
        }
        return false;
    }

    const PatternTable& t_;
    std::size_t n_;
    std::vector<Mask> adj_;
    std::vector<std::size_t> order_;
    std::array<Mask, kMaxPattern> parts_{};
    Mask unassigned_ = 0;
};

void check_pattern(const Graph& pattern)
{
    const std::size_t k = pattern.vertex_count();
    if (k == 0 || k > kMaxPattern || !pattern.is_connected()) {
        throw Error(ErrorCode::PreconditionViolated, "minor pattern must be connected with 1..6 vertices");
    }
    for (std::size_t v = 0; v < k; ++v) {
        if (pattern.degree(static_cast<VertexId>(v)) < 3) {
            throw Error(ErrorCode::PreconditionViolated, "minor pattern must have minimum degree 3");
        }
    }
}

} // namespace

const char* to_string(MinorPattern p) noexcept
{
    switch (p) {
    case MinorPattern::K33: return "K33";
    case MinorPattern::Prism: return "Prism";
    case MinorPattern::K5: return "K5";
    case MinorPattern::K6: return "K6";
    }
    return "Unknown";
}

Graph pattern_graph(MinorPattern p)
{
    switch (p) {
    case MinorPattern::K33: return complete_bipartite(3, 3);
    case MinorPattern::Prism: return prism_graph();
    case MinorPattern::K5: return complete_graph(5);
    case MinorPattern::K6: return complete_graph(6);
    }
    return {};
}

std::optional<MinorModel> find_minor_model(const Graph& host, const Graph& pattern)
{
    check_pattern(pattern);
    const PatternTable table = build_table(pattern);
    Reduced r = reduce(host);

    std::vector<bool> done(r.n, false);
    for (std::size_t root = 0; root < r.n; ++root) {
        if (!r.alive[root] || done[root]) {
            continue;
        }
        std::vector<std::size_t> comp{root};
        done[root] = true;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (std::size_t w = 0; w < r.n; ++w) {
                if (r.alive[w] && !done[w] && r.adj[comp[i]][w]) {
                    done[w] = true;
                    comp.push_back(w);
                }
            }
        }
        if (comp.size() < table.k) {
            continue;
        }
        if (comp.size() > kMaxHost) {
            throw Error(ErrorCode::PreconditionViolated, "reduced host component exceeds 64 vertices");
        }
        std::vector<Mask> adj(comp.size(), 0);
        std::size_t edges = 0;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (std::size_t j = 0; j < comp.size(); ++j) {
                if (r.adj[comp[i]][comp[j]]) {
                    adj[i] |= Mask{1} << j;
                    ++edges;
                }
            }
        }
        if (edges / 2 < table.edge_count) {
            continue;
        }
        PartitionSearch search(table, std::move(adj));
        if (!search.run()) {
            continue;
        }
        const auto parts = search.parts();
        const std::uint32_t q = search.quotient();
        std::vector<int> perm(table.k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            bool fits = true;
            for (const Edge& e : pattern.edges()) {
                const auto pa = static_cast<std::size_t>(perm[static_cast<std::size_t>(e.a)]);
                const auto pb = static_cast<std::size_t>(perm[static_cast<std::size_t>(e.b)]);
                if (!(q >> table.pair_bit[pa][pb] & 1U)) {
                    fits = false;
                    break;
                }
            }
            if (fits) {
                break;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        MinorModel model(table.k);
        for (std::size_t i = 0; i < table.k; ++i) {
            Mask part = parts[static_cast<std::size_t>(perm[i])];
            while (part != 0) {
                const auto local = static_cast<std::size_t>(std::countr_zero(part));
                part &= part - 1;
                const auto& folded = r.members[comp[local]];
                model[i].insert(model[i].end(), folded.begin(), folded.end());
            }
            std::sort(model[i].begin(), model[i].end());
        }
        return model;
    }
    return std::nullopt;
}

bool has_minor(const Graph& host, const Graph& pattern)
{
    return find_minor_model(host, pattern).has_value();
}

bool has_minor(const Graph& host, MinorPattern pattern)
{
    return has_minor(host, pattern_graph(pattern));
}

bool k6_family_check(const Graph& host)
{
    return has_minor(host, MinorPattern::K6);
}

} // namespace cayley
