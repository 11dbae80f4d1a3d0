#include "cayley/decompose.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace cayley {

namespace {

class VertexSet {
public:
    explicit VertexSet(std::size_t n)
        : words_((n + 63) / 64, 0)
    {
    }

    void insert(VertexId v) { words_[word(v)] |= bit(v); }

    void unite(const VertexSet& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] |= other.words_[i];
        }
    }

    // Returns the single common vertex, -1 if none, -2 if more than one.
    VertexId sole_common(const VertexSet& other) const
    {
        VertexId found = -1;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i] & other.words_[i];
            if (w == 0) {
                continue;
            }
            if ((w & (w - 1)) != 0 || found != -1) {
                return -2;
            }
            found = static_cast<VertexId>(i * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
        }
        return found;
    }

    std::size_t size() const
    {
        std::size_t s = 0;
        for (auto w : words_) {
            s += static_cast<std::size_t>(__builtin_popcountll(w));
        }
        return s;
    }

private:
    static std::size_t word(VertexId v) { return static_cast<std::size_t>(v) / 64; }
    static std::uint64_t bit(VertexId v) { return std::uint64_t{1} << (static_cast<unsigned>(v) % 64); }

    std::vector<std::uint64_t> words_;
};

bool merge_once(std::vector<VertexSet>& clusters)
{
    const std::size_t c = clusters.size();
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = i + 1; j < c; ++j) {
            const VertexId ij = clusters[i].sole_common(clusters[j]);
            if (ij < 0) {
                continue;
            }
            for (std::size_t k = j + 1; k < c; ++k) {
                const VertexId ik = clusters[i].sole_common(clusters[k]);
                if (ik < 0 || ik == ij) {
                    continue;
                }
                const VertexId jk = clusters[j].sole_common(clusters[k]);
                if (jk < 0 || jk == ij || jk == ik) {
                    continue;
                }
                clusters[i].unite(clusters[j]);
                clusters[i].unite(clusters[k]);
                clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(k));
                clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(j));
                return true;
            }
        }
    }
    return false;
}

} // namespace

bool is_triangle_decomposable(const Graph& g, std::optional<std::uint64_t> shuffle_seed)
{
    const std::size_t n = g.vertex_count();
    if (n <= 1) {
        return true;
    }
    if (!g.is_connected()) {
        return false;
    }
    std::vector<VertexSet> clusters;
    clusters.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        VertexSet s(n);
        s.insert(e.a);
        s.insert(e.b);
        clusters.push_back(std::move(s));
    }
    std::optional<std::mt19937_64> rng;
    if (shuffle_seed) {
        rng.emplace(*shuffle_seed);
    }
    do {
        if (rng) {
            std::shuffle(clusters.begin(), clusters.end(), *rng);
        }
    } while (clusters.size() > 1 && merge_once(clusters));
    return clusters.size() == 1 && clusters.front().size() == n;
}

bool is_henneberg_with_base(const Graph& g, Edge e)
{
    return recognize_henneberg(g, e).has_value();
}

} // namespace cayley
