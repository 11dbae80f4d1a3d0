#pragma once

#include "cayley/graph.hpp"
#include "cayley/linkage.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cayley {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Tolerance {
    double abs_tol = 1e-9;
    double collinearity_tol = 1e-9;
};

inline constexpr std::size_t kDefaultStepCap = 16;

/// One side choice per construction step. `true` places the new vertex to the
/// left of the directed segment base_pair.a -> base_pair.b.
class OrientationSeq {
public:
    OrientationSeq() = default;
    explicit OrientationSeq(std::size_t n, bool plus = true)
        : bits_(n, plus)
    {
    }

    static OrientationSeq from_index(std::size_t n, std::uint64_t index);
    /// Parses "+-+"; throws ParseError.
    static OrientationSeq parse(std::string_view text);

    std::size_t size() const { return bits_.size(); }
    bool plus(std::size_t k) const { return bits_[k]; }
    void set(std::size_t k, bool plus) { bits_[k] = plus; }
    OrientationSeq flipped() const;
    std::string str() const;

    friend bool operator==(const OrientationSeq&, const OrientationSeq&) = default;

private:
    std::vector<bool> bits_;
};

struct Realization {
    std::vector<Point> points;
    /// Steps whose circles met tangentially (slack clamped).
    std::vector<bool> collinear;
};

struct Intersection {
    Point point;
    bool collinear = false;
};

/// Circle-circle intersection on the side chosen by `plus` (left of a -> b).
/// Absent when the triangle inequalities fail by more than abs_tol; slacks in
/// [-abs_tol, 0] are clamped to zero. Throws CoincidentCenters.
std::optional<Intersection> circle_intersect(
    Point center_a, double r_a, Point center_b, double r_b, bool plus, const Tolerance& tol = {});

/// Henneberg-I construction with its edge lengths.
struct HennebergLinkage {
    HennebergConstruction construction;
    double base_length = 0.0;
    /// Per step: lengths from the new vertex to base_pair.a and base_pair.b.
    std::vector<std::array<double, 2>> step_lengths;
};

/// G + f with delta*(f) = dstar.
HennebergLinkage completed(const Linkage& l, double dstar);

/// Lengths read from `length(u, v)` for each edge of the construction.
template <typename LengthFn>
HennebergLinkage with_lengths(const HennebergConstruction& c, LengthFn&& length)
{
    HennebergLinkage h;
    h.construction = c;
    h.base_length = length(c.base_edge.a, c.base_edge.b);
    h.step_lengths.reserve(c.steps.size());
    for (const auto& s : c.steps) {
        h.step_lengths.push_back({length(s.new_vertex, s.base_pair.a), length(s.new_vertex, s.base_pair.b)});
    }
    return h;
}

/// Pinned frame: base_edge.a at the origin, base_edge.b on the positive x axis.
/// Absent if some step's circles miss. Throws DegenerateStep on coincident
/// centres.
std::optional<Realization> rc_realize(const HennebergLinkage& h, const OrientationSeq& sigma, const Tolerance& tol = {});

/// Same, but stops after `steps` steps; unplaced vertices are left at the origin.
std::optional<Realization> rc_realize_prefix(
    const HennebergLinkage& h, const OrientationSeq& sigma, std::size_t steps, const Tolerance& tol = {});

/// Every orientation that realizes, deduplicated. At a tangential step only
/// the `+` branch is explored. Throws TooManyOrientations.
std::vector<std::pair<OrientationSeq, Realization>> realize_all_orientations(
    const HennebergLinkage& h, const Tolerance& tol = {}, std::size_t step_cap = kDefaultStepCap);

/// True iff some orientation realizes; stops at the first success.
bool any_orientation_realizes(const HennebergLinkage& h, const Tolerance& tol = {}, std::size_t step_cap = kDefaultStepCap);

double measured_distance(const Realization& p, VertexId u, VertexId w);

/// Distance of step k from the nearer tangency: min over the two collinear
/// arrangements of |d(u,w) - (r_u + r_w)| and |d(u,w) - |r_u - r_w||.
double collinearity_defect(const HennebergLinkage& h, const Realization& p, std::size_t k);

} // namespace cayley
