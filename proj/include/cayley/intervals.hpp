#pragma once

#include "cayley/graph.hpp"
#include "cayley/realize.hpp"

#include <array>
#include <optional>
#include <vector>

namespace cayley {

/// Where a candidate endpoint came from: the extreme linkage of `step` with
/// `variant` (1 = sum, 2 = difference), realized with `orientation`, the
/// `realization`-th distinct realization. `triple` is (v, u, w) for the step
/// v <| (u, w).
struct Provenance {
    std::size_t step = 0;
    int variant = 1;
    OrientationSeq orientation;
    std::size_t realization = 0;
    std::array<VertexId, 3> triple{};
    bool oracle_fallback = false;
};

/// Closed interval; lo == hi is an isolated point.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    std::optional<Provenance> lo_from;
    std::optional<Provenance> hi_from;

    bool isolated() const { return lo == hi; }
};

/// Sorted, pairwise disjoint closed intervals.
class IntervalSet {
public:
    IntervalSet() = default;

    /// Sorts and merges intervals that overlap or are separated by less than
    /// `gap_tol`.
    static IntervalSet normalized(std::vector<Interval> items, double gap_tol);

    const std::vector<Interval>& intervals() const { return items_; }
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }

    /// x lies within `slack` of some interval.
    bool contains(double x, double slack = 0.0) const;
    /// Distance from x to the nearest interval bound.
    double distance_to_bound(double x) const;
    /// All bounds, ascending (isolated points once).
    std::vector<double> bounds() const;

private:
    std::vector<Interval> items_;
};

/// Largest absolute difference between matching bounds, or +inf when the
/// sets have different interval counts.
double max_bound_difference(const IntervalSet& a, const IntervalSet& b);

} // namespace cayley
