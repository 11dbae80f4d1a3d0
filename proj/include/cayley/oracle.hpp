#pragma once

#include "cayley/intervals.hpp"
#include "cayley/linkage.hpp"
#include "cayley/realize.hpp"

#include <vector>

namespace cayley {

/// Some orientation realizes G + f with delta*(f) = dstar. False for dstar <= 0.
/// Throws TooManyOrientations.
bool realizable_at(const Linkage& l, double dstar, const Tolerance& tol = {}, std::size_t step_cap = kDefaultStepCap);

struct SweepProfile {
    std::vector<double> grid;
    std::vector<bool> realizable;
    /// Realizable side of each bisected sign change, ascending.
    std::vector<double> boundaries;
};

/// Uniform grid of n points on [lo, hi]; every sign change is bisected until
/// the bracket is narrower than `refine_width`. Grid points are evaluated in
/// parallel (capped by CSPACE_THREADS).
SweepProfile sweep(const Linkage& l, double lo, double hi, std::size_t n, const Tolerance& tol = {},
    double refine_width = 1e-9, std::size_t step_cap = kDefaultStepCap);

struct SweepRange {
    double lo = 0.0;
    double hi = 0.0;
};

/// [max(abs_tol, a_min / 2), 1.25 * sum of lengths]. With a_min <= 0 the
/// floor is 1e-6 of the length sum.
SweepRange default_sweep_range(const Linkage& l, double a_min = 0.0, const Tolerance& tol = {});

/// Intervals read off a profile. A realizable first grid point means the set
/// reaches down to 0 when `floor_reaches_zero` is set.
IntervalSet profile_intervals(const SweepProfile& p, bool floor_reaches_zero);

/// Brute-force configuration space over the default range.
IntervalSet oracle_config_space(const Linkage& l, std::size_t n = 1401, const Tolerance& tol = {},
    std::size_t step_cap = kDefaultStepCap);

/// Upper bound for worker threads: CSPACE_THREADS if set, else the hardware.
std::size_t worker_threads();

} // namespace cayley
