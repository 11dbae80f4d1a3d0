#include "cayley/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cayley {

IntervalSet IntervalSet::normalized(std::vector<Interval> items, double gap_tol)
{
    std::stable_sort(items.begin(), items.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi > b.hi);
    });
    IntervalSet out;
    for (auto& it : items) {
        if (!out.items_.empty() && it.lo <= out.items_.back().hi + gap_tol) {
            auto& last = out.items_.back();
            if (it.hi > last.hi) {
                last.hi = it.hi;
                last.hi_from = it.hi_from;
            }
            continue;
        }
        out.items_.push_back(std::move(it));
    }
    return out;
}

bool IntervalSet::contains(double x, double slack) const
{
    return std::any_of(items_.begin(), items_.end(),
        [&](const Interval& i) { return x >= i.lo - slack && x <= i.hi + slack; });
}

double IntervalSet::distance_to_bound(double x) const
{
    double best = std::numeric_limits<double>::infinity();
    for (const auto& i : items_) {
        best = std::min({best, std::abs(x - i.lo), std::abs(x - i.hi)});
    }
    return best;
}

std::vector<double> IntervalSet::bounds() const
{
    std::vector<double> out;
    for (const auto& i : items_) {
        out.push_back(i.lo);
        if (!i.isolated()) {
            out.push_back(i.hi);
        }
    }
    return out;
}

double max_bound_difference(const IntervalSet& a, const IntervalSet& b)
{
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max({worst, std::abs(a.intervals()[i].lo - b.intervals()[i].lo),
            std::abs(a.intervals()[i].hi - b.intervals()[i].hi)});
    }
    return worst;
}

} // namespace cayley
