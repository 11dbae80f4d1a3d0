#include "cayley/oracle.hpp"

#include "cayley/error.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace cayley {

std::size_t worker_threads()
{
    std::size_t hw = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("CSPACE_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) {
                hw = std::min(hw, static_cast<std::size_t>(v));
            }
        } catch (const std::exception&) {
        }
    }
    return hw;
}

namespace {

template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn)
{
    const std::size_t threads = std::min(worker_threads(), n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n && !failed; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) {
                        failure = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

} // namespace

bool realizable_at(const Linkage& l, double dstar, const Tolerance& tol, std::size_t step_cap)
{
    if (!(dstar > 0.0)) {
        return false;
    }
    try {
        return any_orientation_realizes(completed(l, dstar), tol, step_cap);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateStep) {
            return false;
        }
        throw;
    }
}

SweepProfile sweep(const Linkage& l, double lo, double hi, std::size_t n, const Tolerance& tol, double refine_width,
    std::size_t step_cap)
{
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw Error(ErrorCode::PreconditionViolated, "sweep needs 0 < lo < hi and n >= 2");
    }
    SweepProfile p;
    p.grid.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.grid[i] = i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    std::vector<char> flags(n, 0);
    parallel_for(n, [&](std::size_t i) { flags[i] = realizable_at(l, p.grid[i], tol, step_cap) ? 1 : 0; });
    p.realizable.assign(flags.begin(), flags.end());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (p.realizable[i] == p.realizable[i + 1]) {
            continue;
        }
        double yes = p.realizable[i] ? p.grid[i] : p.grid[i + 1];
        double no = p.realizable[i] ? p.grid[i + 1] : p.grid[i];
        while (std::abs(yes - no) > refine_width) {
            const double mid = 0.5 * (yes + no);
            if (mid == yes || mid == no) {
                break;
            }
            (realizable_at(l, mid, tol, step_cap) ? yes : no) = mid;
        }
        p.boundaries.push_back(yes);
    }
    return p;
}

SweepRange default_sweep_range(const Linkage& l, double a_min, const Tolerance& tol)
{
    const double total = l.total_length();
    SweepRange r;
    r.lo = a_min > 0.0 ? std::max(tol.abs_tol, 0.5 * a_min) : std::max(tol.abs_tol, 1e-6 * total);
    r.hi = 1.25 * total;
    return r;
}

IntervalSet profile_intervals(const SweepProfile& p, bool floor_reaches_zero)
{
    std::vector<Interval> items;
    std::size_t b = 0;
    const std::size_t n = p.grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!p.realizable[i] || (i > 0 && p.realizable[i - 1])) {
            continue;
        }
        Interval it;
        if (i == 0) {
            it.lo = floor_reaches_zero ? 0.0 : p.grid[0];
        } else {
            it.lo = p.boundaries[b++];
        }
        std::size_t j = i;
        while (j + 1 < n && p.realizable[j + 1]) {
            ++j;
        }
        it.hi = j + 1 < n ? p.boundaries[b++] : p.grid[n - 1];
        items.push_back(it);
    }
    return IntervalSet::normalized(std::move(items), 0.0);
}

IntervalSet oracle_config_space(const Linkage& l, std::size_t n, const Tolerance& tol, std::size_t step_cap)
{
    const auto range = default_sweep_range(l, 0.0, tol);
    return profile_intervals(sweep(l, range.lo, range.hi, n, tol, 1e-9, step_cap), true);
}

} // namespace cayley
