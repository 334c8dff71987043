#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bicomb/bicombing.hpp"

namespace bicomb {

/// Stopping rule for the midpoint iteration.
struct MidpointConfig {
    double tol = 1e-10;
    int max_iter = 64;

    void validate() const
    {
        if (!(tol > 0.0)) throw std::invalid_argument("MidpointConfig: tol must be > 0");
        if (max_iter < 1) throw std::invalid_argument("MidpointConfig: max_iter must be >= 1");
    }
};

/// Raised when the iterates have not met within max_iter steps, i.e. the base
/// bicombing does not contract the pair (it is not conical there).
class MidpointDivergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <class P>
struct MidpointTrace {
    P point;
    /// gaps[n] = d(x_n, y_n); the last entry is <= tol.
    std::vector<double> gaps;
};

/// Runs x_{n+1} = b(x_n, y_n, 1/2), y_{n+1} = b(y_n, x_n, 1/2) from (x, y) and
/// returns x_N for the first N with d(x_N, y_N) <= tol.
///
/// For a conical base the gaps at least halve at every step, so the iterates
/// converge to a common point m(x, y) with m(x, y) = m(y, x) and
/// d(x, m) = d(y, m) = d(x, y) / 2.
template <class B, class P = typename B::point_type>
MidpointTrace<P> midpoint_trace(const B& base, P x, P y, const MidpointConfig& cfg = {})
{
    cfg.validate();
    MidpointTrace<P> trace{x, {}};
    double gap = base.distance(x, y);
    trace.gaps.push_back(gap);
    for (int n = 0; gap > cfg.tol; ++n) {
        if (n == cfg.max_iter)
            throw MidpointDivergence("midpoint: gap " + std::to_string(gap) + " still above tolerance after "
                                     + std::to_string(cfg.max_iter) + " iterations");
        P next_x = base(x, y, 0.5);
        P next_y = base(y, x, 0.5);
        x = std::move(next_x);
        y = std::move(next_y);
        gap = base.distance(x, y);
        trace.gaps.push_back(gap);
    }
    trace.point = std::move(x);
    return trace;
}

template <class B, class P = typename B::point_type>
P midpoint(const B& base, P x, P y, const MidpointConfig& cfg = {})
{
    return midpoint_trace(base, std::move(x), std::move(y), cfg).point;
}

/// The reversible bicombing (x, y, t) -> m(b(x, y, t), b(y, x, 1 - t)).
///
/// Conical, reversible and geodesic up to a few multiples of cfg.tol when the
/// base is conical. Each query runs one midpoint iteration.
Bicombing reversibilize(const Bicombing& base, MidpointConfig cfg = {});

}  // namespace bicomb
