#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bladeprof {

// Closed ordinate interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 1.0;

    Interval() = default;
    Interval(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi))
            throw std::invalid_argument("interval requires finite lo < hi");
    }

    double span() const { return hi - lo; }

    // Membership with a small slack so that roundoff at the endpoints
    // (event landings, quadrature nodes) does not spuriously reject.
    bool contains(double y, double slack_ulps = 1e3) const {
        const double eps = slack_ulps * 1e-16 * std::max({1.0, std::abs(lo), std::abs(hi)});
        return y >= lo - eps && y <= hi + eps;
    }

    double clamp(double y) const { return std::min(hi, std::max(lo, y)); }
};

} // namespace bladeprof
