#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace graphcvx {

// Values live in R ∪ {+inf}. -inf and NaN never occur.
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

inline bool is_extended_real(double v) { return !std::isnan(v) && v != -kInfinity; }

// Scaling by a nonnegative coefficient with 0 * (+inf) = 0.
inline double scale(double coefficient, double v) {
    if (coefficient == 0.0) return 0.0;
    return coefficient * v;
}

// Relative comparison: |a - b| <= eps * max(1, |a|, |b|) counts as equal.
struct Tolerance {
    double eps = 1e-9;

    bool equal(double a, double b) const {
        if (a == b) return true;
        if (!std::isfinite(a) || !std::isfinite(b)) return false;
        const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
        return std::fabs(a - b) <= eps * scale;
    }

    // Anything is <= +inf; +inf <= finite is false.
    bool less_equal(double a, double b) const { return a <= b || equal(a, b); }
};

}  // namespace graphcvx
