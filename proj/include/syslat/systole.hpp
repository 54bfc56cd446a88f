#pragma once

// Lower bounds for translation lengths, in double precision with a
// running error estimate. Nothing here feeds back into exact code.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "syslat/error.hpp"
#include "syslat/lucas.hpp"

namespace syslat {

struct LengthBound {
    double value = 0.0;
    /// Estimated absolute error of value.
    double abs_error = 0.0;
    /// The trace or prime level the bound was computed from.
    double input = 0.0;
    int m = 0;
};

namespace detail {
constexpr double kEps = std::numeric_limits<double>::epsilon();

/// acosh(x) for x >= 1 as log1p(y + sqrt(y (y + 2))) with y = x - 1, which
/// keeps full relative accuracy near x = 1.
inline double acosh_stable(double x, double& abs_error) {
    const double y = x - 1.0;
    const double r = std::log1p(y + std::sqrt(y * (y + 2.0)));
    // A handful of correctly rounded operations, each contributing half an ulp.
    abs_error = 4.0 * kEps * (r > 1.0 ? r : 1.0);
    return r;
}
} // namespace detail

/// sqrt(2) acosh(max(1, |tr| / m)); requires |tr| >= 1.
inline LengthBound trace_length_lower_bound(double trace_abs, int m) {
    if (m < 1) fail(ErrorCode::InvalidArgument, "dimension must be positive");
    if (!(trace_abs >= 1.0)) fail(ErrorCode::HypothesisViolated, "|tr| must be at least 1");
    const double x = trace_abs / m;
    LengthBound b{0.0, 0.0, trace_abs, m};
    if (x <= 1.0) return b;
    double err = 0.0;
    const double a = detail::acosh_stable(x, err);
    b.value = std::sqrt(2.0) * a;
    b.abs_error = std::sqrt(2.0) * err + b.value * 2.0 * detail::kEps;
    return b;
}

/// (2 sqrt 2 / m) acosh(p/m - 1) when p/m >= 2, otherwise 0. This is the
/// supremum over admissible M (2 <= M <= p/m) of the level-p bound.
inline LengthBound congruence_systole_lower_bound(double p, int m) {
    if (m < 2) fail(ErrorCode::InvalidArgument, "dimension must be at least 2");
    LengthBound b{0.0, 0.0, p, m};
    const double ratio = p / m;
    if (ratio < 2.0) return b;
    double err = 0.0;
    const double a = detail::acosh_stable(ratio - 1.0, err);
    const double scale = 2.0 * std::sqrt(2.0) / m;
    b.value = scale * a;
    b.abs_error = scale * err + b.value * 3.0 * detail::kEps;
    return b;
}

inline LengthBound congruence_systole_lower_bound(const BigInt& p, int m) {
    return congruence_systole_lower_bound(p.get_d(), m);
}

struct SystoleRow {
    unsigned n = 0;
    BigInt t;
    BigInt y;
    BigInt p;
    LengthBound bound;
};

/// The selected primes joined with their congruence bounds in dimension m.
inline std::vector<SystoleRow> systole_report(std::int64_t d, unsigned depth, PrimeRule rule, int m = 8) {
    std::vector<SystoleRow> out;
    for (const auto& r : select_prime_sequence(d, depth, rule).rows)
        out.push_back({r.n, r.t, r.y, r.p, congruence_systole_lower_bound(r.p, m)});
    return out;
}

} // namespace syslat
