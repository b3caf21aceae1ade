#pragma once

// Reference w(z) for error analysis. Three mechanisms with unrelated error sources:
// Maclaurin series (extended precision) near the origin, the trapezoidal dispatch at
// N = 24 in the middle band, and a depth-16 Laplace continued fraction far out.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>

#include "voigt/continued_fraction.hpp"
#include "voigt/error.hpp"
#include "voigt/trapezoidal.hpp"
#include "voigt/types.hpp"

namespace voigt {

enum class OracleRegion { series, trap, cf };

struct OracleResult {
    complex value;
    double est_accuracy;  // bound on the relative error, from measured inter-method agreement
    OracleRegion region;
};

namespace oracle {

inline constexpr double kSeriesRadius = 2.0;
inline constexpr double kCfRadius = 8.0;
inline constexpr double kMaxModulus = 1e4;
inline constexpr int kTrapOrder = 24;
inline constexpr int kCfDepth = 16;

/// w(z) = sum_{n>=0} (iz)^n / Gamma(n/2 + 1), summed in long double. Even and odd terms
/// follow t_n = t_{n-2} (iz)^2 / (n/2).
inline complex series(complex z) {
    using ld = long double;
    using cld = std::complex<ld>;
    const cld iz(-ld(z.imag()), ld(z.real()));
    const cld iz2 = iz * iz;
    cld even = 1.0L;
    cld odd = iz * (2.0L / std::sqrt(std::numbers::pi_v<ld>));  // 1/Gamma(3/2)
    cld sum = even + odd;
    const ld peak = 2.0L * std::norm(iz);
    for (int n = 2; n < 400; n += 2) {
        even *= iz2 / ld(0.5L * n);
        odd *= iz2 / ld(0.5L * (n + 1));
        sum += even + odd;
        const ld tol = 1e-18L * std::abs(sum);
        if (n > peak && std::abs(even) < tol && std::abs(odd) < tol) break;
    }
    return {double(sum.real()), double(sum.imag())};
}

inline const TrapParams& trap_params() {
    static const TrapParams params(kTrapOrder);
    return params;
}

inline complex trap(complex z) { return wtrap(z, trap_params()); }

inline complex continued_fraction(complex z) { return w_continued_fraction(z, kCfDepth); }

struct OverlapAgreement {
    double series_trap;  // max relative disagreement on |z| in [1.9, 2.1]
    double trap_cf;      // max relative disagreement on |z| in [7.9, 8.1]
};

inline double relative_gap(complex a, complex b) { return std::abs(a - b) / std::abs(b); }

/// Sweeps both overlap annuli in the closed upper half-plane (radius and angle on a
/// regular lattice) and returns the worst relative disagreement of each method pair.
inline OverlapAgreement measure_overlap(std::size_t samples = 1000) {
    OverlapAgreement out{0.0, 0.0};
    const std::size_t radii = 10;
    const std::size_t angles = std::max<std::size_t>(1, samples / radii);
    for (std::size_t i = 0; i < radii; ++i) {
        const double f = double(i) / double(radii - 1);
        for (std::size_t j = 0; j < angles; ++j) {
            // angles in (0, pi), endpoints excluded so y > 0
            const double theta = std::numbers::pi * (double(j) + 0.5) / double(angles);
            const complex dir = std::polar(1.0, theta);
            const complex a = (1.9 + 0.2 * f) * dir;
            const complex b = (7.9 + 0.2 * f) * dir;
            out.series_trap = std::max(out.series_trap, relative_gap(series(a), trap(a)));
            out.trap_cf = std::max(out.trap_cf, relative_gap(trap(b), continued_fraction(b)));
        }
    }
    return out;
}

inline const OverlapAgreement& calibration() {
    static const OverlapAgreement agreement = measure_overlap();
    return agreement;
}

}  // namespace oracle

/// Reference value for y >= 0, |z| <= 1e4.
inline OracleResult w_reference(complex z) {
    detail::require_finite(z, "w_reference");
    const double r = std::abs(z);
    if (z.imag() < 0.0 || r > oracle::kMaxModulus)
        throw OracleDomainError("w_reference: outside y >= 0, |z| <= 1e4");
    constexpr double floor = 0x1p-52;
    const auto& cal = oracle::calibration();
    if (r <= oracle::kSeriesRadius)
        return {oracle::series(z), std::max(floor, cal.series_trap), OracleRegion::series};
    if (r < oracle::kCfRadius)
        return {oracle::trap(z), std::max({floor, cal.series_trap, cal.trap_cf}), OracleRegion::trap};
    return {oracle::continued_fraction(z), std::max(floor, cal.trap_cf), OracleRegion::cf};
}

}  // namespace voigt
