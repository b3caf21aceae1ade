#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "voigt/error.hpp"
#include "voigt/types.hpp"

namespace voigt {

/// Laplace continued fraction
///   (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ... - (depth/2)/z))))
/// evaluated from the innermost level outwards. depth = 11 is the production order
/// for |z| > 8.
inline complex w_continued_fraction(complex z, int depth = 11) {
    if (depth < 1) throw ParameterError("w_continued_fraction: depth must be >= 1");
    detail::require_finite(z, "w_continued_fraction");
    complex tail = (0.5 * depth) / z;
    for (int k = depth - 1; k >= 1; --k) tail = (0.5 * k) / (z - tail);
    return kIOverSqrtPi / (z - tail);
}

namespace detail {

/// w_continued_fraction over a gathered set of elements, level by level, so the divisions of
/// different elements are independent. Results are bitwise those of the scalar routine.
/// z_at(i) yields the (finite) argument of element i; tail must hold idx.size() elements.
template <class ZAt>
void continued_fraction_batch(ZAt&& z_at, std::span<const std::size_t> idx, int depth, std::span<complex> tail,
                              std::span<complex> out) {
    const std::size_t m = idx.size();
    for (std::size_t j = 0; j < m; ++j) tail[j] = (0.5 * depth) / z_at(idx[j]);
    for (int k = depth - 1; k >= 1; --k)
        for (std::size_t j = 0; j < m; ++j) tail[j] = (0.5 * k) / (z_at(idx[j]) - tail[j]);
    for (std::size_t j = 0; j < m; ++j) out[idx[j]] = kIOverSqrtPi / (z_at(idx[j]) - tail[j]);
}

}  // namespace detail

/// Four-level fraction used outside the two-domain radius: partial numerators
/// 1/2, 1, 3/2, 2, unrolled innermost first.
inline complex w_cf_external(complex z) {
    detail::require_finite(z, "w_cf_external");
    complex e = 2.0 / z;
    e = 1.5 / (z - e);
    e = 1.0 / (z - e);
    e = 0.5 / (z - e);
    return kIOverSqrtPi / (z - e);
}

/// True outside the ellipse x^2/27^2 + y^2/15^2 = 1 where the one-level rational form applies.
inline bool outside_rational_ellipse(double x, double y) {
    return x * x / (27.0 * 27.0) + y * y / (15.0 * 15.0) > 1.0;
}

/// One-level rational form (i/sqrt(pi)) / (z - (1/2)/z). Only the outer branch of the
/// legacy two-domain scheme; the region inside the ellipse is rejected.
inline complex kuntz_rational(complex z) {
    detail::require_finite(z, "kuntz_rational");
    if (!outside_rational_ellipse(z.real(), z.imag()))
        throw InputDomainError("kuntz_rational: argument inside the x^2/27^2 + y^2/15^2 <= 1 ellipse");
    return kIOverSqrtPi / (z - 0.5 / z);
}

struct KuntzCoefficients {
    double a1, b1, a2, b2;
};

inline KuntzCoefficients kuntz_coefficients(double y) {
    const double y2 = y * y;
    return {y / (2.0 * kSqrtPi) + y * y2 / kSqrtPi, y / kSqrtPi, 0.25 + y2 + y2 * y2, -1.0 + 2.0 * y2};
}

/// K(x, y) ~ (a1 + b1 x^2) / (a2 + b2 x^2 + x^4); equal to Re kuntz_rational(x + iy).
inline double kuntz_voigt(double x, double y) {
    const auto k = kuntz_coefficients(y);
    const double x2 = x * x;
    return (k.a1 + k.b1 * x2) / (k.a2 + k.b2 * x2 + x2 * x2);
}

}  // namespace voigt
