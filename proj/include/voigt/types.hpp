#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "voigt/error.hpp"

namespace voigt {

using complex = std::complex<double>;

inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kInvSqrtPi = 0.56418958354775628695;  // 1/sqrt(pi)
inline constexpr complex kIOverSqrtPi{0.0, kInvSqrtPi};

/// Argument z = x + iy. K(x, y) and L(x, y) are the real and imaginary parts of w(z).
struct ComplexPoint {
    double x = 0.0;
    double y = 0.0;

    constexpr ComplexPoint() = default;
    constexpr ComplexPoint(double x_, double y_) : x(x_), y(y_) {}
    constexpr ComplexPoint(complex z) : x(z.real()), y(z.imag()) {}

    constexpr complex z() const { return {x, y}; }
    constexpr operator complex() const { return z(); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

namespace detail {

inline void require_finite(complex z, const char* who) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw InputDomainError(std::string(who) + ": non-finite argument");
}

}  // namespace detail

}  // namespace voigt
