#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "voigt/types.hpp"

namespace test_support {

using voigt::complex;

struct Reference {
    double x, y, re, im;
    complex value() const { return {re, im}; }
};

// High-precision w(z), correctly rounded; see reference/make_reference_values.py.
inline const std::vector<Reference>& reference_table() {
    static const std::vector<Reference> table = {
#include "reference/reference_values.inc"
    };
    return table;
}

// 1000 quasi-random points, x in [0, 10], y in [1e-8, 10]; see reference/make_probe_values.py.
inline const std::vector<Reference>& probe_table() {
    static const std::vector<Reference> table = {
#include "reference/probe_values.inc"
    };
    return table;
}

inline complex reference(double x, double y) {
    for (const auto& r : reference_table())
        if (r.x == x && r.y == y) return r.value();
    throw std::out_of_range("no frozen reference value for this point");
}

inline double rel_err(complex a, complex ref) { return std::abs(a - ref) / std::abs(ref); }

/// Radical-inverse sequence in the given prime base.
inline double halton(std::size_t i, unsigned base) {
    double f = 1.0, r = 0.0;
    for (std::size_t n = i + 1; n > 0; n /= base) {
        f /= base;
        r += f * double(n % base);
    }
    return r;
}

inline std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * double(i) / double(n - 1);
    if (n > 1) v.back() = b;
    return v;
}

inline std::vector<double> logspace(double a, double b, std::size_t n) {
    auto v = linspace(std::log10(a), std::log10(b), n);
    for (auto& e : v) e = std::pow(10.0, e);
    v.front() = a;
    v.back() = b;
    return v;
}

}  // namespace test_support
