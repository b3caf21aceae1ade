#pragma once

// Sampling-based rational approximation of w(z) (incomplete cosine expansion of
// the sinc function) and its symmetrized form for the region near the real axis.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "voigt/error.hpp"
#include "voigt/types.hpp"

namespace voigt {

struct SamplingParams {
    int terms = 23;          // M
    int half_range = 23;     // N, sampling sum runs over n = -N..N
    double step = 0.25;      // h
    double shift = 2.75;     // varsigma

    void validate() const {
        if (terms < 1) throw ParameterError("SamplingParams: M must be positive");
        if (half_range < 1) throw ParameterError("SamplingParams: N must be positive");
        if (!(step > 0.0) || !std::isfinite(step))
            throw ParameterError("SamplingParams: h must be positive and finite");
        if (!(shift > 0.0) || !std::isfinite(shift))
            throw ParameterError("SamplingParams: varsigma must be positive and finite");
    }
};

/// Expansion coefficients of the sampling approximation. a, c, gamma, theta are real;
/// b (= beta) and alpha are purely imaginary.
struct SamplingCoefficients {
    SamplingParams params;
    std::vector<double> a;
    std::vector<complex> b;
    std::vector<double> c;
    std::vector<complex> alpha;
    std::vector<complex> beta;
    std::vector<double> gamma;
    std::vector<double> theta;

    std::size_t size() const { return a.size(); }
};

inline SamplingCoefficients build_sampling_coefficients(const SamplingParams& params) {
    params.validate();
    const int M = params.terms;
    const int N = params.half_range;
    const double h = params.step;
    const double s = params.shift;
    const double pi = std::numbers::pi;

    SamplingCoefficients k;
    k.params = params;
    k.a.resize(M);
    k.b.resize(M);
    k.c.resize(M);
    k.alpha.resize(M);
    k.beta.resize(M);
    k.gamma.resize(M);
    k.theta.resize(M);

    std::vector<double> weight(2 * N + 1);
    for (int n = -N; n <= N; ++n)
        weight[n + N] = std::exp(s * s / 4.0 - double(n) * n * h * h);

    for (int m = 1; m <= M; ++m) {
        const double mh = m - 0.5;
        double sin_sum = 0.0;
        double cos_sum = 0.0;
        for (int n = -N; n <= N; ++n) {
            const double arg = pi * mh * (n * h + s / 2.0) / (M * h);
            sin_sum += weight[n + N] * std::sin(arg);
            cos_sum += weight[n + N] * std::cos(arg);
        }
        const std::size_t i = m - 1;
        k.a[i] = kSqrtPi * mh / (2.0 * M * M * h) * sin_sum;
        k.b[i] = complex(0.0, -cos_sum / (M * kSqrtPi));
        k.c[i] = pi * mh / (2.0 * M * h);

        const double c2 = k.c[i] * k.c[i];
        k.alpha[i] = k.b[i] * (c2 - s * s / 4.0) + complex(0.0, k.a[i] * s);
        k.beta[i] = k.b[i];
        k.gamma[i] = c2 * c2 + c2 * s * s / 2.0 + s * s * s * s / 16.0;
        k.theta[i] = 2.0 * c2 - s * s / 2.0;
    }
    return k;
}

/// Coefficients for the default parameters (M = N = 23, h = 0.25, varsigma = 2.75).
inline const SamplingCoefficients& default_sampling_coefficients() {
    static const SamplingCoefficients coeffs = build_sampling_coefficients(SamplingParams{});
    return coeffs;
}

/// Omega(z + i varsigma/2). Accurate for |z| <= 8 away from the real axis.
inline complex w_sampling(complex z, const SamplingCoefficients& k = default_sampling_coefficients()) {
    detail::require_finite(z, "w_sampling");
    const complex u = z + complex(0.0, k.params.shift / 2.0);
    const complex u2 = u * u;
    complex sum = 0.0;
    for (std::size_t m = 0; m < k.size(); ++m)
        sum += (k.a[m] + k.b[m] * u) / (k.c[m] * k.c[m] - u2);
    return sum;
}

/// e^{-z^2} + z * sum (alpha - beta z^2) / (gamma - theta z^2 + z^4), the odd part of the
/// sampling approximation added to the exact even part. Used for |z| <= 8 near the real axis.
inline complex w_symmetrized(complex z, const SamplingCoefficients& k = default_sampling_coefficients()) {
    detail::require_finite(z, "w_symmetrized");
    const complex z2 = z * z;
    const complex z4 = z2 * z2;
    complex sum = 0.0;
    for (std::size_t m = 0; m < k.size(); ++m)
        sum += (k.alpha[m] - k.beta[m] * z2) / (k.gamma[m] - k.theta[m] * z2 + z4);
    return std::exp(-z2) + z * sum;
}

}  // namespace voigt
