#pragma once

#include <algorithm>
#include <array>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

#include "voigt/continued_fraction.hpp"
#include "voigt/detail/parallel.hpp"
#include "voigt/sampling.hpp"
#include "voigt/types.hpp"

namespace voigt {

enum class FadsampBranch { sampling, symmetrized, continued_fraction };

inline constexpr double kFadsampRadius = 8.0;
inline constexpr int kFadsampDepth = 11;

inline FadsampBranch fadsamp_branch(complex z) {
    if (std::abs(z) <= kFadsampRadius)
        return z.imag() > 0.05 * z.real() ? FadsampBranch::sampling : FadsampBranch::symmetrized;
    return FadsampBranch::continued_fraction;
}

/// Three-branch evaluator: sampling form inside |z| <= 8 away from the real axis,
/// symmetrized form inside |z| <= 8 for y <= 0.05x, Laplace continued fraction outside.
inline complex fadsamp(complex z, const SamplingCoefficients& k = default_sampling_coefficients()) {
    detail::require_finite(z, "fadsamp");
    switch (fadsamp_branch(z)) {
        case FadsampBranch::sampling: return w_sampling(z, k);
        case FadsampBranch::symmetrized: return w_symmetrized(z, k);
        case FadsampBranch::continued_fraction: break;
    }
    return w_continued_fraction(z, kFadsampDepth);
}

/// Array form. Inner-region elements are evaluated in place; continued-fraction elements are
/// gathered per block and evaluated level by level. Output is element-wise identical to the
/// scalar overload.
inline void fadsamp(std::span<const complex> z, std::span<complex> out,
                    const SamplingCoefficients& k = default_sampling_coefficients()) {
    if (z.size() != out.size()) throw std::invalid_argument("fadsamp: output size mismatch");
    detail::parallel_for(z.size(), [&](std::size_t begin, std::size_t end) {
        constexpr std::size_t kBlock = 256;
        std::array<std::size_t, kBlock> idx;
        std::array<complex, kBlock> tail;
        for (std::size_t start = begin; start < end; start += kBlock) {
            const std::size_t stop = std::min(end, start + kBlock);
            std::size_t m = 0;
            for (std::size_t i = start; i < stop; ++i) {
                detail::require_finite(z[i], "fadsamp");
                switch (fadsamp_branch(z[i])) {
                    case FadsampBranch::sampling: out[i] = w_sampling(z[i], k); break;
                    case FadsampBranch::symmetrized: out[i] = w_symmetrized(z[i], k); break;
                    case FadsampBranch::continued_fraction: idx[m++] = i; break;
                }
            }
            detail::continued_fraction_batch([&](std::size_t i) { return z[i]; }, std::span(idx.data(), m),
                                            kFadsampDepth, tail, out);
        }
    });
}

inline std::vector<complex> fadsamp(std::span<const complex> z,
                                    const SamplingCoefficients& k = default_sampling_coefficients()) {
    std::vector<complex> out(z.size());
    fadsamp(z, out, k);
    return out;
}

}  // namespace voigt
