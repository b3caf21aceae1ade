#pragma once

// Adaptive two-domain evaluator of w(x + iy) for an array of x at one y.
//
// Inside the disk |x + iy| <= r, w is spline-interpolated along x through nodes on a
// logarithmic grid whose size grows as y shrinks, N = 1/sqrt(y) + delta (or
// 2/sqrt(y) + 3 delta for the enhanced density). Outside the disk a four-level
// continued fraction is used. Below y_floor the grid would be impractically large and
// the node generator is called directly.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "voigt/continued_fraction.hpp"
#include "voigt/detail/parallel.hpp"
#include "voigt/error.hpp"
#include "voigt/fadsamp.hpp"
#include "voigt/spline.hpp"
#include "voigt/types.hpp"

namespace voigt {

enum class GridDensity { basic, enhanced };

struct TwoDomainConfig {
    double radius = 35.0;
    double offset = 5e3;
    double y_floor = 1e-8;
    GridDensity density = GridDensity::basic;
    double epsilon_anchor = 0x1p-52;

    void validate() const {
        auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
        if (!positive(radius)) throw ParameterError("TwoDomainConfig: radius must be positive");
        if (!positive(offset)) throw ParameterError("TwoDomainConfig: offset must be positive");
        if (!positive(y_floor)) throw ParameterError("TwoDomainConfig: y_floor must be positive");
        if (!positive(epsilon_anchor) || epsilon_anchor >= 1.0)
            throw ParameterError("TwoDomainConfig: epsilon_anchor must lie in (0, 1)");
    }
};

enum class OutputOption : int { real_part = 1, imag_part = 2, complex_full = 3 };

inline OutputOption output_option(int opt) {
    if (opt != 1 && opt != 2 && opt != 3)
        throw InvalidOptionError("Wrong parameter opt = " + std::to_string(opt) + "! Use 1, 2 or 3.");
    return static_cast<OutputOption>(opt);
}

/// Node count for one half of the grid, floored, never below 4.
inline std::size_t grid_count(double y, const TwoDomainConfig& cfg = {}) {
    cfg.validate();
    if (!std::isfinite(y) || y < cfg.y_floor)
        throw ContractError("grid_count: y = " + std::to_string(y) + " is below the interpolation floor");
    const double inv_sqrt = 1.0 / std::sqrt(y);
    const double n = cfg.density == GridDensity::basic ? inv_sqrt + cfg.offset : 2.0 * inv_sqrt + 3.0 * cfg.offset;
    return std::max<std::size_t>(4, static_cast<std::size_t>(std::floor(n)));
}

/// Odd-symmetric interpolation grid [-g_n .. -g_1, g_1 .. g_n], g_j = r (10^l_j - 1) with
/// l_j equally spaced from log10(1 + eps) to log10(2). Endpoints are pinned to r*eps and r.
inline std::vector<double> build_grid(double y, const TwoDomainConfig& cfg = {}) {
    const std::size_t n = grid_count(y, cfg);
    const double r = cfg.radius;
    const double lo = std::log10(1.0 + cfg.epsilon_anchor);
    const double hi = std::log10(2.0);
    const double step = (hi - lo) / double(n - 1);

    std::vector<double> grid(2 * n);
    for (std::size_t j = 0; j < n; ++j) {
        double g;
        if (j == 0)
            g = r * cfg.epsilon_anchor;
        else if (j == n - 1)
            g = r;
        else
            g = r * (std::pow(10.0, lo + double(j) * step) - 1.0);
        grid[n + j] = g;
        grid[n - 1 - j] = -g;
    }
    return grid;
}

/// Anything with fadsamp's contract can supply node values.
using NodeGenerator = std::function<complex(complex)>;

inline complex default_node_generator(complex z) { return fadsamp(z); }

/// Two-phase evaluator: construction fixes y and builds the grid and spline once; calls
/// then evaluate any number of x values at that y.
class TwoDomainEvaluator {
public:
    static constexpr int kExternalDepth = 4;

    explicit TwoDomainEvaluator(double y, TwoDomainConfig cfg = {}, NodeGenerator gen = default_node_generator)
        : y_(y), cfg_(cfg), gen_(std::move(gen)) {
        cfg_.validate();
        if (!std::isfinite(y)) throw InputDomainError("TwoDomainEvaluator: non-finite y");
        if (!(y > 0.0)) throw InputDomainError("TwoDomainEvaluator: y must be positive");
        if (!gen_) throw ParameterError("TwoDomainEvaluator: empty node generator");
        if (bypass()) return;
        std::vector<double> grid = build_grid(y, cfg_);
        std::vector<complex> nodes(grid.size());
        detail::parallel_for(grid.size(), [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) nodes[i] = gen_(complex(grid[i], y_));
        });
        spline_.emplace(std::move(grid), std::span<const complex>(nodes));
    }

    double y() const { return y_; }
    const TwoDomainConfig& config() const { return cfg_; }
    bool bypass() const { return y_ < cfg_.y_floor; }
    bool is_internal(double x) const { return std::abs(complex(x, y_)) <= cfg_.radius; }

    /// Interpolation grid (empty on the bypass path).
    std::span<const double> grid() const {
        return spline_ ? spline_->knots() : std::span<const double>{};
    }

    complex operator()(double x) const {
        if (!std::isfinite(x)) throw InputDomainError("TwoDomainEvaluator: non-finite x");
        if (bypass()) return gen_(complex(x, y_));
        return is_internal(x) ? (*spline_)(x) : w_cf_external(complex(x, y_));
    }

    /// Spline path regardless of |x + iy|; x must lie within [-r, r].
    complex internal(double x) const {
        if (!spline_) throw ContractError("TwoDomainEvaluator: no interpolation grid on the bypass path");
        return (*spline_)(x);
    }

    /// Continued-fraction path regardless of |x + iy|.
    complex external(double x) const { return w_cf_external(complex(x, y_)); }

    /// Array form, element-wise identical to operator(). External elements are gathered per
    /// block and their continued fractions evaluated level by level.
    void evaluate(std::span<const double> xs, std::span<complex> out) const {
        if (xs.size() != out.size()) throw std::invalid_argument("TwoDomainEvaluator: output size mismatch");
        detail::parallel_for(xs.size(), [&](std::size_t begin, std::size_t end) {
            constexpr std::size_t kBlock = 256;
            std::array<std::size_t, kBlock> idx;
            std::array<complex, kBlock> tail;
            const auto z_at = [&](std::size_t i) { return complex(xs[i], y_); };
            for (std::size_t start = begin; start < end; start += kBlock) {
                const std::size_t stop = std::min(end, start + kBlock);
                std::size_t m = 0;
                for (std::size_t i = start; i < stop; ++i) {
                    if (!std::isfinite(xs[i])) throw InputDomainError("TwoDomainEvaluator: non-finite x");
                    if (bypass())
                        out[i] = gen_(z_at(i));
                    else if (is_internal(xs[i]))
                        out[i] = (*spline_)(xs[i]);
                    else
                        idx[m++] = i;
                }
                detail::continued_fraction_batch(z_at, std::span(idx.data(), m), kExternalDepth, tail, out);
            }
        });
    }

    std::vector<complex> evaluate(std::span<const double> xs) const {
        std::vector<complex> out(xs.size());
        evaluate(xs, out);
        return out;
    }

private:
    double y_;
    TwoDomainConfig cfg_;
    NodeGenerator gen_;
    std::optional<CubicSpline<complex>> spline_;
};

/// One-shot evaluation of w(x + iy) for every x. The grid and spline are built only
/// when some x falls inside the disk.
inline std::vector<complex> two_domain(std::span<const double> xs, double y, const TwoDomainConfig& cfg = {}) {
    cfg.validate();
    if (!std::isfinite(y)) throw InputDomainError("two_domain: non-finite y");
    if (!(y > 0.0)) throw InputDomainError("two_domain: y must be positive");
    bool any_internal = y < cfg.y_floor;
    for (double x : xs) {
        if (!std::isfinite(x)) throw InputDomainError("two_domain: non-finite x");
        any_internal = any_internal || std::abs(complex(x, y)) <= cfg.radius;
    }
    std::vector<complex> out(xs.size());
    if (any_internal) {
        TwoDomainEvaluator(y, cfg).evaluate(xs, out);
    } else {
        std::vector<std::size_t> idx(xs.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::vector<complex> tail(xs.size());
        detail::continued_fraction_batch([&](std::size_t i) { return complex(xs[i], y); }, idx,
                                         TwoDomainEvaluator::kExternalDepth, tail, out);
    }
    return out;
}

using TwoDomainOutput = std::variant<std::vector<double>, std::vector<complex>>;

inline TwoDomainOutput project(std::vector<complex> values, OutputOption opt) {
    if (opt == OutputOption::complex_full) return values;
    std::vector<double> part(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        part[i] = opt == OutputOption::real_part ? values[i].real() : values[i].imag();
    return part;
}

/// Array entry point with an output selector: y must hold exactly one value, opt picks
/// K (1), L (2) or w (3). When opt is omitted it defaults to 3 and a notice is written.
inline TwoDomainOutput w2dom(std::span<const double> xs, std::span<const double> y, std::optional<int> opt = {},
                             const TwoDomainConfig& cfg = {}, std::ostream* notices = nullptr) {
    if (y.size() != 1) throw ContractError("Input parameter y must be a scalar");
    if (!opt) {
        if (notices) *notices << "Default value opt = 3 is assigned.\n";
        opt = 3;
    }
    const OutputOption option = output_option(*opt);
    return project(two_domain(xs, y.front(), cfg), option);
}

inline TwoDomainOutput w2dom(std::span<const double> xs, double y, std::optional<int> opt = {},
                             const TwoDomainConfig& cfg = {}, std::ostream* notices = nullptr) {
    return w2dom(xs, std::span<const double>(&y, 1), opt, cfg, notices);
}

}  // namespace voigt
