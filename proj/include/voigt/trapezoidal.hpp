#pragma once

// Modified (residue-corrected) trapezoidal rule approximations of w(z) and the
// pole-free selector between them.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "voigt/detail/parallel.hpp"
#include "voigt/error.hpp"
#include "voigt/types.hpp"

namespace voigt {

/// Order N and step h = sqrt(pi / (N + 1)), plus the node tables the rules sum over:
/// midpoint nodes t_k = (k + 1/2) h, k = 0..N, and integer nodes tau_k = k h, k = 1..N.
class TrapParams {
public:
    explicit TrapParams(int order = 11) : order_(order) {
        if (order < 1) throw ParameterError("TrapParams: order must be >= 1");
        step_ = std::sqrt(std::numbers::pi / (order + 1));
        for (int k = 0; k <= order; ++k) {
            const double t = (k + 0.5) * step_;
            mid_sq_.push_back(t * t);
            mid_weight_.push_back(std::exp(-t * t));
        }
        for (int k = 1; k <= order; ++k) {
            const double t = k * step_;
            int_sq_.push_back(t * t);
            int_weight_.push_back(std::exp(-t * t));
        }
    }

    int order() const { return order_; }
    double step() const { return step_; }

    std::span<const double> midpoint_nodes_sq() const { return mid_sq_; }
    std::span<const double> midpoint_weights() const { return mid_weight_; }
    std::span<const double> integer_nodes_sq() const { return int_sq_; }
    std::span<const double> integer_weights() const { return int_weight_; }

private:
    int order_;
    double step_;
    std::vector<double> mid_sq_, mid_weight_, int_sq_, int_weight_;
};

inline const TrapParams& default_trap_params() {
    static const TrapParams params(11);
    return params;
}

enum class TrapBranch { midpoint, offset, corrected };

namespace detail {

inline constexpr double kPoleThreshold = 1e-290;
// exp() underflows to zero below this exponent.
inline constexpr double kExpUnderflow = -745.2;

inline complex trap_sum(complex z, std::span<const double> nodes_sq, std::span<const double> weights,
                        const char* who) {
    const complex z2 = z * z;
    complex sum = 0.0;
    for (std::size_t k = 0; k < nodes_sq.size(); ++k) {
        const complex d = z2 - nodes_sq[k];
        if (std::abs(d.real()) < kPoleThreshold && std::abs(d.imag()) < kPoleThreshold)
            throw PoleError(std::string(who) + ": argument at a quadrature node");
        sum += weights[k] / d;
    }
    return sum;
}

/// 2 e^{-z^2} / (1 + sign e^{-2 i pi z / h}); sign is +1 for the midpoint nodes and -1 for the
/// integer nodes. When |e^{-2 i pi z/h}| > 1 numerator and denominator are divided through by
/// it so neither exponential can overflow.
inline complex residue_correction(complex z, double h, double sign, const char* who) {
    const complex arg = complex(0.0, -2.0 * std::numbers::pi / h) * z;
    const complex minus_z2 = -(z * z);
    complex exponent;
    complex denom;
    if (arg.real() > 0.0) {
        exponent = minus_z2 - arg;
        if (exponent.real() < kExpUnderflow) return 0.0;
        denom = std::exp(-arg) + sign;
    } else {
        exponent = minus_z2;
        if (exponent.real() < kExpUnderflow) return 0.0;
        denom = 1.0 + sign * std::exp(arg);
    }
    if (std::abs(denom) < kPoleThreshold) throw PoleError(std::string(who) + ": argument at a residue pole");
    return 2.0 * std::exp(exponent) / denom;
}

}  // namespace detail

/// (2ihz/pi) sum_{k=0..N} e^{-t_k^2} / (z^2 - t_k^2). Intended for y >= max(pi/h, x).
inline complex wtrap_midpoint(complex z, const TrapParams& p = default_trap_params()) {
    detail::require_finite(z, "wtrap_midpoint");
    const double h = p.step();
    return complex(0.0, 2.0 * h / std::numbers::pi) * z *
           detail::trap_sum(z, p.midpoint_nodes_sq(), p.midpoint_weights(), "wtrap_midpoint");
}

/// Midpoint rule plus the residue correction 2e^{-z^2}/(1 + e^{-2i pi z/h}).
inline complex wtrap_corrected(complex z, const TrapParams& p = default_trap_params()) {
    detail::require_finite(z, "wtrap_corrected");
    const double h = p.step();
    const complex sum = detail::trap_sum(z, p.midpoint_nodes_sq(), p.midpoint_weights(), "wtrap_corrected");
    return detail::residue_correction(z, h, 1.0, "wtrap_corrected") +
           complex(0.0, 2.0 * h / std::numbers::pi) * z * sum;
}

/// Integer-node rule: 2e^{-z^2}/(1 - e^{-2i pi z/h}) + ih/(pi z) + (2ihz/pi) sum_{k=1..N}.
/// The residue term carries a minus sign for integer nodes; with a plus sign the rule is
/// wrong by up to 1e-1 near the real axis. Intended for y < x with 1/4 <= frac(x/h) <= 3/4.
inline complex wtrap_offset(complex z, const TrapParams& p = default_trap_params()) {
    detail::require_finite(z, "wtrap_offset");
    if (std::abs(z) < detail::kPoleThreshold) throw PoleError("wtrap_offset: argument at z = 0");
    const double h = p.step();
    const complex sum = detail::trap_sum(z, p.integer_nodes_sq(), p.integer_weights(), "wtrap_offset");
    return detail::residue_correction(z, h, -1.0, "wtrap_offset") + complex(0.0, h / std::numbers::pi) / z +
           complex(0.0, 2.0 * h / std::numbers::pi) * z * sum;
}

/// Branch chosen for a point with x >= 0. The uncorrected midpoint rule is taken only for
/// y >= max(pi/h, x), where the dropped residue term is below e^{-pi^2/h^2} relative; at
/// y = pi it is still ~1e-12 for N = 11.
inline TrapBranch wtrap_branch(double x, double y, const TrapParams& p = default_trap_params()) {
    if (y >= std::max(std::numbers::pi / p.step(), x)) return TrapBranch::midpoint;
    const double t = x / p.step();
    const double frac = t - std::floor(t);
    if (y < x && frac >= 0.25 && frac <= 0.75) return TrapBranch::offset;
    return TrapBranch::corrected;
}

/// Pole-free dispatch over the three rules. Negative x is evaluated at |x| and mapped back
/// through w(-x + iy) = conj(w(x + iy)).
inline complex wtrap(complex z, const TrapParams& p = default_trap_params()) {
    detail::require_finite(z, "wtrap");
    if (z.imag() < 0.0) throw InputDomainError("wtrap: requires y >= 0");
    const bool mirrored = z.real() < 0.0;
    const complex za(std::abs(z.real()), z.imag());
    complex w;
    switch (wtrap_branch(za.real(), za.imag(), p)) {
        case TrapBranch::midpoint: w = wtrap_midpoint(za, p); break;
        case TrapBranch::offset: w = wtrap_offset(za, p); break;
        case TrapBranch::corrected: w = wtrap_corrected(za, p); break;
    }
    return mirrored ? std::conj(w) : w;
}

inline void wtrap(std::span<const complex> z, std::span<complex> out, const TrapParams& p = default_trap_params()) {
    if (z.size() != out.size()) throw std::invalid_argument("wtrap: output size mismatch");
    detail::parallel_for(z.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) out[i] = wtrap(z[i], p);
    });
}

inline std::vector<complex> wtrap(std::span<const complex> z, const TrapParams& p = default_trap_params()) {
    std::vector<complex> out(z.size());
    wtrap(z, out, p);
    return out;
}

}  // namespace voigt
