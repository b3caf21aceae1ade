#pragma once

// Not-a-knot cubic spline over strictly increasing real knots. The value type may be
// real or complex; the tridiagonal system is real, so a complex spline is exactly the
// pair of componentwise real splines on the same knots.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "voigt/detail/parallel.hpp"
#include "voigt/error.hpp"

namespace voigt {

template <class Value>
class CubicSpline {
public:
    /// p(x) = c0 + c1 t + c2 t^2 + c3 t^3, t = x - knot[i], on [knot[i], knot[i+1]].
    struct Segment {
        Value c0, c1, c2, c3;
    };

    CubicSpline(std::vector<double> knots, std::span<const Value> values);

    Value operator()(double x) const {
        if (!(x >= knots_.front() && x <= knots_.back()))
            throw ExtrapolationError("CubicSpline: query outside [" + std::to_string(knots_.front()) + ", " +
                                     std::to_string(knots_.back()) + "]");
        if (x == knots_.back()) return last_value_;
        const auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
        const std::size_t i = std::size_t(it - knots_.begin()) - 1;
        const double t = x - knots_[i];
        const Segment& s = segments_[i];
        return s.c0 + t * (s.c1 + t * (s.c2 + t * s.c3));
    }

    void evaluate(std::span<const double> xs, std::span<Value> out) const {
        if (xs.size() != out.size()) throw SplineError("CubicSpline: output size mismatch");
        detail::parallel_for(xs.size(), [&](std::size_t begin, std::size_t end) {
            for (std::size_t i = begin; i < end; ++i) out[i] = (*this)(xs[i]);
        });
    }

    std::span<const double> knots() const { return knots_; }
    std::span<const Segment> segments() const { return segments_; }

private:
    std::vector<double> knots_;
    std::vector<Segment> segments_;
    Value last_value_;
};

template <class Value>
CubicSpline<Value>::CubicSpline(std::vector<double> knots, std::span<const Value> values)
    : knots_(std::move(knots)) {
    const std::size_t n = knots_.size();
    if (n != values.size())
        throw SplineError("CubicSpline: " + std::to_string(n) + " knots but " + std::to_string(values.size()) +
                          " values");
    if (n < 4) throw SplineError("CubicSpline: not-a-knot spline needs at least 4 points");
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(knots_[i])) throw SplineError("CubicSpline: non-finite knot");
    for (std::size_t i = 1; i < n; ++i)
        if (!(knots_[i] > knots_[i - 1])) throw SplineError("CubicSpline: knots must be strictly increasing");

    std::vector<double> h(n - 1);
    std::vector<Value> delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = knots_[i + 1] - knots_[i];
        delta[i] = (values[i + 1] - values[i]) / h[i];
    }

    // Slopes s solve a tridiagonal system: sub[i] s[i-1] + diag[i] s[i] + sup[i] s[i+1] = rhs[i].
    // Interior rows enforce C2 continuity; the end rows make the third derivative continuous
    // across the second and second-to-last knots.
    std::vector<double> sub(n), diag(n), sup(n);
    std::vector<Value> rhs(n);
    {
        const double h0 = h[0], h1 = h[1], w = h0 + h1;
        diag[0] = h1;
        sup[0] = w;
        rhs[0] = ((h0 + 2.0 * w) * h1 * delta[0] + h0 * h0 * delta[1]) / w;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        sub[i] = h[i];
        diag[i] = 2.0 * (h[i - 1] + h[i]);
        sup[i] = h[i - 1];
        rhs[i] = 3.0 * (h[i] * delta[i - 1] + h[i - 1] * delta[i]);
    }
    {
        const double ha = h[n - 3], hb = h[n - 2], w = ha + hb;
        sub[n - 1] = w;
        diag[n - 1] = ha;
        rhs[n - 1] = (hb * hb * delta[n - 3] + (2.0 * w + hb) * ha * delta[n - 2]) / w;
    }

    // Thomas elimination.
    for (std::size_t i = 1; i < n; ++i) {
        const double m = sub[i] / diag[i - 1];
        diag[i] -= m * sup[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    std::vector<Value> slope(n);
    slope[n - 1] = rhs[n - 1] / diag[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) slope[i] = (rhs[i] - sup[i] * slope[i + 1]) / diag[i];

    segments_.resize(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double hi = h[i];
        segments_[i] = {values[i], slope[i], (3.0 * delta[i] - 2.0 * slope[i] - slope[i + 1]) / hi,
                        (slope[i] + slope[i + 1] - 2.0 * delta[i]) / (hi * hi)};
    }
    last_value_ = values[n - 1];
}

template <class Value>
CubicSpline<Value> build_spline(std::vector<double> knots, std::span<const Value> values) {
    return CubicSpline<Value>(std::move(knots), values);
}

template <class Value>
std::vector<Value> eval_spline(const CubicSpline<Value>& s, std::span<const double> xs) {
    std::vector<Value> out(xs.size());
    s.evaluate(xs, out);
    return out;
}

}  // namespace voigt
