#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "../support.hpp"
#include "voigt/spline.hpp"

using namespace voigt;
using test_support::halton;
using test_support::linspace;

namespace {

std::vector<double> irregular_knots(std::size_t n) {
    std::vector<double> k(n);
    double x = -3.0;
    for (std::size_t i = 0; i < n; ++i) {
        k[i] = x;
        x += 0.05 + 0.3 * halton(i, 7);
    }
    return k;
}

template <class F>
std::vector<double> sample(const std::vector<double>& xs, F f) {
    std::vector<double> v;
    for (double x : xs) v.push_back(f(x));
    return v;
}

}  // namespace

TEST(Spline, ReproducesCubic) {
    const auto p = [](double x) { return x * x * x - 2.0 * x + 1.0; };
    const std::vector<double> knots = {-2.0, -1.3, 0.0, 0.4, 1.7, 3.0};
    const auto s = build_spline<double>(knots, sample(knots, p));
    for (double x : linspace(-2.0, 3.0, 1001)) EXPECT_NEAR(s(x), p(x), 1e-13) << x;
}

TEST(Spline, ReproducesCubicOnManyIrregularKnots) {
    const auto p = [](double x) { return 0.5 * x * x * x - x * x + 3.0; };
    const auto knots = irregular_knots(200);
    const auto s = build_spline<double>(knots, sample(knots, p));
    for (std::size_t i = 0; i < 2000; ++i) {
        const double x = knots.front() + (knots.back() - knots.front()) * halton(i, 2);
        EXPECT_NEAR(s(x), p(x), 1e-12 * std::max(1.0, std::abs(p(x))));
    }
}

TEST(Spline, Constant) {
    const auto knots = irregular_knots(10);
    const std::vector<complex> values(10, complex(2.5, -1.0));
    const CubicSpline<complex> s(knots, values);
    for (double x : linspace(knots.front(), knots.back(), 333)) EXPECT_EQ(s(x), complex(2.5, -1.0));
}

TEST(Spline, ConstructionErrors) {
    const std::vector<double> v3 = {1.0, 2.0, 3.0};
    EXPECT_THROW(build_spline<double>({0.0, 1.0, 2.0}, v3), SplineError);
    const std::vector<double> v4 = {1.0, 2.0, 3.0, 4.0};
    EXPECT_THROW(build_spline<double>({0.0, 1.0, 2.0}, v4), SplineError);
    EXPECT_THROW(build_spline<double>({0.0, 1.0, 1.0, 2.0}, v4), SplineError);
    EXPECT_THROW(build_spline<double>({0.0, 2.0, 1.0, 3.0}, v4), SplineError);
    EXPECT_THROW(build_spline<double>({0.0, 1.0, std::numeric_limits<double>::quiet_NaN(), 3.0}, v4), SplineError);
    EXPECT_NO_THROW(build_spline<double>({0.0, 1.0, 2.0, 3.0}, v4));
}

TEST(Spline, ExactAtKnots) {
    const auto knots = irregular_knots(500);
    std::vector<complex> values;
    for (double x : knots) values.emplace_back(std::exp(-x * x), std::sin(3.0 * x));
    const CubicSpline<complex> s(knots, values);
    for (std::size_t i = 0; i < knots.size(); ++i)
        EXPECT_LE(std::abs(s(knots[i]) - values[i]), 1e-15 * std::max(1.0, std::abs(values[i]))) << i;
    EXPECT_EQ(s(knots.back()), values.back());
}

TEST(Spline, OutsideRangeIsExtrapolation) {
    const auto s = build_spline<double>({0.0, 1.0, 2.0, 3.0}, std::vector<double>{1.0, 2.0, 0.0, 1.0});
    EXPECT_THROW(s(-1e-12), ExtrapolationError);
    EXPECT_THROW(s(3.0000001), ExtrapolationError);
    EXPECT_THROW(s(std::numeric_limits<double>::quiet_NaN()), ExtrapolationError);
    EXPECT_NO_THROW(s(0.0));
    EXPECT_NO_THROW(s(3.0));
}

// (5/384) h^4 max|f''''| is the classical midpoint bound for cubic spline interpolation.
TEST(Spline, SineConvergenceBound) {
    const std::size_t n = 10000;
    const auto knots = linspace(-35.0, 35.0, n);
    const auto s = build_spline<double>(knots, sample(knots, [](double x) { return std::sin(x); }));
    const double delta = 70.0 / double(n - 1);
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double x = 0.5 * (knots[i] + knots[i + 1]);
        worst = std::max(worst, std::abs(s(x) - std::sin(x)));
    }
    EXPECT_LE(worst, 5.0 / 384.0 * std::pow(delta, 4));
}

// The interior midpoint error of a cubic spline through sin at this spacing is already
// delta^4/384 ~ 6e-12, so a 1e-12 ceiling cannot be met.
TEST(Spline, SineMidpointsBelowOneEMinusTwelve) {
    const std::size_t n = 10000;
    const auto knots = linspace(-35.0, 35.0, n);
    const auto s = build_spline<double>(knots, sample(knots, [](double x) { return std::sin(x); }));
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double x = 0.5 * (knots[i] + knots[i + 1]);
        worst = std::max(worst, std::abs(s(x) - std::sin(x)));
    }
    EXPECT_LT(worst, 1e-12);
}

TEST(Spline, Continuity) {
    const auto knots = irregular_knots(300);
    const auto f = [](double x) { return std::sin(2.0 * x) + 0.1 * x * x; };
    const auto s = build_spline<double>(knots, sample(knots, f));
    const auto seg = s.segments();
    for (std::size_t i = 1; i + 1 < knots.size(); ++i) {
        const auto& L = seg[i - 1];
        const auto& R = seg[i];
        const double t = knots[i] - knots[i - 1];
        const double v = L.c0 + t * (L.c1 + t * (L.c2 + t * L.c3));
        const double d1 = L.c1 + t * (2.0 * L.c2 + 3.0 * t * L.c3);
        const double d2 = 2.0 * L.c2 + 6.0 * t * L.c3;
        EXPECT_NEAR(v, R.c0, 1e-10 * std::max(1.0, std::abs(R.c0))) << i;
        EXPECT_NEAR(d1, R.c1, 1e-10 * std::max(1.0, std::abs(R.c1))) << i;
        EXPECT_NEAR(d2, 2.0 * R.c2, 1e-10 * std::max(1.0, std::abs(2.0 * R.c2))) << i;
    }
}

TEST(Spline, NotAKnotEnds) {
    const auto knots = irregular_knots(40);
    const auto s = build_spline<double>(knots, sample(knots, [](double x) { return std::exp(0.7 * x); }));
    const auto seg = s.segments();
    const std::size_t m = seg.size();
    EXPECT_NEAR(seg[0].c3, seg[1].c3, 1e-10 * std::abs(seg[1].c3));
    EXPECT_NEAR(seg[m - 2].c3, seg[m - 1].c3, 1e-10 * std::abs(seg[m - 1].c3));
}

TEST(Spline, Linearity) {
    const auto knots = irregular_knots(150);
    const auto f = sample(knots, [](double x) { return std::cos(x); });
    const auto g = sample(knots, [](double x) { return std::exp(-0.1 * x * x); });
    std::vector<double> h(knots.size());
    for (std::size_t i = 0; i < h.size(); ++i) h[i] = 2.0 * f[i] - 0.5 * g[i];
    const auto sf = build_spline<double>(knots, f), sg = build_spline<double>(knots, g), sh = build_spline<double>(knots, h);
    for (std::size_t i = 0; i < 1000; ++i) {
        const double x = knots.front() + (knots.back() - knots.front()) * halton(i, 3);
        EXPECT_NEAR(sh(x), 2.0 * sf(x) - 0.5 * sg(x), 1e-13);
    }
}

TEST(Spline, ComplexIsComponentwise) {
    const auto knots = irregular_knots(80);
    const auto re = sample(knots, [](double x) { return std::tanh(x); });
    const auto im = sample(knots, [](double x) { return x * std::exp(-x); });
    std::vector<complex> z(knots.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = {re[i], im[i]};
    const CubicSpline<complex> sc(knots, z);
    const auto sr = build_spline<double>(knots, re), si = build_spline<double>(knots, im);
    for (std::size_t i = 0; i < 500; ++i) {
        const double x = knots.front() + (knots.back() - knots.front()) * halton(i, 5);
        EXPECT_NEAR(sc(x).real(), sr(x), 1e-15);
        EXPECT_NEAR(sc(x).imag(), si(x), 1e-15);
    }
}

TEST(Spline, UnsortedBatchEvaluation) {
    const auto knots = irregular_knots(60);
    const auto s = build_spline<double>(knots, sample(knots, [](double x) { return std::sin(x); }));
    std::vector<double> xs;
    for (std::size_t i = 0; i < 400; ++i) xs.push_back(knots.front() + (knots.back() - knots.front()) * halton(i, 2));
    const auto out = eval_spline(s, xs);
    for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(out[i], s(xs[i]));
    std::vector<double> small(2);
    EXPECT_THROW(s.evaluate(xs, small), SplineError);
}
