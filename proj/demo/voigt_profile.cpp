// Voigt line profile of a single spectral line on a wavenumber grid.
//
// With Doppler half-width alpha_D and Lorentz half-width gamma_L (both in cm^-1), the
// area-normalized profile is
//   V(nu) = sqrt(ln 2 / pi) / alpha_D * K(x, y),
//   x = sqrt(ln 2) (nu - nu0) / alpha_D,   y = sqrt(ln 2) gamma_L / alpha_D.
// Every point shares one y, so the interpolation grid is built once.

#include <cmath>
#include <cstdio>
#include <numbers>
#include <vector>

#include "voigt/twodomain.hpp"

int main() {
    const double nu0 = 2000.0;       // line centre, cm^-1
    const double alpha_d = 4.5e-3;   // Doppler HWHM
    const double gamma_l = 1.2e-4;   // Lorentz HWHM (low pressure)
    const double ln2 = std::numbers::ln2;

    const double y = std::sqrt(ln2) * gamma_l / alpha_d;
    std::vector<double> nu, xs;
    for (int i = -2000; i <= 2000; ++i) {
        nu.push_back(nu0 + 5e-5 * i);
        xs.push_back(std::sqrt(ln2) * (nu.back() - nu0) / alpha_d);
    }

    const voigt::TwoDomainEvaluator profile(y);
    const auto w = profile.evaluate(xs);

    const double scale = std::sqrt(ln2 / std::numbers::pi) / alpha_d;
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < nu.size(); ++i)
        area += 0.5 * (w[i].real() + w[i + 1].real()) * scale * (nu[i + 1] - nu[i]);

    std::printf("y = %.6g, %zu grid nodes\n", y, profile.grid().size());
    std::printf("%14s %16s\n", "nu (cm^-1)", "V (cm)");
    for (std::size_t i = 0; i < nu.size(); i += 400) std::printf("%14.5f %16.9e\n", nu[i], scale * w[i].real());
    std::printf("area over +-0.1 cm^-1: %.9f\n", area);
}
