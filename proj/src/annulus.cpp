#include "vortorus/annulus.hpp"

#include <cmath>
#include <numbers>

namespace vortorus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kStripLength = std::log(2.0); // the annulus maps to 0 < xi < log 2

// Free cylinder kernel: Green's function of the flat Laplacian on an
// infinite cylinder of circumference 2 pi, up to the linear-in-u parts
// the image sum cancels.
double cyl_kernel(double u, double v) {
    return -std::log(std::cosh(u) - std::cos(v)) / (2.0 * kTwoPi);
}

} // namespace

AnnulusPoint make_annulus_point(double r, double theta) {
    if (!(r > 1.0 && r < 2.0)) {
        throw OutsideAnnulus("annulus point needs 1 < r < 2");
    }
    double th = std::fmod(theta, kTwoPi);
    if (th < 0.0) th += kTwoPi;
    return AnnulusPoint{r, th};
}

CirculationPrescription make_prescription(double c1, double c2) {
    if (std::abs(c1 + c2 - 1.0) > 1e-12) {
        throw ValidationError("circulation prescription must satisfy c1 + c2 = 1");
    }
    return CirculationPrescription{c1, c2};
}

double harmonic_measure(int j, const AnnulusPoint& p) {
    if (!(p.r > 1.0 && p.r < 2.0)) {
        throw OutsideAnnulus("harmonic measure evaluated outside the annulus");
    }
    if (j != 1 && j != 2) {
        throw ValidationError("boundary index must be 1 or 2");
    }
    const double omega1 = std::log(2.0 / p.r) / kStripLength;
    return j == 1 ? omega1 : 1.0 - omega1;
}

double annulus_green_F(const AnnulusPoint& q, const AnnulusPoint& p, int K) {
    const double chord =
        std::sqrt(q.r * q.r + p.r * p.r - 2.0 * q.r * p.r * std::cos(q.theta - p.theta));
    if (chord < 1e-12) {
        throw CoincidentPoints("Green's function evaluated on its singularity");
    }
    const double L = kStripLength;
    const double xq = std::log(q.r);
    const double xp = std::log(p.r);
    const double dv = q.theta - p.theta;

    // Source images at xi = xp + 2kL, sink images at xi = -xp + 2kL; the
    // bilinear term removes the linear growth the truncation leaves at
    // the xi = L boundary.
    double acc = 0.0;
    for (int k = -K; k <= K; ++k) {
        acc += cyl_kernel(xq - xp - 2.0 * k * L, dv);
        acc -= cyl_kernel(xq + xp - 2.0 * k * L, dv);
    }
    return acc - xq * xp / (kTwoPi * L);
}

double hydrodynamic_green(const AnnulusPoint& q, const AnnulusPoint& p,
                          const CirculationPrescription& c, int K) {
    const double w_p = harmonic_measure(1, p) - c.c1;
    const double w_q = harmonic_measure(1, q) - c.c1;
    return annulus_green_F(q, p, K) + kStripLength / kTwoPi * w_p * w_q;
}

double circulation(const std::function<double(const AnnulusPoint&)>& green, int j,
                   const AnnulusPoint& p, int n) {
    if (j != 1 && j != 2) {
        throw ValidationError("boundary index must be 1 or 2");
    }
    if (n < 64) {
        throw ValidationError("circulation quadrature needs n >= 64");
    }
    constexpr double h = 1e-3;
    const double rho = (j == 1) ? 1.0 + 2.0 * h : 2.0 - 2.0 * h;
    if (std::abs(p.r - rho) < 4.0 * h) {
        throw ValidationError("vortex too close to the circulation ring");
    }

    // Circulations of -*dG are ring-independent between the boundary and
    // the vortex, so a ring just inside the domain reads off the
    // boundary value; trapezoid in theta is spectrally accurate here.
    double acc = 0.0;
    for (int m = 0; m < n; ++m) {
        const double th = kTwoPi * m / n;
        const double g_r = (green(AnnulusPoint{rho + h, th}) -
                            green(AnnulusPoint{rho - h, th})) /
                           (2.0 * h);
        acc += g_r;
    }
    const double integral = rho * acc * kTwoPi / n;
    return (j == 1) ? integral : -integral;
}

} // namespace vortorus
