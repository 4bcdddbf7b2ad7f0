#include "vortorus/geometry.hpp"

#include <cmath>

namespace vortorus {

LatticeBasis make_lattice(double ax, double ay, double bx, double by) {
    const double det = ax * by - ay * bx;
    if (!(det > 1e-12)) {
        throw DegenerateLattice("lattice generators are degenerate or negatively oriented");
    }
    const double scale = 1.0 / std::sqrt(det);
    return LatticeBasis{ax * scale, ay * scale, bx * scale, by * scale};
}

std::array<double, 2> lattice_coords(const LatticeBasis& lat, double x, double y) {
    // Inverse of (x, y) = s*a + t*b for a unit-determinant basis.
    const double s = lat.by * x - lat.bx * y;
    const double t = -lat.ay * x + lat.ax * y;
    return {s, t};
}

namespace {

double reduce_unit(double u) {
    double r = u - std::floor(u);
    // floor can leave r == 1.0 when u is a tiny negative number.
    if (r >= 1.0) r = 0.0;
    return r;
}

} // namespace

TorusPoint wrap_point(const LatticeBasis& lat, double x, double y) {
    const auto [s0, t0] = lattice_coords(lat, x, y);
    const double s = reduce_unit(s0);
    const double t = reduce_unit(t0);
    TorusPoint p;
    p.s = s;
    p.t = t;
    p.x = s * lat.ax + t * lat.bx;
    p.y = s * lat.ay + t * lat.by;
    return p;
}

std::pair<ConstantOneForm, ConstantOneForm> harmonic_basis(const LatticeBasis& lat) {
    ConstantOneForm alpha{lat.by, -lat.bx};
    ConstantOneForm beta{-lat.ay, lat.ax};
    return {alpha, beta};
}

ConstantOneForm star_one_form(const ConstantOneForm& f) {
    return ConstantOneForm{-f.cy, f.cx};
}

PeriodMatrices period_matrices(const LatticeBasis& lat) {
    PeriodMatrices m;
    m.P = lat.bx * lat.bx + lat.by * lat.by;
    m.Q = lat.ax * lat.ax + lat.ay * lat.ay;
    m.R = -(lat.ax * lat.bx + lat.ay * lat.by);
    return m;
}

PeriodMatrices pqr_quadrature(const LatticeBasis& lat, int n) {
    const auto [alpha, beta] = harmonic_basis(lat);
    const ConstantOneForm sa = star_one_form(alpha);
    const ConstantOneForm sb = star_one_form(beta);

    // u ^ v = (ux vy - uy vx) dx ^ dy; integrate over the fundamental
    // domain in lattice coordinates, where the area element is det = 1
    // times ds dt and the counterclockwise orientation of (x, y) carries
    // over because det > 0.
    auto wedge_density = [](const ConstantOneForm& u, const ConstantOneForm& v) {
        return u.cx * v.cy - u.cy * v.cx;
    };

    double accP = 0.0, accQ = 0.0, accR = 0.0;
    const double w = 1.0 / (static_cast<double>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            accP += wedge_density(alpha, sa) * w;
            accQ += wedge_density(beta, sb) * w;
            accR += wedge_density(alpha, sb) * w;
        }
    }
    return PeriodMatrices{accP, accQ, accR};
}

double line_integral(const ConstantOneForm& f, std::span<const Vec2> curve) {
    if (curve.size() < 2) {
        throw EmptyCurve("line integral needs at least two curve points");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        acc += f.apply(curve[i + 1].x - curve[i].x, curve[i + 1].y - curve[i].y);
    }
    return acc;
}

double wedge_integral(const ConstantOneForm& u, const ConstantOneForm& v) {
    return u.cx * v.cy - u.cy * v.cx;
}

BergmanKernel bergman_kernel(const LatticeBasis& lat) {
    const auto [alpha, beta] = harmonic_basis(lat);
    return BergmanKernel{alpha, beta};
}

HarmonicCoeffs bergman_apply(const HarmonicCoeffs& sigma, const LatticeBasis& lat) {
    const auto [alpha, beta] = harmonic_basis(lat);
    const ConstantOneForm s{sigma.A * alpha.cx + sigma.B * beta.cx,
                            sigma.A * alpha.cy + sigma.B * beta.cy};
    // sigma = A' alpha + B' beta is recovered from the wedge pairings
    // int sigma ^ beta = A' * (alpha ^ beta) and int alpha ^ sigma = B' * (alpha ^ beta),
    // where int alpha ^ beta = det = 1.
    HarmonicCoeffs out;
    out.A = wedge_integral(s, beta);
    out.B = wedge_integral(alpha, s);
    return out;
}

} // namespace vortorus
