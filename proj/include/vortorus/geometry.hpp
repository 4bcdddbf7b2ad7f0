#pragma once

#include <array>
#include <span>
#include <utility>

#include "vortorus/errors.hpp"

namespace vortorus {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Generators of a unit-volume torus lattice R^2 / (a Z + b Z).
///
/// The constructor path (make_lattice) rescales both generators so that
/// ax*by - ay*bx == 1; every downstream formula assumes unit volume.
struct LatticeBasis {
    double ax = 1.0;
    double ay = 0.0;
    double bx = 0.0;
    double by = 1.0;

    double det() const { return ax * by - ay * bx; }
};

/// A point of the torus held in both Cartesian coordinates (x, y) and
/// lattice coordinates (s, t) in [0,1), with (x,y) = s*a + t*b.
struct TorusPoint {
    double x = 0.0;
    double y = 0.0;
    double s = 0.0;
    double t = 0.0;
};

/// One-form with constant components c = cx dx + cy dy.
struct ConstantOneForm {
    double cx = 0.0;
    double cy = 0.0;

    /// Pairing with a tangent vector.
    double apply(double vx, double vy) const { return cx * vx + cy * vy; }
    double apply(const Vec2& v) const { return apply(v.x, v.y); }
};

/// Coefficients of a harmonic one-form eta = A*alpha + B*beta in the
/// period-normalized basis (alpha, beta).
struct HarmonicCoeffs {
    double A = 0.0;
    double B = 0.0;
};

/// Gram data of the harmonic basis under the star pairing.  At genus one
/// the three matrices reduce to scalars:
///   P = int alpha ^ *alpha,  Q = int beta ^ *beta,  R = int alpha ^ *beta.
/// Unit volume forces P*Q - R^2 = 1.
struct PeriodMatrices {
    double P = 1.0;
    double Q = 1.0;
    double R = 0.0;
};

/// The reproducing bi-form built from the harmonic basis,
/// B_qp = alpha_p beta_q - beta_p alpha_q.
struct BergmanKernel {
    ConstantOneForm alpha;
    ConstantOneForm beta;
};

/// Build a unit-volume lattice from raw generators.  A positive
/// determinant different from 1 is normalized away by scaling both
/// generators by det^(-1/2).  Throws DegenerateLattice when the
/// determinant is negative or smaller than 1e-12 in absolute value.
LatticeBasis make_lattice(double ax, double ay, double bx, double by);

/// Canonical representative of (x, y) on the torus: lattice coordinates
/// reduced mod 1, Cartesian coordinates recomputed from them.
TorusPoint wrap_point(const LatticeBasis& lat, double x, double y);

/// Lattice coordinates of a plane point (no reduction).
std::array<double, 2> lattice_coords(const LatticeBasis& lat, double x, double y);

/// The period-normalized harmonic one-form basis:
///   alpha = by dx - bx dy,   beta = -ay dx + ax dy,
/// so that int_a alpha = int_b beta = 1 and the cross periods vanish.
std::pair<ConstantOneForm, ConstantOneForm> harmonic_basis(const LatticeBasis& lat);

/// Hodge star on one-forms (conformally invariant in 2D):
/// (cx, cy) -> (-cy, cx).  Applying it twice negates the form.
ConstantOneForm star_one_form(const ConstantOneForm& f);

/// Closed-form P, Q, R for a unit-volume lattice.
PeriodMatrices period_matrices(const LatticeBasis& lat);

/// Same quantities by midpoint quadrature of the wedge integrals over the
/// fundamental domain with the counterclockwise orientation of the (x, y)
/// plane.  The integrands are constant, so any n >= 1 is exact up to
/// rounding.  This routine is the executable record of the orientation
/// convention.
PeriodMatrices pqr_quadrature(const LatticeBasis& lat, int n);

/// Integral of a constant one-form along a polyline given by lifted plane
/// points (exact: the sum of the form applied to segment displacements).
/// Throws EmptyCurve for fewer than two points.
double line_integral(const ConstantOneForm& f, std::span<const Vec2> curve);

/// Wedge integral over the torus of two constant one-forms,
/// int_S u ^ v = (ux vy - uy vx) * V with V = 1.
double wedge_integral(const ConstantOneForm& u, const ConstantOneForm& v);

BergmanKernel bergman_kernel(const LatticeBasis& lat);

/// Reproduction of a harmonic form through the kernel:
/// sigma |-> int_S sigma ^ B.  Evaluated through the actual wedge
/// integrals of the basis, so the identity is a consequence of the
/// unit-determinant normalization rather than a shortcut.
HarmonicCoeffs bergman_apply(const HarmonicCoeffs& sigma, const LatticeBasis& lat);

} // namespace vortorus
