#pragma once

#include <functional>

#include "vortorus/errors.hpp"

namespace vortorus {

/// Point of the open annulus 1 < |z| < 2 in polar coordinates.
struct AnnulusPoint {
    double r = 1.5;
    double theta = 0.0;
};

/// Throws OutsideAnnulus unless 1 < r < 2; theta is reduced to [0, 2 pi).
AnnulusPoint make_annulus_point(double r, double theta);

/// Prescribed circulations on |z| = 1 and |z| = 2.  Stokes forces
/// c1 + c2 = 1; the factory rejects anything else (tolerance 1e-12).
struct CirculationPrescription {
    double c1 = 0.0;
    double c2 = 1.0;
};

CirculationPrescription make_prescription(double c1, double c2);

/// Harmonic measure of boundary component j (1 on |z| = j, 0 on the
/// other): the radial Laplace solution omega_1 = log(2/r)/log 2 and its
/// complement.  Throws OutsideAnnulus for r outside (1, 2).
double harmonic_measure(int j, const AnnulusPoint& p);

/// Dirichlet Green's function of the annulus by the method of images in
/// the log-polar strip (reflections across both circles put image
/// charges at radii r^{+-1} * 4^k), truncated at K image pairs; the
/// boundary values decay like 4^{-K}.  Symmetric in (q, p) at any K.
/// Throws CoincidentPoints when q = p within 1e-12.
double annulus_green_F(const AnnulusPoint& q, const AnnulusPoint& p, int K = 20);

/// Green's function adjusted by harmonic measures so the velocity field
/// -*dG keeps circulations (c1, c2) on the two boundary circles for
/// every vortex position:
///   G = F + (log 2 / 2 pi) (omega_1(p) - c1)(omega_1(q) - c1).
double hydrodynamic_green(const AnnulusPoint& q, const AnnulusPoint& p,
                          const CirculationPrescription& c, int K = 20);

/// Circulation of -*dG along boundary circle j, oriented with the
/// annulus interior on the left (clockwise on |z| = 1, counterclockwise
/// on |z| = 2).  Radial derivatives come from centered differences on a
/// ring just inside the domain; the vortex at p must stay off that ring.
double circulation(const std::function<double(const AnnulusPoint&)>& green, int j,
                   const AnnulusPoint& p, int n = 512);

} // namespace vortorus
