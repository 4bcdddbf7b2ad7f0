#pragma once

#include <array>
#include <span>
#include <vector>

#include "vortorus/errors.hpp"
#include "vortorus/geometry.hpp"

namespace vortorus {

/// Sampling grid over the torus in lattice coordinates: node (i, j) sits
/// at (s, t) = (i/N, j/M).  Storage is row-major with s varying slowest.
struct PeriodicGrid {
    LatticeBasis lat;
    int N = 128;
    int M = 128;
};

/// Throws ValidationError unless N and M are powers of two >= 8.
PeriodicGrid make_grid(const LatticeBasis& lat, int N, int M);

struct ScalarField {
    PeriodicGrid grid;
    std::vector<double> values; // size N*M, index i*M + j

    double& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.M + j]; }
    double at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.M + j]; }
};

/// One-form field sampled on the grid; cx, cy are the (dx, dy) components.
struct CovectorField {
    PeriodicGrid grid;
    std::vector<double> cx;
    std::vector<double> cy;
};

/// One Fourier mode of the conformal factor, contributing
/// cosAmp*cos(2*pi*(k1 s + k2 t)) + sinAmp*sin(2*pi*(k1 s + k2 t)).
struct ConformalMode {
    int k1 = 0;
    int k2 = 0;
    double cosAmp = 0.0;
    double sinAmp = 0.0;
};

/// Band-limited description of lambda^2 as 1 + sum of modes.  The (0,0)
/// slot is reserved for the unit-volume normalization and may not appear.
struct ConformalSpec {
    std::vector<ConformalMode> modes;
};

/// lambda^2 sampled at the grid nodes and rescaled to mean exactly 1.
/// Throws ValidationError for a (0,0) mode or a mode outside the grid's
/// band limit (2|k1| < N, 2|k2| < M), NonPositiveField if any normalized
/// sample is <= 0.
ScalarField sample_conformal_factor(const ConformalSpec& spec, const PeriodicGrid& grid);

/// Mean of the samples (the flat-torus integral, since det = 1).
double field_mean(const ScalarField& f);

/// Unique zero-mean solution of the flat Laplace equation
/// (d^2/dx^2 + d^2/dy^2) phi = rhs, computed spectrally in lattice
/// coordinates: mode (k1, k2) is divided by -4 pi^2 |k1 a* + k2 b*|^2
/// with the dual basis a* = (by, -bx), b* = (-ay, ax).  Throws
/// NonZeroMean if |mean(rhs)| > 1e-10.
ScalarField poisson_solve(const ScalarField& rhs);

/// Spectral flat Laplacian (the exact inverse of poisson_solve on
/// zero-mean fields).
ScalarField laplacian_flat(const ScalarField& f);

/// Robin function of the conformal metric:
/// R = (1/4 pi) log(lambda^2) + 2 phi with Delta_flat phi = lambda^2 - 1,
/// additive constant fixed to 0.  Throws NonPositiveField if lambda2 has
/// a sample <= 0.
ScalarField robin_field(const ScalarField& lambda2);

/// Spectral differential d f as a (dx, dy) covector field.  Exact for
/// band-limited fields; the Nyquist slots get derivative 0 (symmetric
/// real interpolant convention).
CovectorField differential(const ScalarField& f);

/// Shared cos/sin tables for evaluating several spectra at one point.
/// set_point fills c1[k] = cos(2 pi k s), s1[k] = sin(2 pi k s) for
/// k = 0..k1max and likewise (c2, s2) in t.
struct PhaseTable {
    int k1max = 0;
    int k2max = 0;
    std::vector<double> c1, s1, c2, s2;

    PhaseTable(int k1max, int k2max);
    void set_point(double s, double t);
};

/// Compressed spectrum of a real field for off-grid evaluation.  Entries
/// list one representative per conjugate slot pair with the pair weight
/// folded into (wre, wim); exactly-zero coefficients are dropped, so
/// evaluation cost tracks the field's actual spectral support.  The
/// interpolant is the real part of the slot sum (the symmetric choice:
/// a Nyquist row evaluates through cos), periodic in s and t by
/// construction, so callers may pass unwrapped coordinates.
struct PointEvaluator {
    int N = 0;
    int M = 0;
    int k1max = 0;
    int k2max = 0;

    struct Entry {
        int k1;
        int k2;
        double wre;
        double wim;
    };
    std::vector<Entry> entries;

    /// Evaluate using a caller-provided table (must cover k1max, k2max
    /// and be set to the target point).
    double eval(const PhaseTable& tab) const;

    /// Convenience form that builds a local table.
    double eval(double s, double t) const;
};

PointEvaluator make_evaluator(const ScalarField& f);

/// Trigonometric interpolation at a point (exact at grid nodes).  Builds
/// a fresh evaluator per call; hot paths should hold a PointEvaluator.
double eval_field(const ScalarField& f, const TorusPoint& p);

/// Component-wise trigonometric interpolation of a covector field.
std::array<double, 2> eval_covector(const CovectorField& c, const TorusPoint& p);

/// Green's function of the metric Laplacian with unit point source at p:
/// solves -Delta_flat G = delta_p - lambda^2 (the conformal rewriting of
/// the metric equation), with delta_p the truncated Fourier delta, gauged
/// so that the grid quadrature of G * lambda^2 vanishes.
ScalarField greens_function(const ScalarField& lambda2, const TorusPoint& p);

/// Robin value at p recovered from the Green's function: ring averages of
/// G(q, p) + (1/2 pi) log(lambda(p) |q - p|) extrapolated to radius 0
/// (polynomial extrapolation in r^2).  Agrees with robin_field up to one
/// global additive constant; validation use only.  Throws RadiusTooSmall
/// if a ring radius is below 2 grid cells.
double robin_from_green(const ScalarField& lambda2, const TorusPoint& p,
                        std::span<const double> radii);

/// Velocity one-form of a unit vortex with harmonic part eta:
/// u = -*dG + A alpha + B beta, sampled on the grid.
CovectorField velocity_one_form(const ScalarField& G, const HarmonicCoeffs& eta,
                                const LatticeBasis& lat);

} // namespace vortorus
