#pragma once

#include <stdexcept>
#include <string>

namespace vortorus {

/// Base class of every error this library throws on its own behalf.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Lattice generators are (numerically) linearly dependent or negatively oriented.
struct DegenerateLattice : Error {
    using Error::Error;
};

/// A sampled path with fewer than two points.
struct EmptyCurve : Error {
    using Error::Error;
};

/// A conformal factor that is not strictly positive after normalization.
struct NonPositiveField : Error {
    using Error::Error;
};

/// Poisson right-hand side whose mean exceeds the solvability tolerance.
struct NonZeroMean : Error {
    using Error::Error;
};

/// Ring radius too close to the grid spacing for a near-diagonal evaluation.
struct RadiusTooSmall : Error {
    using Error::Error;
};

/// Point outside the open annulus 1 < |z| < 2.
struct OutsideAnnulus : Error {
    using Error::Error;
};

/// Source and evaluation point coincide.
struct CoincidentPoints : Error {
    using Error::Error;
};

/// Fixed-point iteration of the implicit midpoint step did not converge.
struct NoConvergence : Error {
    using Error::Error;
};

/// Malformed configuration file (syntax level).
struct ParseError : Error {
    using Error::Error;
};

/// Structurally valid configuration that violates an invariant.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace vortorus
