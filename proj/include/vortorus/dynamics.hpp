#pragma once

#include <array>
#include <vector>

#include "vortorus/fields.hpp"
#include "vortorus/geometry.hpp"

namespace vortorus {

/// full: the coupled system (vortex position and harmonic part evolve
/// together).
/// incomplete: the pre-correction truncation, eta frozen at its initial
/// value while the vortex still moves under the frozen eta.
enum class Mode { full, incomplete };

enum class Integrator { rk4, implicit_midpoint };

/// Phase-space point: vortex position and harmonic coefficients.
struct VortexState {
    TorusPoint p;
    HarmonicCoeffs eta;
};

/// Tangent vector / time derivative: (dx, dy) of the position, (dA, dB)
/// of the harmonic coefficients.
struct Derivative {
    double dx = 0.0;
    double dy = 0.0;
    double dA = 0.0;
    double dB = 0.0;
};

struct DynamicsConfig {
    Mode mode = Mode::full;
    Integrator integrator = Integrator::rk4;
    double dt = 1e-3;
    double T = 10.0;
    int record_every = 10;
    bool circulations = false; // per-record cycle circulations (costly)
};

struct EnergyReport {
    double H = 0.0;
    double robinPart = 0.0; // R(p)/2
    double etaPart = 0.0;   // (1/2)(P A^2 + 2 R A B + Q B^2)
};

/// Circulations of the full velocity one-form along fixed generator
/// cycles (anchored away from the initial vortex position).
struct CirculationSample {
    double a = 0.0;
    double b = 0.0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<VortexState> states;
    std::vector<EnergyReport> energies;
    std::vector<CirculationSample> circulations; // empty unless enabled
};

/// Everything the flow needs, precomputed once per scenario: the sampled
/// conformal factor, the Robin function and its differential, period
/// data, and point evaluators for the right-hand side.
struct TorusFields {
    LatticeBasis lat;
    PeriodicGrid grid;
    ScalarField lambda2;
    ScalarField robin;
    CovectorField dR;
    PeriodMatrices pqr;
    PointEvaluator lambda2_ev;
    PointEvaluator robin_ev;
    PointEvaluator dRx_ev;
    PointEvaluator dRy_ev;
    int k1max = 0; // table bounds covering all four evaluators
    int k2max = 0;
};

TorusFields build_torus_fields(const LatticeBasis& lat, const ConformalSpec& spec,
                               int N, int M);

/// Vortex velocity (xdot, ydot) =
///   lambda(p)^{-2} (  (1/2) dR/dy + by A - ay B,
///                    -(1/2) dR/dx - bx A + ax B ).
std::array<double, 2> vortex_velocity(const VortexState& st, const TorusFields& f);

/// Rates (Adot, Bdot) of the harmonic coefficients.  In full mode this
/// solves the unit-determinant 2x2 system coupling them to the vortex
/// velocity (see rhs for the residual identity it must satisfy); in
/// incomplete mode both rates are zero.
std::array<double, 2> eta_rate(const VortexState& st, std::array<double, 2> pdot,
                               const LatticeBasis& lat, Mode mode);

/// Full right-hand side of the flow at a state.
Derivative rhs(const VortexState& st, const TorusFields& f, Mode mode);

/// First integral H = R(p)/2 + (1/2)(P A^2 + 2 R A B + Q B^2).
EnergyReport hamiltonian(const VortexState& st, const TorusFields& f);

VortexState step_rk4(const VortexState& st, double dt, const TorusFields& f, Mode mode);

/// Implicit midpoint by fixed-point iteration on the stage derivative
/// (tolerance 1e-12, at most 50 sweeps).  Throws NoConvergence.
VortexState step_implicit_midpoint(const VortexState& st, double dt,
                                   const TorusFields& f, Mode mode);

/// Fixed-step integration; records every record_every steps, so the
/// trajectory holds floor(T/dt/record_every) + 1 entries.
Trajectory integrate(const VortexState& st0, const DynamicsConfig& cfg,
                     const TorusFields& f);

/// Max-norm of the full-mode right-hand side; below 1e-9 counts as an
/// equilibrium.
double equilibrium_residual(const VortexState& st, const TorusFields& f);

/// The phase-space two-form evaluated on two tangent vectors at a state:
///   lambda^2(p) (v1.dx v2.dy - v1.dy v2.dx)
///   - [ (v1.dA - beta(p1)) (v2.dB + alpha(p2))
///       - (v2.dA - beta(p2)) (v1.dB + alpha(p1)) ],
/// where alpha/beta act on the position parts of the vectors.  Pairs the
/// flow with the differential of H: pairing(rhs, w) = dH(w).
double symplectic_pairing(const VortexState& st, const Derivative& v1,
                          const Derivative& v2, const TorusFields& f);

} // namespace vortorus
