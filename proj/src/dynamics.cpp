#include "vortorus/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace vortorus {

namespace {

// Stage arithmetic runs on unwrapped plane coordinates; the evaluators
// are periodic in (s, t), so only step results get wrapped back to the
// canonical representative.
struct RawState {
    double x, y, A, B;
};

RawState raw_of(const VortexState& st) {
    return {st.p.x, st.p.y, st.eta.A, st.eta.B};
}

VortexState wrap_state(const RawState& r, const LatticeBasis& lat) {
    return VortexState{wrap_point(lat, r.x, r.y), HarmonicCoeffs{r.A, r.B}};
}

RawState advance(const RawState& r, double h, const Derivative& d) {
    return {r.x + h * d.dx, r.y + h * d.dy, r.A + h * d.dA, r.B + h * d.dB};
}

Derivative deriv_at(const RawState& r, const TorusFields& f, Mode mode,
                    PhaseTable& tab) {
    const auto [s, t] = lattice_coords(f.lat, r.x, r.y);
    tab.set_point(s, t);
    const double lam2 = f.lambda2_ev.eval(tab);
    const double Rx = f.dRx_ev.eval(tab);
    const double Ry = f.dRy_ev.eval(tab);
    const auto& L = f.lat;

    Derivative d;
    d.dx = (0.5 * Ry + L.by * r.A - L.ay * r.B) / lam2;
    d.dy = (-0.5 * Rx - L.bx * r.A + L.ax * r.B) / lam2;
    if (mode == Mode::full) {
        // Invert the unit-determinant system tying the coefficient rates
        // to the vortex velocity (residual-tested to 1e-13 in the suite).
        const double r1 = d.dy + L.bx * r.A - L.ax * r.B;
        const double r2 = -d.dx + L.by * r.A - L.ay * r.B;
        d.dA = L.ax * r1 + L.ay * r2;
        d.dB = L.bx * r1 + L.by * r2;
    }
    return d;
}

double max_component_gap(const Derivative& a, const Derivative& b) {
    return std::max({std::abs(a.dx - b.dx), std::abs(a.dy - b.dy),
                     std::abs(a.dA - b.dA), std::abs(a.dB - b.dB)});
}

RawState rk4_raw(const RawState& r, double dt, const TorusFields& f, Mode mode,
                 PhaseTable& tab) {
    const Derivative k1 = deriv_at(r, f, mode, tab);
    const Derivative k2 = deriv_at(advance(r, dt / 2, k1), f, mode, tab);
    const Derivative k3 = deriv_at(advance(r, dt / 2, k2), f, mode, tab);
    const Derivative k4 = deriv_at(advance(r, dt, k3), f, mode, tab);
    const double h = dt / 6.0;
    return {r.x + h * (k1.dx + 2 * k2.dx + 2 * k3.dx + k4.dx),
            r.y + h * (k1.dy + 2 * k2.dy + 2 * k3.dy + k4.dy),
            r.A + h * (k1.dA + 2 * k2.dA + 2 * k3.dA + k4.dA),
            r.B + h * (k1.dB + 2 * k2.dB + 2 * k3.dB + k4.dB)};
}

RawState midpoint_raw(const RawState& r, double dt, const TorusFields& f, Mode mode,
                      PhaseTable& tab) {
    Derivative k = deriv_at(r, f, mode, tab);
    for (int it = 0; it < 50; ++it) {
        const Derivative next = deriv_at(advance(r, dt / 2, k), f, mode, tab);
        const double gap = max_component_gap(next, k);
        k = next;
        if (gap <= 1e-12) {
            return advance(r, dt, k);
        }
    }
    throw NoConvergence("implicit midpoint fixed point did not reach 1e-12 in 50 sweeps");
}

CirculationSample cycle_circulations(const TorusFields& f, const VortexState& st,
                                     double anchor_x, double anchor_y) {
    const ScalarField G = greens_function(f.lambda2, st.p);
    const CovectorField dG = differential(G);
    const PointEvaluator evx = make_evaluator(ScalarField{dG.grid, dG.cx});
    const PointEvaluator evy = make_evaluator(ScalarField{dG.grid, dG.cy});
    PhaseTable tab(std::max(evx.k1max, evy.k1max), std::max(evx.k2max, evy.k2max));

    constexpr int n = 256;
    const auto& L = f.lat;
    auto integrate_cycle = [&](double gx, double gy) {
        // Midpoint rule along the cycle; the integrand is periodic, so
        // the quadrature converges spectrally.  u = -*dG contributes
        // (dG_y, -dG_x) . (gx, gy).
        double acc = 0.0;
        for (int m = 0; m < n; ++m) {
            const double tau = (m + 0.5) / n;
            const auto [s, t] =
                lattice_coords(L, anchor_x + tau * gx, anchor_y + tau * gy);
            tab.set_point(s, t);
            acc += evy.eval(tab) * gx - evx.eval(tab) * gy;
        }
        return acc / n;
    };
    return CirculationSample{integrate_cycle(L.ax, L.ay) + st.eta.A,
                             integrate_cycle(L.bx, L.by) + st.eta.B};
}

} // namespace

TorusFields build_torus_fields(const LatticeBasis& lat, const ConformalSpec& spec,
                               int N, int M) {
    TorusFields f;
    f.lat = lat;
    f.grid = make_grid(lat, N, M);
    f.lambda2 = sample_conformal_factor(spec, f.grid);
    f.robin = robin_field(f.lambda2);
    f.dR = differential(f.robin);
    f.pqr = period_matrices(lat);
    f.lambda2_ev = make_evaluator(f.lambda2);
    f.robin_ev = make_evaluator(f.robin);
    f.dRx_ev = make_evaluator(ScalarField{f.grid, f.dR.cx});
    f.dRy_ev = make_evaluator(ScalarField{f.grid, f.dR.cy});
    f.k1max = std::max({f.lambda2_ev.k1max, f.robin_ev.k1max, f.dRx_ev.k1max,
                        f.dRy_ev.k1max});
    f.k2max = std::max({f.lambda2_ev.k2max, f.robin_ev.k2max, f.dRx_ev.k2max,
                        f.dRy_ev.k2max});
    return f;
}

std::array<double, 2> vortex_velocity(const VortexState& st, const TorusFields& f) {
    PhaseTable tab(f.k1max, f.k2max);
    const Derivative d = deriv_at(raw_of(st), f, Mode::incomplete, tab);
    return {d.dx, d.dy};
}

std::array<double, 2> eta_rate(const VortexState& st, std::array<double, 2> pdot,
                               const LatticeBasis& lat, Mode mode) {
    if (mode == Mode::incomplete) {
        return {0.0, 0.0};
    }
    const double r1 = pdot[1] + lat.bx * st.eta.A - lat.ax * st.eta.B;
    const double r2 = -pdot[0] + lat.by * st.eta.A - lat.ay * st.eta.B;
    return {lat.ax * r1 + lat.ay * r2, lat.bx * r1 + lat.by * r2};
}

Derivative rhs(const VortexState& st, const TorusFields& f, Mode mode) {
    PhaseTable tab(f.k1max, f.k2max);
    return deriv_at(raw_of(st), f, mode, tab);
}

EnergyReport hamiltonian(const VortexState& st, const TorusFields& f) {
    EnergyReport e;
    e.robinPart = 0.5 * f.robin_ev.eval(st.p.s, st.p.t);
    const double A = st.eta.A, B = st.eta.B;
    e.etaPart = 0.5 * (f.pqr.P * A * A + 2.0 * f.pqr.R * A * B + f.pqr.Q * B * B);
    e.H = e.robinPart + e.etaPart;
    return e;
}

VortexState step_rk4(const VortexState& st, double dt, const TorusFields& f, Mode mode) {
    PhaseTable tab(f.k1max, f.k2max);
    return wrap_state(rk4_raw(raw_of(st), dt, f, mode, tab), f.lat);
}

VortexState step_implicit_midpoint(const VortexState& st, double dt,
                                   const TorusFields& f, Mode mode) {
    PhaseTable tab(f.k1max, f.k2max);
    return wrap_state(midpoint_raw(raw_of(st), dt, f, mode, tab), f.lat);
}

Trajectory integrate(const VortexState& st0, const DynamicsConfig& cfg,
                     const TorusFields& f) {
    if (!(cfg.dt > 0.0) || !(cfg.T > 0.0) || cfg.record_every < 1) {
        throw ValidationError("dynamics config requires dt > 0, T > 0, record_every >= 1");
    }
    const long n_records =
        static_cast<long>(std::floor(cfg.T / cfg.dt / cfg.record_every + 1e-9)) + 1;
    const long steps = (n_records - 1) * cfg.record_every;

    Trajectory traj;
    traj.times.reserve(n_records);
    traj.states.reserve(n_records);
    traj.energies.reserve(n_records);

    // Circulation cycles stay anchored opposite the starting position so
    // the vortex does not sit on them at t = 0.
    const double anchor_x = st0.p.x + 0.5 * (f.lat.ax + f.lat.bx);
    const double anchor_y = st0.p.y + 0.5 * (f.lat.ay + f.lat.by);

    auto record = [&](long step, const VortexState& st) {
        traj.times.push_back(step * cfg.dt);
        traj.states.push_back(st);
        traj.energies.push_back(hamiltonian(st, f));
        if (cfg.circulations) {
            traj.circulations.push_back(cycle_circulations(f, st, anchor_x, anchor_y));
        }
    };

    VortexState st = st0;
    st.p = wrap_point(f.lat, st0.p.x, st0.p.y);
    record(0, st);

    PhaseTable tab(f.k1max, f.k2max);
    for (long step = 1; step <= steps; ++step) {
        const RawState next =
            cfg.integrator == Integrator::rk4
                ? rk4_raw(raw_of(st), cfg.dt, f, cfg.mode, tab)
                : midpoint_raw(raw_of(st), cfg.dt, f, cfg.mode, tab);
        st = wrap_state(next, f.lat);
        if (step % cfg.record_every == 0) {
            record(step, st);
        }
    }
    return traj;
}

double equilibrium_residual(const VortexState& st, const TorusFields& f) {
    const Derivative d = rhs(st, f, Mode::full);
    return std::max({std::abs(d.dx), std::abs(d.dy), std::abs(d.dA), std::abs(d.dB)});
}

double symplectic_pairing(const VortexState& st, const Derivative& v1,
                          const Derivative& v2, const TorusFields& f) {
    const double lam2 = f.lambda2_ev.eval(st.p.s, st.p.t);
    const auto [alpha, beta] = harmonic_basis(f.lat);
    const double area = lam2 * (v1.dx * v2.dy - v1.dy * v2.dx);
    const double c1 = (v1.dA - beta.apply(v1.dx, v1.dy)) * (v2.dB + alpha.apply(v2.dx, v2.dy));
    const double c2 = (v2.dA - beta.apply(v2.dx, v2.dy)) * (v1.dB + alpha.apply(v1.dx, v1.dy));
    return area - (c1 - c2);
}

} // namespace vortorus
