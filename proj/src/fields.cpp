#include "vortorus/fields.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "vortorus/fft.hpp"

namespace vortorus {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool power_of_two(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}

std::size_t grid_size(const PeriodicGrid& g) {
    return static_cast<std::size_t>(g.N) * g.M;
}

// Flat-Laplacian symbol at integer frequencies (k1, k2): the squared
// length of k1*a* + k2*b* with the dual basis a* = (by, -bx),
// b* = (-ay, ax), times 4 pi^2.
double laplace_symbol(const LatticeBasis& lat, int k1, int k2) {
    const double wx = k1 * lat.by - k2 * lat.ay;
    const double wy = -k1 * lat.bx + k2 * lat.ax;
    return kTwoPi * kTwoPi * (wx * wx + wy * wy);
}

std::vector<std::complex<double>> to_complex(const std::vector<double>& v) {
    return {v.begin(), v.end()};
}

std::vector<double> real_part(const std::vector<std::complex<double>>& v) {
    std::vector<double> out(v.size());
    std::transform(v.begin(), v.end(), out.begin(),
                   [](std::complex<double> z) { return z.real(); });
    return out;
}

} // namespace

PeriodicGrid make_grid(const LatticeBasis& lat, int N, int M) {
    if (!power_of_two(N) || !power_of_two(M) || N < 8 || M < 8) {
        throw ValidationError("grid sizes must be powers of two >= 8");
    }
    return PeriodicGrid{lat, N, M};
}

ScalarField sample_conformal_factor(const ConformalSpec& spec, const PeriodicGrid& grid) {
    for (const auto& m : spec.modes) {
        if (m.k1 == 0 && m.k2 == 0) {
            throw ValidationError("conformal mode (0,0) is reserved for the normalization");
        }
        if (2 * std::abs(m.k1) >= grid.N || 2 * std::abs(m.k2) >= grid.M) {
            throw ValidationError("conformal mode outside the grid band limit (2|k| < N, M)");
        }
    }

    ScalarField f{grid, std::vector<double>(grid_size(grid), 1.0)};
    for (int i = 0; i < grid.N; ++i) {
        for (int j = 0; j < grid.M; ++j) {
            double v = 1.0;
            for (const auto& m : spec.modes) {
                const double phase =
                    kTwoPi * (m.k1 * (static_cast<double>(i) / grid.N) +
                              m.k2 * (static_cast<double>(j) / grid.M));
                v += m.cosAmp * std::cos(phase) + m.sinAmp * std::sin(phase);
            }
            f.at(i, j) = v;
        }
    }

    const double mean = field_mean(f);
    for (double& v : f.values) v /= mean;
    if (std::any_of(f.values.begin(), f.values.end(), [](double v) { return v <= 0.0; })) {
        throw NonPositiveField("conformal factor has a non-positive sample");
    }
    return f;
}

double field_mean(const ScalarField& f) {
    double acc = 0.0;
    for (double v : f.values) acc += v;
    return acc / static_cast<double>(f.values.size());
}

ScalarField poisson_solve(const ScalarField& rhs) {
    if (std::abs(field_mean(rhs)) > 1e-10) {
        throw NonZeroMean("poisson_solve requires a zero-mean right-hand side");
    }
    const auto& g = rhs.grid;
    auto spec = fft2_forward(to_complex(rhs.values), g.N, g.M);
    for (int i = 0; i < g.N; ++i) {
        for (int j = 0; j < g.M; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * g.M + j;
            if (i == 0 && j == 0) {
                spec[idx] = 0.0;
                continue;
            }
            spec[idx] /= -laplace_symbol(g.lat, fft_freq(i, g.N), fft_freq(j, g.M));
        }
    }
    return ScalarField{g, real_part(fft2_backward(spec, g.N, g.M))};
}

ScalarField laplacian_flat(const ScalarField& f) {
    const auto& g = f.grid;
    auto spec = fft2_forward(to_complex(f.values), g.N, g.M);
    for (int i = 0; i < g.N; ++i) {
        for (int j = 0; j < g.M; ++j) {
            spec[static_cast<std::size_t>(i) * g.M + j] *=
                -laplace_symbol(g.lat, fft_freq(i, g.N), fft_freq(j, g.M));
        }
    }
    return ScalarField{g, real_part(fft2_backward(spec, g.N, g.M))};
}

ScalarField robin_field(const ScalarField& lambda2) {
    if (std::any_of(lambda2.values.begin(), lambda2.values.end(),
                    [](double v) { return v <= 0.0; })) {
        throw NonPositiveField("robin_field requires a positive conformal factor");
    }
    ScalarField rhs{lambda2.grid, lambda2.values};
    for (double& v : rhs.values) v -= 1.0;
    const ScalarField phi = poisson_solve(rhs);

    ScalarField R{lambda2.grid, std::vector<double>(lambda2.values.size())};
    const double c = 1.0 / (2.0 * kTwoPi);
    for (std::size_t n = 0; n < R.values.size(); ++n) {
        R.values[n] = c * std::log(lambda2.values[n]) + 2.0 * phi.values[n];
    }
    return R;
}

CovectorField differential(const ScalarField& f) {
    const auto& g = f.grid;
    const auto spec = fft2_forward(to_complex(f.values), g.N, g.M);
    std::vector<std::complex<double>> sx(spec.size()), sy(spec.size());
    for (int i = 0; i < g.N; ++i) {
        // Nyquist slots carry no derivative (the symmetric interpolant is
        // an even function of that coordinate there).
        const int k1 = (2 * i == g.N) ? 0 : fft_freq(i, g.N);
        for (int j = 0; j < g.M; ++j) {
            const int k2 = (2 * j == g.M) ? 0 : fft_freq(j, g.M);
            const std::size_t idx = static_cast<std::size_t>(i) * g.M + j;
            const double mx = kTwoPi * (k1 * g.lat.by - k2 * g.lat.ay);
            const double my = kTwoPi * (-k1 * g.lat.bx + k2 * g.lat.ax);
            const std::complex<double> iz(-spec[idx].imag(), spec[idx].real());
            sx[idx] = iz * mx;
            sy[idx] = iz * my;
        }
    }
    return CovectorField{g, real_part(fft2_backward(sx, g.N, g.M)),
                         real_part(fft2_backward(sy, g.N, g.M))};
}

PhaseTable::PhaseTable(int k1max_, int k2max_)
    : k1max(k1max_), k2max(k2max_),
      c1(k1max_ + 1), s1(k1max_ + 1), c2(k2max_ + 1), s2(k2max_ + 1) {}

void PhaseTable::set_point(double s, double t) {
    // Powers of the unit phase by complex multiplication; the recurrence
    // error grows like k*eps, well under interpolation tolerances for the
    // band limits in play.
    c1[0] = 1.0;
    s1[0] = 0.0;
    const double cr = std::cos(kTwoPi * s), ci = std::sin(kTwoPi * s);
    for (int k = 1; k <= k1max; ++k) {
        c1[k] = c1[k - 1] * cr - s1[k - 1] * ci;
        s1[k] = s1[k - 1] * cr + c1[k - 1] * ci;
    }
    c2[0] = 1.0;
    s2[0] = 0.0;
    const double dr = std::cos(kTwoPi * t), di = std::sin(kTwoPi * t);
    for (int k = 1; k <= k2max; ++k) {
        c2[k] = c2[k - 1] * dr - s2[k - 1] * di;
        s2[k] = s2[k - 1] * dr + c2[k - 1] * di;
    }
}

double PointEvaluator::eval(const PhaseTable& tab) const {
    double acc = 0.0;
    for (const auto& e : entries) {
        const int a1 = e.k1 < 0 ? -e.k1 : e.k1;
        const int a2 = e.k2 < 0 ? -e.k2 : e.k2;
        const double ca = tab.c1[a1];
        const double sa = e.k1 < 0 ? -tab.s1[a1] : tab.s1[a1];
        const double cb = tab.c2[a2];
        const double sb = e.k2 < 0 ? -tab.s2[a2] : tab.s2[a2];
        const double cth = ca * cb - sa * sb;
        const double sth = sa * cb + ca * sb;
        acc += e.wre * cth - e.wim * sth;
    }
    return acc;
}

double PointEvaluator::eval(double s, double t) const {
    PhaseTable tab(k1max, k2max);
    tab.set_point(s, t);
    return eval(tab);
}

PointEvaluator make_evaluator(const ScalarField& f) {
    const auto& g = f.grid;
    const auto spec = fft2_forward(to_complex(f.values), g.N, g.M);
    const double norm = 1.0 / static_cast<double>(grid_size(g));

    PointEvaluator ev;
    ev.N = g.N;
    ev.M = g.M;
    for (int i = 0; i < g.N; ++i) {
        const int pi_ = (g.N - i) % g.N;
        for (int j = 0; j < g.M; ++j) {
            const int pj = (g.M - j) % g.M;
            if (std::pair(i, j) > std::pair(pi_, pj)) continue; // conjugate partner covers it
            const std::size_t idx = static_cast<std::size_t>(i) * g.M + j;
            const double re = spec[idx].real() * norm;
            const double im = spec[idx].imag() * norm;
            if (re == 0.0 && im == 0.0) continue;
            const double w = (i == pi_ && j == pj) ? 1.0 : 2.0;
            const int k1 = fft_freq(i, g.N);
            const int k2 = fft_freq(j, g.M);
            ev.entries.push_back({k1, k2, w * re, w * im});
            ev.k1max = std::max(ev.k1max, std::abs(k1));
            ev.k2max = std::max(ev.k2max, std::abs(k2));
        }
    }
    return ev;
}

double eval_field(const ScalarField& f, const TorusPoint& p) {
    return make_evaluator(f).eval(p.s, p.t);
}

std::array<double, 2> eval_covector(const CovectorField& c, const TorusPoint& p) {
    const auto evx = make_evaluator(ScalarField{c.grid, c.cx});
    const auto evy = make_evaluator(ScalarField{c.grid, c.cy});
    PhaseTable tab(std::max(evx.k1max, evy.k1max), std::max(evx.k2max, evy.k2max));
    tab.set_point(p.s, p.t);
    return {evx.eval(tab), evy.eval(tab)};
}

ScalarField greens_function(const ScalarField& lambda2, const TorusPoint& p) {
    const auto& g = lambda2.grid;
    const double total = static_cast<double>(grid_size(g));
    auto spec = fft2_forward(to_complex(lambda2.values), g.N, g.M);

    // -Delta_flat G = delta_p - lambda^2 in spectral form; the truncated
    // Fourier delta has every slot at amplitude 1 (times the slot phase).
    for (int i = 0; i < g.N; ++i) {
        for (int j = 0; j < g.M; ++j) {
            const std::size_t idx = static_cast<std::size_t>(i) * g.M + j;
            if (i == 0 && j == 0) {
                spec[idx] = 0.0;
                continue;
            }
            const int k1 = fft_freq(i, g.N);
            const int k2 = fft_freq(j, g.M);
            const double ang = -kTwoPi * (k1 * p.s + k2 * p.t);
            const std::complex<double> delta = std::polar(total, ang);
            spec[idx] = (delta - spec[idx]) / laplace_symbol(g.lat, k1, k2);
        }
    }
    ScalarField G{g, real_part(fft2_backward(spec, g.N, g.M))};

    // Gauge: grid quadrature of G * lambda^2 vanishes exactly.
    double num = 0.0, den = 0.0;
    for (std::size_t n = 0; n < G.values.size(); ++n) {
        num += G.values[n] * lambda2.values[n];
        den += lambda2.values[n];
    }
    const double c = num / den;
    for (double& v : G.values) v -= c;
    return G;
}

double robin_from_green(const ScalarField& lambda2, const TorusPoint& p,
                        std::span<const double> radii) {
    if (radii.empty()) {
        throw ValidationError("robin_from_green needs at least one radius");
    }
    const auto& g = lambda2.grid;
    const double ha = std::hypot(g.lat.ax, g.lat.ay) / g.N;
    const double hb = std::hypot(g.lat.bx, g.lat.by) / g.M;
    const double cell = std::max(ha, hb);
    for (double r : radii) {
        if (r < 2.0 * cell) {
            throw RadiusTooSmall("ring radius below 2 grid cells");
        }
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        for (std::size_t j = i + 1; j < radii.size(); ++j) {
            if (radii[i] == radii[j]) {
                throw ValidationError("ring radii must be distinct");
            }
        }
    }

    const ScalarField G = greens_function(lambda2, p);
    const PointEvaluator gev = make_evaluator(G);
    const double lam_p = std::sqrt(make_evaluator(lambda2).eval(p.s, p.t));

    constexpr int kRing = 128;
    std::vector<double> u(radii.size()), v(radii.size());
    PhaseTable tab(gev.k1max, gev.k2max);
    for (std::size_t n = 0; n < radii.size(); ++n) {
        const double r = radii[n];
        double acc = 0.0;
        for (int m = 0; m < kRing; ++m) {
            const double th = kTwoPi * m / kRing;
            const auto [s, t] =
                lattice_coords(g.lat, p.x + r * std::cos(th), p.y + r * std::sin(th));
            tab.set_point(s, t);
            acc += gev.eval(tab);
        }
        u[n] = r * r;
        v[n] = acc / kRing + std::log(lam_p * r) / kTwoPi;
    }

    // Neville extrapolation of the ring values to r^2 = 0.
    for (std::size_t span = 1; span < v.size(); ++span) {
        for (std::size_t i = 0; i + span < v.size(); ++i) {
            v[i] = (u[i + span] * v[i] - u[i] * v[i + span]) / (u[i + span] - u[i]);
        }
    }
    return v[0];
}

CovectorField velocity_one_form(const ScalarField& G, const HarmonicCoeffs& eta,
                                const LatticeBasis& lat) {
    const CovectorField dG = differential(G);
    CovectorField u{G.grid, std::vector<double>(dG.cx.size()),
                    std::vector<double>(dG.cy.size())};
    const auto [alpha, beta] = harmonic_basis(lat);
    for (std::size_t n = 0; n < u.cx.size(); ++n) {
        // -*dG = (dG_y, -dG_x) with the star convention (cx, cy) -> (-cy, cx).
        u.cx[n] = dG.cy[n] + eta.A * alpha.cx + eta.B * beta.cx;
        u.cy[n] = -dG.cx[n] + eta.A * alpha.cy + eta.B * beta.cy;
    }
    return u;
}

} // namespace vortorus
