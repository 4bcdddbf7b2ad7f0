#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "vortorus/errors.hpp"
#include "vortorus/fields.hpp"
#include "vortorus/geometry.hpp"

using namespace vortorus;

namespace {

constexpr double kPi = std::numbers::pi;

const LatticeBasis kSquare = make_lattice(1, 0, 0, 1);

ConformalSpec single_mode() {
    return ConformalSpec{{ConformalMode{1, 0, 0.5, 0.0}}};
}

std::vector<Vec2> circle(Vec2 center, double rho, int n) {
    std::vector<Vec2> pts;
    for (int i = 0; i <= n; ++i) {
        const double th = 2.0 * kPi * i / n;
        pts.push_back({center.x + rho * std::cos(th), center.y + rho * std::sin(th)});
    }
    return pts;
}

/// Circulation of a sampled covector field along a lifted polyline,
/// using trigonometric interpolation between nodes.
double field_circulation(const CovectorField& u, std::span<const Vec2> curve) {
    const PointEvaluator ux = make_evaluator(ScalarField{u.grid, u.cx});
    const PointEvaluator uy = make_evaluator(ScalarField{u.grid, u.cy});
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        const Vec2 mid{0.5 * (curve[i].x + curve[i + 1].x),
                       0.5 * (curve[i].y + curve[i + 1].y)};
        const auto [s, t] = lattice_coords(u.grid.lat, mid.x, mid.y);
        total += ux.eval(s, t) * (curve[i + 1].x - curve[i].x) +
                 uy.eval(s, t) * (curve[i + 1].y - curve[i].y);
    }
    return total;
}

} // namespace

TEST_CASE("make_grid accepts powers of two and rejects the rest") {
    CHECK_NOTHROW(make_grid(kSquare, 8, 128));
    CHECK_THROWS_AS(make_grid(kSquare, 100, 128), ValidationError);
    CHECK_THROWS_AS(make_grid(kSquare, 128, 4), ValidationError);
    CHECK_THROWS_AS(make_grid(kSquare, 0, 8), ValidationError);
}

TEST_CASE("sample_conformal_factor validates and normalizes") {
    const PeriodicGrid grid = make_grid(kSquare, 64, 64);

    const ScalarField flat = sample_conformal_factor(ConformalSpec{}, grid);
    for (double v : flat.values) CHECK(v == 1.0);

    const ScalarField lam2 = sample_conformal_factor(single_mode(), grid);
    CHECK(std::abs(field_mean(lam2) - 1.0) <= 1e-15);
    for (int i = 0; i < grid.N; ++i) {
        const double want = 1.0 + 0.5 * std::cos(2.0 * kPi * i / grid.N);
        CHECK(std::abs(lam2.at(i, 17) - want) <= 1e-14);
    }

    CHECK_THROWS_AS(
        sample_conformal_factor(ConformalSpec{{ConformalMode{1, 0, -1.5, 0.0}}}, grid),
        NonPositiveField);
    CHECK_THROWS_AS(
        sample_conformal_factor(ConformalSpec{{ConformalMode{0, 0, 0.1, 0.0}}}, grid),
        ValidationError);
    // 2|k1| < N is violated at the Nyquist wavenumber.
    CHECK_THROWS_AS(
        sample_conformal_factor(ConformalSpec{{ConformalMode{32, 0, 0.1, 0.0}}}, grid),
        ValidationError);
}

TEST_CASE("poisson_solve inverts single modes and rejects nonzero means") {
    const PeriodicGrid grid = make_grid(kSquare, 64, 64);

    ScalarField zero{grid, std::vector<double>(64 * 64, 0.0)};
    for (double v : poisson_solve(zero).values) CHECK(v == 0.0);

    ScalarField rhs{grid, std::vector<double>(64 * 64, 0.0)};
    for (int i = 0; i < 64; ++i) {
        for (int j = 0; j < 64; ++j) {
            rhs.at(i, j) = 0.5 * std::cos(2.0 * kPi * i / 64.0);
        }
    }
    const ScalarField phi = poisson_solve(rhs);
    CHECK(std::abs(phi.at(0, 0) - (-0.5 / (4.0 * kPi * kPi))) <= 1e-15);
    CHECK(phi.at(0, 0) == doctest::Approx(-0.0126651).epsilon(1e-4));
    double mean = 0.0;
    for (double v : phi.values) mean += v;
    CHECK(std::abs(mean / phi.values.size()) <= 1e-12);

    const ScalarField back = laplacian_flat(phi);
    for (std::size_t n = 0; n < rhs.values.size(); ++n) {
        CHECK(std::abs(back.values[n] - rhs.values[n]) <= 1e-10);
    }

    ScalarField ones{grid, std::vector<double>(64 * 64, 1.0)};
    CHECK_THROWS_AS(poisson_solve(ones), NonZeroMean);
}

TEST_CASE("robin_field closed-form values") {
    const PeriodicGrid grid = make_grid(kSquare, 64, 64);

    const ScalarField flat_robin =
        robin_field(sample_conformal_factor(ConformalSpec{}, grid));
    for (double v : flat_robin.values) CHECK(std::abs(v) <= 1e-14);

    const ScalarField R = robin_field(sample_conformal_factor(single_mode(), grid));
    const double want = std::log(1.5) / (4.0 * kPi) - 1.0 / (4.0 * kPi * kPi);
    CHECK(std::abs(R.at(0, 0) - want) <= 1e-13);
    CHECK(R.at(0, 0) == doctest::Approx(0.006936).epsilon(1e-3));

    // s-only spec: no variation along t.
    for (int i = 0; i < grid.N; ++i) {
        for (int j = 1; j < grid.M; ++j) {
            CHECK(std::abs(R.at(i, j) - R.at(i, 0)) <= 1e-12);
        }
    }
}

TEST_CASE("differential of a single cosine mode and translation equivariance") {
    const PeriodicGrid grid = make_grid(kSquare, 64, 64);

    ScalarField f{grid, std::vector<double>(64 * 64, 0.0)};
    for (int i = 0; i < 64; ++i) {
        for (int j = 0; j < 64; ++j) {
            f.at(i, j) = std::cos(2.0 * kPi * i / 64.0);
        }
    }
    const CovectorField df = differential(f);
    for (int i = 0; i < 64; ++i) {
        const double want = -2.0 * kPi * std::sin(2.0 * kPi * i / 64.0);
        for (int j = 0; j < 64; ++j) {
            CHECK(std::abs(df.cx[static_cast<std::size_t>(i) * 64 + j] - want) <= 1e-12);
            CHECK(std::abs(df.cy[static_cast<std::size_t>(i) * 64 + j]) <= 1e-12);
        }
    }

    ScalarField c{grid, std::vector<double>(64 * 64, 3.25)};
    const CovectorField dc = differential(c);
    for (std::size_t n = 0; n < dc.cx.size(); ++n) {
        CHECK(std::abs(dc.cx[n]) <= 1e-13);
        CHECK(std::abs(dc.cy[n]) <= 1e-13);
    }

    // Cyclic shift of the samples commutes with the differential.
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    ScalarField g{grid, std::vector<double>(64 * 64)};
    for (int i = 0; i < 64; ++i) {
        for (int j = 0; j < 64; ++j) {
            g.at(i, j) = std::cos(2.0 * kPi * (2 * i + j) / 64.0) +
                         0.3 * std::sin(2.0 * kPi * (i - 3 * j) / 64.0);
        }
    }
    ScalarField shifted{grid, std::vector<double>(64 * 64)};
    const int di = 5, dj = 11;
    for (int i = 0; i < 64; ++i) {
        for (int j = 0; j < 64; ++j) {
            shifted.at(i, j) = g.at((i + di) % 64, (j + dj) % 64);
        }
    }
    const CovectorField dg = differential(g);
    const CovectorField ds = differential(shifted);
    for (int i = 0; i < 64; ++i) {
        for (int j = 0; j < 64; ++j) {
            const std::size_t a = static_cast<std::size_t>(i) * 64 + j;
            const std::size_t b = static_cast<std::size_t>((i + di) % 64) * 64 + (j + dj) % 64;
            CHECK(std::abs(ds.cx[a] - dg.cx[b]) <= 1e-11);
            CHECK(std::abs(ds.cy[a] - dg.cy[b]) <= 1e-11);
        }
    }
    (void)unit;
}

TEST_CASE("symmetric spec pins critical columns of the Robin differential") {
    const PeriodicGrid grid = make_grid(kSquare, 64, 64);
    const ScalarField R = robin_field(sample_conformal_factor(single_mode(), grid));
    const CovectorField dR = differential(R);
    for (int j = 0; j < grid.M; ++j) {
        CHECK(std::abs(dR.cx[j]) <= 1e-10);                                   // s = 0
        CHECK(std::abs(dR.cx[static_cast<std::size_t>(32) * 64 + j]) <= 1e-10); // s = 1/2
    }
}

TEST_CASE("interpolation is exact at nodes and for band-limited fields") {
    const PeriodicGrid grid = make_grid(kSquare, 64, 64);
    const ScalarField lam2 = sample_conformal_factor(single_mode(), grid);

    for (int i = 0; i < 64; i += 7) {
        for (int j = 0; j < 64; j += 5) {
            const TorusPoint p = wrap_point(kSquare, i / 64.0, j / 64.0);
            CHECK(std::abs(eval_field(lam2, p) - lam2.at(i, j)) <= 1e-14);
        }
    }

    const TorusPoint off = wrap_point(kSquare, 0.125, 0.37);
    CHECK(std::abs(eval_field(lam2, off) - (1.0 + 0.5 * std::cos(2.0 * kPi * 0.125))) <=
          1e-12);

    ScalarField c{grid, std::vector<double>(64 * 64, -0.75)};
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < 25; ++k) {
        const TorusPoint p = wrap_point(kSquare, unit(rng), unit(rng));
        CHECK(std::abs(eval_field(c, p) + 0.75) <= 1e-14);
    }

    // Covector interpolation agrees with finite differences of the
    // scalar interpolant.
    const CovectorField dl = differential(lam2);
    const TorusPoint q = wrap_point(kSquare, 0.31, 0.62);
    const auto [gx, gy] = eval_covector(dl, q);
    const double h = 1e-6;
    const double fdx = (eval_field(lam2, wrap_point(kSquare, q.x + h, q.y)) -
                        eval_field(lam2, wrap_point(kSquare, q.x - h, q.y))) /
                       (2 * h);
    const double fdy = (eval_field(lam2, wrap_point(kSquare, q.x, q.y + h)) -
                        eval_field(lam2, wrap_point(kSquare, q.x, q.y - h))) /
                       (2 * h);
    CHECK(std::abs(gx - fdx) <= 1e-7);
    CHECK(std::abs(gy - fdy) <= 1e-7);
}

TEST_CASE("evaluator is periodic in unwrapped coordinates") {
    const PeriodicGrid grid = make_grid(kSquare, 64, 64);
    const ScalarField lam2 = sample_conformal_factor(single_mode(), grid);
    const PointEvaluator ev = make_evaluator(lam2);
    CHECK(std::abs(ev.eval(0.31, 0.62) - ev.eval(0.31 + 3.0, 0.62 - 2.0)) <= 1e-12);
}

TEST_CASE("greens_function gauge, symmetry, and flat translation") {
    const PeriodicGrid grid = make_grid(kSquare, 128, 128);
    const ScalarField lam2 = sample_conformal_factor(single_mode(), grid);

    const TorusPoint p = wrap_point(kSquare, 0.25, 0.5);
    const TorusPoint q = wrap_point(kSquare, 0.625, 0.125);
    const ScalarField Gp = greens_function(lam2, p);
    const ScalarField Gq = greens_function(lam2, q);

    double gauge = 0.0;
    for (std::size_t n = 0; n < Gp.values.size(); ++n) {
        gauge += Gp.values[n] * lam2.values[n];
    }
    CHECK(std::abs(gauge / static_cast<double>(Gp.values.size())) <= 1e-10);

    // p and q are grid nodes, so interpolation is lookup here.
    CHECK(std::abs(eval_field(Gp, q) - eval_field(Gq, p)) <= 1e-10);

    const ScalarField flat = sample_conformal_factor(ConformalSpec{}, grid);
    const ScalarField Ga = greens_function(flat, wrap_point(kSquare, 0.0, 0.0));
    const ScalarField Gb = greens_function(flat, wrap_point(kSquare, 16.0 / 128, 8.0 / 128));
    double err = 0.0;
    for (int i = 0; i < 128; ++i) {
        for (int j = 0; j < 128; ++j) {
            err = std::max(err,
                           std::abs(Ga.at(i, j) - Gb.at((i + 16) % 128, (j + 8) % 128)));
        }
    }
    CHECK(err <= 1e-10);
}

TEST_CASE("robin_from_green is position-independent on the flat torus") {
    const PeriodicGrid grid = make_grid(kSquare, 128, 128);
    const ScalarField flat = sample_conformal_factor(ConformalSpec{}, grid);
    const std::vector<double> radii{8.0 / 128, 12.0 / 128, 16.0 / 128};

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double lo = 1e300, hi = -1e300;
    for (int k = 0; k < 10; ++k) {
        const double v =
            robin_from_green(flat, wrap_point(kSquare, unit(rng), unit(rng)), radii);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    CHECK(hi - lo < 1e-3);
}

TEST_CASE("robin_from_green cross-validates robin_field differences") {
    const PeriodicGrid grid = make_grid(kSquare, 128, 128);
    const ScalarField lam2 = sample_conformal_factor(single_mode(), grid);
    const ScalarField R = robin_field(lam2);
    const std::vector<double> radii{8.0 / 128, 12.0 / 128, 16.0 / 128};

    const TorusPoint p1 = wrap_point(kSquare, 0.2, 0.5);
    const TorusPoint p2 = wrap_point(kSquare, 0.45, 0.125);
    const double green_diff =
        robin_from_green(lam2, p1, radii) - robin_from_green(lam2, p2, radii);
    const double field_diff = eval_field(R, p1) - eval_field(R, p2);
    CHECK(std::abs(green_diff - field_diff) <= 1e-3);
}

TEST_CASE("robin_from_green rejects bad rings") {
    const PeriodicGrid grid = make_grid(kSquare, 64, 64);
    const ScalarField flat = sample_conformal_factor(ConformalSpec{}, grid);
    const TorusPoint p = wrap_point(kSquare, 0.3, 0.3);

    const std::vector<double> tiny{0.05, 0.01}; // 0.01 < 2/64
    CHECK_THROWS_AS(robin_from_green(flat, p, tiny), RadiusTooSmall);
    const std::vector<double> dup{0.05, 0.05};
    CHECK_THROWS_AS(robin_from_green(flat, p, dup), ValidationError);
    CHECK_THROWS_AS(robin_from_green(flat, p, std::vector<double>{}), ValidationError);
}

TEST_CASE("velocity_one_form reduces to the harmonic part when G vanishes") {
    const LatticeBasis lat = make_lattice(1, 0, 0.5, 1);
    const PeriodicGrid grid = make_grid(lat, 32, 32);
    const ScalarField zero{grid, std::vector<double>(32 * 32, 0.0)};
    const auto [alpha, beta] = harmonic_basis(lat);
    (void)beta;

    const CovectorField u = velocity_one_form(zero, {1.0, 0.0}, lat);
    for (std::size_t n = 0; n < u.cx.size(); ++n) {
        CHECK(std::abs(u.cx[n] - alpha.cx) <= 1e-14);
        CHECK(std::abs(u.cy[n] - alpha.cy) <= 1e-14);
    }
}

TEST_CASE("vortex velocity form: circulation jumps across the vortex") {
    const PeriodicGrid grid = make_grid(kSquare, 64, 64);
    const ScalarField flat = sample_conformal_factor(ConformalSpec{}, grid);
    const TorusPoint p = wrap_point(kSquare, 0.5, 0.5);
    const ScalarField G = greens_function(flat, p);
    const CovectorField u = velocity_one_form(G, {0.0, 0.0}, kSquare);

    auto a_cycle = [&](double t) {
        std::vector<Vec2> pts;
        for (int i = 0; i <= 256; ++i) {
            pts.push_back({static_cast<double>(i) / 256, t});
        }
        return pts;
    };

    // Stokes across the strip between two representatives: the
    // difference is the strip volume minus the unit charge when the
    // strip contains the vortex, the strip volume alone otherwise
    // (du = (delta_p - mu) dx dy and the lower cycle bounds the strip).
    const double eps = 0.25;
    const double below = field_circulation(u, a_cycle(0.5 - eps));
    const double above = field_circulation(u, a_cycle(0.5 + eps));
    CHECK(std::abs((above - below) - (2 * eps - 1.0)) <= 2e-2);

    const double far1 = field_circulation(u, a_cycle(0.05));
    const double far2 = field_circulation(u, a_cycle(0.15));
    CHECK(std::abs((far2 - far1) - 0.10) <= 2e-2);
}

TEST_CASE("vortex velocity form: flux around a small disk matches the sources") {
    const PeriodicGrid grid = make_grid(kSquare, 64, 64);
    const ScalarField lam2 = sample_conformal_factor(single_mode(), grid);
    const TorusPoint p = wrap_point(kSquare, 0.3, 0.6);
    const ScalarField G = greens_function(lam2, p);
    const CovectorField u = velocity_one_form(G, {0.0, 0.0}, kSquare);

    const double rho = 0.2;
    const double got = field_circulation(u, circle({p.x, p.y}, rho, 512));
    const double lam2p = eval_field(lam2, p);
    // Unit point charge minus the metric volume of the disk; the
    // truncated delta leaks a little mass through the contour.
    CHECK(std::abs(got - (1.0 - lam2p * kPi * rho * rho)) <= 5e-2);
}
