#include "doctest.h"

#include <cmath>
#include <random>
#include <vector>

#include "vortorus/errors.hpp"
#include "vortorus/geometry.hpp"

using namespace vortorus;

namespace {

std::vector<Vec2> segment(Vec2 from, Vec2 to, int n = 9) {
    std::vector<Vec2> pts;
    for (int i = 0; i < n; ++i) {
        const double tau = static_cast<double>(i) / (n - 1);
        pts.push_back({from.x + tau * (to.x - from.x), from.y + tau * (to.y - from.y)});
    }
    return pts;
}

} // namespace

TEST_CASE("make_lattice normalizes to unit volume") {
    const LatticeBasis lat = make_lattice(2, 0, 0, 2);
    CHECK(lat.ax == doctest::Approx(1.0));
    CHECK(lat.ay == 0.0);
    CHECK(lat.bx == 0.0);
    CHECK(lat.by == doctest::Approx(1.0));
    CHECK(std::abs(lat.det() - 1.0) <= 1e-15);

    const LatticeBasis skew = make_lattice(3, 1, 1, 2);
    CHECK(std::abs(skew.det() - 1.0) <= 1e-15);
}

TEST_CASE("make_lattice rejects degenerate generators") {
    CHECK_THROWS_AS(make_lattice(1, 0, 2, 0), DegenerateLattice);
    CHECK_THROWS_AS(make_lattice(1, 2, 2, 4), DegenerateLattice);
    CHECK_THROWS_AS(make_lattice(1, 0, 0, -1), DegenerateLattice);
    CHECK_THROWS_AS(make_lattice(0, 0, 0, 0), DegenerateLattice);
}

TEST_CASE("wrap_point reduces plane points into the fundamental domain") {
    const LatticeBasis sq = make_lattice(1, 0, 0, 1);
    const TorusPoint p = wrap_point(sq, 1.5, 1.0);
    CHECK(p.s == doctest::Approx(0.5));
    CHECK(p.t == doctest::Approx(0.0));
    CHECK(p.x == doctest::Approx(0.5));
    CHECK(p.y == doctest::Approx(0.0));

    const TorusPoint q = wrap_point(sq, -0.25, 2.75);
    CHECK(q.s == doctest::Approx(0.75));
    CHECK(q.t == doctest::Approx(0.75));
}

TEST_CASE("lattice coordinates invert the generator expansion") {
    const LatticeBasis lat = make_lattice(1, 0, 0.5, 1);
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> unit(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        const double x = unit(rng), y = unit(rng);
        const auto [s, t] = lattice_coords(lat, x, y);
        CHECK(std::abs(s * lat.ax + t * lat.bx - x) <= 1e-12);
        CHECK(std::abs(s * lat.ay + t * lat.by - y) <= 1e-12);

        const TorusPoint p = wrap_point(lat, x, y);
        CHECK(p.s >= 0.0);
        CHECK(p.s < 1.0);
        CHECK(p.t >= 0.0);
        CHECK(p.t < 1.0);
        CHECK(std::abs(p.s * lat.ax + p.t * lat.bx - p.x) <= 1e-12);
        CHECK(std::abs(p.s * lat.ay + p.t * lat.by - p.y) <= 1e-12);
    }
}

TEST_CASE("harmonic basis periods on generators") {
    const LatticeBasis lat = make_lattice(1, 0, 0.5, 1);
    const auto [alpha, beta] = harmonic_basis(lat);

    CHECK(alpha.cx == doctest::Approx(1.0));
    CHECK(alpha.cy == doctest::Approx(-0.5));
    CHECK(beta.cx == doctest::Approx(0.0));
    CHECK(beta.cy == doctest::Approx(1.0));

    const auto along_a = segment({0.1, 0.2}, {0.1 + lat.ax, 0.2 + lat.ay});
    const auto along_b = segment({0.1, 0.2}, {0.1 + lat.bx, 0.2 + lat.by});
    CHECK(std::abs(line_integral(alpha, along_a) - 1.0) <= 1e-12);
    CHECK(std::abs(line_integral(beta, along_a) - 0.0) <= 1e-12);
    CHECK(std::abs(line_integral(alpha, along_b) - 0.0) <= 1e-12);
    CHECK(std::abs(line_integral(beta, along_b) - 1.0) <= 1e-12);
}

TEST_CASE("line_integral rejects an empty curve") {
    const auto [alpha, beta] = harmonic_basis(make_lattice(1, 0, 0, 1));
    (void)beta;
    CHECK_THROWS_AS(line_integral(alpha, std::vector<Vec2>{}), EmptyCurve);
}

TEST_CASE("period matrices on the square and a skew lattice") {
    const PeriodMatrices sq = period_matrices(make_lattice(1, 0, 0, 1));
    CHECK(sq.P == doctest::Approx(1.0));
    CHECK(sq.Q == doctest::Approx(1.0));
    CHECK(sq.R == doctest::Approx(0.0));

    const PeriodMatrices sk = period_matrices(make_lattice(1, 0, 0.5, 1));
    CHECK(sk.P == doctest::Approx(1.25));
    CHECK(sk.Q == doctest::Approx(1.0));
    CHECK(sk.R == doctest::Approx(-0.5));
    CHECK(std::abs(sk.P * sk.Q - sk.R * sk.R - 1.0) <= 1e-14);
}

TEST_CASE("star rotates one-forms and squares to minus one") {
    const LatticeBasis lat = make_lattice(1, 0, 0.5, 1);
    const auto [alpha, beta] = harmonic_basis(lat);

    const ConstantOneForm sa = star_one_form(alpha);
    CHECK(sa.cx == doctest::Approx(lat.bx));
    CHECK(sa.cy == doctest::Approx(lat.by));
    const ConstantOneForm sb = star_one_form(beta);
    CHECK(sb.cx == doctest::Approx(-lat.ax));
    CHECK(sb.cy == doctest::Approx(-lat.ay));

    const ConstantOneForm f{0.3, -0.8};
    const ConstantOneForm ss = star_one_form(star_one_form(f));
    CHECK(ss.cx == doctest::Approx(-f.cx));
    CHECK(ss.cy == doctest::Approx(-f.cy));
}

TEST_CASE("random lattices satisfy the wedge and determinant identities") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> diag(0.5, 1.5), off(-0.5, 0.5);
    int done = 0;
    while (done < 100) {
        const double ax = diag(rng), ay = off(rng), bx = off(rng), by = diag(rng);
        if (ax * by - ay * bx <= 0.2) continue;
        ++done;
        const LatticeBasis lat = make_lattice(ax, ay, bx, by);
        const auto [alpha, beta] = harmonic_basis(lat);

        CHECK(std::abs(wedge_integral(alpha, beta) - 1.0) <= 1e-12);

        const PeriodMatrices m = period_matrices(lat);
        CHECK(std::abs(m.P * m.Q - m.R * m.R - 1.0) <= 1e-10);

        const PeriodMatrices q4 = pqr_quadrature(lat, 4);
        CHECK(std::abs(m.P - q4.P) <= 1e-12);
        CHECK(std::abs(m.Q - q4.Q) <= 1e-12);
        CHECK(std::abs(m.R - q4.R) <= 1e-12);
    }
}

TEST_CASE("bergman_apply reproduces harmonic coefficients") {
    const LatticeBasis lat = make_lattice(1.1, 0.2, -0.3, 1.0);
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> unit(-2.0, 2.0);
    for (int i = 0; i < 20; ++i) {
        const HarmonicCoeffs sigma{unit(rng), unit(rng)};
        const HarmonicCoeffs out = bergman_apply(sigma, lat);
        CHECK(std::abs(out.A - sigma.A) <= 1e-14);
        CHECK(std::abs(out.B - sigma.B) <= 1e-14);
    }
}
