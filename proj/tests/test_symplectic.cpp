// SPDX-License-Identifier: MIT
/*! \file  test_symplectic.cpp
    \brief Symplectic potentials, moment Hessians, inverse Legendre data,
           H(v), holomorphic coordinates, homeomorphism and singularities.
*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "toric/family.hpp"
#include "toric/symplectic.hpp"

using namespace toric;

namespace {

// Independent closed form of the Einstein boundary profile f = D''.
double f_ke_closed(double l1, double l2, double v)
{
    const double num = l1 * v * v * (l2 + v) + l2 * v * v * (l2 + v) + l1 * l1 * (l2 * l2 + v * v);
    const double den = 2.0 * v * (v - l1) * (v - l2) * (l2 * v + l1 * (l2 + v));
    return -num / den;
}

}  // namespace

TEST_CASE("boundary profile: closed forms and Legendre round trip")
{
    const auto [spec, ke] = ke_family(1.0, 2.0);
    for (int i = 1; i <= 9; ++i) {
        const double v = 1.0 + i / 10.0;
        const Jet d = d_ke(1.0, 2.0, Jet::variable(v, 0, 1, 2));
        const double f = boundary_f(spec, Jet::constant(v, 1, 0)).value();
        // Double derivative of the closed-form potential is the profile.
        CHECK(d.deriv(2) == doctest::Approx(f).epsilon(1e-10));
        // Independent algebraic form of the same profile.
        CHECK(f == doctest::Approx(f_ke_closed(1.0, 2.0, v)).epsilon(1e-10));
        // Round trip: FK = 2v/(2v f + 1).
        CHECK(2.0 * v / (2.0 * v * f + 1.0) == doctest::Approx(fk_value(spec, v)).epsilon(1e-12));
    }
    // Symmetry of the profile in the two roots.
    const auto [spec2, ke2] = ke_family(0.5, 3.0);
    for (double v : {0.7, 1.2, 2.0, 2.8}) {
        CHECK(f_ke_closed(0.5, 3.0, v) == doctest::Approx(f_ke_closed(3.0, 0.5, v)).epsilon(1e-12));
        CHECK(boundary_f(spec2, Jet::constant(v, 1, 0)).value() ==
              doctest::Approx(f_ke_closed(0.5, 3.0, v)).epsilon(1e-10));
    }
    // The flat cone: D'' = 1/(2v).
    for (double v : {0.5, 1.0, 3.0}) {
        CHECK(boundary_f(cone(), Jet::constant(v, 1, 0)).value() ==
              doctest::Approx(1.0 / (2.0 * v)).epsilon(1e-12));
    }
}

TEST_CASE("moment Hessian matches the potential and its closed inverse")
{
    const auto spec = ke_family(1.0, 2.0).first;
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> vd(1.05, 1.95);
    std::uniform_real_distribution<double> frac(0.1, 0.9);
    for (int trial = 0; trial < 20; ++trial) {
        const double v = vd(rng);
        const double u = 2.0 * v * frac(rng);
        const Jet uj = Jet::variable(u, 0, 2, 2);
        const Jet vj = Jet::variable(v, 1, 2, 2);
        const Jet pot = g0_potential(uj, vj) + d_ke(1.0, 2.0, vj);
        const auto g = moment_hessian(spec, u, v);
        CHECK(g(0, 0) == doctest::Approx(pot.d2(0, 0)).epsilon(1e-9));
        CHECK(g(0, 1) == doctest::Approx(pot.d2(0, 1)).epsilon(1e-9));
        CHECK(g(1, 1) == doctest::Approx(pot.d2(1, 1)).epsilon(1e-9));
    }
    for (const auto& s : {spec, kronheimer_f2(1.0), wp112()}) {
        for (int trial = 0; trial < 10; ++trial) {
            const double v = s.vMin + (s.vMax - s.vMin) * frac(rng);
            if (v <= 0.0) continue;
            const double u = 2.0 * v * frac(rng);
            const auto g = moment_hessian(s, u, v);
            const auto gi = moment_hessian_inverse(s, u, v);
            for (std::size_t a = 0; a < 2; ++a) {
                for (std::size_t b = 0; b < 2; ++b) {
                    double prod = 0.0;
                    for (std::size_t c = 0; c < 2; ++c) prod += g(a, c) * gi(c, b);
                    CHECK(prod == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("inverse Legendre transform: D', Kaehler potential and Omega")
{
    const auto spec = ke_family(1.0, 2.0).first;
    const double mid = 1.5;
    for (double v : {1.1, 1.3, 1.6, 1.85}) {
        const double cf =
            d_ke(1.0, 2.0, Jet::variable(v, 0, 1, 1)).d1() -
            d_ke(1.0, 2.0, Jet::variable(mid, 0, 1, 1)).d1();
        CHECK(d_prime(spec, v) == doctest::Approx(cf).epsilon(1e-8));
    }
    // The quadrature Kaehler potential differs from the closed-form one by a
    // constant only (linear terms of D are immaterial).
    double offset = 0.0;
    bool first = true;
    for (double v : {1.15, 1.4, 1.6, 1.8}) {
        const Jet d = d_ke(1.0, 2.0, Jet::variable(v, 0, 1, 1));
        const double k0_cf = v * (d.d1() + 0.5) - d.value();
        const double diff = kahler_potential(spec, v) - k0_cf;
        if (first) {
            offset = diff;
            first = false;
        } else {
            CHECK(diff == doctest::Approx(offset).epsilon(1e-7));
        }
    }
    // Omega for the weighted projective member: vanishing limit at the
    // degenerate vertex, monotone growth on the interior.
    const auto wp = wp112();
    const double hi = wp.vMax;
    double prev = omega_of_v(wp, 1e-4);
    CHECK(prev < 1e-4);
    for (double v : {0.01, 0.1, 0.3, 0.6, 0.9, hi - 1e-3}) {
        const double w = omega_of_v(wp, v);
        CHECK(std::isfinite(w));
        CHECK(w > prev);
        prev = w;
    }
}

TEST_CASE("H(v): golden closed forms, monotonicity and endpoint exponents")
{
    // Einstein member (1, 2): H proportional to
    // (v-1)^{7/5} (3v+2)^{7/20} / (2-v)^{7/4}.
    const auto spec = ke_family(1.0, 2.0).first;
    const auto h_cf = [](double v) {
        return std::pow(v - 1.0, 1.4) * std::pow(3.0 * v + 2.0, 0.35) /
               std::pow(2.0 - v, 1.75);
    };
    double ratio0 = h_function(spec, 1.3) / h_cf(1.3);
    for (double v : {1.1, 1.25, 1.5, 1.7, 1.9}) {
        CHECK(h_function(spec, v) / h_cf(v) == doctest::Approx(ratio0).epsilon(1e-8));
    }

    // Kronheimer member: H proportional to
    // sqrt((1024 v^2 - 81 a^2)/(9(3a+4) - 32 v)).
    const double alpha = 1.0;
    const auto kron = kronheimer_f2(alpha);
    const auto hk_cf = [alpha](double v) {
        return std::sqrt((1024.0 * v * v - 81.0 * alpha * alpha) /
                         (9.0 * (3.0 * alpha + 4.0) - 32.0 * v));
    };
    ratio0 = h_function(kron, 1.0) / hk_cf(1.0);
    for (double v : {0.4, 0.7, 1.3, 1.7, 1.9}) {
        CHECK(h_function(kron, v) / hk_cf(v) == doctest::Approx(ratio0).epsilon(1e-8));
    }

    // Monotone increase on the open interval.
    for (const auto& s : {spec, kron, wp112()}) {
        double prev = 0.0;
        for (int i = 1; i <= 20; ++i) {
            const double v = s.vMin + (s.vMax - s.vMin) * i / 21.0;
            if (v <= 0.0) continue;
            const double h = h_function(s, v);
            CHECK(h > prev);
            prev = h;
        }
    }

    // The two metrics calibrated to the common interval [1/8, 3/2] induce
    // incompatible complex structures: the normalized H-ratio is not constant.
    const auto kron_cal = kronheimer_f2(4.0 / 9.0);
    const auto ke_cal = ke_family(0.125, 1.5).first;
    CHECK(kron_cal.vMin == doctest::Approx(0.125));
    CHECK(kron_cal.vMax == doctest::Approx(1.5));
    double rmin = 1e300;
    double rmax = 0.0;
    for (double v : {0.3, 0.6, 0.9, 1.2, 1.4}) {
        const double r = h_function(kron_cal, v) / h_function(ke_cal, v);
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
    }
    CHECK(rmax / rmin > 1.05);

    // Endpoint exponents: d log H / d log(v - lambda) tends to 1/FK'(lambda).
    CHECK((1.0 + 1e-6 - 1.0) / fk_value(spec, 1.0 + 1e-6) ==
          doctest::Approx(7.0 / 5.0).epsilon(1e-4));
    CHECK((2.0 - 1e-6 - 2.0) / fk_value(spec, 2.0 - 1e-6) ==
          doctest::Approx(-7.0 / 4.0).epsilon(1e-4));
}

TEST_CASE("holomorphic coordinates and closed eigen-differentials")
{
    const auto spec = ke_family(1.0, 2.0).first;
    const auto eq = complex_coords(spec, {1.5, M_PI / 2.0, 0.0, 0.0});
    CHECK(std::abs(eq.first - std::complex<double>(1.0, 0.0)) < 1e-12);

    const double tau = 0.8;
    const auto pole = complex_coords(spec, {1.5, 1e-9, 0.3, tau});
    CHECK(std::abs(pole.first) < 1e-8);
    CHECK(std::abs(pole.second - std::exp(std::complex<double>(0.0, tau)) *
                                     h_function(spec, 1.5)) < 1e-8);

    std::mt19937 rng(11);
    std::uniform_real_distribution<double> td(0.2, 2.9);
    std::uniform_real_distribution<double> pd(0.0, 2.0 * M_PI);
    for (int i = 0; i < 10; ++i) {
        const double theta = td(rng);
        const double phi = pd(rng);
        const auto c = complex_coords(spec, {1.4, theta, phi, 0.0});
        CHECK(std::abs(c.first) == doctest::Approx(std::tan(0.5 * theta)).epsilon(1e-12));
        CHECK(std::arg(c.first) ==
              doctest::Approx(std::remainder(phi, 2.0 * M_PI)).epsilon(1e-12));
    }

    for (const auto& s : {spec, kronheimer_f2(1.0)}) {
        for (double theta : {0.5, 1.4, 2.5}) {
            const double v = 0.5 * (s.vMin + s.vMax);
            CHECK(eigen_differential_closure(s, {v, theta, 0.1, 0.2}) < 1e-8);
        }
    }
}

TEST_CASE("homeomorphism to the second sphere and chart transition")
{
    for (const auto& spec : {ke_family(1.0, 2.0).first, kronheimer_f2(1.0)}) {
        CHECK(homeomorphism_chi(spec, spec.vMin) == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(homeomorphism_chi(spec, spec.vMax) == doctest::Approx(M_PI).epsilon(1e-10));
        double prev = -1.0;
        for (int i = 0; i <= 200; ++i) {
            const double v = spec.vMin + (spec.vMax - spec.vMin) * i / 200.0;
            const double chi = homeomorphism_chi(spec, v);
            CHECK(chi > prev);
            CHECK(chi >= 0.0);
            CHECK(chi <= M_PI);
            prev = chi;
        }
        // The equator sits at the maximum of FK.
        const double veq = homeomorphism_chi_inverse(spec, M_PI / 2.0);
        CHECK(homeomorphism_chi(spec, veq) == doctest::Approx(M_PI / 2.0).epsilon(1e-8));
        // Transition applied twice is the identity.
        for (double frac : {0.2, 0.5, 0.7}) {
            const double v = spec.vMin + (spec.vMax - spec.vMin) * frac;
            const double tau = 0.9;
            const auto [vs, taus] = chart_transition(spec, v, tau);
            const auto [vn, taun] = chart_transition(spec, vs, taus);
            CHECK(vn == doctest::Approx(v).epsilon(1e-8));
            CHECK(taun == doctest::Approx(tau).epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS((void)homeomorphism_chi(cone(), 1.0), std::domain_error);
}

TEST_CASE("endpoint singularity classification")
{
    const auto smooth1 = classify_singularities(kronheimer_f2(1.0));
    const auto smooth2 = classify_singularities(solve_extremal_f2(1.0, 2.0).spec);
    for (const auto& reports : {smooth1, smooth2}) {
        for (const auto& r : reports) {
            CHECK(r.kind == SingularityClass::smooth);
            CHECK(r.beta == doctest::Approx(1.0).epsilon(1e-9));
            CHECK(r.deficit == doctest::Approx(0.0));
        }
    }

    const auto wp = classify_singularities(wp112());
    CHECK(wp[0].kind == SingularityClass::orbifold);
    CHECK(wp[0].beta == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(wp[0].orbifold_n == 2);
    CHECK(wp[1].kind == SingularityClass::smooth);
    CHECK(wp[1].endpoint == doctest::Approx(9.0 / 8.0));

    const auto ke = classify_singularities(ke_family(1.0, 2.0).first);
    CHECK(ke[0].kind == SingularityClass::conical);
    CHECK(ke[0].beta == doctest::Approx(5.0 / 14.0).epsilon(1e-10));
    CHECK(ke[0].deficit == doctest::Approx(2.0 * M_PI * (1.0 - 5.0 / 14.0)).epsilon(1e-10));
    CHECK(ke[1].kind == SingularityClass::conical);
    CHECK(ke[1].beta == doctest::Approx(2.0 / 7.0).epsilon(1e-10));

    // Degenerate member: both ends belong to the round S^2/Z_2 fiber.
    const auto sp = classify_singularities(ke0_family(2.0));
    CHECK(sp[0].kind == SingularityClass::spindle);
    CHECK(sp[1].kind == SingularityClass::spindle);
    CHECK(sp[0].beta == doctest::Approx(0.5).epsilon(1e-9));

    // Einstein members always carry a deficit: FK'(l1) stays below 2.
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ld(0.2, 5.0);
    for (int i = 0; i < 50; ++i) {
        double l1 = ld(rng);
        double l2 = ld(rng);
        if (l1 > l2) std::swap(l1, l2);
        if (l2 - l1 < 0.05) continue;
        const auto rep = classify_singularities(ke_family(l1, l2).first);
        CHECK(rep[0].beta < 1.0);
        CHECK(rep[1].beta < 1.0);
        CHECK(rep[1].beta < rep[0].beta + 1e-12);
    }
}

TEST_CASE("round fiber of the degenerate member and the football obstruction")
{
    for (double l2 : {0.5, 1.0, 2.0, 4.0, 7.0}) {
        CHECK(spindle_residual(l2) < 1e-10);
    }
    CHECK(football_obstruction_count(10000) == 0);
}
