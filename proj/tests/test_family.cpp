// SPDX-License-Identifier: MIT
/**
    \file
    \brief Unit tests for the profile-function catalog.

    Golden values were computed by hand from the closed forms (rational
    arithmetic) before being frozen here.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "toric/family.hpp"

using namespace toric;

TEST_CASE("catalog endpoints are exact roots and FK > 0 inside")
{
    const std::vector<FamilySpec> specs = {
        kronheimer_f2(1.0),  wp112(), ke_family(1.0, 2.0).first, ke0_family(4.0),
        solve_extremal_f2(1.0, 2.0).spec};
    for (const auto& s : specs) {
        CAPTURE(s.name());
        CHECK(fk_value(s, s.vMin) == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(fk_value(s, s.vMax) == doctest::Approx(0.0).epsilon(1e-14));
        for (int i = 1; i < 1000; ++i) {
            const double v = s.vMin + (s.vMax - s.vMin) * i / 1000.0;
            REQUIRE(fk_value(s, v) > 0.0);
        }
    }
}

TEST_CASE("KE(1,2) values")
{
    const auto [spec, ke] = ke_family(1.0, 2.0);
    CHECK(ke.k == doctest::Approx(9.0 / 7.0).epsilon(1e-15));
    CHECK(ke.beta == doctest::Approx(-4.0 / 7.0).epsilon(1e-15));
    CHECK(ke.lambda3 == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
    // FK(3/2) = -(1/2)(-1/2)(13/2)/(7*3/2) = 13/42
    CHECK(fk_value(spec, 1.5) == doctest::Approx(13.0 / 84.0).epsilon(1e-14));
    CHECK(fk_value(spec, 1.0) == doctest::Approx(0.0));
}

TEST_CASE("KE is symmetric under root exchange")
{
    const auto s12 = ke_family(1.0, 2.0).first;
    auto s21 = s12;
    s21.l1 = 2.0;
    s21.l2 = 1.0;  // evaluation only; the constructor itself enforces ordering
    for (double v : {1.1, 1.5, 1.9})
        CHECK(fk_value(s12, v) == doctest::Approx(fk_value(s21, v)).epsilon(1e-14));
    CHECK_THROWS_AS(ke_family(2.0, 1.0), std::domain_error);
}

TEST_CASE("KE0 closed form and the cone")
{
    const auto s = ke_family(0.0, 4.0).first;
    CHECK(s.kind == FamilyKind::KE0);
    CHECK(fk_value(s, 1.0) == doctest::Approx(1.0 * 3.0 / 4.0).epsilon(1e-14));
    const auto c = cone();
    const Jet j = fk_jet(c, 2.0, 1);
    CHECK(j.value() == doctest::Approx(2.0));
    CHECK(j.deriv(1) == doctest::Approx(1.0));
}

TEST_CASE("Kronheimer F2 endpoint slopes: FK'(9a/32) = 2, FK'(vMax) = -2")
{
    for (double alpha : {0.5, 1.0, 2.0}) {
        const auto s = kronheimer_f2(alpha);
        CHECK(fk_jet(s, s.vMin, 1).deriv(1) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(fk_jet(s, s.vMax, 1).deriv(1) == doctest::Approx(-2.0).epsilon(1e-12));
    }
}

TEST_CASE("WP112 endpoint behaviour")
{
    const auto s = wp112();
    CHECK(fk_value(s, 9.0 / 8.0) == doctest::Approx(0.0));
    CHECK(fk_jet(s, 0.0, 1).deriv(1) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(fk_jet(s, 9.0 / 8.0, 1).deriv(1) == doctest::Approx(-2.0).epsilon(1e-13));
}

TEST_CASE("jet derivatives of FK agree with centered finite differences")
{
    std::mt19937 rng(12345);
    const std::vector<FamilySpec> specs = {kronheimer_f2(1.0), wp112(),
                                           ke_family(1.0, 2.0).first,
                                           solve_extremal_f2(1.0, 2.0).spec, cone()};
    for (const auto& s : specs) {
        CAPTURE(s.name());
        const double hi = s.finiteInterval() ? s.vMax : 4.0;
        std::uniform_real_distribution<double> dist(s.vMin + 0.2 * (hi - s.vMin),
                                                    hi - 0.2 * (hi - s.vMin));
        for (int trial = 0; trial < 5; ++trial) {
            const double v = dist(rng);
            const double h = 1e-5;
            const Jet j = fk_jet(s, v, 2);
            const double fd1 = (fk_value(s, v + h) - fk_value(s, v - h)) / (2.0 * h);
            const double fd2 =
                (fk_value(s, v + h) - 2.0 * fk_value(s, v) + fk_value(s, v - h)) / (h * h);
            CHECK(j.deriv(1) == doctest::Approx(fd1).epsilon(1e-6));
            CHECK(j.deriv(2) == doctest::Approx(fd2).epsilon(1e-4));
        }
    }
}

TEST_CASE("extremal general integral")
{
    SUBCASE("KE constraint reproduces FK_KE")
    {
        const auto [keSpec, ke] = ke_family(1.0, 2.0);
        const auto ext = extremal_general(-4.0 * ke.beta, 0.0, -ke.k / 6.0, 0.0);
        CHECK(ext.vMin == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(ext.vMax == doctest::Approx(2.0).epsilon(1e-10));
        for (double v : {1.2, 1.5, 1.8})
            CHECK(fk_value(ext, v) == doctest::Approx(fk_value(keSpec, v)).epsilon(1e-13));
    }
    SUBCASE("all-zero constants give the cone profile")
    {
        const auto ext = extremal_general(0.0, 0.0, 0.0, 0.0);
        CHECK(!ext.finiteInterval());
        for (double v : {0.5, 1.0, 7.0})
            CHECK(fk_value(ext, v) == doctest::Approx(v).epsilon(1e-14));
    }
    SUBCASE("random members satisfy the fourth-order equation")
    {
        std::mt19937 rng(777);
        std::uniform_real_distribution<double> U(0.0, 1.0);
        int built = 0;
        for (int attempt = 0; attempt < 10000 && built < 20; ++attempt) {
            FamilySpec ext;
            try {
                // Sampled around the KE locus (A, B, C, D) = (16/7, 0, 3/14, 0).
                ext = extremal_general(0.5 + 2.5 * U(rng), 0.2 * U(rng) - 0.1,
                                       0.1 + 0.2 * U(rng), 0.1 * U(rng) - 0.05);
            } catch (const std::domain_error&) {
                continue;
            }
            ++built;
            const double hi = ext.finiteInterval() ? ext.vMax : ext.vMin + 5.0;
            for (int i = 1; i < 100; ++i) {
                const double v = ext.vMin + (hi - ext.vMin) * i / 100.0;
                REQUIRE(std::abs(extremality_residual(ext, v)) < 1e-10);
            }
        }
        CHECK(built == 20);
    }
}

TEST_CASE("extremality classification")
{
    CHECK(is_extremal(ke_family(1.0, 2.0).first));
    CHECK(is_extremal(cone()));
    CHECK(!is_extremal(kronheimer_f2(1.0)));
    CHECK(!is_extremal(wp112()));
}

TEST_CASE("F2 extremal root pair for (a,b) = (1,2)")
{
    const auto sol = solve_extremal_f2(1.0, 2.0);
    // discriminant 1 - 88 - 40 + 32 + 16 = -59
    CHECK(sol.mu1.real() == doctest::Approx(-11.0 / 10.0).epsilon(1e-12));
    CHECK(sol.mu4.real() == doctest::Approx(-11.0 / 10.0).epsilon(1e-12));
    CHECK(std::abs(sol.mu1.imag()) == doctest::Approx(std::sqrt(79.0) / 10.0).epsilon(1e-12));
    CHECK(sol.mu1.imag() == doctest::Approx(-sol.mu4.imag()).epsilon(1e-12));
    // The coefficient view must reproduce the same profile function.
    const auto co = extremal_f2_coefficients(1.0, 2.0);
    const auto ext = extremal_general(co[0], co[1], co[2], co[3]);
    for (double v : {1.1, 1.5, 1.9})
        CHECK(fk_value(ext, v) == doctest::Approx(fk_value(sol.spec, v)).epsilon(1e-12));
    // Endpoint slopes +-2: smooth surface.
    CHECK(fk_jet(sol.spec, 1.0, 1).deriv(1) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fk_jet(sol.spec, 2.0, 1).deriv(1) == doctest::Approx(-2.0).epsilon(1e-12));
}

TEST_CASE("boundary potential second derivative matches the KE closed form")
{
    const auto [spec, ke] = ke_family(1.0, 2.0);
    for (double v : {1.1, 1.4, 1.7}) {
        const double f = boundary_f(spec, Jet::constant(v, 1, 0)).value();
        const double expected = (-3.0 * ke.beta + ke.k * v * v * v + 3.0 * v * v) /
                                (-2.0 * ke.k * v * v * v * v + 6.0 * v * v * v + 6.0 * ke.beta * v);
        CHECK(f == doctest::Approx(expected).epsilon(1e-13));
    }
}

TEST_CASE("polytope membership")
{
    const auto p = polytope(kronheimer_f2(1.0));
    CHECK(p.vMin == doctest::Approx(9.0 / 32.0));
    CHECK(p.vMax == doctest::Approx(9.0 * 7.0 / 32.0));
    CHECK(p.contains(0.5, 0.5));
    CHECK(!p.contains(3.0 * 0.5, 0.5));  // u <= 2v violated
    CHECK(polytope(wp112()).degenerate());
}

TEST_CASE("serialization round trip")
{
    const auto spec = ke_family(1.0, 2.0).first;
    const auto back = spec_from_json(to_json(spec));
    CHECK(back.kind == FamilyKind::KE);
    CHECK(back.l1 == doctest::Approx(1.0));
    CHECK(back.l2 == doctest::Approx(2.0));
    const auto cli = spec_from_string("KE:1,2");
    CHECK(cli.vMin == doctest::Approx(1.0));
    CHECK_THROWS_AS(spec_from_string("Nope:1"), std::invalid_argument);
    CHECK_THROWS_AS(spec_from_string("KE:1"), std::invalid_argument);
}
