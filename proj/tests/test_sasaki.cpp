// SPDX-License-Identifier: MIT
/*! \file  test_sasaki.cpp
    \brief Sasaki-Einstein 5-metric, coordinate map, Ricci-flat cone, and
           the invariant table separating cone and canonical-bundle metrics.
*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "toric/family.hpp"
#include "toric/base_geometry.hpp"
#include "toric/sasaki.hpp"

using namespace toric;

namespace {

double rand_in(std::mt19937& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<double> random_point5(std::mt19937& rng, double l1, double l2)
{
    return {rand_in(rng, l1 + 0.15 * (l2 - l1), l2 - 0.15 * (l2 - l1)),
            rand_in(rng, 0.5, 2.6), rand_in(rng, 0.0, 1.0), rand_in(rng, 0.0, 1.0),
            rand_in(rng, 0.0, 1.0)};
}

}  // namespace

TEST_CASE("parameter map of the five-dimensional einstein family")
{
    for (const auto& pair : {std::pair{1.0, 2.0}, {0.5, 3.0}, {1.0, 5.0}}) {
        const auto par = sasaki_parameters(pair.first, pair.second);
        CHECK(par.p == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(par.c == 1.0);
    }
    const auto ref = sasaki_parameters(1.0, 2.0);
    CHECK(ref.k == doctest::Approx(9.0 / 7.0).epsilon(1e-14));
    CHECK(ref.beta == doctest::Approx(-4.0 / 7.0).epsilon(1e-14));
    CHECK(ref.a == doctest::Approx(100.0 / 343.0).epsilon(1e-14));
}

TEST_CASE("raw and mapped five-metrics agree through the coordinate map")
{
    std::mt19937 rng(7);
    for (const auto& pair : {std::pair{1.0, 2.0}, {0.5, 3.0}}) {
        const double l1 = pair.first;
        const double l2 = pair.second;
        const auto par = sasaki_parameters(l1, l2);
        for (int trial = 0; trial < 10; ++trial) {
            const auto pt = random_point5(rng, l1, l2);
            const auto mapped = se5_metric(l1, l2, pt);

            const double y = 1.0 - par.k * pt[0] / 2.0;
            const std::vector<double> raw_pt = {y, pt[1], pt[2], -pt[3] - pt[2],
                                                par.p * pt[4] + pt[3] + pt[2]};
            const auto raw = se5_metric_raw(par, raw_pt);
            // Pull back along y(v), psi(tau, phi), xi(chi, tau, phi).
            double jac[5][5] = {{-par.k / 2.0, 0, 0, 0, 0},
                                {0, 1, 0, 0, 0},
                                {0, 0, 1, 0, 0},
                                {0, 0, -1, -1, 0},
                                {0, 0, 1, 1, par.p}};
            for (int m = 0; m < 5; ++m) {
                for (int n = 0; n < 5; ++n) {
                    double sum = 0.0;
                    for (int i = 0; i < 5; ++i) {
                        for (int j = 0; j < 5; ++j) {
                            sum += jac[i][m] *
                                   raw(static_cast<std::size_t>(i),
                                       static_cast<std::size_t>(j)) *
                                   jac[j][n];
                        }
                    }
                    CHECK(sum == doctest::Approx(mapped(static_cast<std::size_t>(m),
                                                        static_cast<std::size_t>(n)))
                                     .epsilon(1e-12));
                }
            }

            // Hatted normalization and the 4D base block.
            const auto hatted = se5_metric_hatted(l1, l2, pt);
            const auto spec = ke_family(l1, l2).first;
            const auto g4 = base_metric(spec, BasePoint{pt[0], pt[1], pt[2], pt[3]});
            const auto phi = phi_se(l1, l2, pt);
            for (std::size_t i = 0; i < 5; ++i) {
                for (std::size_t j = 0; j < 5; ++j) {
                    CHECK(mapped(i, j) ==
                          doctest::Approx(par.k / 12.0 * hatted(i, j)).epsilon(1e-13));
                    const double base4 = (i < 4 && j < 4) ? g4(i, j) : 0.0;
                    CHECK(hatted(i, j) - 4.0 / (3.0 * par.k) * phi[i] * phi[j] ==
                          doctest::Approx(base4).epsilon(1e-12));
                }
            }
        }
    }

    // Connection one-form of the circle bundle.
    const auto phi = phi_se(1.0, 2.0, {1.4, M_PI / 2.0, 0.1, 0.2, 0.3});
    CHECK(phi[4] == 1.0);
    CHECK(phi[3] == doctest::Approx(9.0 / 14.0 * 1.4).epsilon(1e-14));
    CHECK(phi[2] == doctest::Approx(9.0 / 14.0 * 1.4).epsilon(1e-14));

    // Out-of-range y rejected.
    CHECK_THROWS_AS(
        static_cast<void>(se5_metric_raw(sasaki_parameters(1.0, 2.0), {5.0, 1.0, 0, 0, 0})),
        std::domain_error);
}

TEST_CASE("the hatted five-metric is einstein with constant k over six")
{
    std::mt19937 rng(13);
    for (const auto& pair : {std::pair{1.0, 2.0}, {0.5, 3.0}}) {
        const double k = sasaki_parameters(pair.first, pair.second).k;
        for (int trial = 0; trial < 20; ++trial) {
            const auto pt = random_point5(rng, pair.first, pair.second);
            const auto ric = se5_ricci_intrinsic(pair.first, pair.second, pt);
            for (std::size_t i = 0; i < 5; ++i) {
                for (std::size_t j = 0; j < 5; ++j) {
                    const double expected = (i == j) ? k / 6.0 : 0.0;
                    CHECK(std::abs(ric(i, j) - expected) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("the metric cone is ricci-flat away from the apex")
{
    std::mt19937 rng(19);
    for (const auto& pair : {std::pair{1.0, 2.0}, {0.5, 3.0}}) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto pt = random_point5(rng, pair.first, pair.second);
            const double radius = rand_in(rng, 0.3, 3.0);
            CHECK(cone_ricci_residual(pair.first, pair.second, radius, pt) < 1e-9);
        }
    }

    // Radial leg and apex exclusion.
    const std::vector<double> pt = {1.4, 1.1, 0.4, 0.3, 0.2};
    const auto g = cone_metric(1.0, 2.0, 1.7, pt);
    CHECK(g(5, 5) == doctest::Approx(12.0 / (9.0 / 7.0)).epsilon(1e-13));
    CHECK_THROWS_AS(static_cast<void>(cone_metric(1.0, 2.0, 0.0, pt)), std::domain_error);
    CHECK_THROWS_AS(static_cast<void>(cone_ricci_residual(1.0, 2.0, -1.0, pt)),
                    std::domain_error);
}

TEST_CASE("cone invariants match the closed-form table column")
{
    std::mt19937 rng(29);
    for (int trial = 0; trial < 6; ++trial) {
        const auto pt = random_point5(rng, 1.0, 2.0);
        const double radius = rand_in(rng, 0.4, 2.5);
        const auto rec = cone_invariant_record(1.0, 2.0, radius, pt);
        const auto ref = cone_table_reference(pt[0], radius);
        CHECK(std::abs(rec.ch) < 1e-12);
        CHECK(std::abs(rec.e) < 1e-12);
        CHECK(rec.quad1 == doctest::Approx(ref.quad1).epsilon(1e-8));
        CHECK(rec.cub1 == doctest::Approx(ref.cub1).epsilon(1e-8));
        CHECK(rec.cub2 == doctest::Approx(ref.cub2).epsilon(1e-8));
        CHECK(rec.cub3 == doctest::Approx(ref.cub3).epsilon(1e-8));
        CHECK(rec.quart1 == doctest::Approx(ref.quart1).epsilon(1e-8));
        CHECK(rec.quart2 == doctest::Approx(ref.quart2).epsilon(1e-8));
    }

    // Homogeneity in the radius for a member without closed-form goldens.
    const std::vector<double> pt = {1.6, 1.0, 0.2, 0.5, 0.1};
    const auto one = cone_invariant_record(0.5, 3.0, 1.1, pt);
    const auto two = cone_invariant_record(0.5, 3.0, 2.2, pt);
    CHECK(two.quad1 == doctest::Approx(one.quad1 / 16.0).epsilon(1e-10));
    CHECK(two.cub1 == doctest::Approx(one.cub1 / 64.0).epsilon(1e-10));
    CHECK(two.quart1 == doctest::Approx(one.quart1 / 256.0).epsilon(1e-10));
}

TEST_CASE("canonical-bundle invariants match the closed-form table column")
{
    std::mt19937 rng(31);
    const auto pot = total_potential(1.0, 2.0);
    for (int trial = 0; trial < 6; ++trial) {
        // Interior of the wedge where the coframe is real.
        const double v = rand_in(rng, 1.3, 1.8);
        const double w = rand_in(rng, 0.1, 0.8) * 14.0 * (v - 1.0) / 9.0;
        const std::vector<double> pt = {rand_in(rng, 0.6, 2.4), v, w,
                                        rand_in(rng, 0.0, 1.0), rand_in(rng, 0.0, 1.0),
                                        rand_in(rng, 0.0, 1.0)};
        const auto rec = calabi_invariant_record(pot, pt);
        const auto ref = calabi_table_reference(v, w);
        CHECK(std::abs(rec.ch) < 1e-10);
        CHECK(rec.e == doctest::Approx(ref.e).epsilon(1e-8));
        CHECK(rec.quad1 == doctest::Approx(ref.quad1).epsilon(1e-8));
        CHECK(rec.cub1 == doctest::Approx(ref.cub1).epsilon(1e-8));
        CHECK(rec.cub2 == doctest::Approx(ref.cub2).epsilon(1e-8));
        CHECK(rec.cub3 == doctest::Approx(ref.cub3).epsilon(1e-8));
        CHECK(rec.quart1 == doctest::Approx(ref.quart1).epsilon(1e-8));
        CHECK(rec.quart2 == doctest::Approx(ref.quart2).epsilon(1e-8));
        CHECK(rec.e > 1e-3);  // nonzero, unlike the cone
    }
}

TEST_CASE("invariant table row and its csv serialization")
{
    const auto row = invariant_table_row(1.0, 2.0, 1.5, 0.4, 1.3);
    CHECK(std::abs(row.cone.e) < 1e-12);
    CHECK(row.calabi.e > 1e-3);
    CHECK(row.cone.quad1 == doctest::Approx(cone_table_reference(1.5, 1.3).quad1)
                                .epsilon(1e-8));

    std::ostringstream out;
    write_invariant_table_csv(out, row);
    const std::string text = out.str();
    CHECK(text.rfind("invariant,cone,calabi\n", 0) == 0);
    CHECK(text.find("\nQuad1,") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 9);
}

TEST_CASE("quadratic matching leaves a cubic discrepancy")
{
    // Reference member at the tabulated comparison point.
    const auto rep = inequivalence_witness(1.0, 2.0, 1.5, 1.0);
    CHECK(rep.matched);
    CHECK(rep.radius4 > 0.0);
    CHECK(rep.discrepancy > 1e-3);

    // The discrepancy persists toward the base slice w -> 0.
    const auto base_rep = inequivalence_witness(1.0, 2.0, 1.5, 1e-3);
    CHECK(base_rep.matched);
    CHECK(base_rep.discrepancy > 1e-3);

    // A member without closed forms, witnessed numerically inside the wedge.
    const auto generic = inequivalence_witness(0.5, 3.0, 1.7, 0.3);
    CHECK(generic.matched);
    CHECK(generic.discrepancy > 1e-3);

    // Flat-versus-flat control: nothing to match, no witness.
    const auto flat = match_invariants(InvariantRecord{}, InvariantRecord{});
    CHECK_FALSE(flat.matched);
    CHECK(flat.discrepancy == 0.0);
}
