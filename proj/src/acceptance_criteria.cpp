// SPDX-License-Identifier: MIT
/*! \file  acceptance_criteria.cpp
    \brief End-to-end acceptance checks spanning every module of the library.
*/
#include "toric/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "toric/base_geometry.hpp"
#include "toric/calabi.hpp"
#include "toric/curvature.hpp"
#include "toric/family.hpp"
#include "toric/forms21.hpp"
#include "toric/geodesics.hpp"
#include "toric/sasaki.hpp"
#include "toric/symplectic.hpp"

namespace toric {

namespace {

double rand_in(std::mt19937& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

struct CatalogEntry {
    std::string name;
    FamilySpec spec;
};

std::vector<CatalogEntry> catalog()
{
    std::vector<CatalogEntry> out;
    out.push_back({"KronheimerF2(1)", kronheimer_f2(1.0)});
    out.push_back({"WP112", wp112()});
    out.push_back({"KE(1,2)", ke_family(1.0, 2.0).first});
    out.push_back({"KE0(2)", ke0_family(2.0)});
    out.push_back({"F2Extremal(1,2)", solve_extremal_f2(1.0, 2.0).spec});
    const auto abcd = extremal_f2_coefficients(1.0, 2.0);
    out.push_back({"ExtremalGeneral", extremal_general(abcd[0], abcd[1], abcd[2], abcd[3])});
    out.push_back({"Cone", cone()});
    return out;
}

/// Interior sampling interval; the cone gets a finite window.
std::pair<double, double> sample_interval(const FamilySpec& spec)
{
    const double lo = spec.vMin;
    const double hi = spec.finiteInterval() ? spec.vMax : spec.vMin + 2.5;
    const double pad = 0.08 * (hi - lo);
    return {lo + pad, hi - pad};
}

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

/// Wedge-interior point of the six-dimensional total space, moment coords.
std::vector<double> wedge_point(std::mt19937& rng, const TotalSpacePotential& pot)
{
    const double l1 = pot.base.l1;
    const double l2 = pot.base.l2;
    const double v = rand_in(rng, l1 + 0.15 * (l2 - l1), l2 - 0.15 * (l2 - l1));
    const double u = rand_in(rng, 0.2 * v, 1.8 * v);
    const double s = l1 + l2;
    const double q = l1 * l1 + l1 * l2 + l2 * l2;
    const double w = rand_in(rng, 0.05, 0.85) * 2.0 * q * (v - l1) / (3.0 * s);
    return {u, v, w, rand_in(rng, 0.0, 1.0), rand_in(rng, 0.0, 1.0), rand_in(rng, 0.0, 1.0)};
}

double rel_gap(double got, double want)
{
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

/// Worst entry-wise gap between the coordinate Ricci tensors and scalar
/// curvatures of the two curvature engines at one point.
double cross_engine_gap(const FrameField& frame, const MetricCoefficients& g, int dim,
                        const std::vector<double>& point)
{
    const auto a = frame_curvature(frame, point);
    const auto b = metric_curvature(g, dim, point);
    double worst = rel_gap(a.scalar, b.scalar);
    for (std::size_t i = 0; i < static_cast<std::size_t>(dim); ++i) {
        for (std::size_t j = 0; j < static_cast<std::size_t>(dim); ++j) {
            worst = std::max(worst, rel_gap(a.ricci_coord(i, j), b.ricci_coord(i, j)));
        }
    }
    return worst;
}

/// Metric coefficients of the unit-Reeb five-dimensional Einstein metric in
/// coordinates (v, theta, phi, tau, chi), built independently of the coframe.
MetricCoefficients se5_hatted_coefficients(double l1, double l2)
{
    const auto spec = ke_family(l1, l2).first;
    const double k = sasaki_parameters(l1, l2).k;
    return [spec, k](const std::vector<double>& p, int order) {
        const Jet v = Jet::variable(p[0], 0, 5, order);
        const Jet theta = Jet::variable(p[1], 1, 5, order);
        const Jet fkj = fk(spec, v);
        const Jet ang = 1.0 - cos(theta);
        const Jet zero = Jet::constant(0.0, 5, order);
        Matrix<Jet> g(5, 5, zero);
        g(0, 0) = 1.0 / fkj;
        g(1, 1) = v;
        g(2, 2) = v * sin(theta) * sin(theta) + fkj * ang * ang;
        g(2, 3) = fkj * ang;
        g(3, 2) = g(2, 3);
        g(3, 3) = fkj;
        // Connection one-form of the circle fiber: dchi + (k/2) v (dtau + ang dphi).
        std::vector<Jet> phi = {zero, zero, 0.5 * k * v * ang, 0.5 * k * v,
                                Jet::constant(1.0, 5, order)};
        const double coef = 4.0 / (3.0 * k);
        for (std::size_t i = 0; i < 5; ++i) {
            for (std::size_t j = 0; j < 5; ++j) g(i, j) = g(i, j) + coef * phi[i] * phi[j];
        }
        return g;
    };
}

using Criterion = CriterionResult (*)(std::mt19937&, double);

double tighten(double def, double tolOverride)
{
    return tolOverride > 0.0 ? std::min(def, tolOverride) : def;
}

// --- criterion 1 -----------------------------------------------------------

CriterionResult criterion_catalog_profiles(std::mt19937& rng, double tolOverride)
{
    CriterionResult r{1, "family",
                      "profile vanishes at interval endpoints and is positive inside", false, ""};
    const double tol = tighten(1e-12, tolOverride);
    double worstEnd = 0.0;
    double minInterior = 1e300;
    std::string offender;
    for (const auto& item : catalog()) {
        const double atMin = std::abs(fk_value(item.spec, item.spec.vMin));
        double atMax = 0.0;
        if (item.spec.finiteInterval()) {
            atMax = std::abs(fk_value(item.spec, item.spec.vMax));
        }
        if (std::max(atMin, atMax) > worstEnd) {
            worstEnd = std::max(atMin, atMax);
            offender = item.name;
        }
        const auto [lo, hi] = sample_interval(item.spec);
        for (int i = 0; i < 1000; ++i) {
            const double v = rand_in(rng, lo, hi);
            minInterior = std::min(minInterior, fk_value(item.spec, v));
        }
    }
    r.passed = worstEnd < tol && minInterior > 0.0;
    r.detail = "worst endpoint |FK| " + fmt(worstEnd) + " (" + offender +
               "), interior min " + fmt(minInterior);
    return r;
}

// --- criterion 2 -----------------------------------------------------------

CriterionResult criterion_einstein_members(std::mt19937& rng, double tolOverride)
{
    CriterionResult r{2, "family", "einstein members have constant anholonomic ricci k/4",
                      false, ""};
    const double tol = tighten(1e-10, tolOverride);
    double worst = 0.0;
    for (const auto& pair : {std::pair{1.0, 2.0}, {0.5, 3.0}, {1.0, 5.0}}) {
        const auto [spec, params] = ke_family(pair.first, pair.second);
        const double target = params.k / 4.0;
        for (int i = 0; i < 100; ++i) {
            const auto [lo, hi] = sample_interval(spec);
            const auto ric = ricci_anholonomic(spec, rand_in(rng, lo, hi));
            worst = std::max({worst, std::abs(ric[0] - target), std::abs(ric[1] - target)});
        }
    }
    r.passed = worst < tol;
    r.detail = "worst |ricci - k/4| " + fmt(worst) + " over 3 members x 100 samples";
    return r;
}

// --- criterion 3 -----------------------------------------------------------

CriterionResult criterion_extremal_ode(std::mt19937& rng, double tolOverride)
{
    CriterionResult r{3, "family", "random extremal members satisfy the fourth-order equation",
                      false, ""};
    const double tol = tighten(1e-10, tolOverride);
    double worst = 0.0;
    int found = 0;
    for (int attempt = 0; attempt < 400 && found < 20; ++attempt) {
        const double a = rand_in(rng, -1.0, 1.0);
        const double b = rand_in(rng, -1.0, 1.0);
        const double c = rand_in(rng, -1.0, 1.0);
        const double d = rand_in(rng, -1.0, 1.0);
        FamilySpec spec;
        try {
            spec = extremal_general(a, b, c, d);
        } catch (const std::exception&) {
            continue;
        }
        ++found;
        const auto [lo, hi] = sample_interval(spec);
        for (int i = 0; i < 10; ++i) {
            worst = std::max(worst, std::abs(extremality_residual(spec, rand_in(rng, lo, hi))));
        }
    }
    const bool kronExtremal = is_extremal(kronheimer_f2(1.0));
    r.passed = found == 20 && worst < tol && !kronExtremal;
    r.detail = "worst residual " + fmt(worst) + " over " + std::to_string(found) +
               " members; non-extremal control " + (kronExtremal ? "misclassified" : "rejected");
    return r;
}

// --- criterion 4 -----------------------------------------------------------

CriterionResult criterion_extremal_roots(std::mt19937&, double tolOverride)
{
    CriterionResult r{4, "family",
                      "hirzebruch extremal roots (-11 +- i sqrt(79))/10 and chern periods (0, 2)",
                      false, ""};
    const double tolRoot = tighten(1e-12, tolOverride);
    const double tolPeriod = tighten(1e-8, tolOverride);
    const auto sol = solve_extremal_f2(1.0, 2.0);
    const std::complex<double> want1(-1.1, std::sqrt(79.0) / 10.0);
    const std::complex<double> want4(-1.1, -std::sqrt(79.0) / 10.0);
    const double rootGap = std::min(
        std::max(std::abs(sol.mu1 - want1), std::abs(sol.mu4 - want4)),
        std::max(std::abs(sol.mu1 - want4), std::abs(sol.mu4 - want1)));
    const auto periods = ricci_form_periods(sol.spec);
    const double periodGap =
        std::max(std::abs(periods[0] - 0.0), std::abs(periods[1] - 2.0));
    r.passed = rootGap < tolRoot && periodGap < tolPeriod;
    r.detail = "root gap " + fmt(rootGap) + ", period gap " + fmt(periodGap);
    return r;
}

// --- criterion 5 -----------------------------------------------------------

CriterionResult criterion_singularities(std::mt19937&, double tolOverride)
{
    CriterionResult r{5, "symplectic", "endpoint cone angles and the obstruction scan",
                      false, ""};
    const double tol = tighten(1e-10, tolOverride);
    double worst = 0.0;
    auto check = [&](const FamilySpec& spec, double beta0, double beta1) {
        const auto rep = classify_singularities(spec);
        worst = std::max({worst, std::abs(rep[0].beta - beta0), std::abs(rep[1].beta - beta1)});
    };
    check(kronheimer_f2(1.0), 1.0, 1.0);
    check(solve_extremal_f2(1.0, 2.0).spec, 1.0, 1.0);
    check(wp112(), 0.5, 1.0);
    check(ke_family(1.0, 2.0).first, 5.0 / 14.0, 2.0 / 7.0);
    const int obstructions = football_obstruction_count(10000);
    r.passed = worst < tol && obstructions == 0;
    r.detail = "worst cone-angle gap " + fmt(worst) + ", obstruction count " +
               std::to_string(obstructions);
    return r;
}

// --- criterion 6 -----------------------------------------------------------

CriterionResult criterion_ricci_flat_total_space(std::mt19937& rng, double tolOverride)
{
    CriterionResult r{6, "calabi", "six-dimensional total space is ricci-flat with the "
                      "displayed (1,2) line element", false, ""};
    const double tolRic = tighten(1e-8, tolOverride);
    const double tolCoef = tighten(1e-10, tolOverride);
    const auto pot = total_potential(1.0, 2.0);
    double worstRic = 0.0;
    for (int i = 0; i < 20; ++i) {
        worstRic = std::max(worstRic, ricci_flat_residual(pot, wedge_point(rng, pot)));
    }
    double worstCoef = 0.0;
    for (int i = 0; i < 10; ++i) {
        const auto pt = wedge_point(rng, pot);
        const auto g = total_metric(pot, pt);
        const double u = pt[0];
        const double v = pt[1];
        const double w = pt[2];
        const double rr = 9.0 * w + 14.0;
        const double quadratic = 27.0 * w * w + 126.0 * w + 196.0;
        const double den3 = (7.0 * v - rr) * (14.0 * v - rr) * (21.0 * v + rr);
        const double want[6][6] = {
            {-v / (u * u - 2.0 * u * v), 1.0 / (u - 2.0 * v), 0.0, 0.0, 0.0, 0.0},
            {0.0,
             (u * (2058.0 * v * v * v + rr * rr * rr) - 686.0 * v * v * v * rr) /
                 (v * (2.0 * v - u) * den3),
             3087.0 * v * v / den3, 0.0, 0.0, 0.0},
            {0.0, 0.0,
             (5647152.0 * v * v * v - 343.0 * v * v * std::pow(rr, 4) + std::pow(rr, 6)) /
                 (2.0 * w * rr * quadratic * den3),
             0.0, 0.0, 0.0},
            {0.0, 0.0, 0.0,
             2.0 * u - u * u * rr * rr / (343.0 * v * v * v) -
                 16464.0 * u * u / std::pow(rr, 4),
             u - u * rr * rr / (343.0 * v * v) - 16464.0 * u * v / std::pow(rr, 4),
             18.0 * u * w * quadratic / (rr * rr * rr)},
            {0.0, 0.0, 0.0, 0.0,
             v - 16464.0 * v * v / std::pow(rr, 4) - rr * rr / (343.0 * v),
             18.0 * v * w * quadratic / (rr * rr * rr)},
            {0.0, 0.0, 0.0, 0.0, 0.0, 2.0 * w * quadratic / (rr * rr)}};
        for (std::size_t a = 0; a < 6; ++a) {
            for (std::size_t b = a; b < 6; ++b) {
                if (a < 3 && b >= 3) continue;  // off-block entries vanish identically
                if (a == 0 && b == 2) continue;
                worstCoef = std::max(worstCoef, rel_gap(g(a, b), want[a][b]));
            }
        }
    }
    r.passed = worstRic < tolRic && worstCoef < tolCoef;
    r.detail = "worst |Ric| " + fmt(worstRic) + ", worst coefficient gap " + fmt(worstCoef);
    return r;
}

// --- criterion 7 -----------------------------------------------------------

CriterionResult criterion_invariant_table(std::mt19937&, double tolOverride)
{
    CriterionResult r{7, "sasaki", "curvature-invariant table columns match their closed forms",
                      false, ""};
    const double tol = tighten(1e-8, tolOverride);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double v = 1.3 + 0.05 * i;     // rational sample v = 13/10 + i/20
        const double w = 0.5 * (v - 1.0);    // inside the coframe wedge
        const double radius = 0.8 + 0.1 * i;
        const auto row = invariant_table_row(1.0, 2.0, v, w, radius);
        const auto coneRef = cone_table_reference(v, radius);
        const auto calRef = calabi_table_reference(v, w);
        auto cmp = [&](const InvariantRecord& got, const InvariantRecord& want) {
            worst = std::max({worst, std::abs(got.ch - want.ch), rel_gap(got.e, want.e),
                              rel_gap(got.quad1, want.quad1), rel_gap(got.cub1, want.cub1),
                              rel_gap(got.cub2, want.cub2), rel_gap(got.cub3, want.cub3),
                              rel_gap(got.quart1, want.quart1),
                              rel_gap(got.quart2, want.quart2)});
        };
        cmp(row.cone, coneRef);
        cmp(row.calabi, calRef);
    }
    r.passed = worst < tol;
    r.detail = "worst table gap " + fmt(worst) + " over 10 points x 2 columns";
    return r;
}

// --- criterion 8 -----------------------------------------------------------

CriterionResult criterion_inequivalence(std::mt19937&, double tolOverride)
{
    CriterionResult r{8, "sasaki", "cubic invariant separates the two ricci-flat geometries",
                      false, ""};
    const double floor = tighten(1e-3, tolOverride);
    const auto w = inequivalence_witness(1.0, 2.0, 1.5, 1.0);
    r.passed = w.matched && w.discrepancy > floor;
    r.detail = "matched=" + std::string(w.matched ? "yes" : "no") + ", cubic discrepancy " +
               fmt(w.discrepancy);
    return r;
}

// --- criterion 9 -----------------------------------------------------------

CriterionResult criterion_sasaki_einstein(std::mt19937& rng, double tolOverride)
{
    CriterionResult r{9, "sasaki", "five-dimensional link is einstein and its cone ricci-flat",
                      false, ""};
    const double tolEin = tighten(1e-9, tolOverride);
    const double tolBase = tighten(1e-12, tolOverride);
    double worstEin = 0.0;
    double worstCone = 0.0;
    double worstBase = 0.0;
    for (const auto& pair : {std::pair{1.0, 2.0}, {0.5, 3.0}}) {
        const auto spec = ke_family(pair.first, pair.second).first;
        const double k = sasaki_parameters(pair.first, pair.second).k;
        const auto [lo, hi] = sample_interval(spec);
        for (int i = 0; i < 10; ++i) {
            const std::vector<double> pt = {rand_in(rng, lo, hi), rand_in(rng, 0.5, 2.6),
                                            rand_in(rng, -1.0, 1.0), rand_in(rng, -1.0, 1.0),
                                            rand_in(rng, -1.0, 1.0)};
            const auto ric = se5_ricci_intrinsic(pair.first, pair.second, pt);
            for (std::size_t a = 0; a < 5; ++a) {
                for (std::size_t b = 0; b < 5; ++b) {
                    const double want = (a == b) ? k / 6.0 : 0.0;
                    worstEin = std::max(worstEin, std::abs(ric(a, b) - want));
                }
            }
            worstCone = std::max(
                worstCone, cone_ricci_residual(pair.first, pair.second,
                                               rand_in(rng, 0.4, 2.0), pt));
            // The four-dimensional block of the unit-Reeb metric restricts to
            // the base metric plus the fiber rank-one term.
            const auto hat = se5_metric_hatted(pair.first, pair.second, pt);
            const auto g4 = base_metric(spec, {pt[0], pt[1], pt[2], pt[3]});
            const auto phi = phi_se(pair.first, pair.second, pt);
            const double coef = 4.0 / (3.0 * k);
            for (std::size_t a = 0; a < 4; ++a) {
                for (std::size_t b = 0; b < 4; ++b) {
                    worstBase = std::max(worstBase, std::abs(hat(a, b) - coef * phi[a] * phi[b] -
                                                             g4(a, b)));
                }
            }
        }
    }
    r.passed = worstEin < tolEin && worstCone < tolEin && worstBase < tolBase;
    r.detail = "worst |Ric - (k/6) id| " + fmt(worstEin) + ", cone |Ric| " + fmt(worstCone) +
               ", base-block gap " + fmt(worstBase);
    return r;
}

// --- criterion 10 ----------------------------------------------------------

GeodesicState random_geodesic_state(std::mt19937& rng, const FamilySpec& spec)
{
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    GeodesicState st;
    st.v = spec.vMin + rand_in(rng, 0.2, 0.8) * (spec.vMax - spec.vMin);
    st.theta = rand_in(rng, 0.6, 2.5);
    st.phi = unit(rng);
    st.tau = unit(rng);
    st.p_v = unit(rng);
    st.p_theta = unit(rng);
    st.ell = rand_in(rng, 0.1, 0.5) * (unit(rng) > 0.0 ? 1.0 : -1.0);
    st.m = rand_in(rng, 0.1, 0.5) * (unit(rng) > 0.0 ? 1.0 : -1.0);
    return st;
}

CriterionResult criterion_geodesics(std::mt19937& rng, double tolOverride)
{
    CriterionResult r{10, "geodesics",
                      "conserved quantities drift below 1e-9 and the irrotational angle "
                      "matches its elliptic closed form", false, ""};
    const double tolDrift = tighten(1e-9, tolOverride);
    const double tolTheta = tighten(1e-8, tolOverride);
    double worstDrift = 0.0;
    double worstBracket = 0.0;
    for (const auto& spec : {ke_family(1.0, 2.0).first, kronheimer_f2(1.0)}) {
        const double span = spec.vMax - spec.vMin;
        for (int i = 0; i < 20; ++i) {
            const auto st = random_geodesic_state(rng, spec);
            const auto traj = integrate_geodesic(spec, st, 10.0 * span, 1e-12, 200);
            worstDrift = std::max(worstDrift, conserved_drift(spec, traj));
            worstBracket = std::max(worstBracket,
                                    std::abs(poisson_bracket_carter_h(spec, st)));
        }
    }
    const auto ke = ke_family(1.0, 2.0).first;
    const double vStart = 1.05;
    double worstTheta = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double v = 1.08 + i * (1.95 - 1.08) / 19.0;
        const double viaQuadrature = irrotational_theta(ke, v, -1.0, 1.0, vStart);
        const double viaClosedForm = irrotational_theta_ke12_closed(v, -1.0, 1.0) -
                                     irrotational_theta_ke12_closed(vStart, -1.0, 1.0);
        worstTheta = std::max(worstTheta, rel_gap(viaQuadrature, viaClosedForm));
    }
    r.passed = worstDrift < tolDrift && worstTheta < tolTheta && worstBracket < tolTheta;
    r.detail = "worst drift " + fmt(worstDrift) + ", closed-form gap " + fmt(worstTheta) +
               ", carter bracket " + fmt(worstBracket);
    return r;
}

// --- criterion 11 ----------------------------------------------------------

CriterionResult criterion_form_rank(std::mt19937&, double)
{
    CriterionResult r{11, "forms21",
                      "exact rank of the 20x21 duality system is 18 for both signs", false, ""};
    const RationalPoint pts[5] = {
        {Rational(3, 2), Rational(6, 5), Rational(1, 3)},
        {Rational(7, 4), Rational(13, 10), Rational(1, 4)},
        {Rational(2), Rational(7, 5), Rational(2, 5)},
        {Rational(5, 4), Rational(5, 4), Rational(1, 5)},
        {Rational(9, 5), Rational(3, 2), Rational(1, 2)}};
    const std::pair<Rational, Rational> members[3] = {
        {Rational(1), Rational(2)}, {Rational(1, 2), Rational(3)}, {Rational(1), Rational(5)}};
    int worstRank = 18;
    int bestRank = 0;
    for (const auto& mem : members) {
        for (const auto& pt : pts) {
            // Rescale v into the member's moment interval, keep u proportional.
            RationalPoint q = pt;
            q.v = mem.first + (pt.v - 1) * (mem.second - mem.first);
            q.u = q.v * pt.u / pt.v;
            q.w = pt.w * (mem.second - mem.first);
            for (int sign : {-1, 1}) {
                const auto rep = assemble_and_rank_exact(mem.first, mem.second, q, sign);
                worstRank = std::min(worstRank, rep.rank);
                bestRank = std::max(bestRank, rep.rank);
            }
        }
    }
    r.passed = worstRank == 18 && bestRank == 18;
    r.detail = "rank range [" + std::to_string(worstRank) + ", " + std::to_string(bestRank) +
               "] over 5 points x 3 members x 2 signs";
    return r;
}

// --- criterion 12 ----------------------------------------------------------

CriterionResult criterion_contact(std::mt19937& rng, double tolOverride)
{
    CriterionResult r{12, "base",
                      "three-slice contact identities, beltrami eigenvalue and monopole flux",
                      false, ""};
    const double tol = tighten(1e-10, tolOverride);
    double worst = 0.0;
    bool fluxOk = true;
    for (const auto& item : catalog()) {
        const auto [lo, hi] = sample_interval(item.spec);
        for (int i = 0; i < 5; ++i) {
            const double v = rand_in(rng, lo, hi);
            const auto c = contact_reeb_beltrami(item.spec, v);
            worst = std::max({worst, std::abs(c.omega_of_reeb - 1.0), c.du_domega_residual,
                              std::abs(c.beltrami_eigenvalue + 1.0 / v), c.beltrami_spread});
        }
        fluxOk = fluxOk && monopole_flux(item.spec) == 2;
    }
    r.passed = worst < tol && fluxOk;
    r.detail = "worst contact residual " + fmt(worst) + ", flux " +
               (fluxOk ? "2 on every member" : "wrong on some member");
    return r;
}

// --- criterion 13 ----------------------------------------------------------

CriterionResult criterion_cross_engine(std::mt19937& rng, double tolOverride)
{
    CriterionResult r{13, "curvature",
                      "frame and metric curvature engines agree on every geometry", false, ""};
    const double tol = tighten(1e-8, tolOverride);
    double worst = 0.0;
    for (const auto& item : catalog()) {
        const auto frame = base_frame(item.spec);
        const auto g = base_metric_coefficients(item.spec);
        const auto [lo, hi] = sample_interval(item.spec);
        for (int i = 0; i < 20; ++i) {
            const std::vector<double> pt = {rand_in(rng, lo, hi), rand_in(rng, 0.5, 2.6),
                                            rand_in(rng, -1.0, 1.0), rand_in(rng, -1.0, 1.0)};
            worst = std::max(worst, cross_engine_gap(frame, g, 4, pt));
        }
    }
    {   // five-dimensional link of the (1, 2) einstein member
        const auto frame = se5_frame(1.0, 2.0);
        const auto g = se5_hatted_coefficients(1.0, 2.0);
        for (int i = 0; i < 5; ++i) {
            const std::vector<double> pt = {rand_in(rng, 1.1, 1.9), rand_in(rng, 0.5, 2.6),
                                            rand_in(rng, -1.0, 1.0), rand_in(rng, -1.0, 1.0),
                                            rand_in(rng, -1.0, 1.0)};
            worst = std::max(worst, cross_engine_gap(frame, g, 5, pt));
        }
    }
    {   // six-dimensional total space over the (1, 2) member, moment coords
        const auto pot = total_potential(1.0, 2.0);
        const auto g = total_metric_coefficients(pot);
        const auto frame = calabi_frame(pot);
        for (int i = 0; i < 5; ++i) {
            const auto mpt = wedge_point(rng, pot);
            // The coframe lives in angular coordinates (theta, v, w, phi, tau, chi).
            const double theta = std::acos(1.0 - mpt[0] / mpt[1]);
            const std::vector<double> apt = {theta, mpt[1], mpt[2], mpt[3], mpt[4], mpt[5]};
            const auto a = frame_curvature(frame, apt);
            const auto b = metric_curvature(g, 6, mpt);
            worst = std::max(worst, rel_gap(a.scalar, b.scalar));
            // Both engines see a ricci-flat space; compare the flat-index norm.
            for (std::size_t p = 0; p < 6; ++p) {
                for (std::size_t q = 0; q < 6; ++q) {
                    worst = std::max(worst, std::abs(a.ricci_flat(p, q)));
                    worst = std::max(worst, std::abs(b.ricci_flat(p, q)));
                }
            }
        }
    }
    r.passed = worst < tol;
    r.detail = "worst cross-engine gap " + fmt(worst);
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(unsigned seed, const std::string& only,
                                            double tolOverride)
{
    const Criterion table[] = {
        criterion_catalog_profiles, criterion_einstein_members, criterion_extremal_ode,
        criterion_extremal_roots,   criterion_singularities,    criterion_ricci_flat_total_space,
        criterion_invariant_table,  criterion_inequivalence,    criterion_sasaki_einstein,
        criterion_geodesics,        criterion_form_rank,        criterion_contact,
        criterion_cross_engine};
    const char* tags[] = {"family", "family",  "family",    "family", "symplectic",
                          "calabi", "sasaki",  "sasaki",    "sasaki", "geodesics",
                          "forms21", "base",   "curvature"};
    std::vector<CriterionResult> out;
    std::mt19937 rng(seed);
    int id = 0;
    for (const auto& fn : table) {
        ++id;
        std::mt19937 local(rng());  // independent stream per criterion
        if (!only.empty() && std::string(tags[id - 1]).find(only) == std::string::npos &&
            std::to_string(id) != only) {
            continue;
        }
        CriterionResult res;
        try {
            res = fn(local, tolOverride);
        } catch (const std::exception& ex) {
            res = CriterionResult{id, tags[id - 1], "criterion aborted", false,
                                  std::string("exception: ") + ex.what()};
        }
        out.push_back(res);
    }
    return out;
}

}  // namespace toric
