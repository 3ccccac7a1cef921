// SPDX-License-Identifier: MIT
/*! \file  calabi.cpp
    \brief Ricci-flat canonical-bundle metric: universal fiber profile,
           consistency scalars, three-moment potential, 6D metric, frame.
*/
#include "toric/calabi.hpp"

#include <cmath>
#include <stdexcept>

#include "toric/base_geometry.hpp"
#include "toric/symplectic.hpp"

namespace toric {

namespace {

void require_nonzero_a(const CalabiCoefficients& coeffs)
{
    if (coeffs.a == 0.0) {
        throw std::domain_error("calabi: degenerate leading coefficient a = 0");
    }
}

/// v0 = 2 v / (c w + 2): moment of the base metric underlying (v, w).
Jet base_moment(const TotalSpacePotential& pot, const Jet& v, const Jet& w)
{
    return 2.0 * v / (pot.fiberConstant * w + 2.0);
}

/// Second derivative of the base boundary function at v0, as a jet.
Jet boundary_second(const TotalSpacePotential& pot, const Jet& v, const Jet& w)
{
    return boundary_f(pot.base, base_moment(pot, v, w));
}

struct FrameJets {
    Jet a, b, c, d, e, mho;
};

/// The six structure functions of the coframe as jets in (v, w).
FrameJets frame_functions(const TotalSpacePotential& pot, const Jet& v, const Jet& w)
{
    const double al = pot.base.l1;
    const double be = pot.base.l2;
    const double s = al + be;
    const double q = al * al + al * be + be * be;
    const double ab2 = al * al * be * be;

    const Jet m = 2.0 * q + 3.0 * s * w;
    const Jet v2 = v * v;
    const Jet v3 = v2 * v;
    const Jet m2 = m * m;
    const Jet m3 = m2 * m;
    const double q3 = q * q * q;

    // Radicand shared by the moment legs (negative on the physical region).
    const Jet big = 64.0 * v3 * s * q3 * q3 - 4.0 * v2 * q3 * m2 * m2 + ab2 * m3 * m3;
    // Quartic fiber polynomial 8q^3 + 24 q^2 s w + 24 q s^2 w^2 + 9 s^3 w^3.
    const Jet quartic =
        8.0 * q3 + w * (24.0 * q * q * s + w * (24.0 * q * s * s + 9.0 * s * s * s * w));
    // Cubic combination under the fiber-leg square roots.
    const Jet cubic = 8.0 * v3 * s * q3 - 4.0 * v2 * q3 * m + ab2 * m3;

    FrameJets out;
    out.a = sqrt(-big) / (2.0 * sqrt(v) * std::pow(q, 1.5) * m2);
    out.b = sqrt(big / (2.0 * w * quartic * cubic));
    out.c = 24.0 * v2 * w * s * q3 * quartic / big;
    out.d = sqrt(-cubic) / (2.0 * sqrt(v * (q3 * m)));
    out.e = sqrt(2.0 * w * (4.0 * q * q + w * (6.0 * s * q + 3.0 * s * s * w))) / m;
    out.mho = 3.0 * v * s / m;
    return out;
}

Matrix<Jet> frame_rows(const TotalSpacePotential& pot, const std::vector<double>& point,
                       int order, bool reorder)
{
    const Jet theta = Jet::variable(point[0], 0, 6, order);
    const Jet v = Jet::variable(point[1], 1, 6, order);
    const Jet w = Jet::variable(point[2], 2, 6, order);
    const Jet zero = Jet::constant(0.0, 6, order);
    const Jet conn = 1.0 - cos(theta);  // dtau + conn dphi is the fiber 1-form
    const FrameJets fn = frame_functions(pot, v, w);

    Matrix<Jet> e(6, 6, zero);
    e(0, 0) = sqrt(v);
    e(1, 3) = sqrt(v) * sin(theta);
    e(2, 1) = 1.0 / fn.a;
    e(3, 1) = fn.b * fn.c;
    e(3, 2) = fn.b;
    e(4, 4) = fn.d;
    e(4, 3) = fn.d * conn;
    e(5, 5) = fn.e;
    e(5, 4) = fn.e * fn.mho;
    e(5, 3) = fn.e * fn.mho * conn;
    if (reorder) {
        // (V1, V2, V3, V5, V6, V4): fiber legs aligned with the cone frame.
        Matrix<Jet> r(6, 6, zero);
        const int perm[6] = {0, 1, 2, 4, 5, 3};
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) {
                r(i, j) = e(static_cast<std::size_t>(perm[i]), j);
            }
        }
        return r;
    }
    return e;
}

}  // namespace

CalabiCoefficients ke_calabi_coefficients(double kappa)
{
    return {2.0 * kappa * kappa, 6.0 * kappa, 6.0};
}

double universal_u(const CalabiCoefficients& coeffs, double w)
{
    require_nonzero_a(coeffs);
    const double a = coeffs.a;
    const double b = coeffs.b;
    const double f = coeffs.f;
    const double disc = 4.0 * a * f - b * b;
    double transcendental;
    if (disc > 0.0) {
        const double r = std::sqrt(disc);
        transcendental = 2.0 * r * std::atan((a * w + b) / r);
    } else if (disc < 0.0) {
        // Inverse-hyperbolic branch; the log form stays real past |x| = 1,
        // where it is still an antiderivative of the displayed ratio.
        const double r = std::sqrt(-disc);
        const double x = a * w + b;
        transcendental = r * std::log(std::abs((r + x) / (r - x)));
    } else {
        transcendental = 0.0;
    }
    return -(transcendental + b * std::log(a * w * w + 2.0 * b * w + 4.0 * f) -
             3.0 * a * w) /
           (2.0 * a);
}

double universal_u_prime(const CalabiCoefficients& coeffs, double w)
{
    require_nonzero_a(coeffs);
    const double a = coeffs.a;
    const double b = coeffs.b;
    const double f = coeffs.f;
    return (3.0 * a * w * w + 4.0 * b * w + 4.0 * f) /
           (2.0 * a * w * w + 4.0 * b * w + 8.0 * f);
}

double lambda_of_w(const CalabiCoefficients& coeffs, double w)
{
    return (coeffs.a * w * w * w + 2.0 * coeffs.b * w * w + 4.0 * coeffs.f * w) / 48.0;
}

double w_of_lambda(const CalabiCoefficients& coeffs, double lambda)
{
    require_nonzero_a(coeffs);
    // a w^3 + 2b w^2 + 4f w - 48 lambda = 0, depressed with w = t - 2b/(3a).
    const double a = coeffs.a;
    const double b2 = 2.0 * coeffs.b;
    const double c1 = 4.0 * coeffs.f;
    const double d0 = -48.0 * lambda;
    const double shift = b2 / (3.0 * a);
    const double pp = (3.0 * a * c1 - b2 * b2) / (3.0 * a * a);
    const double qq = (2.0 * b2 * b2 * b2 - 9.0 * a * b2 * c1 + 27.0 * a * a * d0) /
                      (27.0 * a * a * a);
    const double disc = 0.25 * qq * qq + pp * pp * pp / 27.0;
    double root;
    if (disc >= 0.0) {
        const double sd = std::sqrt(disc);
        root = std::cbrt(-0.5 * qq + sd) + std::cbrt(-0.5 * qq - sd) - shift;
    } else {
        // Three real roots; pick the one that round-trips to lambda on the
        // physical nonnegative branch.
        const double r = 2.0 * std::sqrt(-pp / 3.0);
        const double phi = std::acos(3.0 * qq / (pp * r)) / 3.0;
        root = -1.0;
        for (int k = 0; k < 3; ++k) {
            const double cand = r * std::cos(phi - 2.0 * M_PI * k / 3.0) - shift;
            if (cand >= 0.0 &&
                std::abs(lambda_of_w(coeffs, cand) - lambda) <
                    1e-9 * std::max(1.0, std::abs(lambda))) {
                root = cand;
                break;
            }
        }
        if (root < 0.0) throw std::domain_error("w_of_lambda: no physical real root");
    }
    return root;
}

ConsistencyReport consistency_check(const FamilySpec& base, int nGrid)
{
    if (!base.finiteInterval()) {
        throw std::domain_error("consistency_check: infinite moment interval");
    }
    const double lo = base.vMin + 0.05 * (base.vMax - base.vMin);
    const double hi = base.vMax - 0.05 * (base.vMax - base.vMin);
    ConsistencyReport rep;
    std::vector<double> as, bs;
    as.reserve(static_cast<std::size_t>(nGrid));
    bs.reserve(static_cast<std::size_t>(nGrid));
    for (int i = 0; i < nGrid; ++i) {
        const double v = lo + (hi - lo) * i / (nGrid - 1.0);
        const auto r = ricci_anholonomic(base, v);
        as.push_back(2.0 * r[0] * r[1]);
        bs.push_back(3.0 * (r[0] + r[1]));
    }
    for (int i = 0; i < nGrid; ++i) {
        rep.meanA += as[static_cast<std::size_t>(i)] / nGrid;
        rep.meanB += bs[static_cast<std::size_t>(i)] / nGrid;
    }
    rep.meanF = 6.0;
    for (int i = 0; i < nGrid; ++i) {
        rep.devA = std::max(rep.devA, std::abs(as[static_cast<std::size_t>(i)] - rep.meanA));
        rep.devB = std::max(rep.devB, std::abs(bs[static_cast<std::size_t>(i)] - rep.meanB));
    }
    return rep;
}

TotalSpacePotential total_potential(double l1, double l2, double constantOverride)
{
    auto [spec, params] = ke_family(l1, l2);
    TotalSpacePotential pot;
    pot.base = spec;
    pot.params = params;
    pot.fiberConstant = constantOverride != 0.0 ? constantOverride : params.k;
    return pot;
}

Jet fiber_potential_jet(const TotalSpacePotential& pot, const Jet& v, const Jet& w)
{
    const double c = pot.fiberConstant;
    const Jet cw = w * c;
    return (0.5 * cw + 1.0) * d_ke(pot.base.l1, pot.base.l2, base_moment(pot, v, w)) -
           0.5 * v * log(0.5 * cw + 1.0) + 0.5 * w * log(w) +
           (cw + 3.0) * log(cw * (cw + 6.0) + 12.0) / (2.0 * c) +
           std::sqrt(3.0) / c * atan((cw + 3.0) / std::sqrt(3.0));
}

Jet total_potential_jet(const TotalSpacePotential& pot, const Jet& u, const Jet& v,
                        const Jet& w)
{
    return g0_potential(u, v) + fiber_potential_jet(pot, v, w);
}

Matrix<Jet> moment_hessian3(const TotalSpacePotential& pot, const Jet& u, const Jet& v,
                            const Jet& w)
{
    const double c = pot.fiberConstant;
    const Jet f0 = boundary_second(pot, v, w);
    const Jet cw2 = w * c + 2.0;

    Matrix<Jet> g(3, 3, Jet::constant(0.0, u.nvars(), u.order()));
    g(0, 0) = v / (u * (2.0 * v - u));
    g(0, 1) = 1.0 / (u - 2.0 * v);
    g(1, 0) = g(0, 1);
    g(1, 1) = 2.0 * f0 / cw2 + (u + 2.0 * v) / (2.0 * v * (2.0 * v - u));
    g(1, 2) = -c * (c * w + 4.0 * v * f0 + 2.0) / (2.0 * cw2 * cw2);
    g(2, 1) = g(1, 2);
    const Jet cw = w * c;
    const Jet quadratic = cw * cw + 6.0 * cw + 12.0;
    const Jet cube = cw2 * cw2 * cw2;
    g(2, 2) = (c * c * v * w * (cw * cw * cw + 8.0 * cw * cw + 24.0 * cw + 24.0) +
               4.0 * c * c * v * v * w * f0 * quadratic + 3.0 * cube * cw2 * cw2) /
              (2.0 * w * cube * quadratic);
    return g;
}

Matrix<double> total_metric(const TotalSpacePotential& pot,
                            const std::vector<double>& point)
{
    const Matrix<Jet> gj = total_metric_coefficients(pot)(point, 0);
    Matrix<double> g(6, 6, 0.0);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) g(i, j) = gj(i, j).value();
    }
    return g;
}

MetricCoefficients total_metric_coefficients(const TotalSpacePotential& pot)
{
    return [pot](const std::vector<double>& point, int order) {
        const Jet u = Jet::variable(point[0], 0, 6, order);
        const Jet v = Jet::variable(point[1], 1, 6, order);
        const Jet w = Jet::variable(point[2], 2, 6, order);
        const Matrix<Jet> hess = moment_hessian3(pot, u, v, w);
        const Matrix<Jet> hinv = inverse(hess);
        Matrix<Jet> g(6, 6, Jet::constant(0.0, 6, order));
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                g(i, j) = hess(i, j);
                g(i + 3, j + 3) = hinv(i, j);
            }
        }
        return g;
    };
}

MetricCoefficients angular_metric_coefficients(const TotalSpacePotential& pot)
{
    return [pot](const std::vector<double>& point, int order) {
        const Jet theta = Jet::variable(point[0], 0, 6, order);
        const Jet v = Jet::variable(point[1], 1, 6, order);
        const Jet w = Jet::variable(point[2], 2, 6, order);
        const Jet u = (1.0 - cos(theta)) * v;
        const Matrix<Jet> hess = moment_hessian3(pot, u, v, w);
        const Matrix<Jet> hinv = inverse(hess);
        const Jet zero = Jet::constant(0.0, 6, order);

        // Jacobian of (u, v, w) with respect to (theta, v, w).
        Matrix<Jet> jac(3, 3, zero);
        jac(0, 0) = v * sin(theta);
        jac(0, 1) = 1.0 - cos(theta);
        jac(1, 1) = Jet::constant(1.0, 6, order);
        jac(2, 2) = Jet::constant(1.0, 6, order);

        Matrix<Jet> g(6, 6, zero);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                Jet sum = zero;
                for (std::size_t a = 0; a < 3; ++a) {
                    for (std::size_t b = 0; b < 3; ++b) {
                        sum += jac(a, i) * hess(a, b) * jac(b, j);
                    }
                }
                g(i, j) = sum;
                g(i + 3, j + 3) = hinv(i, j);
            }
        }
        return g;
    };
}

double ricci_flat_residual(const TotalSpacePotential& pot,
                           const std::vector<double>& point)
{
    const CurvatureBundle curv = metric_curvature(total_metric_coefficients(pot), 6, point);
    double residual = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            residual = std::max(residual, std::abs(curv.ricci_flat(i, j)));
        }
    }
    return residual;
}

SechsbeinFunctions sechsbein_functions(const TotalSpacePotential& pot, double v, double w)
{
    const Jet vj = Jet::constant(v, 1, 0);
    const Jet wj = Jet::constant(w, 1, 0);
    const FrameJets fn = frame_functions(pot, vj, wj);
    return {fn.a.value(), fn.b.value(), fn.c.value(),
            fn.d.value(), fn.e.value(), fn.mho.value()};
}

FrameField calabi_frame(const TotalSpacePotential& pot)
{
    FrameField field;
    field.dim = 6;
    field.coeffs = [pot](const std::vector<double>& point, int order) {
        return frame_rows(pot, point, order, false);
    };
    return field;
}

FrameField calabi_frame_reordered(const TotalSpacePotential& pot)
{
    FrameField field;
    field.dim = 6;
    field.coeffs = [pot](const std::vector<double>& point, int order) {
        return frame_rows(pot, point, order, true);
    };
    return field;
}

SmallFiberExpansion small_fiber_expansion(const TotalSpacePotential& pot, double v)
{
    const double al = pot.base.l1;
    const double be = pot.base.l2;
    const double s = al + be;
    const double q = al * al + al * be + be * be;
    const double ab2 = al * al * be * be;
    const double interval = (v - al) * (be - v) * (al * be + v * s);

    SmallFiberExpansion out;
    out.de1_dv = 3.0 * s * std::sqrt(v / q) * (ab2 - 2.0 * v * v * v * s) /
                 (2.0 * std::pow(interval, 1.5));
    out.de2_conn = 3.0 * s * (v * v * v * s - 2.0 * ab2) /
                   (4.0 * std::pow(q, 1.5) * std::sqrt(v * interval));
    out.dphiw_dv = 3.0 * v * v * s / ((v - al) * (v - be) * (al * be + v * s));
    out.dphichi_conn = 3.0 * v * s / (2.0 * q);
    return out;
}

}  // namespace toric
