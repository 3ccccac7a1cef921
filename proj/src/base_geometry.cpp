// SPDX-License-Identifier: MIT
/*! \file  base_geometry.cpp
    \brief Universal 4-metric, curvature closed forms, Ricci-form periods,
           slice geometry and the contact structure of the constant-v leaves.
*/
#include "toric/base_geometry.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

namespace toric {

namespace {

constexpr double kEndpointMargin = 1e-12;

void require_interior(const FamilySpec& spec, const BasePoint& p)
{
    if (p.theta <= 0.0 || p.theta >= M_PI) {
        throw std::domain_error("base_metric: polar-angle degeneracy at theta in {0, pi}");
    }
    if (p.v <= spec.vMin + kEndpointMargin ||
        (spec.finiteInterval() && p.v >= spec.vMax - kEndpointMargin)) {
        throw std::domain_error("base_metric: moment coordinate at an interval endpoint");
    }
}

}  // namespace

Matrix<double> base_metric(const FamilySpec& spec, const BasePoint& p)
{
    require_interior(spec, p);
    const double fkv = fk_value(spec, p.v);
    const double s = std::sin(p.theta);
    const double ang = 1.0 - std::cos(p.theta);
    Matrix<double> g(4, 4, 0.0);
    g(0, 0) = 1.0 / fkv;
    g(1, 1) = p.v;
    g(2, 2) = p.v * s * s + fkv * ang * ang;
    g(2, 3) = fkv * ang;
    g(3, 2) = fkv * ang;
    g(3, 3) = fkv;
    return g;
}

FrameField base_frame(const FamilySpec& spec)
{
    FrameField f;
    f.dim = 4;
    f.coeffs = [spec](const std::vector<double>& p, int order) {
        const Jet v = Jet::variable(p[0], 0, 4, order);
        const Jet theta = Jet::variable(p[1], 1, 4, order);
        const Jet fkj = fk(spec, v);
        Matrix<Jet> e(4, 4, Jet::constant(0.0, 4, order));
        e(0, 0) = 1.0 / sqrt(fkj);
        e(1, 2) = sqrt(fkj) * (1.0 - cos(theta));
        e(1, 3) = sqrt(fkj);
        e(2, 1) = sqrt(v);
        e(3, 2) = sqrt(v) * sin(theta);
        return e;
    };
    return f;
}

MetricCoefficients base_metric_coefficients(const FamilySpec& spec)
{
    return [spec](const std::vector<double>& p, int order) {
        const Jet v = Jet::variable(p[0], 0, 4, order);
        const Jet theta = Jet::variable(p[1], 1, 4, order);
        const Jet fkj = fk(spec, v);
        const Jet ang = 1.0 - cos(theta);
        Matrix<Jet> g(4, 4, Jet::constant(0.0, 4, order));
        g(0, 0) = 1.0 / fkj;
        g(1, 1) = v;
        g(2, 2) = v * sin(theta) * sin(theta) + fkj * ang * ang;
        g(2, 3) = fkj * ang;
        g(3, 2) = g(2, 3);
        g(3, 3) = fkj;
        return g;
    };
}

std::array<double, 3> cf_triple(const FamilySpec& spec, double v)
{
    if (v < 0.0) throw std::domain_error("cf_triple: negative moment coordinate");
    const Jet fkj = fk_jet(spec, v, 2);
    if (v == 0.0) {
        // Finite limits exist only for the members reaching v = 0 with
        // FK(0) = 0, FK'(0) = 1; CF2 and CF3 are 0/0 there and are filled
        // from the Taylor data.
        if (std::abs(fkj.value()) > 1e-12 || std::abs(fkj.deriv(1) - 1.0) > 1e-12) {
            throw std::domain_error("cf_triple: pole at v = 0 for this family member");
        }
        const double fk2 = fkj.deriv(2);
        return {fk2, fk2 / 4.0, -fk2 / 2.0};
    }
    const double fkv = fkj.value();
    const double fk1 = fkj.deriv(1);
    return {fkj.deriv(2), (v * fk1 - fkv) / (2.0 * v * v), (v - fkv) / (v * v)};
}

std::array<double, 2> ricci_anholonomic(const FamilySpec& spec, double v)
{
    const Jet fkj = fk_jet(spec, v, 2);
    const double fkv = fkj.value();
    const double fk1 = fkj.deriv(1);
    const double fk2 = fkj.deriv(2);
    const double ra = (fkv - v * (v * fk2 + fk1)) / (4.0 * v * v);
    const double rb = -(v * (fk1 - 2.0) + fkv) / (4.0 * v * v);
    return {ra, rb};
}

RicciFormTriple ricci_form(const FamilySpec& spec, double v)
{
    const Jet fkj = fk_jet(spec, v, 2);
    const double fkv = fkj.value();
    const double fk1 = fkj.deriv(1);
    const double fk2 = fkj.deriv(2);
    RicciFormTriple t;
    t.a = -(v * (fk1 - 2.0) + fkv) / (2.0 * v);
    t.b = -(fkv - v * (v * fk2 + fk1)) / (2.0 * v * v);
    t.c = (-v * v * fk2 - v * fk1 + fkv) / (2.0 * v * v);
    return t;
}

std::array<double, 2> ricci_form_periods(const FamilySpec& spec)
{
    if (!spec.finiteInterval()) {
        throw std::domain_error("ricci_form_periods: infinite moment interval");
    }
    double first = 0.0;
    if (spec.vMin == 0.0) {
        // Limit of -(v (FK' - 2) + FK)/(2 v) at v = 0 when FK(0) = 0.
        const Jet fk0 = fk_jet(spec, 0.0, 1);
        first = 2.0 * (-(fk0.deriv(1) - 1.0));
    } else {
        first = 2.0 * ricci_form(spec, spec.vMin).a;
    }

    const auto integrand = [&spec](double v) { return ricci_form(spec, v).c; };
    const double lo = spec.vMin == 0.0 ? 1e-13 : spec.vMin;
    const double second = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, lo, spec.vMax, 10, 1e-13);
    return {first, second};
}

Slice3 slice3_geometry(const FamilySpec& spec, double v)
{
    const double fkv = fk_value(spec, v);
    Slice3 s;
    s.sphere_coeff = (4.0 * v - 3.0 * fkv) / (4.0 * v * v);
    s.fiber_coeff = fkv / (4.0 * v * v);
    s.fiber_norm = std::sqrt(std::max(fkv, 0.0));
    return s;
}

FrameField slice3_frame(const FamilySpec& spec, double v)
{
    FrameField f;
    f.dim = 3;
    const double rootfk = std::sqrt(fk_value(spec, v));
    const double rootv = std::sqrt(v);
    f.coeffs = [rootfk, rootv](const std::vector<double>& p, int order) {
        const Jet theta = Jet::variable(p[0], 0, 3, order);
        Matrix<Jet> e(3, 3, Jet::constant(0.0, 3, order));
        e(0, 0) = Jet::constant(rootv, 3, order);
        e(1, 1) = rootv * sin(theta);
        e(2, 1) = rootfk * (1.0 - cos(theta));
        e(2, 2) = Jet::constant(rootfk, 3, order);
        return e;
    };
    return f;
}

ContactData contact_reeb_beltrami(const FamilySpec& spec, double v)
{
    const double fkv = fk_value(spec, v);
    ContactData out;

    const std::array<double, 3> thetas = {0.6, 1.3, 2.4};
    bool first_sample = true;
    for (double theta : thetas) {
        const double s = std::sin(theta);
        const double ang = 1.0 - std::cos(theta);

        // Leaf metric in (theta, phi, tau) and the contact form
        // Omega = v (1 - cos theta) dphi + v dtau.
        Matrix<double> g(3, 3, 0.0);
        g(0, 0) = v;
        g(1, 1) = v * s * s + fkv * ang * ang;
        g(1, 2) = fkv * ang;
        g(2, 1) = fkv * ang;
        g(2, 2) = fkv;
        const Matrix<double> ginv = inverse(g);
        const std::array<double, 3> omega = {0.0, v * ang, v};

        // dOmega_{mu nu}: the only coordinate dependence is through theta.
        Matrix<double> domega(3, 3, 0.0);
        domega(0, 1) = v * s;
        domega(1, 0) = -v * s;

        // Raise the index, then normalize so that Omega(U) = 1.
        std::array<double, 3> raised = {0.0, 0.0, 0.0};
        for (int m = 0; m < 3; ++m) {
            for (int n = 0; n < 3; ++n) {
                raised[static_cast<std::size_t>(m)] +=
                    ginv(static_cast<std::size_t>(m), static_cast<std::size_t>(n)) *
                    omega[static_cast<std::size_t>(n)];
            }
        }
        double pairing = 0.0;
        for (int m = 0; m < 3; ++m) {
            pairing += omega[static_cast<std::size_t>(m)] * raised[static_cast<std::size_t>(m)];
        }
        std::array<double, 3> reeb = {raised[0] / pairing, raised[1] / pairing,
                                      raised[2] / pairing};

        double omega_u = 0.0;
        double contraction = 0.0;
        for (int m = 0; m < 3; ++m) {
            omega_u += omega[static_cast<std::size_t>(m)] * reeb[static_cast<std::size_t>(m)];
            double comp = 0.0;
            for (int n = 0; n < 3; ++n) {
                comp += reeb[static_cast<std::size_t>(n)] *
                        domega(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
            }
            contraction = std::max(contraction, std::abs(comp));
        }

        // Symplectically normalized leaf volume Vol = -v Omega ^ dOmega;
        // its (theta, phi, tau) component is -v (Omega_tau dOmega_{theta phi}).
        const double vol = -v * (omega[2] * domega(0, 1));
        const double iu_vol = reeb[2] * vol;  // (i_U Vol)_{theta phi}
        const double lambda = domega(0, 1) / iu_vol;

        if (first_sample) {
            out.omega_of_reeb = omega_u;
            out.beltrami_eigenvalue = lambda;
            out.reeb = reeb;
            first_sample = false;
        } else {
            out.beltrami_spread =
                std::max(out.beltrami_spread, std::abs(lambda - out.beltrami_eigenvalue));
        }
        out.du_domega_residual = std::max(out.du_domega_residual, contraction);
    }

    // Liouville property: with L = u d_u + v d_v, d(i_L K) recovers the
    // Kaehler form K = du^dphi + dv^dtau component by component.
    // i_L K = u dphi + v dtau, whose exterior derivative in the (u, v)
    // block has d(u)_{u} = 1 against dphi and d(v)_{v} = 1 against dtau.
    {
        const Jet uj = Jet::variable(0.7, 0, 2, 1);
        const Jet vj = Jet::variable(v, 1, 2, 1);
        const double d_u_dphi = uj.d1(0);   // coefficient of du^dphi
        const double d_v_dphi = uj.d1(1);   // coefficient of dv^dphi
        const double d_u_dtau = vj.d1(0);   // coefficient of du^dtau
        const double d_v_dtau = vj.d1(1);   // coefficient of dv^dtau
        out.liouville_residual =
            std::max({std::abs(d_u_dphi - 1.0), std::abs(d_v_dphi), std::abs(d_u_dtau),
                      std::abs(d_v_dtau - 1.0)});
    }
    return out;
}

int monopole_flux_of_connection(const std::function<double(double)>& a_phi)
{
    const double flux = a_phi(M_PI) - a_phi(0.0);
    const long rounded = std::lround(flux);
    if (std::abs(flux - static_cast<double>(rounded)) > 1e-10) {
        throw std::domain_error("monopole_flux_of_connection: non-integer flux");
    }
    return static_cast<int>(rounded);
}

int monopole_flux(const FamilySpec&)
{
    return monopole_flux_of_connection([](double theta) { return 1.0 - std::cos(theta); });
}

}  // namespace toric
