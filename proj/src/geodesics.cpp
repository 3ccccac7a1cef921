// SPDX-License-Identifier: MIT
/*! \file  geodesics.cpp
    \brief Hamiltonian geodesic flow, Carter constant, adaptive integration,
           separation quadratures and the irrotational closed forms.
*/
#include "toric/geodesics.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <complex>
#include <ostream>
#include <stdexcept>

#include "toric/base_geometry.hpp"

namespace toric {

namespace {

/// Angular potential X(theta) = csc^2 theta (m cos theta - m + ell)^2 and
/// its theta-derivative.
double x_potential(double theta, double ell, double m)
{
    const double w = m * (std::cos(theta) - 1.0) + ell;
    const double s = std::sin(theta);
    return w * w / (s * s);
}

double x_potential_prime(double theta, double ell, double m)
{
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const double w = m * (c - 1.0) + ell;
    return -2.0 * m * w / s - 2.0 * w * w * c / (s * s * s);
}

using PhaseVector = std::array<double, 6>;  // (v, theta, phi, tau, p_v, p_theta)

PhaseVector hamilton_rhs(const FamilySpec& spec, const PhaseVector& y, double ell, double m)
{
    const Jet fkj = fk_jet(spec, y[0], 1);
    const double fkv = fkj.value();
    const double fk1 = fkj.deriv(1);
    const double v = y[0];
    const double theta = y[1];
    const double pv = y[4];
    const double pt = y[5];
    const double s = std::sin(theta);
    const double w = m * (std::cos(theta) - 1.0) + ell;
    const double x = w * w / (s * s);

    PhaseVector dy;
    dy[0] = fkv * pv;
    dy[1] = pt / v;
    dy[2] = w / (v * s * s);
    dy[3] = m / fkv + w * (std::cos(theta) - 1.0) / (v * s * s);
    dy[4] = 0.5 * (m * m * fk1 / (fkv * fkv) - fk1 * pv * pv + (x + pt * pt) / (v * v));
    dy[5] = -x_potential_prime(theta, ell, m) / (2.0 * v);
    return dy;
}

void require_interior(const FamilySpec& spec, const GeodesicState& st)
{
    if (st.theta <= 0.0 || st.theta >= M_PI) {
        throw std::domain_error("geodesics: initial point at a theta pole");
    }
    if (st.v <= spec.vMin || (spec.finiteInterval() && st.v >= spec.vMax)) {
        throw std::domain_error("geodesics: initial moment outside the open interval");
    }
}

/// Carlson symmetric integral R_F by the duplication theorem; accepts
/// complex arguments off the negative real axis.
std::complex<double> carlson_rf(std::complex<double> x, std::complex<double> y,
                                std::complex<double> z)
{
    for (int it = 0; it < 200; ++it) {
        const std::complex<double> sx = std::sqrt(x);
        const std::complex<double> sy = std::sqrt(y);
        const std::complex<double> sz = std::sqrt(z);
        const std::complex<double> lambda = sx * sy + sy * sz + sz * sx;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        const std::complex<double> mu = (x + y + z) / 3.0;
        const double scale = std::abs(mu);
        if (std::abs(x - mu) < 1e-12 * scale && std::abs(y - mu) < 1e-12 * scale &&
            std::abs(z - mu) < 1e-12 * scale) {
            break;
        }
    }
    const std::complex<double> mu = (x + y + z) / 3.0;
    const std::complex<double> dx = 1.0 - x / mu;
    const std::complex<double> dy = 1.0 - y / mu;
    const std::complex<double> dz = 1.0 - z / mu;
    const std::complex<double> e2 = dx * dy + dy * dz + dz * dx;
    const std::complex<double> e3 = dx * dy * dz;
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) /
           std::sqrt(mu);
}

/// F(phi | m) = sin(phi) R_F(cos^2 phi, 1 - m sin^2 phi, 1), complex phi.
std::complex<double> elliptic_f_c(const std::complex<double>& phi, double m)
{
    const std::complex<double> sn = std::sin(phi);
    const std::complex<double> cn = std::cos(phi);
    return sn * carlson_rf(cn * cn, 1.0 - m * sn * sn, std::complex<double>(1.0, 0.0));
}

}  // namespace

double hamiltonian(const FamilySpec& spec, const GeodesicState& st)
{
    const double s = std::sin(st.theta);
    if (s == 0.0 && (st.ell != 0.0 || st.m != 0.0 || st.p_theta != 0.0)) {
        throw std::domain_error("hamiltonian: theta pole with angular momenta");
    }
    const double fkv = fk_value(spec, st.v);
    const double w = (std::cos(st.theta) - 1.0) * st.m + st.ell;
    return 0.5 * (st.m * st.m / fkv + fkv * st.p_v * st.p_v +
                  (w * w / (s * s) + st.p_theta * st.p_theta) / st.v);
}

double reduced_hamiltonian(const FamilySpec& spec, const GeodesicState& st)
{
    const double fkv = fk_value(spec, st.v);
    return 0.5 * (st.m * st.m / fkv + fkv * st.p_v * st.p_v +
                  (x_potential(st.theta, st.ell, st.m) + st.p_theta * st.p_theta) / st.v);
}

double carter(const GeodesicState& st)
{
    return x_potential(st.theta, st.ell, st.m) + st.p_theta * st.p_theta;
}

double poisson_bracket_carter_h(const FamilySpec& spec, const GeodesicState& st, double h)
{
    // Reduced phase space (v, theta; p_v, p_theta).
    const auto dc = [&st](int var, double eps) {
        GeodesicState q = st;
        if (var == 0) q.v += eps;
        if (var == 1) q.theta += eps;
        if (var == 2) q.p_v += eps;
        if (var == 3) q.p_theta += eps;
        return carter(q);
    };
    const auto dh = [&spec, &st](int var, double eps) {
        GeodesicState q = st;
        if (var == 0) q.v += eps;
        if (var == 1) q.theta += eps;
        if (var == 2) q.p_v += eps;
        if (var == 3) q.p_theta += eps;
        return reduced_hamiltonian(spec, q);
    };
    double bracket = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double dcq = (dc(i, h) - dc(i, -h)) / (2.0 * h);
        const double dcp = (dc(i + 2, h) - dc(i + 2, -h)) / (2.0 * h);
        const double dhq = (dh(i, h) - dh(i, -h)) / (2.0 * h);
        const double dhp = (dh(i + 2, h) - dh(i + 2, -h)) / (2.0 * h);
        bracket += dcq * dhp - dcp * dhq;
    }
    return bracket;
}

std::vector<TrajectorySample> integrate_geodesic(const FamilySpec& spec,
                                                 const GeodesicState& initial, double sMax,
                                                 double tol, int samples)
{
    require_interior(spec, initial);
    if (hamiltonian(spec, initial) <= 0.0) {
        throw std::domain_error("integrate_geodesic: stationary initial state");
    }
    const double ell = initial.ell;
    const double m = initial.m;
    PhaseVector y = {initial.v,   initial.theta, initial.phi,
                     initial.tau, initial.p_v,   initial.p_theta};

    namespace ode = boost::numeric::odeint;
    using Stepper = ode::runge_kutta_fehlberg78<PhaseVector>;
    auto stepper = ode::make_controlled<Stepper>(tol, tol);
    const auto system = [&spec, ell, m](const PhaseVector& state, PhaseVector& dstate,
                                        double) { dstate = hamilton_rhs(spec, state, ell, m); };

    std::vector<TrajectorySample> out;
    out.reserve(static_cast<std::size_t>(samples) + 2);
    const auto observer = [&out, ell, m](const PhaseVector& state, double s) {
        TrajectorySample sample;
        sample.s = s;
        sample.state = {state[0], state[1], state[2], state[3], state[4], state[5], ell, m};
        out.push_back(sample);
    };
    ode::integrate_const(stepper, system, y, 0.0, sMax, sMax / samples, observer);
    return out;
}

double conserved_drift(const FamilySpec& spec, const std::vector<TrajectorySample>& traj)
{
    const double e0 = reduced_hamiltonian(spec, traj.front().state);
    const double k0 = carter(traj.front().state);
    const double norm = std::max({1.0, std::abs(e0), std::abs(k0)});
    double drift = 0.0;
    for (const auto& sample : traj) {
        drift = std::max(drift, std::abs(reduced_hamiltonian(spec, sample.state) - e0));
        drift = std::max(drift, std::abs(carter(sample.state) - k0));
    }
    return drift / norm;
}

double geodesic_equation_residual(const FamilySpec& spec,
                                  const std::vector<TrajectorySample>& traj)
{
    const auto g_coeffs = base_metric_coefficients(spec);
    double residual = 0.0;
    const std::size_t stride = std::max<std::size_t>(1, traj.size() / 8);
    for (std::size_t idx = 0; idx < traj.size(); idx += stride) {
        const GeodesicState& st = traj[idx].state;
        const PhaseVector y = {st.v, st.theta, st.phi, st.tau, st.p_v, st.p_theta};
        const PhaseVector f = hamilton_rhs(spec, y, st.ell, st.m);

        // Coordinate acceleration from the flow: d(qdot)/ds by a centered
        // difference along the exact vector field.
        const double eps = 1e-6;
        PhaseVector yp = y;
        PhaseVector ym = y;
        for (int i = 0; i < 6; ++i) {
            yp[static_cast<std::size_t>(i)] += eps * f[static_cast<std::size_t>(i)];
            ym[static_cast<std::size_t>(i)] -= eps * f[static_cast<std::size_t>(i)];
        }
        const PhaseVector fp = hamilton_rhs(spec, yp, st.ell, st.m);
        const PhaseVector fm = hamilton_rhs(spec, ym, st.ell, st.m);

        // Christoffel symbols from order-1 jets of the metric.
        const std::vector<double> point = {st.v, st.theta, st.phi, st.tau};
        const Matrix<Jet> gj = g_coeffs(point, 1);
        Matrix<double> g(4, 4, 0.0);
        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t b = 0; b < 4; ++b) g(a, b) = gj(a, b).value();
        }
        const Matrix<double> ginv = inverse(g);
        for (int mu = 0; mu < 4; ++mu) {
            const double accel = (fp[static_cast<std::size_t>(mu)] -
                                  fm[static_cast<std::size_t>(mu)]) /
                                 (2.0 * eps);
            double force = 0.0;
            for (int al = 0; al < 4; ++al) {
                for (int be = 0; be < 4; ++be) {
                    double gamma = 0.0;
                    for (int nu = 0; nu < 4; ++nu) {
                        gamma += 0.5 * ginv(static_cast<std::size_t>(mu),
                                            static_cast<std::size_t>(nu)) *
                                 (gj(static_cast<std::size_t>(nu), static_cast<std::size_t>(be))
                                      .d1(al) +
                                  gj(static_cast<std::size_t>(nu), static_cast<std::size_t>(al))
                                      .d1(be) -
                                  gj(static_cast<std::size_t>(al), static_cast<std::size_t>(be))
                                      .d1(nu));
                    }
                    force += gamma * f[static_cast<std::size_t>(al)] *
                             f[static_cast<std::size_t>(be)];
                }
            }
            residual = std::max(residual, std::abs(accel + force));
        }
    }
    return residual;
}

OrbitQuadratures quadratures(const FamilySpec& spec, double ell, double m, double c,
                             double energy)
{
    OrbitQuadratures q;
    q.lambda = [ell, m, c](double theta0, double theta1) {
        boost::math::quadrature::tanh_sinh<double> integrator;
        return integrator.integrate(
            [ell, m, c](double t) {
                const double rad = c - x_potential(t, ell, m);
                if (rad <= 0.0) {
                    throw std::domain_error("quadratures: negative theta radicand");
                }
                return 1.0 / std::sqrt(rad);
            },
            theta0, theta1);
    };
    q.sigma = [&spec, m, c, energy](double v0, double v1) {
        boost::math::quadrature::tanh_sinh<double> integrator;
        return integrator.integrate(
            [&spec, m, c, energy](double v) {
                const double rad = fk_value(spec, v) * (2.0 * v * energy - c) - m * m * v;
                if (rad <= 0.0) {
                    throw std::domain_error("quadratures: negative moment radicand");
                }
                return 1.0 / (std::sqrt(v) * std::sqrt(rad));
            },
            v0, v1);
    };
    return q;
}

double lambda_closed_form(double theta, double ell, double m, double k)
{
    const double c = std::cos(theta);
    const double rad = std::cos(2.0 * theta) * (k + m * m) - k + 3.0 * m * m +
                       2.0 * ell * ell + 4.0 * m * c * (ell - m) - 4.0 * m * ell;
    const double sec2 = 1.0 / std::pow(std::cos(0.5 * theta), 2);
    const double tan2 = std::pow(std::tan(0.5 * theta), 2);
    const double w = m * c - m + ell;
    const double inner = std::sqrt(sec2 * sec2 * w * w - 4.0 * k * tan2);
    // The half-angle substitution t = tan(theta/2) reduces the integral to
    // ds / ((1 + s) sqrt(quadratic)), whose antiderivative is the inverse
    // hyperbolic tangent below (not a circular arctangent).
    const double g = sec2 * (c * (k + m * m) + m * (ell - m)) /
                     (std::sqrt(k + m * m) * inner);
    // Real part of artanh(g); for |g| > 1 the imaginary constant of the
    // complex branch drops out of definite differences.
    const double num = std::sqrt(rad) * (-0.5 * std::log(std::abs((1.0 + g) / (1.0 - g))));
    const double den = (c + 1.0) * std::sqrt(k + m * m) * inner;
    return num / den;
}

double irrotational_theta(const FamilySpec& spec, double v, double k, double energy,
                          double vStart)
{
    if (k >= 0.0) throw std::domain_error("irrotational_theta: label K must be negative");
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(
        [&spec, k, energy](double s) {
            const double rad = fk_value(spec, s) * (k + 2.0 * s * energy);
            if (rad <= 0.0) {
                throw std::domain_error("irrotational_theta: negative radicand");
            }
            return std::sqrt(-k) / (std::sqrt(s) * std::sqrt(rad));
        },
        vStart, v);
}

double elliptic_f(double phi, double m)
{
    const std::complex<double> val = elliptic_f_c(std::complex<double>(phi, 0.0), m);
    return val.real();
}

double irrotational_theta_ke12_closed(double v, double k, double energy)
{
    using C = std::complex<double>;
    const auto antiderivative = [k, energy](double vv) {
        const C e(energy, 0.0);
        const C kk(k, 0.0);
        const C den = kk + 2.0 * vv * e;
        const C num = std::sqrt(C(7.0)) * std::sqrt(-kk) * (vv - 2.0) * (vv - 1.0) *
                      std::sqrt((3.0 * vv + 2.0) * (kk + 4.0 * e) / den);
        const C arg = std::sqrt(-(3.0 * kk - 4.0 * e) * (vv - 2.0) / den) / (2.0 * std::sqrt(2.0));
        const double h = (8.0 * (k + 2.0 * energy)) / (3.0 * k - 4.0 * energy);
        const C f = elliptic_f_c(std::asin(arg), h);
        const C d = std::sqrt(vv) * std::sqrt(-(vv - 2.0) * (3.0 * kk - 4.0 * e) / den) *
                    std::sqrt((vv - 1.0) * (kk + 4.0 * e) / den) *
                    std::sqrt(-(3.0 * vv * vv * vv - 7.0 * vv * vv + 4.0) * den / vv);
        return num * f / d;
    };
    // The arctan-free elliptic antiderivative evaluates to exactly half the
    // integral of the separated angle equation (checked against both the
    // direct quadrature and the Hamiltonian flow), hence the factor 2.
    const C diff = 2.0 * antiderivative(v);
    return diff.real();
}

std::vector<std::pair<double, double>> orbit_points(const FamilySpec& spec, double k,
                                                    double energy, int n)
{
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<std::size_t>(n));
    const double lo = spec.vMin;
    const double hi = spec.vMax;
    const double start = lo + 1e-10 * (hi - lo);
    out.emplace_back(0.0, lo);  // orbit opens at the lower vertex, u = 0
    for (int i = 1; i < n; ++i) {
        const double v = lo + (hi - lo - 1e-9) * i / (n - 1.0);
        const double angle = irrotational_theta(spec, v, k, energy, start);
        out.emplace_back((1.0 - std::cos(angle)) * v, v);
    }
    return out;
}

void write_trajectory_csv(std::ostream& out, const FamilySpec& spec,
                          const std::vector<TrajectorySample>& traj)
{
    out << "s,v,theta,phi,tau,p_v,p_theta,h_red,carter\n";
    for (const auto& sample : traj) {
        const GeodesicState& st = sample.state;
        out << sample.s << ',' << st.v << ',' << st.theta << ',' << st.phi << ',' << st.tau
            << ',' << st.p_v << ',' << st.p_theta << ',' << reduced_hamiltonian(spec, st)
            << ',' << carter(st) << '\n';
    }
}

}  // namespace toric
