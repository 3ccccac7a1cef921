// SPDX-License-Identifier: MIT
/*! \file  symplectic.cpp
    \brief Symplectic potentials, moment Hessians, inverse Legendre transform,
           H(v) and holomorphic coordinates, the S^2 x S^2 homeomorphism, and
           the singularity classification.
*/
#include "toric/symplectic.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

namespace toric {

namespace {

/// log|x| as a jet; the sign only shifts the value by an additive constant
/// of modulus pi, so all derivatives are the usual 1/x chain.
Jet log_abs(const Jet& x)
{
    return x.value() < 0.0 ? log(-x) : log(x);
}

double midpoint(const FamilySpec& spec)
{
    if (!spec.finiteInterval()) {
        throw std::domain_error("symplectic: infinite moment interval");
    }
    return 0.5 * (spec.vMin + spec.vMax);
}

double quadrature(const std::function<double(double)>& f, double a, double b)
{
    if (a == b) return 0.0;
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 12, 1e-13);
}

/// Unimodal profile of sqrt(FK): location and value of the maximum, found by
/// a grid scan plus golden-section refinement; throws when the profile fails
/// to rise-then-fall or exceeds 1.
struct FkProfile {
    double v0 = 0.0;
    double a0 = 0.0;
};

FkProfile fk_profile(const FamilySpec& spec)
{
    constexpr int kGrid = 400;
    const double lo = spec.vMin;
    const double hi = spec.vMax;
    if (!spec.finiteInterval()) {
        throw std::domain_error("homeomorphism: infinite moment interval");
    }
    int imax = 0;
    double fmax = -1.0;
    std::vector<double> vals(kGrid + 1);
    for (int i = 0; i <= kGrid; ++i) {
        const double v = lo + (hi - lo) * i / kGrid;
        vals[static_cast<std::size_t>(i)] = std::max(fk_value(spec, v), 0.0);
        if (vals[static_cast<std::size_t>(i)] > fmax) {
            fmax = vals[static_cast<std::size_t>(i)];
            imax = i;
        }
    }
    constexpr double kTol = 1e-12;
    for (int i = 0; i < imax; ++i) {
        if (vals[static_cast<std::size_t>(i + 1)] < vals[static_cast<std::size_t>(i)] - kTol) {
            throw std::domain_error("homeomorphism: FK is not unimodal on the interval");
        }
    }
    for (int i = imax; i < kGrid; ++i) {
        if (vals[static_cast<std::size_t>(i + 1)] > vals[static_cast<std::size_t>(i)] + kTol) {
            throw std::domain_error("homeomorphism: FK is not unimodal on the interval");
        }
    }
    // Golden-section refinement of the maximum.
    double a = lo + (hi - lo) * std::max(imax - 1, 0) / kGrid;
    double b = lo + (hi - lo) * std::min(imax + 1, kGrid) / kGrid;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - gr * (b - a);
    double d = a + gr * (b - a);
    for (int it = 0; it < 200 && (b - a) > 1e-14 * (hi - lo); ++it) {
        if (fk_value(spec, c) > fk_value(spec, d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - gr * (b - a);
        d = a + gr * (b - a);
    }
    FkProfile p;
    p.v0 = 0.5 * (a + b);
    p.a0 = std::sqrt(std::max(fk_value(spec, p.v0), 0.0));
    if (p.a0 > 1.0 + 1e-12) {
        throw std::domain_error("homeomorphism: max sqrt(FK) exceeds 1");
    }
    p.a0 = std::min(p.a0, 1.0);
    return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Potentials and Hessians
// ---------------------------------------------------------------------------

Jet g0_potential(const Jet& u, const Jet& v)
{
    return (v - 0.5 * u) * log(2.0 * v - u) + 0.5 * u * log(u) - 0.5 * v * log(v);
}

Jet d_ke(double l1, double l2, const Jet& v)
{
    const double q = l1 * l1 + l1 * l2 + l2 * l2;
    const Jet third = l2 * v + l1 * (l2 + v);
    return -q * (v - l1) * log_abs(v - l1) / (l1 * l1 + l2 * l1 - 2.0 * l2 * l2) -
           q * (v - l2) * log_abs(v - l2) / (-2.0 * l1 * l1 + l2 * l1 + l2 * l2) +
           q * third * log_abs(third) /
               ((l1 + l2) * (2.0 * l1 * l1 + 5.0 * l2 * l1 + 2.0 * l2 * l2)) -
           0.5 * v * log(v);
}

double d_prime(const FamilySpec& spec, double v)
{
    const double mid = midpoint(spec);
    const auto f = [&spec](double s) { return boundary_f(spec, Jet::constant(s, 1, 0)).value(); };
    return quadrature(f, mid, v);
}

Matrix<double> moment_hessian(const FamilySpec& spec, double u, double v)
{
    const double f = boundary_f(spec, Jet::constant(v, 1, 0)).value();
    Matrix<double> g(2, 2, 0.0);
    g(0, 0) = -v / (u * u - 2.0 * u * v);
    g(0, 1) = 1.0 / (u - 2.0 * v);
    g(1, 0) = g(0, 1);
    g(1, 1) = (-2.0 * v * (u - 2.0 * v) * f + u + 2.0 * v) / (2.0 * v * (2.0 * v - u));
    return g;
}

Matrix<double> moment_hessian_inverse(const FamilySpec& spec, double u, double v)
{
    const double f = boundary_f(spec, Jet::constant(v, 1, 0)).value();
    const double den = 2.0 * v * f + 1.0;
    Matrix<double> g(2, 2, 0.0);
    g(0, 0) = u * (-2.0 * v * (u - 2.0 * v) * f + u + 2.0 * v) / (v * den);
    g(0, 1) = 2.0 * u / den;
    g(1, 0) = g(0, 1);
    g(1, 1) = 2.0 * v / den;
    return g;
}

// ---------------------------------------------------------------------------
// Inverse Legendre transform
// ---------------------------------------------------------------------------

double kahler_potential(const FamilySpec& spec, double v)
{
    const double mid = midpoint(spec);
    const double dv = d_prime(spec, v);
    const double d = quadrature([&spec](double s) { return d_prime(spec, s); }, mid, v);
    return v * (dv + 0.5) - d;
}

double omega_of_v(const FamilySpec& spec, double v)
{
    return 4.0 * v * std::exp(2.0 * d_prime(spec, v) + 1.0);
}

// ---------------------------------------------------------------------------
// Complex structure
// ---------------------------------------------------------------------------

double h_function(const FamilySpec& spec, double v)
{
    const double mid = midpoint(spec);
    const auto f = [&spec](double s) { return 1.0 / fk_value(spec, s); };
    return std::exp(quadrature(f, mid, v));
}

std::pair<std::complex<double>, std::complex<double>> complex_coords(const FamilySpec& spec,
                                                                     const BasePoint& p)
{
    const std::complex<double> iunit(0.0, 1.0);
    const std::complex<double> cu = std::exp(iunit * p.phi) * std::tan(0.5 * p.theta);
    const std::complex<double> cv =
        0.5 * std::exp(iunit * p.tau) * (1.0 + std::cos(p.theta)) * h_function(spec, p.v);
    return {cu, cv};
}

Matrix<std::complex<double>> eigen_differentials(const FamilySpec& spec, const BasePoint& p)
{
    const std::complex<double> iunit(0.0, 1.0);
    const double fkv = fk_value(spec, p.v);
    const double t = std::tan(0.5 * p.theta);
    const double cs = 1.0 / std::sin(p.theta);
    // Rows are i a^i_mu over (v, theta, phi, tau); rows 3, 4 are the
    // conjugate pair d log(v-coord), d log(u-coord).
    Matrix<std::complex<double>> da(4, 4, std::complex<double>(0.0, 0.0));
    da(0, 0) = iunit * (iunit / fkv);
    da(0, 1) = iunit * (-iunit * t);
    da(0, 3) = iunit;
    da(1, 1) = iunit * (iunit * cs);
    da(1, 2) = iunit;
    da(2, 0) = iunit * (-iunit / fkv);
    da(2, 1) = iunit * (iunit * t);
    da(2, 3) = iunit;
    da(3, 1) = iunit * (-iunit * cs);
    da(3, 2) = iunit;
    return da;
}

double eigen_differential_closure(const FamilySpec& spec, const BasePoint& p, double h)
{
    // Components depend on (v, theta) only; the exterior derivative reduces
    // to the curls in those two directions against all four legs.
    const auto at = [&spec, &p](double v, double theta) {
        BasePoint q = p;
        q.v = v;
        q.theta = theta;
        return eigen_differentials(spec, q);
    };
    const auto dv_plus = at(p.v + h, p.theta);
    const auto dv_minus = at(p.v - h, p.theta);
    const auto dt_plus = at(p.v, p.theta + h);
    const auto dt_minus = at(p.v, p.theta - h);
    double residual = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t mu = 0; mu < 4; ++mu) {
            const std::complex<double> d_dv = (dv_plus(i, mu) - dv_minus(i, mu)) / (2.0 * h);
            const std::complex<double> d_dt = (dt_plus(i, mu) - dt_minus(i, mu)) / (2.0 * h);
            // d(omega)_{v mu} = d_v omega_mu - d_mu omega_v; omega_v depends
            // only on v and omega_theta only on theta, so the cross terms are
            // the only candidates.
            if (mu != 0) residual = std::max(residual, std::abs(d_dv));
            if (mu != 1) residual = std::max(residual, std::abs(d_dt));
        }
    }
    return residual;
}

// ---------------------------------------------------------------------------
// Homeomorphism
// ---------------------------------------------------------------------------

double homeomorphism_chi(const FamilySpec& spec, double v)
{
    const FkProfile prof = fk_profile(spec);
    const double root = std::sqrt(std::min(std::max(fk_value(spec, v), 0.0), prof.a0 * prof.a0));
    const double s = std::asin(root);
    const double a = std::asin(prof.a0);
    const double half = M_PI * s / (2.0 * a);
    return v <= prof.v0 ? half : M_PI - half;
}

double homeomorphism_chi_inverse(const FamilySpec& spec, double chi)
{
    if (chi < 0.0 || chi > M_PI) {
        throw std::domain_error("homeomorphism_chi_inverse: angle outside [0, pi]");
    }
    double lo = spec.vMin;
    double hi = spec.vMax;
    for (int it = 0; it < 200; ++it) {
        const double m = 0.5 * (lo + hi);
        if (homeomorphism_chi(spec, m) < chi) {
            lo = m;
        } else {
            hi = m;
        }
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> chart_transition(const FamilySpec& spec, double v, double tau)
{
    return {homeomorphism_chi_inverse(spec, M_PI - homeomorphism_chi(spec, v)), -tau + M_PI};
}

// ---------------------------------------------------------------------------
// Singularities
// ---------------------------------------------------------------------------

double spindle_residual(double l2, int samples)
{
    const double r2 = l2;
    double residual = 0.0;
    for (int i = 1; i < samples; ++i) {
        const double t = M_PI * i / samples;
        const double s = std::sin(0.5 * t);
        const double v = r2 * s * s;
        const double fk0 = v * (l2 - v) / l2;
        const double dvdt = 0.5 * r2 * std::sin(t);
        residual = std::max(residual, std::abs(dvdt * dvdt / fk0 - r2));
        residual = std::max(residual,
                            std::abs(4.0 * fk0 - r2 * std::sin(t) * std::sin(t)));
    }
    return residual;
}

std::array<SingularityReport, 2> classify_singularities(const FamilySpec& spec)
{
    if (!spec.finiteInterval()) {
        throw std::domain_error("classify_singularities: infinite moment interval");
    }
    constexpr double kTol = 1e-9;

    // Degenerate member with a round S^2/Z_2 fiber: FK = v (vMax - v)/vMax.
    bool round_fiber = spec.vMin == 0.0;
    if (round_fiber) {
        for (int i = 1; i <= 8 && round_fiber; ++i) {
            const double v = spec.vMax * i / 9.0;
            round_fiber = std::abs(fk_value(spec, v) - v * (spec.vMax - v) / spec.vMax) < 1e-10;
        }
    }

    std::array<SingularityReport, 2> out;
    const std::array<double, 2> ends = {spec.vMin, spec.vMax};
    for (std::size_t e = 0; e < 2; ++e) {
        SingularityReport& r = out[e];
        r.endpoint = ends[e];
        r.fk_prime = fk_jet(spec, ends[e], 1).deriv(1);
        r.beta = 0.5 * std::abs(r.fk_prime);
        r.deficit = std::abs(r.beta - 1.0) < kTol ? 0.0 : 2.0 * M_PI * (1.0 - r.beta);
        if (round_fiber) {
            r.kind = SingularityClass::spindle;
            r.orbifold_n = 2;
        } else if (std::abs(r.beta - 1.0) < kTol) {
            r.kind = SingularityClass::smooth;
        } else {
            const double n = 1.0 / (1.0 - r.beta);
            const double nint = std::round(n);
            if (n > 1.5 && std::abs(n - nint) < 1e-7) {
                r.kind = SingularityClass::orbifold;
                r.orbifold_n = static_cast<int>(nint);
            } else {
                r.kind = SingularityClass::conical;
            }
        }
    }
    return out;
}

int football_obstruction_count(long long nMax)
{
    int count = 0;
    for (long long n = 2; n <= nMax; ++n) {
        const long long disc = 9 * n * n + 12 * n - 12;
        long long r = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(disc))));
        while (r * r > disc) --r;
        while ((r + 1) * (r + 1) <= disc) ++r;
        if (r * r != disc) continue;  // m irrational: no integer solution
        for (const long long denom : {2 + 5 * n + r, 2 + 5 * n - r}) {
            if (denom > 0 && (4 * n) % denom == 0 && 4 * n / denom > 1) ++count;
        }
    }
    return count;
}

}  // namespace toric
