// SPDX-License-Identifier: MIT
/*! \file  symplectic.hpp
    \brief Action-angle (symplectic-potential) machinery: the universal
           potential and boundary function, 2x2 moment Hessians, the inverse
           Legendre transform, the complex-structure integral H(v), holomorphic
           coordinates, the S^2 x S^2 homeomorphism, and the classification of
           the endpoint singularities.
*/
#pragma once

#include <array>
#include <complex>
#include <vector>

#include "toric/base_geometry.hpp"
#include "toric/family.hpp"
#include "toric/jet.hpp"
#include "toric/linalg.hpp"

namespace toric {

// ---------------------------------------------------------------------------
// Symplectic potential G = G0(u, v) + D(v)
// ---------------------------------------------------------------------------

/// Universal part of the symplectic potential,
/// G0 = (v - u/2) log(2v - u) + (u/2) log u - (v/2) log v.
Jet g0_potential(const Jet& u, const Jet& v);

/// Closed-form boundary function D(v) of the Einstein subfamily
/// (irrelevant linear terms dropped).
Jet d_ke(double l1, double l2, const Jet& v);

/// First derivative D'(v), normalized to vanish at the interval midpoint,
/// by adaptive quadrature of boundary_f (closed forms are test oracles).
double d_prime(const FamilySpec& spec, double v);

/*! 2x2 moment Hessian of G0 + D in coordinates (u, v), with f = D'':
      G11 = -v/(u^2 - 2uv),  G12 = 1/(u - 2v),
      G22 = (-2v(u - 2v) f + u + 2v)/(2v(2v - u)).  */
Matrix<double> moment_hessian(const FamilySpec& spec, double u, double v);

/// Closed-form inverse of moment_hessian; the product with the Hessian is
/// the identity wherever both are defined.
Matrix<double> moment_hessian_inverse(const FamilySpec& spec, double u, double v);

// ---------------------------------------------------------------------------
// Inverse Legendre transform
// ---------------------------------------------------------------------------

/// Kaehler potential on the base as a function of the moment,
/// K0(v) = v (D'(v) + 1/2) - D(v), with D built by double quadrature of
/// boundary_f from the midpoint (both integration constants set to 0).
double kahler_potential(const FamilySpec& spec, double v);

/// The invariant radius expressed through the moment,
/// Omega(v) = 4 v exp(2 D'(v) + 1); defined up to one overall positive
/// constant fixed by the midpoint normalization of d_prime.
double omega_of_v(const FamilySpec& spec, double v);

// ---------------------------------------------------------------------------
// Complex structure
// ---------------------------------------------------------------------------

/*! H(v) = exp( integral dv / FK ), the single function through which the
    member's complex structure enters the holomorphic coordinates.  The free
    multiplicative constant is fixed by H(midpoint) = 1; computed by adaptive
    quadrature for every member (closed forms serve as golden tests). */
double h_function(const FamilySpec& spec, double v);

/// Holomorphic coordinates of the dense chart:
/// u = e^{i phi} tan(theta/2),  v = (1/2) e^{i tau} (1 + cos theta) H(v).
std::pair<std::complex<double>, std::complex<double>> complex_coords(const FamilySpec& spec,
                                                                     const BasePoint& point);

/*! Components a_mu (mu over v, theta, phi, tau) of the four eigen-1-forms of
    the complex structure, i a^i_mu dx^mu; rows 3 and 4 are d log(v-coord)
    and d log(u-coord).  Used by the closure check below. */
Matrix<std::complex<double>> eigen_differentials(const FamilySpec& spec, const BasePoint& point);

/// Max |d(da^i)| component over the four eigen-differentials, by centered
/// finite differences with step h; vanishes identically for the family.
double eigen_differential_closure(const FamilySpec& spec, const BasePoint& point,
                                  double h = 1e-5);

// ---------------------------------------------------------------------------
// Homeomorphism with S^2 x S^2
// ---------------------------------------------------------------------------

/*! Right-ascension angle chi(v) in [0, pi] built from arcsin(sqrt(FK)):
    requires sqrt(FK) unimodal on the interval with maximum a0 <= 1 (checked
    numerically; std::domain_error otherwise).  chi(vMin) = 0,
    chi(v0) = pi/2, chi(vMax) = pi, strictly monotone. */
double homeomorphism_chi(const FamilySpec& spec, double v);

/// Numeric inverse of homeomorphism_chi by bisection on the monotone domain.
double homeomorphism_chi_inverse(const FamilySpec& spec, double chi);

/// Transition between the two polar charts of the second sphere:
/// (v_S, tau_S) = (chi^{-1}(pi - chi(v_N)), -tau_N + pi).  The map is an
/// involution, so applying it twice is the identity.
std::pair<double, double> chart_transition(const FamilySpec& spec, double v, double tau);

// ---------------------------------------------------------------------------
// Endpoint singularities
// ---------------------------------------------------------------------------

enum class SingularityClass { smooth, conical, orbifold, spindle };

/// Local model of the tau-fiber metric near one endpoint lambda:
/// ds^2 = dr^2 + beta^2 r^2 dtau^2 with beta = |FK'(lambda)|/2.
struct SingularityReport {
    double endpoint = 0.0;  ///< lambda (vMin or vMax).
    double fk_prime = 0.0;  ///< FK'(lambda).
    double beta = 0.0;      ///< |FK'(lambda)|/2.
    double deficit = 0.0;   ///< 2 pi (1 - beta); 0 when smooth.
    SingularityClass kind = SingularityClass::smooth;
    int orbifold_n = 0;     ///< n when beta = 1 - 1/n with integer n >= 2.
};

/// Per-endpoint classification; requires a finite interval.
std::array<SingularityReport, 2> classify_singularities(const FamilySpec& spec);

/*! Residual of the round-fiber substitution for the degenerate member with
    FK0 = v (l2 - v)/l2: with v = R^2 sin^2(t/2), tau = 2 p the fiber metric
    dv^2/FK0 + FK0 dtau^2 becomes R^2 (dt^2 + sin^2 t dp^2); returns the max
    coefficient mismatch over `samples` interior values of t. */
double spindle_residual(double l2, int samples = 100);

/*! Obstruction to a doubly integer-orbifold fiber: number of n in [2, nMax]
    for which m = 4n/(2 + 5n +- sqrt(9n^2 + 12n - 12)) is an integer > 1
    (exact integer arithmetic; the square root must be a perfect square).
    Always 0. */
int football_obstruction_count(long long nMax);

}  // namespace toric
