// SPDX-License-Identifier: MIT
/*! \file  base_geometry.hpp
    \brief The cohomogeneity-one Kaehler 4-manifold: universal metric and
           vierbein, closed-form curvature triple, anholonomic Ricci, Ricci
           2-form and its periods, the circle-fibration 3-slices, and the
           contact / Reeb / Beltrami structure of those slices.
*/
#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "toric/curvature.hpp"
#include "toric/family.hpp"
#include "toric/linalg.hpp"

namespace toric {

/// Point on the 4-manifold in coordinates (v, theta, phi, tau);
/// the second moment is u = (1 - cos theta) v.
struct BasePoint {
    double v = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double tau = 0.0;

    [[nodiscard]] double u() const { return (1.0 - std::cos(theta)) * v; }
};

/*! Metric components in coordinates (v, theta, phi, tau):
      ds^2 = dv^2/FK + v (dtheta^2 + sin^2 theta dphi^2)
             + FK [dtau + (1 - cos theta) dphi]^2 .
    Throws std::domain_error at the degenerate loci (theta in {0, pi} or v at
    an interval endpoint). */
Matrix<double> base_metric(const FamilySpec& spec, const BasePoint& point);

/// Orthonormal vierbein of base_metric as a FrameField consumable by the
/// tensor kernel: e1 = dv/sqrt(FK), e2 = sqrt(FK)[dtau + (1-cos)dphi],
/// e3 = sqrt(v) dtheta, e4 = sqrt(v) sin(theta) dphi.
FrameField base_frame(const FamilySpec& spec);

/// Metric-coefficient callable of the same geometry, assembled directly
/// (independent of the frame) for the Christoffel pipeline.
MetricCoefficients base_metric_coefficients(const FamilySpec& spec);

/*! The three functions carrying the whole intrinsic Riemann tensor, in the
    catalog normalization used for all per-family closed forms and endpoint
    values:
      CF1 = FK'',  CF2 = (v FK' - FK)/(2 v^2),  CF3 = (v - FK)/v^2 .
    At v = 0 (reachable only when FK(0) = 0, FK'(0) = 1) the finite limits
    are produced from the Taylor data. */
std::array<double, 3> cf_triple(const FamilySpec& spec, double v);

/*! Diagonal of the anholonomic Ricci tensor, diag(ra, ra, rb, rb) with
      ra = (FK - v (v FK'' + FK'))/(4 v^2),  rb = -(v (FK' - 2) + FK)/(4 v^2).
    These intrinsic components are half of the Riemannian Ricci eigenvalues
    in the tensor kernel's normalization; Kaehler-Einstein members give
    ra = rb = k/4. */
std::array<double, 2> ricci_anholonomic(const FamilySpec& spec, double v);

/// Coefficient functions of the Ricci 2-form
/// Ric = A sin(theta) dtheta^dphi + B (1-cos theta) dv^dphi + C dv^dtau.
struct RicciFormTriple {
    double a = 0.0;  ///< -(v (FK' - 2) + FK)/(2 v)
    double b = 0.0;  ///< -(FK - v (v FK'' + FK'))/(2 v^2)
    double c = 0.0;  ///< (-v^2 FK'' - v FK' + FK)/(2 v^2)
};

RicciFormTriple ricci_form(const FamilySpec& spec, double v);

/*! Normalized periods of the Ricci 2-form on the two toric homology cycles:
    (1/2pi) integral over C1 = 2 A(vMin), (1/2pi) integral over C2 =
    integral of C(v) dv over the moment interval (by adaptive quadrature).
    Smooth second-Hirzebruch members return (0, 2). */
std::array<double, 2> ricci_form_periods(const FamilySpec& spec);

/// Constant-v slice: circle fibration over S^2 with dreibein
/// eps1 = sqrt(v) dtheta, eps2 = sqrt(v) sin dphi, eps3 = sqrt(FK)[...].
struct Slice3 {
    double sphere_coeff = 0.0;  ///< (4v - 3 FK)/(4 v^2), eps1^eps2 curvature block.
    double fiber_coeff = 0.0;   ///< FK/(4 v^2), eps1^eps3 and eps2^eps3 blocks.
    double fiber_norm = 0.0;    ///< sqrt(FK); vanishes at the interval endpoints.
};

Slice3 slice3_geometry(const FamilySpec& spec, double v);

/// Dreibein of the constant-v slice in coordinates (theta, phi, tau).
FrameField slice3_frame(const FamilySpec& spec, double v);

/*! Contact data of the constant-v leaf for the contact form
    Omega = u dphi + v dtau induced by the Liouville field u d_u + v d_v.
    The Reeb field U is normalized so Omega(U) = 1, and the Beltrami
    eigenvalue is the constant lambda in d Omega = lambda i_U Vol with the
    symplectically normalized leaf volume Vol = -v Omega ^ dOmega; it
    equals -1/v for every member of the family. */
struct ContactData {
    double omega_of_reeb = 0.0;        ///< Omega(U); equals 1.
    double du_domega_residual = 0.0;   ///< max |i_U dOmega| component.
    double beltrami_eigenvalue = 0.0;  ///< -1/v.
    double beltrami_spread = 0.0;      ///< max deviation of the pointwise ratio.
    std::array<double, 3> reeb{};      ///< U components in (theta, phi, tau).
    double liouville_residual = 0.0;   ///< max |L_L K - K| component.
};

ContactData contact_reeb_beltrami(const FamilySpec& spec, double v);

/*! Monopole strength of a U(1) connection a(theta) dphi on S^2:
    (1/2pi) integral of the curvature = a(pi) - a(0), rounded to the nearest
    integer; throws std::domain_error if the residual exceeds 1e-10. */
int monopole_flux_of_connection(const std::function<double(double)>& a_phi);

/// Flux of the family's fibration connection (1 - cos theta) dphi; always 2.
int monopole_flux(const FamilySpec& spec);

}  // namespace toric
