// SPDX-License-Identifier: MIT
/*! \file  sasaki.hpp
    \brief The Sasaki-Einstein 5-metric over the Kahler-Einstein base, the
           coordinate map identifying the two descriptions, the Ricci-flat
           metric cone, and the invariant comparison showing the cone and the
           canonical-bundle Ricci-flat metric are inequivalent.
*/
#pragma once

#include <array>
#include <ostream>
#include <vector>

#include "toric/calabi.hpp"
#include "toric/curvature.hpp"
#include "toric/linalg.hpp"

namespace toric {

/*! Parameters of the Sasaki-Einstein 5-metric family together with the data
    of the map onto the Kahler-Einstein base description:
      a = (3 beta k^2 + 4)/4,  c = 1,  y = 1 - k v / 2,
      psi = -tau - phi,  xi = p chi + tau + phi .
    Here beta = -l1^2 l2^2 / (l1^2 + l1 l2 + l2^2) is the constant term of
    the fiber profile (not the upper interval endpoint), and the flux
    constant p = k (l1^2 + l1 l2 + l2^2)/(3 (l1 + l2)) equals 1 for every
    member.  Only c = 1 is exercised; general c is kept for documentation. */
struct SasakiParameters {
    double a = 0.0;
    double c = 1.0;
    double k = 0.0;     ///< Einstein constant of the base member.
    double beta = 0.0;  ///< -l1^2 l2^2 / q with q = l1^2 + l1 l2 + l2^2.
    double p = 1.0;     ///< flux constant of the xi rescaling; always 1.
    double l1 = 0.0, l2 = 0.0;
};

SasakiParameters sasaki_parameters(double l1, double l2);

/*! The 5-metric in the original coordinates (y, theta, phi, psi, xi):
      ds^2 = (1-cy) dy^2 / (2 D) + D (c cos(theta) dphi + dpsi)^2 / (18 (1-cy))
             + (1-cy)(dtheta^2 + sin^2 dphi^2)/6 + Phi^2/9 ,
      D = a + 2 c y^3 - 3 y^2,
      Phi = dxi + y (dpsi + c cos(theta) dphi) - cos(theta) dphi .
    Throws std::domain_error when D (1-cy) <= 0. */
Matrix<double> se5_metric_raw(const SasakiParameters& par, const std::vector<double>& point);

/// Components of Phi_SE = dchi + (k/2) v [dtau + (1-cos theta) dphi] in the
/// mapped coordinates (v, theta, phi, tau, chi).
std::array<double, 5> phi_se(double l1, double l2, const std::vector<double>& point);

/*! The same 5-metric in the mapped coordinates (v, theta, phi, tau, chi);
    equals (k/12) times se5_metric_hatted and, entrywise, the pullback of
    se5_metric_raw through the coordinate map. */
Matrix<double> se5_metric(double l1, double l2, const std::vector<double>& point);

/// Hatted normalization: ds^2_{KE4} + (4/(3k)) Phi_SE^2.
Matrix<double> se5_metric_hatted(double l1, double l2, const std::vector<double>& point);

/// Orthonormal coframe of the hatted 5-metric: the base vierbein extended by
/// sqrt(4/(3k)) Phi_SE, in coordinates (v, theta, phi, tau, chi).
FrameField se5_frame(double l1, double l2);

/// Intrinsic (half-normalized) Ricci of the hatted 5-metric in frame
/// indices; Einstein with value (k/6) on the diagonal.
Matrix<double> se5_ricci_intrinsic(double l1, double l2, const std::vector<double>& point);

/*! Orthonormal coframe of the metric cone in coordinates
    (v, theta, phi, tau, chi, R):
      E1 = R e3, E2 = R e4, E3 = R e1, E4 = R e2,
      E5 = R sqrt(4/(3k)) Phi_SE, E6 = 2 sqrt(3/k) dR ,
    with e1..e4 the base vierbein.  Ricci-flat away from the apex. */
FrameField cone_frame(double l1, double l2);

/// Cone metric sum_a E^a (x) E^a as a 6x6 matrix at (point5, radius).
/// Throws std::domain_error unless radius > 0.
Matrix<double> cone_metric(double l1, double l2, double radius,
                           const std::vector<double>& point);

/// Max |Ric_ab| of the cone in frame indices at (point5, radius).
double cone_ricci_residual(double l1, double l2, double radius,
                           const std::vector<double>& point);

/*! One column of the polynomial-invariant comparison, in the table's
    normalization: the Weyl contractions use the half-normalized Riemann
    tensor (quadratic / cubic / quartic entries are 1/4, 1/8, 1/16 of the
    kernel contractions), while the 6-form densities Ch and E are reported
    as computed. */
struct InvariantRecord {
    double ch = 0.0;
    double e = 0.0;
    double quad1 = 0.0;
    double cub1 = 0.0;
    double cub2 = 0.0;
    double cub3 = 0.0;
    double quart1 = 0.0;
    double quart2 = 0.0;
};

InvariantRecord invariant_record(const CurvatureBundle& curv);

/// Closed-form table column for the (1, 2) cone: Ch = E = 0 and rational
/// functions of (v, R).  Valid for that member only.
InvariantRecord cone_table_reference(double v, double radius);

/// Closed-form table column for the (1, 2) canonical-bundle metric:
/// Ch = 0, E and the Weyl contractions rational in (v, w).  Being rational,
/// it extends beyond the wedge where the coframe is real.
InvariantRecord calabi_table_reference(double v, double w);

/// Invariants of the cone at 5-point (v, theta, phi, tau, chi) and radius.
InvariantRecord cone_invariant_record(double l1, double l2, double radius,
                                      const std::vector<double>& point);

/// Invariants of the canonical-bundle Ricci-flat metric at the 6-point
/// (theta, v, w, phi, tau, chi), via the reordered coframe.
InvariantRecord calabi_invariant_record(const TotalSpacePotential& pot,
                                        const std::vector<double>& point);

/// Side-by-side sample of the comparison table at fiber point (v, w) with
/// cone radius `radius`.
struct InvariantTableRow {
    double v = 0.0, w = 0.0, radius = 0.0;
    InvariantRecord cone;
    InvariantRecord calabi;
};

InvariantTableRow invariant_table_row(double l1, double l2, double v, double w,
                                      double radius);

/// CSV in the table's row order (Ch, E, Quad1, Cub1..3, Quart1, Quart2) with
/// columns invariant, cone, calabi.
void write_invariant_table_csv(std::ostream& out, const InvariantTableRow& row);

/*! Inequivalence witness: solve R^4 from equality of the quadratic
    invariant, then report the relative discrepancy of the cubic one.  When
    both quadratic invariants vanish (e.g. two flat metrics) no witness
    exists and `matched` is false. */
struct InequivalenceReport {
    bool matched = false;   ///< quadratic matching was feasible
    double radius4 = 0.0;   ///< R^4 solving Quad1(cone) = Quad1(calabi)
    double cone_cub1 = 0.0;
    double calabi_cub1 = 0.0;
    double discrepancy = 0.0;  ///< relative gap of the cubic invariant
};

/// Matching step of the witness: solve R^4 from the quadratic invariants
/// (coneUnit evaluated at R = 1) and compare the cubic ones.
InequivalenceReport match_invariants(const InvariantRecord& coneUnit,
                                     const InvariantRecord& target);

InequivalenceReport inequivalence_witness(double l1, double l2, double v, double w);

}  // namespace toric
