// SPDX-License-Identifier: MIT
/*! \file  geodesics.hpp
    \brief Fully integrable geodesic flow of the 4-metric family: Hamiltonian,
           cyclic momenta, Carter constant, adaptive integration, reduction to
           quadratures, and the irrotational closed form.
*/
#pragma once

#include <functional>
#include <iosfwd>
#include <vector>

#include "toric/family.hpp"

namespace toric {

/*! Phase-space point of the geodesic system in coordinates
    (v, theta, phi, tau).  The azimuthal momenta ell = p_phi and m = p_tau
    are first integrals and are stored as labels of the trajectory. */
struct GeodesicState {
    double v = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double tau = 0.0;
    double p_v = 0.0;
    double p_theta = 0.0;
    double ell = 0.0;
    double m = 0.0;
};

/// Full Hamiltonian H = (1/2)(p_tau^2/FK + FK p_v^2
/// + (csc^2 theta [(cos theta - 1) p_tau + p_phi]^2 + p_theta^2)/v);
/// equals (1/2) g^{ij} p_i p_j.  Throws at the theta poles with angular terms.
double hamiltonian(const FamilySpec& spec, const GeodesicState& state);

/// Reduced (v, theta) Hamiltonian with the cyclic momenta frozen at
/// (ell, m); numerically identical to `hamiltonian` on consistent states.
double reduced_hamiltonian(const FamilySpec& spec, const GeodesicState& state);

/*! Carter constant C = csc^2 theta (m cos theta - m + ell)^2 + p_theta^2,
    the theta-separation constant; it Poisson-commutes with the reduced
    Hamiltonian and is conserved along geodesics.  The irrotational closed
    forms below use the sign convention K = -C of the orbit label. */
double carter(const GeodesicState& state);

/// Central-difference Poisson bracket {C, H_red} on the reduced phase
/// space; vanishes identically.
double poisson_bracket_carter_h(const FamilySpec& spec, const GeodesicState& state,
                                double h = 1e-5);

/// One integration sample: arc length plus the full state.
struct TrajectorySample {
    double s = 0.0;
    GeodesicState state;
};

/*! Adaptive embedded Runge-Kutta (order 8(7)) integration of the full
    Hamilton equations up to arc length sMax, sampling about `samples`
    points.  Throws std::domain_error on an initial point at a coordinate
    pole or outside the moment interval. */
std::vector<TrajectorySample> integrate_geodesic(const FamilySpec& spec,
                                                 const GeodesicState& initial, double sMax,
                                                 double tol = 1e-12, int samples = 256);

/// Max drift of (H_red, C) over a trajectory, relative to max(1, |E|, |K|).
double conserved_drift(const FamilySpec& spec, const std::vector<TrajectorySample>& traj);

/// Residual of the full second-order geodesic equation
/// (coordinate acceleration vs Christoffel force) along a trajectory sample,
/// measured by central differences on neighbouring samples.
double geodesic_equation_residual(const FamilySpec& spec,
                                  const std::vector<TrajectorySample>& traj);

/*! Quadrature evaluators of the separated orbit relation
    Lambda(theta) = integral dtheta / sqrt(C - X(theta)),
    Sigma(v) = integral dv / (sqrt(v) sqrt(FK (2 v E - C) - m^2 v)),
    with X(theta) = csc^2 theta (m cos theta - m + ell)^2; on solutions
    theta = Lambda^{-1}(Sigma(v)) along monotone branches. */
struct OrbitQuadratures {
    std::function<double(double, double)> lambda;  ///< Lambda(theta0, theta1)
    std::function<double(double, double)> sigma;   ///< Sigma(v0, v1)
};

OrbitQuadratures quadratures(const FamilySpec& spec, double ell, double m, double c,
                             double energy);

/// Closed-form antiderivative of the right-ascension quadrature with labels
/// (ell, m, K), an inverse-hyperbolic-tangent expression; its
/// theta-derivative equals 1/sqrt(2 (X(theta) - K)).
double lambda_closed_form(double theta, double ell, double m, double k);

/// Irrotational (ell = m = 0) right-ascension angle
/// theta(v) = integral_{vStart}^{v} sqrt(-K) ds / (sqrt(s) sqrt(FK (K + 2 s E)))
/// with the paper label K = -C < 0.
double irrotational_theta(const FamilySpec& spec, double v, double k, double energy,
                          double vStart);

/// Closed form of irrotational_theta for the Einstein member (1, 2), via the
/// incomplete elliptic integral F; antiderivative form (difference two values
/// for a definite angle).
double irrotational_theta_ke12_closed(double v, double k, double energy);

/// Incomplete elliptic integral F(phi | m) for any real parameter m
/// (negative-parameter and reciprocal-modulus transformations applied).
double elliptic_f(double phi, double m);

/// Irrotational orbit samples {(u, v)} with u = (1 - cos FM(v)) v, the angle
/// integrated from vMin; all points lie in the closed moment polytope.
std::vector<std::pair<double, double>> orbit_points(const FamilySpec& spec, double k,
                                                    double energy, int n);

/// CSV export with header s,v,theta,phi,tau,p_v,p_theta,h_red,carter.
void write_trajectory_csv(std::ostream& out, const FamilySpec& spec,
                          const std::vector<TrajectorySample>& traj);

}  // namespace toric
