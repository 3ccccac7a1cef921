// SPDX-License-Identifier: MIT
/*! \file  forms21.hpp
    \brief The (2,1)-form obstruction: assemble the generic (2,1)-form on
           the canonical bundle in real symplectic coordinates, impose the
           20 (anti)self-duality relations on its 18 real parameter
           functions, and compute the rank of the resulting linear system.
*/
#pragma once

#include <array>

#include <boost/multiprecision/cpp_int.hpp>

#include "toric/linalg.hpp"

namespace toric {

using Rational = boost::multiprecision::cpp_rational;

/// Exact moment-space sample (u, v, w) with rational entries.
struct RationalPoint {
    Rational u, v, w;
};

/*! Exact 3x3 Hessian of the total symplectic potential at a rational point,
    for rational interval data (l1, l2).  All entries are rational functions
    of the moments, since the fiber constant c = 3 (l1 + l2) / q and the
    boundary profile 1/FK are rational.  Throws std::domain_error on the
    zero loci of the denominators. */
Matrix<Rational> rational_hessian(const Rational& l1, const Rational& l2,
                                  const RationalPoint& pt);

/// Floating-point Hessian rows: row i holds the (du, dv, dw) coefficients
/// of the closed one-form omega^i defining the complex differential
/// dz^i = omega^i + i dTheta^i with angles Theta = (phi, tau, chi).
Matrix<double> omega_forms(double l1, double l2, const std::array<double, 3>& moment);

/*! The 20x18 duality system M(sign) acting on the parameter vector
    (f1..f9, g1..g9): row I is the residual of the I-th relation
    Y_I -/+ s_I X_{sigma(I)} between the real and imaginary components of
    the assembled 3-form, in the component order
      (u,v,w), (u,v,phi), (u,v,tau), (u,v,chi), (u,w,phi), (u,w,tau),
      (u,w,chi), (u,tau,phi), (u,phi,chi), (u,tau,chi), then the same with
      u -> v, then w-triples, then (tau,phi,chi).
    `sign` = +1 selects self-duality, -1 anti-self-duality. */
Matrix<Rational> duality_matrix_exact(const Rational& l1, const Rational& l2,
                                      const RationalPoint& pt, int sign);

/// Floating-point duality system at the same kind of sample.
Matrix<double> duality_matrix(double l1, double l2, const std::array<double, 3>& moment,
                              int sign);

/// Exact rank by fraction-free Gaussian elimination.
int rational_rank(Matrix<Rational> m);

/// Numerical rank: singular values above tol * (largest singular value).
int float_rank(const Matrix<double>& m, double tol = 1e-10);

/// Result of imposing the duality relations at one sample.
struct RankReport {
    int rank = 0;
    int nullity = 0;  ///< 18 - rank; nonzero would admit nontrivial forms.
};

/// Exact-arithmetic rank of the duality system.
RankReport assemble_and_rank_exact(const Rational& l1, const Rational& l2,
                                   const RationalPoint& pt, int sign);

/// Floating SVD rank of the duality system.
RankReport assemble_and_rank(double l1, double l2, const std::array<double, 3>& moment,
                             int sign);

}  // namespace toric
