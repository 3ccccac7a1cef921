// SPDX-License-Identifier: MIT
/*! \file  curvature.hpp
    \brief Numeric differential-geometry engine: orthonormal-frame and
           metric (Christoffel) curvature pipelines, Laplace-Beltrami
           operator, Weyl invariants and 6-form curvature densities.

    All derivatives are obtained with forward-mode jets, so every routine
    takes callables that evaluate frame / metric / scalar data as jets in
    the coordinates, expanded at the requested point.
*/
#pragma once

#include <functional>
#include <vector>

#include "toric/jet.hpp"
#include "toric/linalg.hpp"

namespace toric {

/*! Callable returning the coefficient matrix E with entry (a, mu) equal to
    the component of the frame 1-form e^a along dx^mu, as jets in the
    coordinates expanded at `point` to the requested order. */
using FrameCoefficients =
    std::function<Matrix<Jet>(const std::vector<double>& point, int order)>;

/// Callable returning the symmetric metric component matrix g_{mu nu} as jets.
using MetricCoefficients =
    std::function<Matrix<Jet>(const std::vector<double>& point, int order)>;

/// Callable returning a scalar function as a jet in the coordinates.
using ScalarFunction =
    std::function<Jet(const std::vector<double>& point, int order)>;

/// An orthonormal coframe e^a = E^a_mu dx^mu on an n-dimensional chart.
struct FrameField {
    int dim = 0;
    FrameCoefficients coeffs;
};

/*! \brief Point data of the Levi-Civita curvature in an orthonormal frame.

    Conventions: the torsion-free spin connection solves
    d e^a + omega^{ab} ^ e^b = 0 with omega^{ab} = -omega^{ba}, the
    curvature 2-form is R^{ab} = d omega^{ab} + omega^{ac} ^ omega^{cb},
    and components are stored with the antisymmetrized-pair normalization
    R^{ab} = (1/2) R^{ab}_{cd} e^c ^ e^d.  Frame indices are raised and
    lowered with the Euclidean delta, so riemann(a,b,c,d) = R_{abcd}. */
struct CurvatureBundle {
    int dim = 0;
    std::vector<double> riemann;  ///< R_{abcd}, row-major over dim^4 entries.
    std::vector<double> spin;     ///< omega_{ab|c} with omega^{ab} = omega_{ab|c} e^c.
    Matrix<double> ricci_flat;    ///< Ric_{ab} = sum_c R_{cacb} (frame indices).
    Matrix<double> ricci_coord;   ///< Ric_{mu nu} (coordinate indices).
    Matrix<double> frame;         ///< E^a_mu evaluated at the point.
    double scalar = 0.0;          ///< Scalar curvature.

    [[nodiscard]] double r(int a, int b, int c, int d) const
    {
        const int n = dim;
        return riemann[static_cast<std::size_t>(((a * n + b) * n + c) * n + d)];
    }
    [[nodiscard]] double omega(int a, int b, int c) const
    {
        const int n = dim;
        return spin[static_cast<std::size_t>((a * n + b) * n + c)];
    }
};

/*! Curvature of the metric sum_a e^a (x) e^a via the structure equations.
    Throws std::domain_error when the frame matrix is singular at `point`. */
CurvatureBundle frame_curvature(const FrameField& frame, const std::vector<double>& point);

/*! Curvature of a metric given by its component matrix, via Christoffel
    symbols.  Frame-index data are produced with the Cholesky coframe of g.
    Independent of frame_curvature; the two must agree on common geometries. */
CurvatureBundle metric_curvature(const MetricCoefficients& g, int dim,
                                 const std::vector<double>& point);

/// (1/sqrt(det g)) d_mu ( sqrt(det g) g^{mu nu} d_nu f ) at `point`.
double laplace_beltrami(const MetricCoefficients& g, int dim, const ScalarFunction& f,
                        const std::vector<double>& point);

/// Scalar polynomial invariants of the Weyl tensor in frame indices.
struct WeylInvariants {
    double quad1 = 0.0;   ///< W[abij] W[ijab]
    double cub1 = 0.0;    ///< W[abij] W[ijpq] W[pqab]
    double cub2 = 0.0;    ///< W[ijpq] W[rpsq] W[rsij]
    double cub3 = 0.0;    ///< W[ijpq] W[rpsq] W[risj]
    double quart1 = 0.0;  ///< W[abij] W[ijpq] W[pqmn] W[mnab]
    double quart2 = 0.0;  ///< W[ijpq] W[prqs] W[rmsn] W[mnij]
};

/*! Contractions listed above, evaluated on the Weyl projection of the
    stored Riemann tensor.  With `project_weyl = false` the raw Riemann
    tensor is contracted instead (identical on Ricci-flat geometries). */
WeylInvariants weyl_invariants(const CurvatureBundle& curv, bool project_weyl = true);

/// Densities of the 6-form curvature polynomials relative to the volume form.
struct SixFormDensities {
    double ch = 0.0;  ///< Tr(R ^ R ^ R) / Vol; vanishes identically.
    double e = 0.0;   ///< R^{ab} ^ R^{cd} ^ R^{fg} eps_{abcdfg} / Vol.
};

/// Requires dim == 6; throws std::invalid_argument otherwise.
SixFormDensities curvature_6forms(const CurvatureBundle& curv);

/// Max over indices of |R_{a[bcd]}| (first Bianchi identity residual).
double bianchi_residual(const CurvatureBundle& curv);

/// Weyl projection of the stored Riemann tensor, same storage layout.
std::vector<double> weyl_tensor(const CurvatureBundle& curv);

}  // namespace toric
