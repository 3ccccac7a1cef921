// SPDX-License-Identifier: MIT
/**
    \file
    \brief Catalog of the one-function metric family: each member is defined
           by a profile function FK(v) on a moment interval [vMin, vMax].

    The catalog covers the seven closed-form choices used throughout the
    project: the Kronheimer metric on the second Hirzebruch surface, its
    weighted-projective blow-down WP[1,1,2], the four-parameter extremal
    family, the two-parameter Kahler-Einstein subfamily and its degenerate
    vMin = 0 member, the flat cone, and the extremal metric on the Hirzebruch
    surface obtained from the Ricci-form period constraints.
*/

#pragma once

#include <array>
#include <complex>
#include <string>

#include "toric/jet.hpp"

namespace toric {

enum class FamilyKind {
    KronheimerF2,     ///< one parameter alpha > 0
    WP112,            ///< weighted projective plane WP[1,1,2] (alpha -> 0 blow-down)
    ExtremalGeneral,  ///< four integration constants (A, B, C, D)
    KE,               ///< Kahler-Einstein, parameters 0 <= l1 < l2
    KE0,              ///< Kahler-Einstein with l1 = 0 (spindle fiber)
    Cone,             ///< FK(v) = v, flat C^2/Z_2
    F2Extremal,       ///< extremal metric on F_2, parameters 0 < a < b
};

/// Einstein constant and companions of a Kahler-Einstein member.
struct KEParameters {
    double k = 0.0;        ///< Einstein constant: Ricci form = (k/4) * Kahler form
    double beta = 0.0;     ///< integration constant of the Einstein condition
    double lambda3 = 0.0;  ///< third root of the cubic, -l1*l2/(l1+l2)
};

/// One member of the catalog together with its moment interval.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Cone;
    double alpha = 0.0;                          ///< KronheimerF2
    double A = 0.0, B = 0.0, C = 0.0, D = 0.0;   ///< ExtremalGeneral coefficients
    double l1 = 0.0, l2 = 0.0;                   ///< KE / KE0 roots
    double a = 0.0, b = 0.0;                     ///< F2Extremal roots
    double vMin = 0.0;
    double vMax = 0.0;  ///< +infinity for the cone

    [[nodiscard]] bool finiteInterval() const { return std::isfinite(vMax); }
    [[nodiscard]] std::string name() const;
};

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

FamilySpec kronheimer_f2(double alpha);
FamilySpec wp112();
FamilySpec cone();
FamilySpec ke0_family(double l2);

/// Kahler-Einstein member for 0 <= l1 < l2 (degenerates to ke0 when l1 = 0).
std::pair<FamilySpec, KEParameters> ke_family(double l1, double l2);

/// General integral of the fourth-order extremality equation; the moment
/// interval is derived from the positivity region of the quartic numerator.
FamilySpec extremal_general(double A, double B, double C, double D);

/// Extremal metric on F_2 built from the Ricci-form period constraints;
/// returns the two remaining quartic roots (possibly complex) and the spec.
struct ExtremalF2Solution {
    std::complex<double> mu1, mu4;
    FamilySpec spec;
};
ExtremalF2Solution solve_extremal_f2(double a, double b);

/// (A, B, C, D) coefficients of the F2Extremal member, as an extremal-family view.
std::array<double, 4> extremal_f2_coefficients(double a, double b);

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

/// Evaluate FK on an arbitrary jet (the argument carries the expansion point
/// and the truncation order); this is the single code path used by every
/// curvature, quadrature and geodesic routine.
Jet fk(const FamilySpec& spec, const Jet& v);

/// Univariate jet of FK at v with derivatives up to `order`.
Jet fk_jet(const FamilySpec& spec, double v, int order = kMaxJetOrder);

/// Plain value.
double fk_value(const FamilySpec& spec, double v);

/// Second derivative of the boundary potential, f(v) = (2v/FK - 1)/(2v).
Jet boundary_f(const FamilySpec& spec, const Jet& v);

/// Scalar curvature of the 4-metric, R_s(v) = -(v FK'' + 2 FK' - 2)/(2v),
/// returned as a jet of order `order` (order <= 2 because FK jets stop at 4).
Jet scalar_curvature_jet(const FamilySpec& spec, double v, int order = 2);

/// Residual of the fourth-order extremality equation at v.
double extremality_residual(const FamilySpec& spec, double v);

/// True iff d^2 R_s / dv^2 vanishes (|residual| < tol) on a 200-point interior grid.
bool is_extremal(const FamilySpec& spec, double tol = 1e-8);

// ---------------------------------------------------------------------------
// Polytope
// ---------------------------------------------------------------------------

/// The trapezoid 0 <= u <= 2v, vMin <= v <= vMax (triangle when vMin = 0).
struct Polytope {
    double vMin = 0.0, vMax = 0.0;
    [[nodiscard]] bool contains(double u, double v, double margin = 0.0) const
    {
        return v >= vMin - margin && v <= vMax + margin && u >= -margin && u <= 2.0 * v + margin;
    }
    [[nodiscard]] bool degenerate() const { return vMin == 0.0; }
};

Polytope polytope(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Serialization ({kind, params} JSON records; schema documented in the CLI)
// ---------------------------------------------------------------------------

std::string to_json(const FamilySpec& spec);
FamilySpec spec_from_json(const std::string& text);

/// Parse the compact CLI form, e.g. "KE:1,2", "KronheimerF2:1", "Cone",
/// "Extremal:0.5,0,0.2,0", "F2Extremal:1,2", "WP112", "KE0:4".
FamilySpec spec_from_string(const std::string& text);

}  // namespace toric
