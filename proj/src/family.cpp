// SPDX-License-Identifier: MIT
/**
    \file
    \brief Implementation of the profile-function catalog.
*/

#include "toric/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>
#include <unsupported/Eigen/Polynomials>

namespace toric {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Positivity interval of FK for the extremal family: the quartic numerator
/// -16 D v^4 + 8 C v^3 + 4 v^2 - 2 B v - A must be positive between two
/// adjacent nonnegative real roots.
std::pair<double, double> extremal_interval(double A, double B, double C, double D)
{
    // Polynomial coefficients in ascending order for Eigen's solver.
    Eigen::VectorXd coeffs(5);
    coeffs << -A, -2.0 * B, 4.0, 8.0 * C, -16.0 * D;
    int degree = 4;
    while (degree > 0 && coeffs[degree] == 0.0) --degree;
    if (degree == 0) throw std::domain_error("extremal_general: numerator degenerated to a constant");

    std::vector<double> roots;
    Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
    solver.compute(coeffs.head(degree + 1).eval());
    for (const auto& r : solver.roots())
        if (std::abs(r.imag()) < 1e-10 * (1.0 + std::abs(r.real())) && r.real() >= -1e-12)
            roots.push_back(std::max(0.0, r.real()));
    std::sort(roots.begin(), roots.end());

    const auto numerator = [&](double v) {
        return -A - 2.0 * B * v + 4.0 * v * v + 8.0 * C * v * v * v - 16.0 * D * v * v * v * v;
    };
    // Pick the first adjacent pair of roots bracketing a positivity region.
    for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
        const double lo = roots[i], hi = roots[i + 1];
        if (hi - lo < 1e-12) continue;
        if (numerator(0.5 * (lo + hi)) > 0.0) return {lo, hi};
    }
    // Unbounded positivity region (e.g. all four constants zero -> the cone).
    if (!roots.empty() && numerator(roots.back() + 1.0) > 0.0 &&
        numerator(2.0 * roots.back() + 10.0) > 0.0)
        return {roots.back(), kInf};
    if (roots.empty() && numerator(1.0) > 0.0) return {0.0, kInf};
    throw std::domain_error("extremal_general: no positivity interval with nonnegative endpoints");
}

}  // namespace

std::string FamilySpec::name() const
{
    std::ostringstream os;
    switch (kind) {
        case FamilyKind::KronheimerF2: os << "KronheimerF2(alpha=" << alpha << ")"; break;
        case FamilyKind::WP112: os << "WP112"; break;
        case FamilyKind::ExtremalGeneral:
            os << "Extremal(A=" << A << ",B=" << B << ",C=" << C << ",D=" << D << ")";
            break;
        case FamilyKind::KE: os << "KE(" << l1 << "," << l2 << ")"; break;
        case FamilyKind::KE0: os << "KE0(" << l2 << ")"; break;
        case FamilyKind::Cone: os << "Cone"; break;
        case FamilyKind::F2Extremal: os << "F2Extremal(" << a << "," << b << ")"; break;
    }
    return os.str();
}

FamilySpec kronheimer_f2(double alpha)
{
    if (alpha <= 0.0) throw std::domain_error("kronheimer_f2: alpha must be positive");
    FamilySpec s;
    s.kind = FamilyKind::KronheimerF2;
    s.alpha = alpha;
    s.vMin = 9.0 * alpha / 32.0;
    s.vMax = 9.0 * (3.0 * alpha + 4.0) / 32.0;
    return s;
}

FamilySpec wp112()
{
    FamilySpec s;
    s.kind = FamilyKind::WP112;
    s.vMin = 0.0;
    s.vMax = 9.0 / 8.0;
    return s;
}

FamilySpec cone()
{
    FamilySpec s;
    s.kind = FamilyKind::Cone;
    s.vMin = 0.0;
    s.vMax = kInf;
    return s;
}

FamilySpec ke0_family(double l2)
{
    if (l2 <= 0.0) throw std::domain_error("ke0_family: l2 must be positive");
    FamilySpec s;
    s.kind = FamilyKind::KE0;
    s.l2 = l2;
    s.vMin = 0.0;
    s.vMax = l2;
    return s;
}

std::pair<FamilySpec, KEParameters> ke_family(double l1, double l2)
{
    if (!(0.0 <= l1 && l1 < l2)) throw std::domain_error("ke_family: need 0 <= l1 < l2");
    FamilySpec s;
    if (l1 == 0.0) {
        s = ke0_family(l2);
    } else {
        s.kind = FamilyKind::KE;
        s.l1 = l1;
        s.l2 = l2;
        s.vMin = l1;
        s.vMax = l2;
    }
    const double q = l1 * l1 + l1 * l2 + l2 * l2;
    KEParameters p;
    p.k = 3.0 * (l1 + l2) / q;
    p.beta = -(l1 * l1 * l2 * l2) / q;
    p.lambda3 = -(l1 * l2) / (l1 + l2);
    return {s, p};
}

FamilySpec extremal_general(double A, double B, double C, double D)
{
    FamilySpec s;
    s.kind = FamilyKind::ExtremalGeneral;
    s.A = A;
    s.B = B;
    s.C = C;
    s.D = D;
    std::tie(s.vMin, s.vMax) = extremal_interval(A, B, C, D);
    return s;
}

std::array<double, 4> extremal_f2_coefficients(double a, double b)
{
    const double den = a * a * a + 3.0 * a * a * b - 3.0 * a * b * b - b * b * b;
    return {-4.0 * a * a * b * b * (3.0 * a + b) / den, 8.0 * a * a * a * b / den,
            -2.0 * a * a / den, (3.0 * a + b) / (4.0 * (-den))};
}

ExtremalF2Solution solve_extremal_f2(double a, double b)
{
    if (!(0.0 < a && a < b)) throw std::domain_error("solve_extremal_f2: need 0 < a < b");
    ExtremalF2Solution sol;
    const double disc =
        a * a * a * a - 44.0 * a * a * a * b - 10.0 * a * a * b * b + 4.0 * a * b * b * b + b * b * b * b;
    const std::complex<double> root = std::sqrt(std::complex<double>(disc, 0.0));
    const double denom = 6.0 * a + 2.0 * b;
    sol.mu1 = (a * a - (b * b + root) - 4.0 * a * b) / denom;
    sol.mu4 = (a * a - (b * b - root) - 4.0 * a * b) / denom;
    sol.spec.kind = FamilyKind::F2Extremal;
    sol.spec.a = a;
    sol.spec.b = b;
    sol.spec.vMin = a;
    sol.spec.vMax = b;
    return sol;
}

// ---------------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------------

Jet fk(const FamilySpec& spec, const Jet& v)
{
    switch (spec.kind) {
        case FamilyKind::KronheimerF2: {
            const double al = spec.alpha;
            const Jet v2 = v * v;
            const Jet num = (1024.0 * v2 - 81.0 * al * al) * (32.0 * v - 9.0 * (3.0 * al + 4.0));
            const Jet den = 16.0 * (81.0 * al * al + 1024.0 * v2 - 576.0 * (3.0 * al + 4.0) * v);
            return num / den;
        }
        case FamilyKind::WP112:
            return v * (8.0 * v - 9.0) / (4.0 * v - 9.0);
        case FamilyKind::ExtremalGeneral: {
            const Jet v2 = v * v;
            return (-spec.A + 8.0 * spec.C * v2 * v - 16.0 * spec.D * v2 * v2 + 4.0 * v2 -
                    2.0 * spec.B * v) /
                   (4.0 * v);
        }
        case FamilyKind::KE: {
            const double l1 = spec.l1, l2 = spec.l2;
            const double q = l1 * l1 + l1 * l2 + l2 * l2;
            return -(v - l1) * (v - l2) * (l2 * v + l1 * (l2 + v)) / (q * v);
        }
        case FamilyKind::KE0:
            return v * (spec.l2 - v) / spec.l2;
        case FamilyKind::Cone:
            return v;
        case FamilyKind::F2Extremal: {
            const double a = spec.a, b = spec.b;
            const double den = a * a * a + 3.0 * a * a * b - 3.0 * a * b * b - b * b * b;
            const Jet num = (a - v) * (b - v) *
                            (a * a * (3.0 * b - v) + a * (b * b + 4.0 * b * v + 3.0 * (v * v)) +
                             b * (v * (b + v)));
            return num / (v * den);
        }
    }
    throw std::logic_error("fk: unhandled family kind");
}

Jet fk_jet(const FamilySpec& spec, double v, int order)
{
    return fk(spec, Jet::variable(v, 0, 1, order));
}

double fk_value(const FamilySpec& spec, double v)
{
    // Endpoints are exact roots of the closed forms; evaluate directly.
    return fk(spec, Jet::constant(v, 1, 0)).value();
}

Jet boundary_f(const FamilySpec& spec, const Jet& v)
{
    return (2.0 * v / fk(spec, v) - 1.0) / (2.0 * v);
}

Jet scalar_curvature_jet(const FamilySpec& spec, double v, int order)
{
    if (order > kMaxJetOrder - 2) throw std::invalid_argument("scalar_curvature_jet: order too high");
    // FK'' as a univariate jet of the requested order, read from the order-4 jet.
    const Jet fk4 = fk_jet(spec, v, order + 2);
    std::array<double, kMaxJetOrder + 1> d2{};
    for (int k = 0; k <= order; ++k) d2[static_cast<std::size_t>(k)] = fk4.deriv(k + 2);
    std::array<double, kMaxJetOrder + 1> d1{};
    for (int k = 0; k <= order; ++k) d1[static_cast<std::size_t>(k)] = fk4.deriv(k + 1);
    const Jet x = Jet::variable(v, 0, 1, order);
    const Jet fkp = x.compose(d1);   // FK'
    const Jet fkpp = x.compose(d2);  // FK''
    return -(x * fkpp + 2.0 * fkp - 2.0) / (2.0 * x);
}

double extremality_residual(const FamilySpec& spec, double v)
{
    const Jet rs = scalar_curvature_jet(spec, v, 2);
    return rs.deriv(2);
}

bool is_extremal(const FamilySpec& spec, double tol)
{
    const double lo = spec.vMin, hi = spec.finiteInterval() ? spec.vMax : spec.vMin + 10.0 + 1.0;
    const int n = 200;
    for (int i = 1; i < n; ++i) {
        const double v = lo + (hi - lo) * i / n;
        if (std::abs(extremality_residual(spec, v)) > tol) return false;
    }
    return true;
}

Polytope polytope(const FamilySpec& spec) { return Polytope{spec.vMin, spec.vMax}; }

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {
const char* kind_name(FamilyKind k)
{
    switch (k) {
        case FamilyKind::KronheimerF2: return "KronheimerF2";
        case FamilyKind::WP112: return "WP112";
        case FamilyKind::ExtremalGeneral: return "Extremal";
        case FamilyKind::KE: return "KE";
        case FamilyKind::KE0: return "KE0";
        case FamilyKind::Cone: return "Cone";
        case FamilyKind::F2Extremal: return "F2Extremal";
    }
    return "?";
}
}  // namespace

std::string to_json(const FamilySpec& spec)
{
    nlohmann::json j;
    j["kind"] = kind_name(spec.kind);
    nlohmann::json p = nlohmann::json::object();
    switch (spec.kind) {
        case FamilyKind::KronheimerF2: p["alpha"] = spec.alpha; break;
        case FamilyKind::ExtremalGeneral:
            p["A"] = spec.A;
            p["B"] = spec.B;
            p["C"] = spec.C;
            p["D"] = spec.D;
            break;
        case FamilyKind::KE:
            p["lambda1"] = spec.l1;
            p["lambda2"] = spec.l2;
            break;
        case FamilyKind::KE0: p["lambda2"] = spec.l2; break;
        case FamilyKind::F2Extremal:
            p["a"] = spec.a;
            p["b"] = spec.b;
            break;
        default: break;
    }
    j["params"] = p;
    return j.dump();
}

FamilySpec spec_from_json(const std::string& text)
{
    const nlohmann::json j = nlohmann::json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    const nlohmann::json p = j.value("params", nlohmann::json::object());
    if (kind == "KronheimerF2") return kronheimer_f2(p.at("alpha").get<double>());
    if (kind == "WP112") return wp112();
    if (kind == "Extremal")
        return extremal_general(p.at("A").get<double>(), p.at("B").get<double>(),
                                p.at("C").get<double>(), p.at("D").get<double>());
    if (kind == "KE")
        return ke_family(p.at("lambda1").get<double>(), p.at("lambda2").get<double>()).first;
    if (kind == "KE0") return ke0_family(p.at("lambda2").get<double>());
    if (kind == "Cone") return cone();
    if (kind == "F2Extremal")
        return solve_extremal_f2(p.at("a").get<double>(), p.at("b").get<double>()).spec;
    throw std::invalid_argument("spec_from_json: unknown kind '" + kind + "'");
}

FamilySpec spec_from_string(const std::string& text)
{
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) args.push_back(std::stod(item));
    }
    const auto need = [&](std::size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("spec_from_string: '" + kind + "' takes " +
                                        std::to_string(n) + " parameter(s)");
    };
    if (kind == "KronheimerF2") {
        need(1);
        return kronheimer_f2(args[0]);
    }
    if (kind == "WP112") {
        need(0);
        return wp112();
    }
    if (kind == "Extremal") {
        need(4);
        return extremal_general(args[0], args[1], args[2], args[3]);
    }
    if (kind == "KE") {
        need(2);
        return ke_family(args[0], args[1]).first;
    }
    if (kind == "KE0") {
        need(1);
        return ke0_family(args[0]);
    }
    if (kind == "Cone") {
        need(0);
        return cone();
    }
    if (kind == "F2Extremal") {
        need(2);
        return solve_extremal_f2(args[0], args[1]).spec;
    }
    throw std::invalid_argument("spec_from_string: unknown kind '" + kind + "'");
}

}  // namespace toric
