// SPDX-License-Identifier: MIT
/*! \file  sasaki.cpp
    \brief Sasaki-Einstein 5-metric, coordinate map, metric cone, and the
           invariant-based comparison with the canonical-bundle metric.
*/
#include "toric/sasaki.hpp"

#include <cmath>
#include <stdexcept>

#include "toric/base_geometry.hpp"
#include "toric/family.hpp"

namespace toric {

namespace {

double q_of(double l1, double l2) { return l1 * l1 + l1 * l2 + l2 * l2; }

}  // namespace

SasakiParameters sasaki_parameters(double l1, double l2)
{
    const double q = q_of(l1, l2);
    const double s = l1 + l2;
    SasakiParameters par;
    par.l1 = l1;
    par.l2 = l2;
    par.k = 3.0 * s / q;
    par.beta = -l1 * l1 * l2 * l2 / q;
    par.a = (3.0 * par.beta * par.k * par.k + 4.0) / 4.0;
    par.c = 1.0;
    par.p = par.k * q / (3.0 * s);
    return par;
}

Matrix<double> se5_metric_raw(const SasakiParameters& par, const std::vector<double>& pt)
{
    const double y = pt[0];
    const double theta = pt[1];
    const double a = par.a;
    const double c = par.c;
    const double d = a + 2.0 * c * y * y * y - 3.0 * y * y;
    const double cy = 1.0 - c * y;
    if (d * cy <= 0.0) {
        throw std::domain_error("se5_metric_raw: coordinate y outside the metric range");
    }
    const double ct = std::cos(theta);
    const double st = std::sin(theta);

    Matrix<double> g(5, 5, 0.0);
    g(0, 0) = cy / (2.0 * d);
    g(1, 1) = cy / 6.0;
    g(2, 2) = cy * st * st / 6.0;

    // (c cos(theta) dphi + dpsi)^2 block.
    const double omega2[5] = {0.0, 0.0, c * ct, 1.0, 0.0};
    // Phi = dxi + y (dpsi + c cos(theta) dphi) - cos(theta) dphi.
    const double phi[5] = {0.0, 0.0, (y * c - 1.0) * ct, y, 1.0};
    const double b2 = d / (18.0 * cy);
    for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
            g(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) +=
                b2 * omega2[i] * omega2[j] + phi[i] * phi[j] / 9.0;
        }
    }
    return g;
}

std::array<double, 5> phi_se(double l1, double l2, const std::vector<double>& pt)
{
    const double k = sasaki_parameters(l1, l2).k;
    const double v = pt[0];
    const double theta = pt[1];
    return {0.0, 0.0, 0.5 * k * v * (1.0 - std::cos(theta)), 0.5 * k * v, 1.0};
}

Matrix<double> se5_metric_hatted(double l1, double l2, const std::vector<double>& pt)
{
    const auto spec = ke_family(l1, l2).first;
    const double k = sasaki_parameters(l1, l2).k;
    BasePoint base{pt[0], pt[1], pt[2], pt[3]};
    const auto g4 = base_metric(spec, base);
    const auto phi = phi_se(l1, l2, pt);
    Matrix<double> g(5, 5, 0.0);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) g(i, j) = g4(i, j);
    }
    const double coef = 4.0 / (3.0 * k);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) g(i, j) += coef * phi[i] * phi[j];
    }
    return g;
}

Matrix<double> se5_metric(double l1, double l2, const std::vector<double>& pt)
{
    const double k = sasaki_parameters(l1, l2).k;
    auto g = se5_metric_hatted(l1, l2, pt);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) g(i, j) *= k / 12.0;
    }
    return g;
}

FrameField se5_frame(double l1, double l2)
{
    const auto spec = ke_family(l1, l2).first;
    const double k = sasaki_parameters(l1, l2).k;
    FrameField f;
    f.dim = 5;
    f.coeffs = [spec, k](const std::vector<double>& p, int order) {
        const Jet v = Jet::variable(p[0], 0, 5, order);
        const Jet theta = Jet::variable(p[1], 1, 5, order);
        const Jet fkj = fk(spec, v);
        const Jet ang = 1.0 - cos(theta);
        Matrix<Jet> e(5, 5, Jet::constant(0.0, 5, order));
        e(0, 0) = 1.0 / sqrt(fkj);
        e(1, 2) = sqrt(fkj) * ang;
        e(1, 3) = sqrt(fkj);
        e(2, 1) = sqrt(v);
        e(3, 2) = sqrt(v) * sin(theta);
        const double root = std::sqrt(4.0 / (3.0 * k));
        e(4, 4) = Jet::constant(root, 5, order);
        e(4, 3) = root * 0.5 * k * v;
        e(4, 2) = root * 0.5 * k * v * ang;
        return e;
    };
    return f;
}

Matrix<double> se5_ricci_intrinsic(double l1, double l2, const std::vector<double>& pt)
{
    auto ric = frame_curvature(se5_frame(l1, l2), pt).ricci_flat;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = 0; j < 5; ++j) ric(i, j) *= 0.5;
    }
    return ric;
}

FrameField cone_frame(double l1, double l2)
{
    const auto spec = ke_family(l1, l2).first;
    const double k = sasaki_parameters(l1, l2).k;
    FrameField f;
    f.dim = 6;
    f.coeffs = [spec, k](const std::vector<double>& p, int order) {
        const Jet v = Jet::variable(p[0], 0, 6, order);
        const Jet theta = Jet::variable(p[1], 1, 6, order);
        const Jet radius = Jet::variable(p[5], 5, 6, order);
        const Jet fkj = fk(spec, v);
        const Jet ang = 1.0 - cos(theta);
        Matrix<Jet> e(6, 6, Jet::constant(0.0, 6, order));
        e(0, 1) = radius * sqrt(v);
        e(1, 2) = radius * sqrt(v) * sin(theta);
        e(2, 0) = radius / sqrt(fkj);
        e(3, 2) = radius * sqrt(fkj) * ang;
        e(3, 3) = radius * sqrt(fkj);
        const double root = std::sqrt(4.0 / (3.0 * k));
        e(4, 4) = radius * root;
        e(4, 3) = radius * root * 0.5 * k * v;
        e(4, 2) = radius * root * 0.5 * k * v * ang;
        e(5, 5) = Jet::constant(2.0 * std::sqrt(3.0 / k), 6, order);
        return e;
    };
    return f;
}

Matrix<double> cone_metric(double l1, double l2, double radius,
                           const std::vector<double>& pt)
{
    if (radius <= 0.0) {
        throw std::domain_error("cone_metric: the apex R = 0 is excluded");
    }
    std::vector<double> full = pt;
    full.push_back(radius);
    const auto e = cone_frame(l1, l2).coeffs(full, 0);
    Matrix<double> g(6, 6, 0.0);
    for (std::size_t m = 0; m < 6; ++m) {
        for (std::size_t n = 0; n < 6; ++n) {
            double sum = 0.0;
            for (std::size_t a = 0; a < 6; ++a) sum += e(a, m).value() * e(a, n).value();
            g(m, n) = sum;
        }
    }
    return g;
}

double cone_ricci_residual(double l1, double l2, double radius,
                           const std::vector<double>& pt)
{
    if (radius <= 0.0) {
        throw std::domain_error("cone_ricci_residual: the apex R = 0 is excluded");
    }
    std::vector<double> full = pt;
    full.push_back(radius);
    const auto bundle = frame_curvature(cone_frame(l1, l2), full);
    double worst = 0.0;
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            worst = std::max(worst, std::abs(bundle.ricci_flat(i, j)));
        }
    }
    return worst;
}

InvariantRecord invariant_record(const CurvatureBundle& curv)
{
    const auto inv = weyl_invariants(curv);
    InvariantRecord rec;
    if (curv.dim == 6) {
        const auto six = curvature_6forms(curv);
        rec.ch = six.ch;
        rec.e = six.e;
    }
    // Table normalization: half-normalized Riemann, so n-th order Weyl
    // contractions carry a factor 2^-n relative to the kernel.
    rec.quad1 = inv.quad1 / 4.0;
    rec.cub1 = inv.cub1 / 8.0;
    rec.cub2 = inv.cub2 / 8.0;
    rec.cub3 = inv.cub3 / 8.0;
    rec.quart1 = inv.quart1 / 16.0;
    rec.quart2 = inv.quart2 / 16.0;
    return rec;
}

InvariantRecord cone_table_reference(double v, double radius)
{
    const double r4 = std::pow(radius, 4) * std::pow(v, 6);
    const double r6 = std::pow(radius, 6) * std::pow(v, 9);
    const double r8 = std::pow(radius, 8) * std::pow(v, 12);
    InvariantRecord rec;
    rec.quad1 = 96.0 / (49.0 * r4);
    rec.cub1 = 384.0 / (343.0 * r6);
    rec.cub2 = 192.0 / (343.0 * r6);
    rec.cub3 = 96.0 / (343.0 * r6);
    rec.quart1 = 4608.0 / (2401.0 * r8);
    rec.quart2 = 1152.0 / (2401.0 * r8);
    return rec;
}

InvariantRecord calabi_table_reference(double v, double w)
{
    const double r = 9.0 * w + 14.0;
    const double v3 = v * v * v;
    const double v6 = v3 * v3;
    const double v9 = v6 * v3;
    const double v12 = v9 * v3;
    InvariantRecord rec;
    rec.e = 20736.0 * (63780651422208.0 * v6 + std::pow(r, 12)) /
            (343.0 * v6 * std::pow(r, 12));
    rec.quad1 = 6.0 * std::pow(r, 4) / (117649.0 * v6) + 8131898880.0 / std::pow(r, 8);
    rec.cub1 = 6.0 * std::pow(r, 6) / (40353607.0 * v9) + 432.0 / (343.0 * v6) +
               348097316216832.0 / std::pow(r, 12);
    rec.cub2 = 3.0 * std::pow(r, 6) / (40353607.0 * v9) + 216.0 / (343.0 * v6) +
               174048658108416.0 / std::pow(r, 12);
    rec.cub3 = 3.0 * std::pow(r, 6) / (80707214.0 * v9) + 108.0 / (343.0 * v6) +
               87024329054208.0 / std::pow(r, 12);
    rec.quart1 = 18.0 * std::pow(r, 8) / (13841287201.0 * v12) +
                 576.0 * r * r / (117649.0 * v9) + 20736.0 / (v6 * std::pow(r, 4)) +
                 31631121143724146688.0 / std::pow(r, 16);
    rec.quart2 = 9.0 * std::pow(r, 8) / (27682574402.0 * v12) +
                 144.0 * r * r / (117649.0 * v9) + 5184.0 / (v6 * std::pow(r, 4)) +
                 7907780285931036672.0 / std::pow(r, 16);
    return rec;
}

InvariantRecord cone_invariant_record(double l1, double l2, double radius,
                                      const std::vector<double>& pt)
{
    if (radius <= 0.0) {
        throw std::domain_error("cone_invariant_record: the apex R = 0 is excluded");
    }
    std::vector<double> full = pt;
    full.push_back(radius);
    return invariant_record(frame_curvature(cone_frame(l1, l2), full));
}

InvariantRecord calabi_invariant_record(const TotalSpacePotential& pot,
                                        const std::vector<double>& pt)
{
    return invariant_record(frame_curvature(calabi_frame_reordered(pot), pt));
}

InvariantTableRow invariant_table_row(double l1, double l2, double v, double w,
                                      double radius)
{
    InvariantTableRow row;
    row.v = v;
    row.w = w;
    row.radius = radius;
    const std::vector<double> pt5 = {v, 1.1, 0.4, 0.3, 0.2};
    row.cone = cone_invariant_record(l1, l2, radius, pt5);
    const auto pot = total_potential(l1, l2);
    const std::vector<double> pt6 = {1.1, v, w, 0.4, 0.3, 0.2};
    row.calabi = calabi_invariant_record(pot, pt6);
    return row;
}

void write_invariant_table_csv(std::ostream& out, const InvariantTableRow& row)
{
    out << "invariant,cone,calabi\n";
    const char* names[8] = {"Ch", "E", "Quad1", "Cub1", "Cub2", "Cub3", "Quart1", "Quart2"};
    const auto fields = [](const InvariantRecord& r) {
        return std::array<double, 8>{r.ch, r.e, r.quad1, r.cub1, r.cub2, r.cub3,
                                     r.quart1, r.quart2};
    };
    const auto cone = fields(row.cone);
    const auto calabi = fields(row.calabi);
    out.precision(15);
    for (int i = 0; i < 8; ++i) {
        out << names[i] << "," << cone[static_cast<std::size_t>(i)] << ","
            << calabi[static_cast<std::size_t>(i)] << "\n";
    }
}

InequivalenceReport inequivalence_witness(double l1, double l2, double v, double w)
{
    InequivalenceReport rep;
    InvariantRecord unit;
    InvariantRecord ca;
    if (l1 == 1.0 && l2 == 2.0) {
        // Reference member: rational table columns, valid at every (v, w).
        unit = cone_table_reference(v, 1.0);
        ca = calabi_table_reference(v, w);
    } else {
        unit = cone_invariant_record(l1, l2, 1.0, {v, 1.1, 0.4, 0.3, 0.2});
        const auto pot = total_potential(l1, l2);
        ca = calabi_invariant_record(pot, {1.1, v, w, 0.4, 0.3, 0.2});
    }
    return match_invariants(unit, ca);
}

InequivalenceReport match_invariants(const InvariantRecord& coneUnit,
                                     const InvariantRecord& target)
{
    InequivalenceReport rep;
    rep.calabi_cub1 = target.cub1;
    const double kTiny = 1e-14;
    if (coneUnit.quad1 < kTiny || target.quad1 < kTiny) {
        return rep;  // no quadratic curvature to match against (e.g. flat)
    }
    // Quad1 scales as R^-4 and Cub1 as R^-6 on the cone.
    rep.matched = true;
    rep.radius4 = coneUnit.quad1 / target.quad1;
    rep.cone_cub1 = coneUnit.cub1 / std::pow(rep.radius4, 1.5);
    rep.discrepancy = std::abs(rep.cone_cub1 - rep.calabi_cub1) /
                      std::max(std::abs(rep.calabi_cub1), kTiny);
    return rep;
}

}  // namespace toric
