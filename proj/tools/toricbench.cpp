// SPDX-License-Identifier: MIT
/*! \file  toricbench.cpp
    \brief Batch front-end: catalog inspection, verification runs, geodesic
           and invariant exports, rank reports.  CSV for tabular data, JSON
           for structured reports; all sampling is seed-deterministic.

    Exit codes: 0 success, 1 check failure, 2 usage/validation error.
*/
#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/acceptance.hpp"
#include "toric/base_geometry.hpp"
#include "toric/calabi.hpp"
#include "toric/family.hpp"
#include "toric/forms21.hpp"
#include "toric/geodesics.hpp"
#include "toric/sasaki.hpp"
#include "toric/symplectic.hpp"

using nlohmann::json;
using namespace toric;

namespace {

/// Stream to --out when given, stdout otherwise.
class OutputSink {
public:
    explicit OutputSink(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

/// Accept both "KE:1,2" and the word form "KE 1 2" given as extra arguments.
FamilySpec parse_spec(const std::string& specText, const std::vector<std::string>& extra)
{
    std::string text = specText;
    if (!extra.empty()) {
        text += ":";
        for (std::size_t i = 0; i < extra.size(); ++i) {
            text += (i ? "," : "") + extra[i];
        }
    }
    return spec_from_string(text);
}

/// Exact rational from a CLI token: "3/2", "1.25" or "7".
Rational rational_of(const std::string& token)
{
    const auto slash = token.find('/');
    if (slash != std::string::npos) {
        return Rational(boost::multiprecision::cpp_int(token.substr(0, slash)),
                        boost::multiprecision::cpp_int(token.substr(slash + 1)));
    }
    const auto dot = token.find('.');
    if (dot == std::string::npos) return Rational(boost::multiprecision::cpp_int(token));
    std::string digits = token.substr(0, dot) + token.substr(dot + 1);
    Rational den = 1;
    for (std::size_t i = dot + 1; i < token.size(); ++i) den *= 10;
    return Rational(boost::multiprecision::cpp_int(digits)) / den;
}

const char* kind_name(SingularityClass kind)
{
    switch (kind) {
        case SingularityClass::smooth: return "smooth";
        case SingularityClass::conical: return "conical";
        case SingularityClass::orbifold: return "orbifold";
        case SingularityClass::spindle: return "spindle";
    }
    return "?";
}

int cmd_family_show(const std::string& specText, const std::vector<std::string>& extra)
{
    const auto spec = parse_spec(specText, extra);
    std::cout << "family: " << spec.name() << "\n";
    if (spec.finiteInterval()) {
        std::cout << "interval: [" << spec.vMin << ", " << spec.vMax << "]\n";
    } else {
        std::cout << "interval: [" << spec.vMin << ", inf)\n";
    }
    if (spec.kind == FamilyKind::KE || spec.kind == FamilyKind::KE0) {
        const auto params = spec.kind == FamilyKind::KE
                                ? ke_family(spec.l1, spec.l2).second
                                : ke_family(0.0, spec.l2).second;
        std::cout << "k=" << params.k << " beta=" << params.beta
                  << " lambda3=" << params.lambda3 << "\n";
    }
    std::cout << "extremal: " << (is_extremal(spec) ? "yes" : "no") << "\n";
    if (spec.finiteInterval()) {
        const auto reports = classify_singularities(spec);
        for (const auto& r : reports) {
            std::cout << "endpoint v=" << r.endpoint << ": beta=" << r.beta << " ("
                      << kind_name(r.kind) << ")\n";
        }
    }
    std::cout << "# v, FK, FK'\n";
    const double hi = spec.finiteInterval() ? spec.vMax : spec.vMin + 4.0;
    for (int i = 0; i <= 8; ++i) {
        const double v = spec.vMin + (hi - spec.vMin) * i / 8.0;
        const auto j = fk_jet(spec, v, 1);
        std::cout << v << ", " << j.value() << ", " << j.d1(0) << "\n";
    }
    return 0;
}

int cmd_verify_all(unsigned seed, double tol, const std::string& only,
                   const std::string& outPath)
{
    const auto results = run_acceptance(seed, only, tol);
    json report;
    report["seed"] = seed;
    report["tol"] = tol;
    report["only"] = only;
    int failures = 0;
    for (const auto& r : results) {
        report["criteria"].push_back({{"id", r.id},
                                      {"tag", r.tag},
                                      {"name", r.name},
                                      {"passed", r.passed},
                                      {"detail", r.detail}});
        if (!r.passed) ++failures;
    }
    report["failures"] = failures;
    OutputSink sink(outPath);
    sink.stream() << report.dump(2) << "\n";
    return failures == 0 ? 0 : 1;
}

int cmd_geodesic(const std::string& specText, bool irrotational, double carter,
                 double energy, int points, unsigned seed, const std::string& outPath)
{
    const auto spec = spec_from_string(specText);
    OutputSink sink(outPath);
    if (irrotational) {
        if (carter >= 0.0) throw CLI::ValidationError("-K must be negative");
        const auto pts = orbit_points(spec, carter, energy, points);
        sink.stream() << "# irrotational orbit of " << spec.name() << ", K=" << carter
                      << ", E=" << energy << "; u = (1 - cos theta(v)) v\n";
        sink.stream() << "u,v\n";
        for (const auto& [u, v] : pts) sink.stream() << u << "," << v << "\n";
        return 0;
    }
    if (!spec.finiteInterval()) throw CLI::ValidationError("geodesic runs need a finite interval");
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    GeodesicState st;
    st.v = spec.vMin + (0.2 + 0.6 * (unit(rng) * 0.5 + 0.5)) * (spec.vMax - spec.vMin);
    st.theta = 1.55 + unit(rng);
    st.phi = unit(rng);
    st.tau = unit(rng);
    st.p_v = unit(rng);
    st.p_theta = unit(rng);
    st.ell = 0.3 * unit(rng);
    st.m = 0.3 * unit(rng);
    const double sMax = 10.0 * (spec.vMax - spec.vMin);
    const auto traj = integrate_geodesic(spec, st, sMax, 1e-12, points);
    sink.stream() << "# geodesic on " << spec.name() << ", seed " << seed << ", arc length "
                  << sMax << "\n";
    write_trajectory_csv(sink.stream(), spec, traj);
    return 0;
}

int cmd_calabi_build(const std::string& specText, int points, unsigned seed,
                     const std::string& outPath)
{
    const auto spec = spec_from_string(specText);
    if (spec.kind != FamilyKind::KE || spec.l1 <= 0.0) {
        throw CLI::ValidationError("calabi-build needs a KE spec with 0 < l1 < l2");
    }
    const auto pot = total_potential(spec.l1, spec.l2);
    const auto consistency = consistency_check(spec);
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> frac(0.15, 0.85);
    const double s = spec.l1 + spec.l2;
    const double q = spec.l1 * spec.l1 + spec.l1 * spec.l2 + spec.l2 * spec.l2;
    double worst = 0.0;
    for (int i = 0; i < points; ++i) {
        const double v = spec.l1 + frac(rng) * (spec.l2 - spec.l1);
        const double u = frac(rng) * 2.0 * v;
        const double w = frac(rng) * 2.0 * q * (v - spec.l1) / (3.0 * s);
        worst = std::max(worst,
                         ricci_flat_residual(pot, {u, v, w, 0.1, 0.2, 0.3}));
    }
    json report;
    report["family"] = spec.name();
    report["fiber_constant"] = pot.fiberConstant;
    report["consistency"] = {{"meanA", consistency.meanA}, {"devA", consistency.devA},
                             {"meanB", consistency.meanB}, {"devB", consistency.devB}};
    report["points"] = points;
    report["seed"] = seed;
    report["max_ricci_residual"] = worst;
    OutputSink sink(outPath);
    sink.stream() << report.dump(2) << "\n";
    return worst < 1e-8 ? 0 : 1;
}

int cmd_invariants(const std::string& specText, int points, const std::string& outPath)
{
    const auto spec = spec_from_string(specText);
    if (spec.kind != FamilyKind::KE || spec.l1 <= 0.0) {
        throw CLI::ValidationError("invariants needs a KE spec with 0 < l1 < l2");
    }
    const double s = spec.l1 + spec.l2;
    const double q = spec.l1 * spec.l1 + spec.l1 * spec.l2 + spec.l2 * spec.l2;
    OutputSink sink(outPath);
    sink.stream() << "# curvature invariants of " << spec.name()
                  << ": metric cone over the link vs ricci-flat canonical bundle;"
                     " rows Ch, E, Quad1, Cub1-3, Quart1-2 per sample point\n";
    sink.stream() << "v,w,radius,invariant,cone,calabi\n";
    for (int i = 0; i < points; ++i) {
        const double frac = points > 1 ? 0.3 + 0.4 * i / (points - 1.0) : 0.5;
        const double v = spec.l1 + frac * (spec.l2 - spec.l1);
        const double w = 0.5 * 2.0 * q * (v - spec.l1) / (3.0 * s);
        const double radius = 0.8 + 0.1 * i;
        const auto row = invariant_table_row(spec.l1, spec.l2, v, w, radius);
        const std::pair<const char*, std::pair<double, double>> entries[] = {
            {"Ch", {row.cone.ch, row.calabi.ch}},
            {"E", {row.cone.e, row.calabi.e}},
            {"Quad1", {row.cone.quad1, row.calabi.quad1}},
            {"Cub1", {row.cone.cub1, row.calabi.cub1}},
            {"Cub2", {row.cone.cub2, row.calabi.cub2}},
            {"Cub3", {row.cone.cub3, row.calabi.cub3}},
            {"Quart1", {row.cone.quart1, row.calabi.quart1}},
            {"Quart2", {row.cone.quart2, row.calabi.quart2}}};
        for (const auto& [name, pair] : entries) {
            sink.stream() << v << "," << w << "," << radius << "," << name << ","
                          << pair.first << "," << pair.second << "\n";
        }
    }
    return 0;
}

int cmd_rank21(const std::string& specText, bool exact, const std::string& outPath)
{
    const auto colon = specText.find(':');
    if (specText.substr(0, colon) != "KE" || colon == std::string::npos) {
        throw CLI::ValidationError("rank21 needs a KE:<l1>,<l2> spec");
    }
    const auto comma = specText.find(',', colon);
    if (comma == std::string::npos) throw CLI::ValidationError("rank21 needs two parameters");
    const std::string t1 = specText.substr(colon + 1, comma - colon - 1);
    const std::string t2 = specText.substr(comma + 1);
    const Rational l1 = rational_of(t1);
    const Rational l2 = rational_of(t2);
    if (!(l1 > 0 && l2 > l1)) throw CLI::ValidationError("rank21 needs 0 < l1 < l2");

    const Rational fracs[5][3] = {{Rational(3, 10), Rational(3, 5), Rational(1, 6)},
                                  {Rational(2, 5), Rational(3, 10), Rational(1, 4)},
                                  {Rational(1, 2), Rational(7, 10), Rational(1, 5)},
                                  {Rational(3, 5), Rational(1, 4), Rational(3, 10)},
                                  {Rational(7, 10), Rational(1, 2), Rational(1, 8)}};
    json report;
    report["family"] = "KE(" + t1 + "," + t2 + ")";
    report["exact"] = exact;
    bool allFull = true;
    for (const auto& f : fracs) {
        RationalPoint pt;
        pt.v = l1 + f[0] * (l2 - l1);
        pt.u = f[1] * 2 * pt.v;
        pt.w = f[2] * (l2 - l1);
        for (int sign : {-1, 1}) {
            RankReport rep;
            if (exact) {
                rep = assemble_and_rank_exact(l1, l2, pt, sign);
            } else {
                rep = assemble_and_rank(
                    static_cast<double>(l1), static_cast<double>(l2),
                    {static_cast<double>(pt.u), static_cast<double>(pt.v),
                     static_cast<double>(pt.w)},
                    sign);
            }
            allFull = allFull && rep.rank == 18;
            report["results"].push_back(
                {{"point", {{"u", pt.u.str()}, {"v", pt.v.str()}, {"w", pt.w.str()}}},
                 {"sign", sign},
                 {"rank", rep.rank},
                 {"nullity", rep.nullity}});
        }
    }
    report["full_rank_everywhere"] = allFull;
    OutputSink sink(outPath);
    sink.stream() << report.dump(2) << "\n";
    return allFull ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"toric geometry workbench"};
    app.require_subcommand(1);

    std::string spec = "KE:1,2";
    std::string out;
    std::string only;
    unsigned seed = 2026;
    double tol = 0.0;
    int points = 128;
    bool exact = false;
    bool irrotational = false;
    double carter = -1.0;
    double energy = 1.0;
    std::vector<std::string> extra;

    auto* show = app.add_subcommand("family-show", "print a catalog member's profile table");
    show->add_option("spec", spec, "family spec, e.g. KE:1,2 or 'KE 1 2'")->required();
    show->add_option("args", extra, "inline parameters for the word form");

    auto* verify = app.add_subcommand("verify-all", "run the acceptance criteria");
    verify->add_option("--seed", seed);
    verify->add_option("--tol", tol, "override comparison tolerances (0 = defaults)");
    verify->add_option("--only", only, "filter by module tag or criterion id");
    verify->add_option("--out", out, "write the JSON report to a file");

    auto* geo = app.add_subcommand("geodesic", "integrate a geodesic or export an orbit");
    geo->add_option("--spec", spec);
    geo->add_flag("--irrotational", irrotational, "zero-angular-momentum orbit via quadrature");
    geo->add_option("-K", carter, "separation constant label (negative)");
    geo->add_option("-E", energy, "energy");
    geo->add_option("--points", points);
    geo->add_option("--seed", seed);
    geo->add_option("--out", out);

    auto* cal = app.add_subcommand("calabi-build", "ricci-flat total-space build report");
    cal->add_option("--spec", spec);
    cal->add_option("--points", points);
    cal->add_option("--seed", seed);
    cal->add_option("--out", out);

    auto* inv = app.add_subcommand("invariants", "curvature-invariant table export");
    inv->add_option("--spec", spec);
    inv->add_option("--points", points);
    inv->add_option("--out", out);

    auto* rank = app.add_subcommand("rank21", "rank report of the form duality system");
    rank->add_option("--spec", spec);
    rank->add_flag("--exact", exact, "exact rational elimination instead of SVD");
    rank->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (show->parsed()) return cmd_family_show(spec, extra);
        if (verify->parsed()) return cmd_verify_all(seed, tol, only, out);
        if (geo->parsed())
            return cmd_geodesic(spec, irrotational, carter, energy, points, seed, out);
        if (cal->parsed()) return cmd_calabi_build(spec, points, seed, out);
        if (inv->parsed()) return cmd_invariants(spec, points, out);
        if (rank->parsed()) return cmd_rank21(spec, exact, out);
    } catch (const CLI::ValidationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
