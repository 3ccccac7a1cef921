// SPDX-License-Identifier: MIT
/*! \file  curvature.cpp
    \brief Frame and Christoffel curvature pipelines, Laplace-Beltrami
           operator, Weyl invariants and 6-form curvature densities.
*/
#include "toric/curvature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace toric {

namespace {

std::size_t idx4(int n, int a, int b, int c, int d)
{
    return static_cast<std::size_t>(((a * n + b) * n + c) * n + d);
}

/*! Shared tail of both curvature pipelines: given the coframe coefficient
    matrix as order-2 jets, assemble spin connection, curvature and the
    contracted tensors. */
CurvatureBundle bundle_from_frame_jets(const Matrix<Jet>& e2, const std::vector<double>& point)
{
    const int n = static_cast<int>(e2.rows());
    if (e2.cols() != static_cast<std::size_t>(n) ||
        point.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("frame_curvature: square frame expected");
    }

    Matrix<Jet> einv = inverse(e2);

    // Anholonomy coefficients d e^a = (1/2) C^a_{bc} e^b ^ e^c as order-1 jets.
    auto at1 = [](const Jet& j) { return j.truncated(1); };
    std::vector<Jet> c3(static_cast<std::size_t>(n * n * n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                Jet sum = Jet::constant(0.0, n, 1);
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) {
                        const Jet t = e2(static_cast<std::size_t>(a),
                                         static_cast<std::size_t>(i))
                                          .partial(j) -
                                      e2(static_cast<std::size_t>(a),
                                         static_cast<std::size_t>(j))
                                          .partial(i);
                        sum += t * at1(einv(static_cast<std::size_t>(j),
                                            static_cast<std::size_t>(b))) *
                               at1(einv(static_cast<std::size_t>(i),
                                        static_cast<std::size_t>(c)));
                    }
                }
                c3[static_cast<std::size_t>((a * n + b) * n + c)] = sum;
                c3[static_cast<std::size_t>((a * n + c) * n + b)] = -sum;
            }
            c3[static_cast<std::size_t>((a * n + b) * n + b)] = Jet::constant(0.0, n, 1);
        }
    }
    auto c_of = [&](int a, int b, int c) -> const Jet& {
        return c3[static_cast<std::size_t>((a * n + b) * n + c)];
    };

    // Torsion-free spin connection omega_{ab|c} = (C_{abc}+C_{bca}-C_{cab})/2.
    std::vector<Jet> w(static_cast<std::size_t>(n * n * n), Jet::constant(0.0, n, 1));
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                const Jet val = 0.5 * (c_of(a, b, c) + c_of(b, c, a) - c_of(c, a, b));
                w[static_cast<std::size_t>((a * n + b) * n + c)] = val;
                w[static_cast<std::size_t>((b * n + a) * n + c)] = -val;
            }
        }
    }
    auto w_of = [&](int a, int b, int c) -> const Jet& {
        return w[static_cast<std::size_t>((a * n + b) * n + c)];
    };

    // Connection in coordinate indices, Omega^{ab}_mu = omega_{ab|c} E^c_mu.
    std::vector<Jet> wc(static_cast<std::size_t>(n * n * n), Jet::constant(0.0, n, 1));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int mu = 0; mu < n; ++mu) {
                Jet sum = Jet::constant(0.0, n, 1);
                for (int c = 0; c < n; ++c) {
                    sum += w_of(a, b, c) * at1(e2(static_cast<std::size_t>(c),
                                                  static_cast<std::size_t>(mu)));
                }
                wc[static_cast<std::size_t>((a * n + b) * n + mu)] = sum;
            }
        }
    }
    auto wc_of = [&](int a, int b, int mu) -> const Jet& {
        return wc[static_cast<std::size_t>((a * n + b) * n + mu)];
    };

    // Curvature 2-form in mixed indices, then all frame indices.
    CurvatureBundle out;
    out.dim = n;
    out.riemann.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                           static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                       0.0);
    out.spin.resize(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out.spin[i] = w[i].value();
    out.frame = Matrix<double>(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        for (int mu = 0; mu < n; ++mu) {
            out.frame(static_cast<std::size_t>(a), static_cast<std::size_t>(mu)) =
                e2(static_cast<std::size_t>(a), static_cast<std::size_t>(mu)).value();
        }
    }

    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            // F^{ab}_{mu nu} = 2 d_[mu Omega_nu] + 2 Omega^{ac}_[mu Omega^{cb}_nu].
            Matrix<double> f(static_cast<std::size_t>(n), static_cast<std::size_t>(n), 0.0);
            for (int mu = 0; mu < n; ++mu) {
                for (int nu = mu + 1; nu < n; ++nu) {
                    double val = wc_of(a, b, nu).d1(mu) - wc_of(a, b, mu).d1(nu);
                    for (int c = 0; c < n; ++c) {
                        val += wc_of(a, c, mu).value() * wc_of(c, b, nu).value() -
                               wc_of(a, c, nu).value() * wc_of(c, b, mu).value();
                    }
                    f(static_cast<std::size_t>(mu), static_cast<std::size_t>(nu)) = val;
                    f(static_cast<std::size_t>(nu), static_cast<std::size_t>(mu)) = -val;
                }
            }
            for (int c = 0; c < n; ++c) {
                for (int d = 0; d < n; ++d) {
                    double val = 0.0;
                    for (int mu = 0; mu < n; ++mu) {
                        for (int nu = 0; nu < n; ++nu) {
                            val += f(static_cast<std::size_t>(mu),
                                     static_cast<std::size_t>(nu)) *
                                   einv(static_cast<std::size_t>(mu),
                                        static_cast<std::size_t>(c))
                                       .value() *
                                   einv(static_cast<std::size_t>(nu),
                                        static_cast<std::size_t>(d))
                                       .value();
                        }
                    }
                    out.riemann[idx4(n, a, b, c, d)] = val;
                    out.riemann[idx4(n, b, a, c, d)] = -val;
                }
            }
        }
    }

    out.ricci_flat = Matrix<double>(static_cast<std::size_t>(n), static_cast<std::size_t>(n), 0.0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            double val = 0.0;
            for (int c = 0; c < n; ++c) val += out.r(c, a, c, b);
            out.ricci_flat(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = val;
        }
    }
    out.scalar = 0.0;
    for (int a = 0; a < n; ++a) {
        out.scalar += out.ricci_flat(static_cast<std::size_t>(a), static_cast<std::size_t>(a));
    }

    out.ricci_coord = Matrix<double>(static_cast<std::size_t>(n), static_cast<std::size_t>(n), 0.0);
    for (int mu = 0; mu < n; ++mu) {
        for (int nu = 0; nu < n; ++nu) {
            double val = 0.0;
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    val += out.frame(static_cast<std::size_t>(a), static_cast<std::size_t>(mu)) *
                           out.frame(static_cast<std::size_t>(b), static_cast<std::size_t>(nu)) *
                           out.ricci_flat(static_cast<std::size_t>(a),
                                          static_cast<std::size_t>(b));
                }
            }
            out.ricci_coord(static_cast<std::size_t>(mu), static_cast<std::size_t>(nu)) = val;
        }
    }
    return out;
}

/// Upper-triangular Cholesky coframe of a positive-definite matrix: g = L L^T,
/// returned as E = L^T so that sum_a E^a_mu E^a_nu = g_{mu nu}.
Matrix<double> cholesky_coframe(const Matrix<double>& g)
{
    const std::size_t n = g.rows();
    Matrix<double> l(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = g(i, j);
            for (std::size_t k = 0; k < j; ++k) sum -= l(i, k) * l(j, k);
            if (i == j) {
                if (sum <= 0.0) {
                    throw std::domain_error("metric_curvature: metric not positive-definite");
                }
                l(i, i) = std::sqrt(sum);
            } else {
                l(i, j) = sum / l(j, j);
            }
        }
    }
    Matrix<double> e(n, n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t mu = 0; mu < n; ++mu) e(a, mu) = l(mu, a);
    }
    return e;
}

/// Signed permutations of {0..n-1} as (perm, sign) pairs.
const std::vector<std::pair<std::array<int, 6>, int>>& permutations6()
{
    static const std::vector<std::pair<std::array<int, 6>, int>> table = [] {
        std::vector<std::pair<std::array<int, 6>, int>> t;
        std::array<int, 6> p = {0, 1, 2, 3, 4, 5};
        do {
            int sign = 1;
            for (int i = 0; i < 6; ++i) {
                for (int j = i + 1; j < 6; ++j) {
                    if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(j)]) {
                        sign = -sign;
                    }
                }
            }
            t.emplace_back(p, sign);
        } while (std::next_permutation(p.begin(), p.end()));
        return t;
    }();
    return table;
}

}  // namespace

CurvatureBundle frame_curvature(const FrameField& frame, const std::vector<double>& point)
{
    const Matrix<Jet> e2 = frame.coeffs(point, 2);
    Matrix<double> values(e2.rows(), e2.cols());
    for (std::size_t i = 0; i < e2.rows(); ++i) {
        for (std::size_t j = 0; j < e2.cols(); ++j) values(i, j) = e2(i, j).value();
    }
    if (std::abs(determinant(values)) < 1e-300) {
        throw std::domain_error("frame_curvature: singular frame");
    }
    return bundle_from_frame_jets(e2, point);
}

CurvatureBundle metric_curvature(const MetricCoefficients& g, int dim,
                                 const std::vector<double>& point)
{
    const int n = dim;
    const Matrix<Jet> gm = g(point, 2);
    if (gm.rows() != static_cast<std::size_t>(n) || gm.cols() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("metric_curvature: dimension mismatch");
    }
    Matrix<Jet> ginv = inverse(gm);
    auto at1 = [](const Jet& j) { return j.truncated(1); };

    // Christoffel symbols as order-1 jets.
    std::vector<Jet> gamma(static_cast<std::size_t>(n * n * n), Jet::constant(0.0, n, 1));
    for (int l = 0; l < n; ++l) {
        for (int m = 0; m < n; ++m) {
            for (int v = m; v < n; ++v) {
                Jet sum = Jet::constant(0.0, n, 1);
                for (int s = 0; s < n; ++s) {
                    sum += at1(ginv(static_cast<std::size_t>(l), static_cast<std::size_t>(s))) *
                           (gm(static_cast<std::size_t>(s), static_cast<std::size_t>(v)).partial(m) +
                            gm(static_cast<std::size_t>(s), static_cast<std::size_t>(m)).partial(v) -
                            gm(static_cast<std::size_t>(m), static_cast<std::size_t>(v)).partial(s));
                }
                sum *= 0.5;
                gamma[static_cast<std::size_t>((l * n + m) * n + v)] = sum;
                gamma[static_cast<std::size_t>((l * n + v) * n + m)] = sum;
            }
        }
    }
    auto gam = [&](int l, int m, int v) -> const Jet& {
        return gamma[static_cast<std::size_t>((l * n + m) * n + v)];
    };

    // Riemann with first index up: R^r_{s mu nu}.
    std::vector<double> rup(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                                static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                            0.0);
    for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
            for (int mu = 0; mu < n; ++mu) {
                for (int nu = mu + 1; nu < n; ++nu) {
                    double val = gam(r, nu, s).d1(mu) - gam(r, mu, s).d1(nu);
                    for (int l = 0; l < n; ++l) {
                        val += gam(r, mu, l).value() * gam(l, nu, s).value() -
                               gam(r, nu, l).value() * gam(l, mu, s).value();
                    }
                    rup[idx4(n, r, s, mu, nu)] = val;
                    rup[idx4(n, r, s, nu, mu)] = -val;
                }
            }
        }
    }

    CurvatureBundle out;
    out.dim = n;
    out.ricci_coord = Matrix<double>(static_cast<std::size_t>(n), static_cast<std::size_t>(n), 0.0);
    for (int s = 0; s < n; ++s) {
        for (int v = 0; v < n; ++v) {
            double val = 0.0;
            for (int r = 0; r < n; ++r) val += rup[idx4(n, r, s, r, v)];
            out.ricci_coord(static_cast<std::size_t>(s), static_cast<std::size_t>(v)) = val;
        }
    }
    out.scalar = 0.0;
    for (int s = 0; s < n; ++s) {
        for (int v = 0; v < n; ++v) {
            out.scalar += ginv(static_cast<std::size_t>(s), static_cast<std::size_t>(v)).value() *
                          out.ricci_coord(static_cast<std::size_t>(s), static_cast<std::size_t>(v));
        }
    }

    // Convert to a Cholesky orthonormal coframe for the flat-index data.
    Matrix<double> gval(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < gval.rows(); ++i) {
        for (std::size_t j = 0; j < gval.cols(); ++j) gval(i, j) = gm(i, j).value();
    }
    out.frame = cholesky_coframe(gval);
    const Matrix<double> finv = inverse(out.frame);

    // Lower the first index: R_{l s mu nu} = g_{l r} R^r_{s mu nu}.
    std::vector<double> rdown(rup.size(), 0.0);
    for (int l = 0; l < n; ++l) {
        for (int s = 0; s < n; ++s) {
            for (int mu = 0; mu < n; ++mu) {
                for (int nu = 0; nu < n; ++nu) {
                    double val = 0.0;
                    for (int r = 0; r < n; ++r) {
                        val += gval(static_cast<std::size_t>(l), static_cast<std::size_t>(r)) *
                               rup[idx4(n, r, s, mu, nu)];
                    }
                    rdown[idx4(n, l, s, mu, nu)] = val;
                }
            }
        }
    }
    out.riemann.assign(rdown.size(), 0.0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                for (int d = 0; d < n; ++d) {
                    double val = 0.0;
                    for (int l = 0; l < n; ++l) {
                        for (int s = 0; s < n; ++s) {
                            for (int mu = 0; mu < n; ++mu) {
                                for (int nu = 0; nu < n; ++nu) {
                                    val += finv(static_cast<std::size_t>(l),
                                                static_cast<std::size_t>(a)) *
                                           finv(static_cast<std::size_t>(s),
                                                static_cast<std::size_t>(b)) *
                                           finv(static_cast<std::size_t>(mu),
                                                static_cast<std::size_t>(c)) *
                                           finv(static_cast<std::size_t>(nu),
                                                static_cast<std::size_t>(d)) *
                                           rdown[idx4(n, l, s, mu, nu)];
                                }
                            }
                        }
                    }
                    out.riemann[idx4(n, a, b, c, d)] = val;
                }
            }
        }
    }
    out.ricci_flat = Matrix<double>(static_cast<std::size_t>(n), static_cast<std::size_t>(n), 0.0);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            double val = 0.0;
            for (int c = 0; c < n; ++c) val += out.r(c, a, c, b);
            out.ricci_flat(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) = val;
        }
    }
    out.spin.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) *
                        static_cast<std::size_t>(n),
                    0.0);
    return out;
}

double laplace_beltrami(const MetricCoefficients& g, int dim, const ScalarFunction& f,
                        const std::vector<double>& point)
{
    const int n = dim;
    const Matrix<Jet> gm = g(point, 2);
    const Matrix<Jet> ginv = inverse(gm);
    const Jet rootdet = sqrt(determinant(gm));
    if (rootdet.value() <= 0.0) {
        throw std::domain_error("laplace_beltrami: singular metric");
    }
    const Jet fj = f(point, 2);
    auto at1 = [](const Jet& j) { return j.truncated(1); };

    double result = 0.0;
    for (int mu = 0; mu < n; ++mu) {
        Jet flux = Jet::constant(0.0, n, 1);
        for (int nu = 0; nu < n; ++nu) {
            flux += at1(rootdet) *
                    at1(ginv(static_cast<std::size_t>(mu), static_cast<std::size_t>(nu))) *
                    fj.partial(nu);
        }
        result += flux.d1(mu);
    }
    return result / rootdet.value();
}

std::vector<double> weyl_tensor(const CurvatureBundle& curv)
{
    const int n = curv.dim;
    if (n < 3) throw std::invalid_argument("weyl_tensor: dimension must be >= 3");
    const auto& ric = curv.ricci_flat;
    const double rs = curv.scalar;
    std::vector<double> w(curv.riemann.size(), 0.0);
    auto delta = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                for (int d = 0; d < n; ++d) {
                    const double kn =
                        delta(a, c) * ric(static_cast<std::size_t>(b), static_cast<std::size_t>(d)) -
                        delta(a, d) * ric(static_cast<std::size_t>(b), static_cast<std::size_t>(c)) +
                        delta(b, d) * ric(static_cast<std::size_t>(a), static_cast<std::size_t>(c)) -
                        delta(b, c) * ric(static_cast<std::size_t>(a), static_cast<std::size_t>(d));
                    const double dd = delta(a, c) * delta(b, d) - delta(a, d) * delta(b, c);
                    w[idx4(n, a, b, c, d)] =
                        curv.r(a, b, c, d) - kn / (n - 2) + rs * dd / ((n - 1) * (n - 2));
                }
            }
        }
    }
    return w;
}

WeylInvariants weyl_invariants(const CurvatureBundle& curv, bool project_weyl)
{
    const int n = curv.dim;
    const std::vector<double> w = project_weyl ? weyl_tensor(curv) : curv.riemann;
    auto wv = [&](int a, int b, int c, int d) { return w[idx4(n, a, b, c, d)]; };

    WeylInvariants out;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    out.quad1 += wv(a, b, i, j) * wv(i, j, a, b);
                    for (int p = 0; p < n; ++p) {
                        for (int q = 0; q < n; ++q) {
                            out.cub1 += wv(a, b, i, j) * wv(i, j, p, q) * wv(p, q, a, b);
                            out.cub2 += wv(i, j, p, q) * wv(a, p, b, q) * wv(a, b, i, j);
                            out.cub3 += wv(i, j, p, q) * wv(a, p, b, q) * wv(a, i, b, j);
                            for (int m = 0; m < n; ++m) {
                                for (int s = 0; s < n; ++s) {
                                    out.quart1 += wv(a, b, i, j) * wv(i, j, p, q) *
                                                  wv(p, q, m, s) * wv(m, s, a, b);
                                    out.quart2 += wv(i, j, p, q) * wv(p, a, q, b) *
                                                  wv(a, m, b, s) * wv(m, s, i, j);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    return out;
}

SixFormDensities curvature_6forms(const CurvatureBundle& curv)
{
    if (curv.dim != 6) throw std::invalid_argument("curvature_6forms: dimension must be 6");
    const auto& perms = permutations6();
    SixFormDensities out;

    // Tr(R^R^R): coefficient of the volume form with R^{ab} = (1/2) R_{ab|cd} e^c e^d.
    for (int a = 0; a < 6; ++a) {
        for (int b = 0; b < 6; ++b) {
            for (int c = 0; c < 6; ++c) {
                for (const auto& [p, sign] : perms) {
                    out.ch += sign * curv.r(a, b, p[0], p[1]) * curv.r(b, c, p[2], p[3]) *
                              curv.r(c, a, p[4], p[5]);
                }
            }
        }
    }
    out.ch /= 8.0;

    for (const auto& [q, qsign] : perms) {
        for (const auto& [p, psign] : perms) {
            out.e += qsign * psign * curv.r(q[0], q[1], p[0], p[1]) *
                     curv.r(q[2], q[3], p[2], p[3]) * curv.r(q[4], q[5], p[4], p[5]);
        }
    }
    out.e /= 8.0;
    return out;
}

double bianchi_residual(const CurvatureBundle& curv)
{
    const int n = curv.dim;
    double worst = 0.0;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                for (int d = 0; d < n; ++d) {
                    worst = std::max(worst, std::abs(curv.r(a, b, c, d) + curv.r(a, c, d, b) +
                                                     curv.r(a, d, b, c)));
                }
            }
        }
    }
    return worst;
}

}  // namespace toric
