// SPDX-License-Identifier: MIT
/*! \file  forms21.cpp
    \brief Assembly and rank analysis of the (2,1)-form duality system.
*/
#include "toric/forms21.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace toric {

namespace {

/// Minimal complex numbers over an exact or floating scalar field.
template <typename T>
struct Cplx {
    T re{}, im{};

    Cplx operator+(const Cplx& o) const { return {re + o.re, im + o.im}; }
    Cplx operator-(const Cplx& o) const { return {re - o.re, im - o.im}; }
    Cplx operator*(const Cplx& o) const
    {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    [[nodiscard]] Cplx conj() const { return {re, T(0) - im}; }
};

template <typename T>
bool is_zero(const T& x)
{
    return x == T(0);
}

/*! Hessian of the total symplectic potential over a generic scalar field:
      G_uu = v/(u(2v-u)),  G_uv = 1/(u-2v),  G_uw = 0,
      G_vv = 2 f0/(cw+2) + (u+2v)/(2v(2v-u)),
      G_vw = -c (cw + 4 v f0 + 2)/(2 (cw+2)^2),
      G_ww = (c^2 v w (c^3w^3+8c^2w^2+24cw+24) + 4 c^2 v^2 w f0 (c^2w^2+6cw+12)
              + 3 (cw+2)^5) / (2 w (cw+2)^3 (c^2w^2+6cw+12)) ,
    with c = 3(l1+l2)/q, f0 = (2 v0/FK(v0) - 1)/(2 v0), v0 = 2v/(cw+2) and
    FK the fiber profile of the Einstein base member. */
template <typename T>
Matrix<T> hessian_impl(const T& l1, const T& l2, const T& u, const T& v, const T& w)
{
    const T s = l1 + l2;
    const T q = l1 * l1 + l1 * l2 + l2 * l2;
    const T c = T(3) * s / q;
    const T cw = c * w;
    const T cw2 = cw + T(2);

    const T den_u = u * (T(2) * v - u);
    if (is_zero(u) || is_zero(T(2) * v - u) || is_zero(v) || is_zero(w) ||
        is_zero(cw2)) {
        throw std::domain_error("hessian: moment point on a denominator zero locus");
    }

    const T v0 = T(2) * v / cw2;
    const T fknum = q * v0 * v0 - s * v0 * v0 * v0 - l1 * l1 * l2 * l2;
    if (is_zero(fknum)) {
        throw std::domain_error("hessian: fiber profile vanishes at the base moment");
    }
    const T fk = fknum / (q * v0);
    const T f0 = (T(2) * v0 / fk - T(1)) / (T(2) * v0);

    const T quadratic = cw * cw + T(6) * cw + T(12);
    if (is_zero(quadratic)) {
        throw std::domain_error("hessian: fiber quadratic vanishes");
    }

    Matrix<T> g(3, 3, T(0));
    g(0, 0) = v / den_u;
    g(0, 1) = T(1) / (u - T(2) * v);
    g(1, 0) = g(0, 1);
    g(1, 1) = T(2) * f0 / cw2 + (u + T(2) * v) / (T(2) * v * (T(2) * v - u));
    g(1, 2) = T(0) - c * (cw + T(4) * v * f0 + T(2)) / (T(2) * cw2 * cw2);
    g(2, 1) = g(1, 2);
    const T cube = cw2 * cw2 * cw2;
    g(2, 2) = (c * c * v * w * (cw * cw * cw + T(8) * cw * cw + T(24) * cw + T(24)) +
               T(4) * c * c * v * v * w * f0 * quadratic + T(3) * cube * cw2 * cw2) /
              (T(2) * w * cube * quadratic);
    return g;
}

/*! 20 x 18 duality system over a generic field.  Real coordinates are
    ordered y = (u, v, w, tau, phi, chi); the complex differentials are
    dz^1 = omega^1 + i dphi, dz^2 = omega^2 + i dtau, dz^3 = omega^3 + i dchi
    with omega^i the i-th Hessian row.  The rows impose Y_I = sign * s_I
    X_{sigma(I)} pairing each 3-form component with its complementary one. */
template <typename T>
Matrix<T> duality_impl(const Matrix<T>& hess, int sign)
{
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("duality system: sign must be +1 or -1");
    }

    // Complex one-forms as 6-vectors over y.
    const int angle_of[3] = {4, 3, 5};  // phi, tau, chi
    Cplx<T> dz[3][6];
    for (int i = 0; i < 3; ++i) {
        for (int l = 0; l < 3; ++l) {
            dz[i][l].re = hess(static_cast<std::size_t>(i), static_cast<std::size_t>(l));
        }
        dz[i][angle_of[i]].im = T(1);
    }

    // Component order of the assembled 3-form.
    static const int triple[20][3] = {
        {0, 1, 2}, {0, 1, 4}, {0, 1, 3}, {0, 1, 5}, {0, 2, 4},
        {0, 2, 3}, {0, 2, 5}, {0, 3, 4}, {0, 4, 5}, {0, 3, 5},
        {1, 2, 4}, {1, 2, 3}, {1, 2, 5}, {1, 3, 4}, {1, 4, 5},
        {1, 3, 5}, {2, 3, 4}, {2, 4, 5}, {2, 3, 5}, {3, 4, 5}};

    // Q[t][m]: coefficient of component t for the m-th complex parameter,
    // m = 3 * pair + k with pairs (1,2), (1,3), (2,3) of dz and dzbar^k.
    static const int pair[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    Cplx<T> coeff[20][9];
    for (int t = 0; t < 20; ++t) {
        for (int p = 0; p < 3; ++p) {
            for (int k = 0; k < 3; ++k) {
                const Cplx<T>* a = dz[pair[p][0]];
                const Cplx<T>* b = dz[pair[p][1]];
                Cplx<T> cbar[6];
                for (int l = 0; l < 6; ++l) cbar[l] = dz[k][l].conj();
                const int* yy = triple[t];
                const auto det2 = [&](const Cplx<T>* r1, const Cplx<T>* r2, int c1,
                                      int c2) {
                    return r1[yy[c1]] * r2[yy[c2]] - r1[yy[c2]] * r2[yy[c1]];
                };
                coeff[t][p * 3 + k] = a[yy[0]] * det2(b, cbar, 1, 2) -
                                      a[yy[1]] * det2(b, cbar, 0, 2) +
                                      a[yy[2]] * det2(b, cbar, 0, 1);
            }
        }
    }

    // Pairing of complementary components with the duality signs.
    static const int sigma[20] = {19, 18, 17, 16, 15, 14, 13, 12, 11, 10,
                                  9,  8,  7,  6,  5,  4,  3,  2,  1,  0};
    static const int s_of[20] = {1, 1, -1, -1, -1, 1, 1, 1, 1, -1,
                                 1, -1, -1, -1, -1, 1, 1, 1, -1, -1};

    Matrix<T> m(20, 18, T(0));
    for (int t = 0; t < 20; ++t) {
        const int tt = sigma[t];
        const T factor = T(sign * s_of[t]);
        for (int p = 0; p < 18; ++p) {
            const bool is_g = p >= 9;
            const int idx = is_g ? p - 9 : p;
            // X = Re for f, -Im for g; Y = Im for f, Re for g.
            const T y = is_g ? coeff[t][idx].re : coeff[t][idx].im;
            const T x = is_g ? T(0) - coeff[tt][idx].im : coeff[tt][idx].re;
            m(static_cast<std::size_t>(t), static_cast<std::size_t>(p)) =
                y - factor * x;
        }
    }
    return m;
}

}  // namespace

Matrix<Rational> rational_hessian(const Rational& l1, const Rational& l2,
                                  const RationalPoint& pt)
{
    return hessian_impl<Rational>(l1, l2, pt.u, pt.v, pt.w);
}

Matrix<double> omega_forms(double l1, double l2, const std::array<double, 3>& moment)
{
    return hessian_impl<double>(l1, l2, moment[0], moment[1], moment[2]);
}

Matrix<Rational> duality_matrix_exact(const Rational& l1, const Rational& l2,
                                      const RationalPoint& pt, int sign)
{
    return duality_impl<Rational>(rational_hessian(l1, l2, pt), sign);
}

Matrix<double> duality_matrix(double l1, double l2, const std::array<double, 3>& moment,
                              int sign)
{
    return duality_impl<double>(omega_forms(l1, l2, moment), sign);
}

int rational_rank(Matrix<Rational> m)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        for (std::size_t j = col; j < cols; ++j) std::swap(m(row, j), m(pivot, j));
        for (std::size_t i = row + 1; i < rows; ++i) {
            if (m(i, col) == 0) continue;
            const Rational factor = m(i, col) / m(row, col);
            for (std::size_t j = col; j < cols; ++j) m(i, j) -= factor * m(row, j);
        }
        ++row;
        ++rank;
    }
    return rank;
}

int float_rank(const Matrix<double>& m, double tol)
{
    Eigen::MatrixXd em(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            em(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
        }
    }
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(em);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = tol * sv(0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) ++rank;
    }
    return rank;
}

RankReport assemble_and_rank_exact(const Rational& l1, const Rational& l2,
                                   const RationalPoint& pt, int sign)
{
    const int rank = rational_rank(duality_matrix_exact(l1, l2, pt, sign));
    return {rank, 18 - rank};
}

RankReport assemble_and_rank(double l1, double l2, const std::array<double, 3>& moment,
                             int sign)
{
    const int rank = float_rank(duality_matrix(l1, l2, moment, sign));
    return {rank, 18 - rank};
}

}  // namespace toric
