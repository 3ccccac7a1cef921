// SPDX-License-Identifier: MIT
/**
    \file
    \brief Dense multivariate truncated-Taylor (jet) arithmetic up to order 4.

    A Jet carries the value and all partial derivatives (as Taylor
    coefficients) of a scalar function at a point, truncated at a fixed
    total degree.  All curvature computations in this project obtain their
    derivatives through this type instead of symbolic algebra: evaluating a
    closed-form expression on jets yields derivatives that are exact up to
    floating-point roundoff.
*/

#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace toric {

/// Maximum truncation order supported (the extremality test needs FK'''').
inline constexpr int kMaxJetOrder = 4;

namespace detail {

/// Monomial basis for polynomials in `nvars` variables of total degree
/// <= `order`, with a precomputed multiplication table.  Shared between
/// all jets of the same shape.
struct JetBasis {
    int nvars = 0;
    int order = 0;
    std::vector<std::vector<int>> exponents;  ///< exponent tuple per basis index
    std::vector<std::vector<int>> product;    ///< product[i][j] = index of monomial i*j, or -1 if truncated
    std::vector<int> degree;                  ///< total degree per basis index

    JetBasis(int nv, int ord) : nvars(nv), order(ord)
    {
        std::vector<int> tuple(static_cast<std::size_t>(nv), 0);
        enumerate(tuple, 0, ord);
        const auto total = [](const std::vector<int>& t) {
            int d = 0;
            for (const int e : t) d += e;
            return d;
        };
        std::sort(exponents.begin(), exponents.end(),
                  [&total](const std::vector<int>& a, const std::vector<int>& b) {
                      const int da = total(a), db = total(b);
                      return da != db ? da < db : a < b;
                  });
        build_tables();
    }

    [[nodiscard]] std::size_t size() const { return exponents.size(); }

    [[nodiscard]] int index_of(const std::vector<int>& tuple) const
    {
        const auto it = index_.find(tuple);
        return it == index_.end() ? -1 : it->second;
    }

  private:
    std::map<std::vector<int>, int> index_;

    void enumerate(std::vector<int>& tuple, int var, int budget)
    {
        if (var == nvars) {
            exponents.push_back(tuple);
            return;
        }
        for (int e = 0; e <= budget; ++e) {
            tuple[static_cast<std::size_t>(var)] = e;
            enumerate(tuple, var + 1, budget - e);
        }
        tuple[static_cast<std::size_t>(var)] = 0;
    }

    void build_tables()
    {
        const std::size_t n = exponents.size();
        degree.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            degree[i] = 0;
            for (const int e : exponents[i]) degree[i] += e;
            index_[exponents[i]] = static_cast<int>(i);
        }
        product.assign(n, std::vector<int>(n, -1));
        std::vector<int> sum(static_cast<std::size_t>(nvars));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (degree[i] + degree[j] > order) continue;
                for (int v = 0; v < nvars; ++v)
                    sum[static_cast<std::size_t>(v)] =
                        exponents[i][static_cast<std::size_t>(v)] + exponents[j][static_cast<std::size_t>(v)];
                product[i][j] = index_of(sum);
            }
        }
    }
};

/// Basis cache keyed on (nvars, order); bases are immutable once built.
inline const JetBasis& basis_for(int nvars, int order)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<JetBasis>> cache;
    const std::scoped_lock lock(mutex);
    auto& slot = cache[{nvars, order}];
    if (!slot) slot = std::make_unique<JetBasis>(nvars, order);
    return *slot;
}

}  // namespace detail

/**
    \brief Truncated multivariate Taylor expansion of a scalar at a point.

    Coefficient `c[alpha]` stores the Taylor coefficient of the monomial
    `prod_i (x_i - p_i)^{alpha_i}`, so the partial derivative
    `d^alpha f` equals `c[alpha] * alpha!`.
*/
class Jet {
  public:
    Jet() : Jet(1, 0) {}

    Jet(int nvars, int order)
        : basis_(&detail::basis_for(nvars, order)), c_(basis_->size(), 0.0)
    {
        assert(order >= 0 && order <= kMaxJetOrder);
    }

    /// Constant jet.
    static Jet constant(double value, int nvars = 1, int order = kMaxJetOrder)
    {
        Jet j(nvars, order);
        j.c_[0] = value;
        return j;
    }

    /// Jet of the coordinate function x_var expanded at `value`.
    static Jet variable(double value, int var = 0, int nvars = 1, int order = kMaxJetOrder)
    {
        Jet j(nvars, order);
        j.c_[0] = value;
        if (order >= 1) {
            std::vector<int> tuple(static_cast<std::size_t>(nvars), 0);
            tuple[static_cast<std::size_t>(var)] = 1;
            j.c_[static_cast<std::size_t>(j.basis_->index_of(tuple))] = 1.0;
        }
        return j;
    }

    [[nodiscard]] int nvars() const { return basis_->nvars; }
    [[nodiscard]] int order() const { return basis_->order; }
    [[nodiscard]] double value() const { return c_[0]; }

    /// Taylor coefficient of the given exponent tuple (0 when truncated away).
    [[nodiscard]] double coefficient(const std::vector<int>& tuple) const
    {
        const int idx = basis_->index_of(tuple);
        return idx < 0 ? 0.0 : c_[static_cast<std::size_t>(idx)];
    }

    /// Partial derivative d^alpha f = coefficient * alpha!.
    [[nodiscard]] double derivative(const std::vector<int>& tuple) const
    {
        double factorial = 1.0;
        for (const int e : tuple)
            for (int k = 2; k <= e; ++k) factorial *= k;
        return coefficient(tuple) * factorial;
    }

    /// First partial derivative with respect to variable `var`.
    [[nodiscard]] double d1(int var = 0) const
    {
        std::vector<int> tuple(static_cast<std::size_t>(nvars()), 0);
        tuple[static_cast<std::size_t>(var)] = 1;
        return derivative(tuple);
    }

    /// Second partial derivative d2 f / dx_a dx_b.
    [[nodiscard]] double d2(int a, int b) const
    {
        std::vector<int> tuple(static_cast<std::size_t>(nvars()), 0);
        tuple[static_cast<std::size_t>(a)] += 1;
        tuple[static_cast<std::size_t>(b)] += 1;
        return derivative(tuple);
    }

    /// Univariate derivative of order `k` (nvars == 1 convenience).
    [[nodiscard]] double deriv(int k) const
    {
        assert(nvars() == 1);
        return derivative({k});
    }

    /**
        \brief Jet of the partial derivative with respect to variable `var`,
        truncated one order lower (derivative data beyond it is not known).
    */
    [[nodiscard]] Jet partial(int var) const
    {
        assert(order() >= 1);
        Jet r(nvars(), order() - 1);
        std::vector<int> tuple;
        for (std::size_t i = 0; i < r.c_.size(); ++i) {
            tuple = r.basis_->exponents[i];
            tuple[static_cast<std::size_t>(var)] += 1;
            const int src = basis_->index_of(tuple);
            if (src >= 0)
                r.c_[i] = c_[static_cast<std::size_t>(src)] *
                          tuple[static_cast<std::size_t>(var)];
        }
        return r;
    }

    /// Reduce the truncation order (drop higher coefficients).
    [[nodiscard]] Jet truncated(int new_order) const
    {
        assert(new_order <= order());
        Jet r(nvars(), new_order);
        for (std::size_t i = 0; i < r.c_.size(); ++i)
            r.c_[i] = c_[static_cast<std::size_t>(basis_->index_of(r.basis_->exponents[i]))];
        return r;
    }

    Jet& operator+=(const Jet& rhs)
    {
        check_shape(rhs);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
        return *this;
    }
    Jet& operator-=(const Jet& rhs)
    {
        check_shape(rhs);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
        return *this;
    }
    Jet& operator*=(double s)
    {
        for (double& x : c_) x *= s;
        return *this;
    }
    Jet& operator+=(double s)
    {
        c_[0] += s;
        return *this;
    }
    Jet& operator-=(double s)
    {
        c_[0] -= s;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator+(Jet a, double s) { return a += s; }
    friend Jet operator+(double s, Jet a) { return a += s; }
    friend Jet operator-(Jet a, double s) { return a -= s; }
    friend Jet operator-(double s, const Jet& a)
    {
        Jet r = -a;
        r += s;
        return r;
    }
    friend Jet operator*(Jet a, double s) { return a *= s; }
    friend Jet operator*(double s, Jet a) { return a *= s; }
    friend Jet operator/(Jet a, double s) { return a *= 1.0 / s; }
    friend Jet operator-(const Jet& a)
    {
        Jet r = a;
        for (double& x : r.c_) x = -x;
        return r;
    }

    friend Jet operator*(const Jet& a, const Jet& b)
    {
        a.check_shape(b);
        Jet r(a.nvars(), a.order());
        const auto& prod = a.basis_->product;
        const std::size_t n = a.c_.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i] == 0.0) continue;
            const auto& row = prod[i];
            for (std::size_t j = 0; j < n; ++j) {
                const int k = row[j];
                if (k >= 0) r.c_[static_cast<std::size_t>(k)] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }
    friend Jet operator/(double s, const Jet& b) { return reciprocal(b) * s; }

    /**
        \brief Compose a univariate function (given by its value and derivatives
        at `value()`) with this jet.

        `derivs[k]` must hold `f^{(k)}(value())` for k = 0..order.  The result
        is computed by Horner evaluation of the truncated series in the
        zero-constant part of the jet.
    */
    [[nodiscard]] Jet compose(const std::array<double, kMaxJetOrder + 1>& derivs) const
    {
        const int ord = order();
        Jet dx = *this;
        dx.c_[0] = 0.0;
        double factorial = 1.0;
        std::array<double, kMaxJetOrder + 1> a{};  // Taylor coefficients f^{(k)}/k!
        for (int k = 0; k <= ord; ++k) {
            if (k > 1) factorial *= k;
            a[static_cast<std::size_t>(k)] = derivs[static_cast<std::size_t>(k)] / factorial;
        }
        Jet r = Jet::constant(a[static_cast<std::size_t>(ord)], nvars(), ord);
        for (int k = ord - 1; k >= 0; --k) {
            r = r * dx;
            r += a[static_cast<std::size_t>(k)];
        }
        return r;
    }

    friend Jet reciprocal(const Jet& a)
    {
        const double x = a.value();
        if (x == 0.0) throw std::domain_error("jet: division by a jet with zero value");
        std::array<double, kMaxJetOrder + 1> d{};
        double p = 1.0 / x;  // (-1)^k k! / x^{k+1}
        double sign = 1.0;
        double fact = 1.0;
        for (int k = 0; k <= a.order(); ++k) {
            if (k > 1) fact *= k;
            d[static_cast<std::size_t>(k)] = sign * fact * p;
            p /= x;
            sign = -sign;
        }
        return a.compose(d);
    }

  private:
    const detail::JetBasis* basis_;
    std::vector<double> c_;

    void check_shape(const Jet& rhs) const
    {
        if (basis_ != rhs.basis_) throw std::invalid_argument("jet: shape mismatch");
    }
};

// ---------------------------------------------------------------------------
// Elementary functions
// ---------------------------------------------------------------------------

inline Jet exp(const Jet& a)
{
    const double e = std::exp(a.value());
    std::array<double, kMaxJetOrder + 1> d{};
    d.fill(e);
    return a.compose(d);
}

inline Jet log(const Jet& a)
{
    const double x = a.value();
    if (x <= 0.0) throw std::domain_error("jet: log of non-positive value");
    const std::array<double, kMaxJetOrder + 1> d = {std::log(x), 1.0 / x, -1.0 / (x * x),
                                                    2.0 / (x * x * x), -6.0 / (x * x * x * x)};
    return a.compose(d);
}

/// Real power with general exponent (value must be positive unless p is an integer).
inline Jet pow(const Jet& a, double p)
{
    const double x = a.value();
    if (x <= 0.0) throw std::domain_error("jet: pow of non-positive base");
    std::array<double, kMaxJetOrder + 1> d{};
    double coeff = 1.0;
    for (int k = 0; k <= a.order(); ++k) {
        d[static_cast<std::size_t>(k)] = coeff * std::pow(x, p - k);
        coeff *= (p - k);
    }
    return a.compose(d);
}

inline Jet sqrt(const Jet& a) { return pow(a, 0.5); }

inline Jet sin(const Jet& a)
{
    const double s = std::sin(a.value()), c = std::cos(a.value());
    const std::array<double, kMaxJetOrder + 1> d = {s, c, -s, -c, s};
    return a.compose(d);
}

inline Jet cos(const Jet& a)
{
    const double s = std::sin(a.value()), c = std::cos(a.value());
    const std::array<double, kMaxJetOrder + 1> d = {c, -s, -c, s, c};
    return a.compose(d);
}

inline Jet tan(const Jet& a) { return sin(a) / cos(a); }

inline Jet atan(const Jet& a)
{
    const double x = a.value();
    const double s = 1.0 + x * x;
    const std::array<double, kMaxJetOrder + 1> d = {
        std::atan(x), 1.0 / s, -2.0 * x / (s * s), (6.0 * x * x - 2.0) / (s * s * s),
        (24.0 * x - 24.0 * x * x * x) / (s * s * s * s)};
    return a.compose(d);
}

}  // namespace toric
