#ifndef STARLIKE_SERIES_HPP
#define STARLIKE_SERIES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <starlike/errors.hpp>

namespace starlike
{

// Tolerances shared by the series engine.
inline constexpr double unit_tolerance = 1e-12;
inline constexpr double resonance_tolerance = 1e-8;
inline constexpr std::size_t default_trunc_order = 128;

// Truncated power series c_0 + c_1 z + ... + c_N z^N + O(z^{N+1}).
//
// Values are immutable: every operation returns a new series whose truncation
// order never exceeds what its inputs justify.
template <typename Real>
class basic_series
{
public:
    using real_type = Real;
    using value_type = std::complex<Real>;

    // The zero series of the given order.
    explicit basic_series(std::size_t order = 0) : m_coeffs(order + 1) {}

    basic_series(std::vector<value_type> coeffs, std::size_t order) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.size() != order + 1) {
            throw series_error("coefficient count " + std::to_string(m_coeffs.size())
                               + " does not match truncation order " + std::to_string(order));
        }
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            if (!std::isfinite(m_coeffs[k].real()) || !std::isfinite(m_coeffs[k].imag())) {
                throw non_finite_coefficient(k);
            }
        }
    }

    static basic_series constant(value_type c, std::size_t order)
    {
        basic_series s(order);
        s.m_coeffs[0] = c;
        return s;
    }

    // z^k truncated at the given order (zero series when k > order).
    static basic_series monomial(std::size_t k, std::size_t order, value_type c = value_type(1))
    {
        basic_series s(order);
        if (k <= order) {
            s.m_coeffs[k] = c;
        }
        return s;
    }

    [[nodiscard]] std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1;
    }
    [[nodiscard]] std::span<const value_type> coeffs() const noexcept
    {
        return m_coeffs;
    }
    [[nodiscard]] const value_type &operator[](std::size_t k) const
    {
        return m_coeffs.at(k);
    }

    // Same series at a lower truncation order.
    [[nodiscard]] basic_series truncated(std::size_t order) const
    {
        if (order > this->order()) {
            throw series_error("cannot raise truncation order from " + std::to_string(this->order()) + " to "
                               + std::to_string(order));
        }
        return basic_series(std::vector<value_type>(m_coeffs.begin(), m_coeffs.begin() + order + 1), order);
    }

    // Multiplication by z^k; the order grows by k.
    [[nodiscard]] basic_series shifted_up(std::size_t k) const
    {
        std::vector<value_type> out(m_coeffs.size() + k);
        std::copy(m_coeffs.begin(), m_coeffs.end(), out.begin() + k);
        return from_raw(std::move(out));
    }

    // Division by z^k. The dropped coefficients must vanish; the order shrinks by k.
    [[nodiscard]] basic_series shifted_down(std::size_t k, Real zero_tol = Real(0)) const
    {
        if (k > order()) {
            throw series_error("cannot factor z^" + std::to_string(k) + " from a series of order "
                               + std::to_string(order()));
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (std::abs(m_coeffs[j]) > zero_tol) {
                throw series_error("coefficient of z^" + std::to_string(j) + " does not vanish; cannot factor z^"
                                   + std::to_string(k));
            }
        }
        return from_raw(std::vector<value_type>(m_coeffs.begin() + k, m_coeffs.end()));
    }

    friend basic_series operator+(const basic_series &a, const basic_series &b)
    {
        const auto n = std::min(a.order(), b.order());
        std::vector<value_type> out(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            out[k] = a.m_coeffs[k] + b.m_coeffs[k];
        }
        return from_raw(std::move(out));
    }
    friend basic_series operator-(const basic_series &a, const basic_series &b)
    {
        const auto n = std::min(a.order(), b.order());
        std::vector<value_type> out(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            out[k] = a.m_coeffs[k] - b.m_coeffs[k];
        }
        return from_raw(std::move(out));
    }
    friend basic_series operator-(const basic_series &a)
    {
        return a * value_type(-1);
    }
    friend basic_series operator*(const basic_series &a, value_type c)
    {
        std::vector<value_type> out(a.m_coeffs);
        for (auto &x : out) {
            x *= c;
        }
        return from_raw(std::move(out));
    }
    friend basic_series operator*(value_type c, const basic_series &a)
    {
        return a * c;
    }
    // Adds a scalar to the constant term.
    friend basic_series operator+(const basic_series &a, value_type c)
    {
        std::vector<value_type> out(a.m_coeffs);
        out[0] += c;
        return from_raw(std::move(out));
    }
    friend basic_series operator+(value_type c, const basic_series &a)
    {
        return a + c;
    }
    friend basic_series operator-(const basic_series &a, value_type c)
    {
        return a + (-c);
    }
    friend basic_series operator-(value_type c, const basic_series &a)
    {
        return (-a) + c;
    }

    // Cauchy product truncated at the smaller order.
    friend basic_series operator*(const basic_series &a, const basic_series &b)
    {
        const auto n = std::min(a.order(), b.order());
        std::vector<value_type> out(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            value_type acc{};
            for (std::size_t j = 0; j <= k; ++j) {
                acc += a.m_coeffs[j] * b.m_coeffs[k - j];
            }
            out[k] = acc;
        }
        return from_raw(std::move(out));
    }

    friend basic_series operator/(const basic_series &a, const basic_series &b)
    {
        return divide(a, b);
    }

    // Quotient q with q * b = a to the smaller order. The divisor's constant term must
    // be a unit: |b_0| >= unit_tolerance * max_k |b_k|.
    static basic_series divide(const basic_series &a, const basic_series &b)
    {
        const auto n = std::min(a.order(), b.order());
        const auto b0 = b.m_coeffs[0];
        Real scale(0);
        for (std::size_t k = 0; k <= n; ++k) {
            scale = std::max(scale, std::abs(b.m_coeffs[k]));
        }
        if (!(std::abs(b0) >= Real(unit_tolerance) * scale) || b0 == value_type(0)) {
            throw non_unit_divisor(std::abs(b0));
        }
        std::vector<value_type> q(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            value_type acc = a.m_coeffs[k];
            for (std::size_t j = 0; j < k; ++j) {
                acc -= q[j] * b.m_coeffs[k - j];
            }
            q[k] = acc / b0;
        }
        return from_raw(std::move(q));
    }

    [[nodiscard]] Real max_abs_coeff() const noexcept
    {
        Real m(0);
        for (const auto &c : m_coeffs) {
            m = std::max(m, std::abs(c));
        }
        return m;
    }

    friend bool operator==(const basic_series &, const basic_series &) = default;

private:
    static basic_series from_raw(std::vector<value_type> coeffs)
    {
        basic_series s;
        s.m_coeffs = std::move(coeffs);
        s.check_finite();
        return s;
    }

    void check_finite() const
    {
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            if (!std::isfinite(m_coeffs[k].real()) || !std::isfinite(m_coeffs[k].imag())) {
                throw non_finite_coefficient(k);
            }
        }
    }

    std::vector<value_type> m_coeffs;
};

using series = basic_series<double>;

template <typename Real>
basic_series<Real> make_series(std::vector<std::complex<Real>> coeffs, std::size_t order)
{
    return basic_series<Real>(std::move(coeffs), order);
}

inline series make_series(std::initializer_list<std::complex<double>> coeffs)
{
    if (coeffs.size() == 0) {
        throw series_error("a series needs at least one coefficient");
    }
    return series(std::vector<std::complex<double>>(coeffs), coeffs.size() - 1);
}

// An exact polynomial, zero-padded up to the truncation order.
inline series polynomial(std::initializer_list<std::complex<double>> coeffs, std::size_t order)
{
    if (coeffs.size() > order + 1) {
        throw series_error("polynomial of degree " + std::to_string(coeffs.size() - 1)
                           + " exceeds truncation order " + std::to_string(order));
    }
    std::vector<std::complex<double>> c(coeffs);
    c.resize(order + 1);
    return series(std::move(c), order);
}

template <typename Real>
basic_series<Real> mul(const basic_series<Real> &a, const basic_series<Real> &b)
{
    return a * b;
}

template <typename Real>
basic_series<Real> div(const basic_series<Real> &a, const basic_series<Real> &b)
{
    return basic_series<Real>::divide(a, b);
}

// Term-wise derivative; the order drops by one.
template <typename Real>
basic_series<Real> derivative(const basic_series<Real> &a)
{
    if (a.order() == 0) {
        throw series_error("derivative of an order-0 series carries no information");
    }
    const auto c = a.coeffs();
    std::vector<std::complex<Real>> out(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) {
        out[k - 1] = c[k] * static_cast<Real>(k);
    }
    return basic_series<Real>(std::move(out), a.order() - 1);
}

// Antiderivative with zero constant term; the order grows by one.
template <typename Real>
basic_series<Real> antiderivative(const basic_series<Real> &a)
{
    const auto c = a.coeffs();
    std::vector<std::complex<Real>> out(a.order() + 2);
    for (std::size_t k = 0; k <= a.order(); ++k) {
        out[k + 1] = c[k] / static_cast<Real>(k + 1);
    }
    return basic_series<Real>(std::move(out), a.order() + 1);
}

// exp(a) for a series with vanishing constant term, from e' = a' e.
template <typename Real>
basic_series<Real> exp_unit(const basic_series<Real> &a)
{
    const auto c = a.coeffs();
    if (c[0] != std::complex<Real>(0)) {
        throw series_error("exp_unit needs a zero constant term; factor the scalar exponential first");
    }
    const auto n = a.order();
    std::vector<std::complex<Real>> e(n + 1);
    e[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        std::complex<Real> acc{};
        for (std::size_t j = 1; j <= k; ++j) {
            acc += static_cast<Real>(j) * c[j] * e[k - j];
        }
        e[k] = acc / static_cast<Real>(k);
    }
    return basic_series<Real>(std::move(e), n);
}

// Principal logarithm of a series with constant term 1; result has zero constant term.
template <typename Real>
basic_series<Real> log_unit(const basic_series<Real> &a)
{
    const auto c = a.coeffs();
    if (std::abs(c[0] - std::complex<Real>(1)) > Real(unit_tolerance)) {
        throw series_error("log_unit needs constant term 1, got (" + std::to_string(c[0].real()) + ", "
                           + std::to_string(c[0].imag()) + ")");
    }
    const auto n = a.order();
    // l' = a'/a, solved in place: k l_k = k a_k - sum_{j=1}^{k-1} j l_j a_{k-j}, scaled by 1/a_0.
    std::vector<std::complex<Real>> l(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        std::complex<Real> acc = static_cast<Real>(k) * c[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= static_cast<Real>(j) * l[j] * c[k - j];
        }
        l[k] = acc / (static_cast<Real>(k) * c[0]);
    }
    return basic_series<Real>(std::move(l), n);
}

// Principal power a^e for a series with constant term 1, as exp(e log a).
//
// A constant term within unit_tolerance of 1 is split off and raised with the
// scalar principal power, so rounding dust in a_0 is carried rather than dropped.
template <typename Real>
basic_series<Real> pow_unit(const basic_series<Real> &a, std::complex<Real> e)
{
    const auto a0 = a.coeffs()[0];
    if (std::abs(a0 - std::complex<Real>(1)) > Real(unit_tolerance)) {
        throw series_error("pow_unit needs constant term 1, got (" + std::to_string(a0.real()) + ", "
                           + std::to_string(a0.imag()) + ")");
    }
    if (e == std::complex<Real>(0)) {
        return basic_series<Real>::constant(1, a.order());
    }
    const auto normalized = a * (std::complex<Real>(1) / a0);
    auto out = exp_unit(log_unit(normalized) * e);
    return out * std::pow(a0, e);
}

// Given g and an exponent offset c, returns h with h_k = g_k / (c + k), so that
// the integral of t^{c-1} g(t) from 0 to z equals z^c h(z). The z^c factor is left
// to the caller. The lattice step n marks the powers k = 0, n, 2n, ... at which the
// integrand may carry mass; those (and any other nonzero entry) must be away from
// resonance |c + k| < resonance_tolerance.
template <typename Real>
basic_series<Real> integrate_offset(const basic_series<Real> &g, std::complex<Real> c, std::size_t n)
{
    if (n == 0) {
        throw series_error("lattice step n must be positive");
    }
    const auto gc = g.coeffs();
    if (gc[0] == std::complex<Real>(0)) {
        throw series_error("integrate_offset needs a nonzero constant term");
    }
    std::vector<std::complex<Real>> h(g.order() + 1);
    for (std::size_t k = 0; k <= g.order(); ++k) {
        const auto denom = c + static_cast<Real>(k);
        const bool checked = (k % n == 0) || gc[k] != std::complex<Real>(0);
        if (checked && std::abs(denom) < Real(resonance_tolerance)) {
            throw resonant_exponent(k, std::abs(denom));
        }
        h[k] = gc[k] == std::complex<Real>(0) ? std::complex<Real>(0) : gc[k] / denom;
    }
    return basic_series<Real>(std::move(h), g.order());
}

namespace detail
{

// Horner evaluation with explicit real arithmetic; no domain check.
template <typename Real>
inline std::complex<Real> horner(std::span<const std::complex<Real>> c, std::complex<Real> z) noexcept
{
    Real re(0), im(0);
    const Real zr = z.real(), zi = z.imag();
    for (std::size_t k = c.size(); k-- > 0;) {
        const Real t = re * zr - im * zi + c[k].real();
        im = re * zi + im * zr + c[k].imag();
        re = t;
    }
    return {re, im};
}

} // namespace detail

template <typename Real>
std::complex<Real> evaluate(const basic_series<Real> &a, std::complex<Real> z)
{
    if (!(std::abs(z) <= Real(1))) {
        throw domain_error("evaluation point outside the closed unit disk: |z| = " + std::to_string(std::abs(z)));
    }
    return detail::horner(a.coeffs(), z);
}

// Heuristic bound for the discarded tail sum_{k>N} c_k z^k on |z| = r.
//
// The growth ratio q is the largest per-step ratio between consecutive
// non-negligible coefficients in the top quartile of retained indices (a gap of
// g indices contributes the g-th root of the ratio). Coefficients below
// 1e-14 times the largest retained modulus count as negligible; an all-negligible
// top quartile yields 0. Returns +infinity when q r >= 1. Not rigorous.
template <typename Real>
Real tail_estimate(const basic_series<Real> &a, Real r)
{
    if (!(r >= Real(0) && r < Real(1))) {
        throw domain_error("tail_estimate needs 0 <= r < 1, got r = " + std::to_string(r));
    }
    const auto c = a.coeffs();
    const auto n = a.order();
    if (n == 0) {
        return std::abs(c[0]) == Real(0) ? Real(0) : std::numeric_limits<Real>::infinity();
    }
    const Real negligible = Real(1e-14) * a.max_abs_coeff();
    const std::size_t start = n - std::max<std::size_t>(1, (n + 1) / 4);
    Real q(0);
    bool any = false;
    std::size_t prev = start;
    bool have_prev = false;
    for (std::size_t k = start; k <= n; ++k) {
        const Real m = std::abs(c[k]);
        if (m <= negligible) {
            continue;
        }
        any = true;
        if (have_prev) {
            const Real ratio = m / std::abs(c[prev]);
            q = std::max(q, std::pow(ratio, Real(1) / static_cast<Real>(k - prev)));
        }
        prev = k;
        have_prev = true;
    }
    if (!any) {
        return Real(0);
    }
    const Real last = std::abs(c[prev]);
    if (q == Real(0)) {
        // A single surviving coefficient: no growth information, assume the classic
        // worst case for a bounded analytic function.
        q = Real(1);
    }
    if (q * r >= Real(1)) {
        return std::numeric_limits<Real>::infinity();
    }
    // Extrapolate from the last non-negligible coefficient across the missing indices.
    const Real lead = last * std::pow(q, static_cast<Real>(n - prev));
    return lead * q * std::pow(r, static_cast<Real>(n + 1)) / (Real(1) - q * r);
}

} // namespace starlike

#endif
