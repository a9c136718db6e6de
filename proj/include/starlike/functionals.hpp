#ifndef STARLIKE_FUNCTIONALS_HPP
#define STARLIKE_FUNCTIONALS_HPP

#include <complex>
#include <cstddef>
#include <string_view>

#include <starlike/candidate.hpp>
#include <starlike/errors.hpp>
#include <starlike/series.hpp>

// Differential functionals of a normalized f, each returned as a series of
// order N-1 for an input of order N.
namespace starlike
{

enum class functional_kind { starlike_q, convex_q, w_func, centered_q, lhs_a, lhs_b, mocanu_q };

constexpr std::string_view to_string(functional_kind k) noexcept
{
    switch (k) {
        case functional_kind::starlike_q:
            return "STARLIKE_Q";
        case functional_kind::convex_q:
            return "CONVEX_Q";
        case functional_kind::w_func:
            return "W_FUNC";
        case functional_kind::centered_q:
            return "CENTERED_Q";
        case functional_kind::lhs_a:
            return "LHS_A";
        case functional_kind::lhs_b:
            return "LHS_B";
        case functional_kind::mocanu_q:
            return "MOCANU_Q";
    }
    return "?";
}

namespace detail
{

// z f'(z)/f(z) - 1 and z f''(z)/f'(z), both with exactly zero constant term.
template <typename Real>
basic_series<Real> starlike_minus_one(const basic_candidate<Real> &f)
{
    const auto fp = derivative(f.series());
    const auto f_over_z = f.series().shifted_down(1);
    return (fp - f_over_z) / f_over_z;
}

template <typename Real>
basic_series<Real> convex_minus_one(const basic_candidate<Real> &f)
{
    const auto fp = derivative(f.series());
    const auto fpp = derivative(fp);
    return (fpp / fp).shifted_up(1);
}

} // namespace detail

// z f'/f; constant term exactly 1.
template <typename Real>
basic_series<Real> starlike_quotient(const basic_candidate<Real> &f)
{
    return detail::starlike_minus_one(f) + std::complex<Real>(1);
}

// 1 + z f''/f'; constant term exactly 1.
template <typename Real>
basic_series<Real> convex_quotient(const basic_candidate<Real> &f)
{
    return detail::convex_minus_one(f) + std::complex<Real>(1);
}

// w = f/(z f') - 1, vanishing to order >= n.
template <typename Real>
basic_series<Real> w_func(const basic_candidate<Real> &f)
{
    const auto fp = derivative(f.series());
    const auto f_over_z = f.series().shifted_down(1);
    return (f_over_z - fp) / fp;
}

// (beta - gamma) z f'/f + gamma (1 + z f''/f'); constant term exactly beta.
template <typename Real>
basic_series<Real> lhs_a(const basic_candidate<Real> &f, std::complex<Real> beta, std::complex<Real> gamma)
{
    return (beta - gamma) * detail::starlike_minus_one(f) + gamma * detail::convex_minus_one(f) + beta;
}

// beta (z f'/f - 1) + gamma z f''/f'; constant term exactly 0.
template <typename Real>
basic_series<Real> lhs_b(const basic_candidate<Real> &f, std::complex<Real> beta, std::complex<Real> gamma)
{
    return beta * detail::starlike_minus_one(f) + gamma * detail::convex_minus_one(f);
}

// (1 - alpha) z f'/f + alpha (1 + z f''/f'); alpha may be any real.
template <typename Real>
basic_series<Real> mocanu_functional(const basic_candidate<Real> &f, Real alpha)
{
    return std::complex<Real>(Real(1) - alpha) * detail::starlike_minus_one(f)
           + std::complex<Real>(alpha) * detail::convex_minus_one(f) + std::complex<Real>(1);
}

// f/(z f') - 1/(2 alpha) = w + (1 - 1/(2 alpha)), for 0 < alpha < 1.
template <typename Real>
basic_series<Real> centered_quotient(const basic_candidate<Real> &f, Real alpha)
{
    if (!(alpha > Real(0) && alpha < Real(1))) {
        throw parameter_error("centered_quotient needs 0 < alpha < 1");
    }
    return w_func(f) + std::complex<Real>(Real(1) - Real(1) / (Real(2) * alpha));
}

// z w'/w for w vanishing to order m: both z w' and w are divided by z^m before the
// division, so the quotient is analytic at 0 with constant term m. The order drops by m.
template <typename Real>
basic_series<Real> log_derivative_factored(const basic_series<Real> &w, std::size_t m)
{
    const Real tol = Real(1e-12) * std::max(Real(1), w.max_abs_coeff());
    const auto zwp = derivative(w).shifted_up(1);
    return zwp.shifted_down(m, tol) / w.shifted_down(m, tol);
}

} // namespace starlike

#endif
