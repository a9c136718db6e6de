#ifndef STARLIKE_EXTREMALS_HPP
#define STARLIKE_EXTREMALS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <string_view>

#include <starlike/candidate.hpp>
#include <starlike/criteria.hpp>
#include <starlike/errors.hpp>
#include <starlike/functionals.hpp>
#include <starlike/series.hpp>

// The two example families attaining the hypotheses of THM_A and THM_B, built by
// formal series manipulation only.
namespace starlike
{

enum class extremal_family { a, b };

constexpr std::string_view to_string(extremal_family f) noexcept
{
    return f == extremal_family::a ? "EXTREMAL_A" : "EXTREMAL_B";
}

struct extremal_params {
    extremal_family family = extremal_family::b;
    int n = 1;
    double alpha = 0.5;
    std::complex<double> beta{1.0, 0.0};
    std::complex<double> gamma{1.0, 0.0};
};

// The criterion each family is built to satisfy.
inline criterion_params matching_criterion(const extremal_params &p)
{
    criterion_params c;
    c.kind = p.family == extremal_family::a ? criterion_kind::thm_a : criterion_kind::thm_b;
    c.n = p.n;
    c.alpha = p.alpha;
    c.beta = p.beta;
    c.gamma = p.gamma;
    return c;
}

// S, the right-hand side of the matching theorem.
inline double extremal_s(const extremal_params &p)
{
    return build_spec(matching_criterion(p)).rhs_bound;
}

// Throws parameter_error / inadmissible_error unless the family is well defined.
inline void validate(const extremal_params &p)
{
    const auto spec = build_spec(matching_criterion(p));
    if (p.family == extremal_family::a) {
        if (p.beta == std::complex<double>(0)) {
            throw parameter_error("beta=0: outer exponent gamma/beta undefined");
        }
        if (!(spec.rhs_bound > 0.0)) {
            throw parameter_error("S=0: the integrand divides by S");
        }
    } else if (p.beta + p.gamma == std::complex<double>(0)) {
        throw parameter_error("β+γ=0 (beta+gamma=0): outer exponent gamma/(beta+gamma) undefined");
    }
    if (!spec.admissible) {
        throw inadmissible_error(spec.constraint, spec.admissibility_margin);
    }
}

// Result of a constructor: the candidate plus the size of the exact-value snap
// applied to a_0 and a_1.
struct extremal_result {
    candidate f;
    double snap_delta = 0;
};

namespace detail
{

inline extremal_result snap_and_wrap(int n, series raw)
{
    std::vector<std::complex<double>> c(raw.coeffs().begin(), raw.coeffs().end());
    const double delta = std::max(std::abs(c[0]), std::abs(c[1] - 1.0));
    if (delta > 1e-13) {
        throw series_error("normalization drift " + std::to_string(delta) + " exceeds 1e-13");
    }
    c[0] = 0;
    c[1] = 1;
    for (int k = 2; k <= n; ++k) {
        if (std::abs(c[static_cast<std::size_t>(k)]) > 1e-12) {
            throw series_error("class shape drift at a_" + std::to_string(k));
        }
        c[static_cast<std::size_t>(k)] = 0;
    }
    const auto order = raw.order();
    return {candidate(static_cast<std::size_t>(n), series(std::move(c), order)), delta};
}

} // namespace detail

// f = ((beta/gamma) int_0^z t^{beta/gamma - 1} (1 + (conj(beta)/S) t^n)^E dt)^{gamma/beta},
// E = (S^2 - |beta|^2)/(n conj(beta) gamma). With c = beta/gamma the integral is
// z^c h(z), and (z^c)^{1/c} = z, so f = z ((c h)^{1/c}).
inline extremal_result build_extremal_a(const extremal_params &p, std::size_t order = default_trunc_order)
{
    if (p.family != extremal_family::a) {
        throw parameter_error("build_extremal_a needs family EXTREMAL_A");
    }
    validate(p);
    const auto n = static_cast<std::size_t>(p.n);
    if (order < n + 2) {
        throw series_error("truncation order too small for n=" + std::to_string(n));
    }
    const double s = extremal_s(p);
    const auto beta_bar = std::conj(p.beta);
    const auto inner_order = order - 1;
    const auto base = series::constant(1.0, inner_order) + series::monomial(n, inner_order, beta_bar / s);
    const auto exponent = (s * s - std::norm(p.beta)) / (static_cast<double>(n) * beta_bar * p.gamma);
    const auto inner = pow_unit(base, exponent);
    const auto c = p.beta / p.gamma;
    const auto h = integrate_offset(inner, c, n);
    const auto outer = pow_unit(h * c, p.gamma / p.beta);
    return detail::snap_and_wrap(p.n, outer.shifted_up(1));
}

// f = (((beta+gamma)/gamma) int_0^z t^{beta/gamma} exp((S/(n gamma)) t^n) dt)^{gamma/(beta+gamma)}.
// Here the integral is z^{c} h(z) with c = beta/gamma + 1 and again (z^c)^{1/c} = z.
inline extremal_result build_extremal_b(const extremal_params &p, std::size_t order = default_trunc_order)
{
    if (p.family != extremal_family::b) {
        throw parameter_error("build_extremal_b needs family EXTREMAL_B");
    }
    validate(p);
    const auto n = static_cast<std::size_t>(p.n);
    if (order < n + 2) {
        throw series_error("truncation order too small for n=" + std::to_string(n));
    }
    const double s = extremal_s(p);
    const auto inner_order = order - 1;
    const auto inner = exp_unit(series::monomial(n, inner_order, s / (static_cast<double>(n) * p.gamma)));
    const auto c = p.beta / p.gamma + 1.0;
    const auto h = integrate_offset(inner, c, n);
    const auto outer = pow_unit(h * c, p.gamma / (p.beta + p.gamma));
    return detail::snap_and_wrap(p.n, outer.shifted_up(1));
}

inline extremal_result build_extremal(const extremal_params &p, std::size_t order = default_trunc_order)
{
    return p.family == extremal_family::a ? build_extremal_a(p, order) : build_extremal_b(p, order);
}

// Largest coefficient residual of lhs_b(f) - S z^n, skipping the top two retained
// orders.
inline double verify_identity_b(const candidate &f, const extremal_params &p)
{
    const auto lhs = lhs_b(f, p.beta, p.gamma);
    const double s = extremal_s(p);
    const auto c = lhs.coeffs();
    const std::size_t last = lhs.order() >= 2 ? lhs.order() - 2 : 0;
    double worst = 0;
    for (std::size_t k = 0; k <= last; ++k) {
        const auto target = k == static_cast<std::size_t>(p.n) ? std::complex<double>(s) : std::complex<double>(0);
        worst = std::max(worst, std::abs(c[k] - target));
    }
    return worst;
}

// Closed-form Moebius candidates (num + S z^n) / (1 + (conj(num)/S) z^n) at the given order.
inline series moebius_candidate(std::complex<double> num, double s, std::size_t n, std::size_t order)
{
    const auto top = series::constant(num, order) + series::monomial(n, order, s);
    const auto bottom = series::constant(1.0, order) + series::monomial(n, order, std::conj(num) / s);
    return top / bottom;
}

// Coefficient residual of lhs_a(f) against both closed-form variants. The
// sampled sup of |lhs_a| is left to the disk oracle.
struct identity_a_residuals {
    double gamma_variant = 0; // (gamma + S z^n)/(1 + (conj(gamma)/S) z^n)
    double beta_variant = 0;  // (beta + S z^n)/(1 + (conj(beta)/S) z^n)
    // |beta| >= S puts a zero of 1 + (conj(beta)/S) z^n inside the closed disk.
    bool base_vanishes_in_disk = false;
};

inline identity_a_residuals identity_a_coefficient_residuals(const candidate &f, const extremal_params &p)
{
    const auto lhs = lhs_a(f, p.beta, p.gamma);
    const double s = extremal_s(p);
    const auto n = static_cast<std::size_t>(p.n);
    const auto residual = [&](const series &cand) {
        const auto lc = lhs.coeffs();
        const auto cc = cand.coeffs();
        const std::size_t last = lhs.order() >= 2 ? lhs.order() - 2 : 0;
        double worst = 0;
        for (std::size_t k = 0; k <= last; ++k) {
            worst = std::max(worst, std::abs(lc[k] - cc[k]));
        }
        return worst;
    };
    identity_a_residuals out;
    out.gamma_variant = residual(moebius_candidate(p.gamma, s, n, lhs.order()));
    out.beta_variant = residual(moebius_candidate(p.beta, s, n, lhs.order()));
    out.base_vanishes_in_disk = std::abs(p.beta) >= s;
    return out;
}

} // namespace starlike

#endif
