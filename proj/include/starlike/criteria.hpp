#ifndef STARLIKE_CRITERIA_HPP
#define STARLIKE_CRITERIA_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <starlike/errors.hpp>
#include <starlike/functionals.hpp>

namespace starlike
{

enum class criterion_kind { lemma_a, thm_a, cor_a, lemma_b, thm_b, mocanu };

constexpr std::string_view to_string(criterion_kind k) noexcept
{
    switch (k) {
        case criterion_kind::lemma_a:
            return "LEMMA_A";
        case criterion_kind::thm_a:
            return "THM_A";
        case criterion_kind::cor_a:
            return "COR_A";
        case criterion_kind::lemma_b:
            return "LEMMA_B";
        case criterion_kind::thm_b:
            return "THM_B";
        case criterion_kind::mocanu:
            return "MOCANU";
    }
    return "?";
}

inline std::optional<criterion_kind> parse_criterion_kind(std::string_view s)
{
    for (auto k : {criterion_kind::lemma_a, criterion_kind::thm_a, criterion_kind::cor_a, criterion_kind::lemma_b,
                   criterion_kind::thm_b, criterion_kind::mocanu}) {
        if (to_string(k) == s) {
            return k;
        }
    }
    return std::nullopt;
}

constexpr bool uses_alpha(criterion_kind k) noexcept
{
    return k == criterion_kind::thm_a || k == criterion_kind::cor_a || k == criterion_kind::thm_b
           || k == criterion_kind::mocanu;
}
constexpr bool uses_rho(criterion_kind k) noexcept
{
    return k == criterion_kind::lemma_a || k == criterion_kind::lemma_b;
}

// Scalars consumed by one criterion. For COR_A, gamma carries the corollary's real
// gamma and beta is ignored (the corollary fixes beta = 1).
struct criterion_params {
    criterion_kind kind = criterion_kind::thm_a;
    int n = 1;
    double alpha = 0.5;
    std::complex<double> beta{};
    std::complex<double> gamma{1.0, 0.0};
    double rho = 1.0;
};

// What the hypothesis asserts about the sampled functional.
enum class hypothesis_shape {
    modulus_below, // sup |LHS| < rhs_bound
    real_positive  // Re LHS > 0
};

// Bound, admissibility and conclusion geometry of one criterion. The conclusion
// always reads |f/(z f') - conclusion_center| < conclusion_radius, except for
// MOCANU whose conclusion is class membership itself.
struct criterion_spec {
    criterion_kind kind = criterion_kind::thm_a;
    double rhs_bound = 0;
    functional_kind lhs = functional_kind::lhs_a;
    hypothesis_shape shape = hypothesis_shape::modulus_below;
    double conclusion_center = 0;
    double conclusion_radius = 0;
    bool admissible = false;
    double admissibility_margin = 0;
    std::string constraint;
    // Re(z f'/f) > alpha cross-check threshold, when the criterion concludes S*(alpha).
    std::optional<double> starlike_order;
    bool wide_alpha = false;
};

namespace detail
{

inline void check_alpha_open_unit(double alpha, criterion_kind k)
{
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw parameter_error(std::string(to_string(k)) + " needs 0 < alpha < 1, got " + std::to_string(alpha));
    }
}

// Evaluates a two-branch bound: the first branch on (0, 1/2], the second on
// [1/2, 1). At exactly 1/2 both are computed and must coincide.
template <typename Low, typename High>
double branch_value(double alpha, Low low, High high)
{
    if (alpha < 0.5) {
        return low();
    }
    if (alpha > 0.5) {
        return high();
    }
    const double a = low();
    const double b = high();
    if (std::abs(a - b) > 1e-15 * std::max(1.0, std::abs(a))) {
        throw std::logic_error("branch formulas disagree at alpha = 1/2");
    }
    return a;
}

inline void validate(const criterion_params &p)
{
    if (p.n < 1) {
        throw parameter_error("n must be a positive integer");
    }
    if (p.kind != criterion_kind::mocanu && p.gamma == std::complex<double>(0)) {
        throw parameter_error("gamma must be nonzero");
    }
    if (uses_rho(p.kind) && !(p.rho > 0.0 && std::isfinite(p.rho))) {
        throw parameter_error("rho must be a positive real");
    }
    if (p.kind == criterion_kind::thm_a || p.kind == criterion_kind::thm_b || p.kind == criterion_kind::cor_a) {
        check_alpha_open_unit(p.alpha, p.kind);
    }
    if (p.kind == criterion_kind::mocanu && !std::isfinite(p.alpha)) {
        throw parameter_error("MOCANU needs a finite real alpha");
    }
    if (p.kind == criterion_kind::cor_a && p.gamma.imag() != 0.0) {
        throw parameter_error("COR_A takes a real gamma");
    }
}

inline criterion_spec theorem_a_spec(int n, double alpha, std::complex<double> beta, std::complex<double> gamma)
{
    const double nd = n;
    const double ratio = (beta / gamma).real();
    criterion_spec s;
    s.kind = criterion_kind::thm_a;
    s.lhs = functional_kind::lhs_a;
    s.rhs_bound = branch_value(
        alpha, [&] { return 0.5 * std::abs(nd * gamma - beta); },
        [&] { return std::abs(nd * gamma * (1.0 - alpha) - alpha * beta); });
    s.admissibility_margin = branch_value(
        alpha, [&] { return nd - ratio; }, [&] { return nd * (1.0 / alpha - 1.0) - ratio; });
    s.constraint = alpha <= 0.5 ? "Re(beta/gamma) < n" : "Re(beta/gamma) < n(1/alpha - 1)";
    s.admissible = s.admissibility_margin > 0.0;
    s.conclusion_center = 1.0 / (2.0 * alpha);
    s.conclusion_radius = 1.0 / (2.0 * alpha);
    s.starlike_order = alpha;
    return s;
}

} // namespace detail

// rho fed into the lemmas by the theorems: 1 on (0, 1/2], 1/alpha - 1 on [1/2, 1).
inline double implied_rho(const criterion_params &p)
{
    if (p.kind != criterion_kind::thm_a && p.kind != criterion_kind::thm_b && p.kind != criterion_kind::cor_a) {
        throw parameter_error("implied_rho is defined for THM_A, THM_B and COR_A only");
    }
    detail::check_alpha_open_unit(p.alpha, p.kind);
    return detail::branch_value(p.alpha, [] { return 1.0; }, [&] { return 1.0 / p.alpha - 1.0; });
}

// (beta, gamma) = (1, -gamma_real): the corollary as an instance of THM_A.
inline std::pair<std::complex<double>, std::complex<double>> corollary_mapping(double gamma_real)
{
    if (gamma_real == 0.0 || !std::isfinite(gamma_real)) {
        throw parameter_error("corollary gamma must be a nonzero real");
    }
    return {std::complex<double>(1.0), std::complex<double>(-gamma_real)};
}

// The corollary's own side condition: gamma > -1/n (alpha <= 1/2) or
// gamma > -alpha/(n(1 - alpha)) (alpha >= 1/2). Returns the signed margin.
inline double corollary_condition_margin(int n, double alpha, double gamma_real)
{
    const double nd = n;
    return detail::branch_value(
        alpha, [&] { return gamma_real + 1.0 / nd; }, [&] { return gamma_real + alpha / (nd * (1.0 - alpha)); });
}

inline criterion_spec build_spec(const criterion_params &p)
{
    detail::validate(p);
    const double nd = p.n;
    criterion_spec s;
    switch (p.kind) {
        case criterion_kind::lemma_a: {
            s.lhs = functional_kind::lhs_a;
            s.rhs_bound = std::abs(nd * p.rho * p.gamma - p.beta) / (1.0 + p.rho);
            s.admissibility_margin = nd * p.rho - (p.beta / p.gamma).real();
            s.constraint = "Re(beta/gamma) < n rho";
            s.admissible = s.admissibility_margin > 0.0;
            s.conclusion_center = 1.0;
            s.conclusion_radius = p.rho;
            break;
        }
        case criterion_kind::thm_a:
            s = detail::theorem_a_spec(p.n, p.alpha, p.beta, p.gamma);
            break;
        case criterion_kind::cor_a: {
            const auto [beta, gamma] = corollary_mapping(p.gamma.real());
            s = detail::theorem_a_spec(p.n, p.alpha, beta, gamma);
            const double side = corollary_condition_margin(p.n, p.alpha, p.gamma.real());
            if (side <= 0.0) {
                s.admissible = false;
                s.constraint = p.alpha <= 0.5 ? "gamma > -1/n" : "gamma > -alpha/(n(1 - alpha))";
            }
            break;
        }
        case criterion_kind::lemma_b: {
            s.lhs = functional_kind::lhs_b;
            s.rhs_bound = p.rho * std::abs(p.beta + p.gamma * (nd + 1.0)) / (1.0 + p.rho);
            s.admissibility_margin = (p.beta / p.gamma).real() + (nd + 1.0);
            s.constraint = "Re(beta/gamma) > -(n + 1)";
            s.admissible = s.admissibility_margin > 0.0;
            s.conclusion_center = 1.0;
            s.conclusion_radius = p.rho;
            break;
        }
        case criterion_kind::thm_b: {
            s.lhs = functional_kind::lhs_b;
            const double m = std::abs(p.beta + p.gamma * (nd + 1.0));
            s.rhs_bound = detail::branch_value(p.alpha, [&] { return 0.5 * m; }, [&] { return (1.0 - p.alpha) * m; });
            s.admissibility_margin = (p.beta / p.gamma).real() + (nd + 1.0);
            s.constraint = "Re(beta/gamma) > -(n + 1)";
            s.admissible = s.admissibility_margin > 0.0;
            s.conclusion_center = 1.0 / (2.0 * p.alpha);
            s.conclusion_radius = 1.0 / (2.0 * p.alpha);
            s.starlike_order = p.alpha;
            break;
        }
        case criterion_kind::mocanu: {
            s.lhs = functional_kind::mocanu_q;
            s.shape = hypothesis_shape::real_positive;
            s.rhs_bound = 0.0;
            s.admissibility_margin = std::numeric_limits<double>::infinity();
            s.constraint = "none (class definition)";
            s.admissible = true;
            s.wide_alpha = !(p.alpha > 0.0 && p.alpha < 1.0);
            s.conclusion_center = 0.0;
            s.conclusion_radius = std::numeric_limits<double>::infinity();
            break;
        }
    }
    s.kind = p.kind;
    return s;
}

} // namespace starlike

#endif
