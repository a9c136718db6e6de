#ifndef STARLIKE_IDENTITIES_HPP
#define STARLIKE_IDENTITIES_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <starlike/candidate.hpp>
#include <starlike/disk_oracle.hpp>
#include <starlike/extremals.hpp>
#include <starlike/functionals.hpp>
#include <starlike/series.hpp>

namespace starlike
{

// Random element of A_n: a_k = u_k * decay^(k-1) / k with u_k uniform in the unit
// disk. With decay <= 0.4 both f(z)/z and f'(z) stay zero-free on the closed disk.
template <typename Rng>
candidate random_candidate(std::size_t n, std::size_t order, Rng &rng, double decay = 0.4)
{
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<std::complex<double>> c(order + 1);
    c[1] = 1;
    for (std::size_t k = n + 1; k <= order; ++k) {
        std::complex<double> u;
        do {
            u = {unit(rng), unit(rng)};
        } while (std::abs(u) > 1.0);
        c[k] = u * std::pow(decay, static_cast<double>(k - 1)) / static_cast<double>(k);
    }
    return candidate(n, series(std::move(c), order));
}

template <typename Rng>
std::complex<double> random_complex(Rng &rng, double scale = 1.0)
{
    std::uniform_real_distribution<double> unit(-scale, scale);
    return {unit(rng), unit(rng)};
}

inline double max_abs_coeff_diff(const series &a, const series &b)
{
    const auto n = std::min(a.order(), b.order());
    double worst = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    return worst;
}

// lhs_a (1 + w) - (beta - gamma z w'), max coefficient modulus.
inline double identity_a_residual(const candidate &f, std::complex<double> beta, std::complex<double> gamma)
{
    const auto w = w_func(f);
    const auto zwp = derivative(w).shifted_up(1);
    const auto left = lhs_a(f, beta, gamma) * (w + std::complex<double>(1.0));
    const auto right = series::constant(beta, zwp.order()) - gamma * zwp;
    return max_abs_coeff_diff(left, right);
}

// lhs_b (1 + w) + (beta w + gamma (z w' + w)), max coefficient modulus.
inline double identity_b_residual(const candidate &f, std::complex<double> beta, std::complex<double> gamma)
{
    const auto w = w_func(f);
    const auto zwp = derivative(w).shifted_up(1);
    const auto left = lhs_b(f, beta, gamma) * (w + std::complex<double>(1.0));
    const auto right = beta * w + gamma * (zwp + w);
    return max_abs_coeff_diff(left + right, series(left.order()));
}

struct identity_sweep_result {
    double max_residual_a = 0;
    double max_residual_b = 0;
    std::size_t functions = 0;
    std::size_t evaluations = 0;
};

// For each n in ns: `functions` random f in A_n, each against `pairs` random (beta, gamma).
inline identity_sweep_result identity_sweep(const std::vector<std::size_t> &ns, std::size_t functions,
                                            std::size_t pairs, std::size_t order, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    identity_sweep_result out;
    for (const auto n : ns) {
        for (std::size_t i = 0; i < functions; ++i) {
            const auto f = random_candidate(n, order, rng);
            ++out.functions;
            for (std::size_t j = 0; j < pairs; ++j) {
                const auto beta = random_complex(rng, 2.0);
                auto gamma = random_complex(rng, 2.0);
                if (std::abs(gamma) < 0.1) {
                    gamma += 1.0;
                }
                out.max_residual_a = std::max(out.max_residual_a, identity_a_residual(f, beta, gamma));
                out.max_residual_b = std::max(out.max_residual_b, identity_b_residual(f, beta, gamma));
                ++out.evaluations;
            }
        }
    }
    return out;
}

inline constexpr double closed_form_match_tolerance = 1e-9;

// Which closed form, if any, the Example-A functional reduces to.
struct identity_a_probe {
    identity_a_residuals residuals;
    bool gamma_variant_matches = false;
    bool beta_variant_matches = false;
    double s = 0;
    double sampled_sup = 0;
    double sampled_bounded_sup = 0;
    double margin = 0; // S - (sup + tail)
    sample_point witness;
    bool sup_below_s = false;
};

inline identity_a_probe probe_identity_a(const candidate &f, const extremal_params &p, const sampling_config &cfg)
{
    identity_a_probe out;
    out.residuals = identity_a_coefficient_residuals(f, p);
    out.gamma_variant_matches = out.residuals.gamma_variant < closed_form_match_tolerance;
    out.beta_variant_matches = out.residuals.beta_variant < closed_form_match_tolerance;
    out.s = extremal_s(p);
    const auto sup = sup_on_disk(lhs_a(f, p.beta, p.gamma), cfg);
    out.sampled_sup = sup.sup;
    out.sampled_bounded_sup = sup.bounded_sup;
    out.witness = sup.witness;
    out.margin = out.s - sup.bounded_sup;
    out.sup_below_s = out.margin > 0.0;
    return out;
}

} // namespace starlike

#endif
