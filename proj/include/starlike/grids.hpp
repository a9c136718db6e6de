#ifndef STARLIKE_GRIDS_HPP
#define STARLIKE_GRIDS_HPP

#include <complex>
#include <utility>
#include <vector>

#include <starlike/extremals.hpp>

// Fixed parameter grids for the extremal sweeps. Every point keeps its
// admissibility margin at or above 0.1.
//
// EXTREMAL_A uses beta = x * gamma with real x = 0.1 or 0.05. Two side conditions
// shape this choice:
//  - |beta| < S, otherwise 1 + (conj(beta)/S) z^n vanishes inside the disk and the
//    function is not analytic there;
//  - beta/gamma real and nonnegative: for beta/gamma off the nonnegative axis the
//    inequality |gamma k w - beta| >= |gamma n rho - beta| used to reach the THM_A
//    conclusion can fail, and sampled counterexamples exist (for instance
//    beta = -0.5, gamma = 1, alpha = 0.7, n = 1).
namespace starlike::grids
{

inline const std::vector<int> &grid_n()
{
    static const std::vector<int> v{1, 2, 3};
    return v;
}

inline const std::vector<double> &grid_alpha()
{
    static const std::vector<double> v{0.3, 0.5, 0.7};
    return v;
}

using pair = std::pair<std::complex<double>, std::complex<double>>;

inline const std::vector<pair> &pairs_a()
{
    using c = std::complex<double>;
    static const std::vector<pair> v{
        {c(0.1, 0.0), c(1.0, 0.0)},
        {c(0.0, 0.1), c(0.0, 1.0)},
        {c(0.1, 0.05), c(1.0, 0.5)},
        {c(0.03, -0.04), c(0.6, -0.8)},
    };
    return v;
}

inline const std::vector<pair> &pairs_b()
{
    using c = std::complex<double>;
    static const std::vector<pair> v{
        {c(1.0, 0.0), c(1.0, 0.0)},
        {c(0.0, 1.0), c(1.0, 0.0)},
        {c(0.5, 0.0), c(1.0, 1.0)},
        {c(2.0, 1.0), c(1.0, -1.0)},
    };
    return v;
}

inline std::vector<extremal_params> extremal_grid(extremal_family family)
{
    std::vector<extremal_params> out;
    const auto &pairs = family == extremal_family::a ? pairs_a() : pairs_b();
    for (const int n : grid_n()) {
        for (const double alpha : grid_alpha()) {
            for (const auto &[beta, gamma] : pairs) {
                out.push_back({family, n, alpha, beta, gamma});
            }
        }
    }
    return out;
}

} // namespace starlike::grids

#endif
