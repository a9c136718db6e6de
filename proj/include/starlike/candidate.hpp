#ifndef STARLIKE_CANDIDATE_HPP
#define STARLIKE_CANDIDATE_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <utility>

#include <starlike/errors.hpp>
#include <starlike/series.hpp>

namespace starlike
{

// A truncated series certified to have the shape z + a_{n+1} z^{n+1} + ... of the
// class A_n: a_0 = 0, a_1 = 1 and a_2 .. a_n = 0, all exactly.
template <typename Real>
class basic_candidate
{
public:
    basic_candidate(std::size_t n, basic_series<Real> s) : m_n(n), m_series(std::move(s))
    {
        if (m_n == 0) {
            throw parameter_error("class index n must be positive");
        }
        if (m_series.order() < m_n + 2) {
            throw series_error("truncation order " + std::to_string(m_series.order()) + " too small for n="
                               + std::to_string(m_n) + " (need at least " + std::to_string(m_n + 2) + ")");
        }
        const auto c = m_series.coeffs();
        if (c[0] != std::complex<Real>(0)) {
            throw series_error("class shape violated: a_0 must be exactly 0");
        }
        if (c[1] != std::complex<Real>(1)) {
            throw series_error("class shape violated: a_1 must be exactly 1");
        }
        for (std::size_t k = 2; k <= m_n; ++k) {
            if (c[k] != std::complex<Real>(0)) {
                throw series_error("class shape violated: a_" + std::to_string(k) + " must be exactly 0 for n="
                                   + std::to_string(m_n));
            }
        }
    }

    [[nodiscard]] std::size_t n() const noexcept
    {
        return m_n;
    }
    [[nodiscard]] const basic_series<Real> &series() const noexcept
    {
        return m_series;
    }
    [[nodiscard]] std::size_t order() const noexcept
    {
        return m_series.order();
    }

private:
    std::size_t m_n;
    basic_series<Real> m_series;
};

using candidate = basic_candidate<double>;

// The built-in test functions on A_1 (the identity also lies in every A_n).
inline candidate identity_function(std::size_t order, std::size_t n = 1)
{
    return candidate(n, series::monomial(1, order));
}

// z / (1 - z)^2 = sum k z^k.
inline candidate koebe_function(std::size_t order)
{
    std::vector<std::complex<double>> c(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        c[k] = static_cast<double>(k);
    }
    return candidate(1, series(std::move(c), order));
}

// z / (1 - z) = sum z^k, mapping the disk onto the half-plane Re w > -1/2.
inline candidate halfplane_function(std::size_t order)
{
    std::vector<std::complex<double>> c(order + 1, 1.0);
    c[0] = 0;
    return candidate(1, series(std::move(c), order));
}

} // namespace starlike

#endif
