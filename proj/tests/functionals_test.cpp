#include <complex>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <starlike/functionals.hpp>
#include <starlike/identities.hpp>

namespace
{

using namespace starlike;
using cplx = std::complex<double>;

// Oracle: direct evaluation of a polynomial and its first two derivatives.
struct poly_values {
    cplx f, df, d2f;
};

poly_values eval_poly(const std::vector<cplx> &c, cplx z)
{
    poly_values v{};
    cplx zk = 1.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        v.f += c[k] * zk;
        if (k + 1 < c.size()) {
            v.df += static_cast<double>(k + 1) * c[k + 1] * zk;
        }
        if (k + 2 < c.size()) {
            v.d2f += static_cast<double>((k + 2) * (k + 1)) * c[k + 2] * zk;
        }
        zk *= z;
    }
    return v;
}

candidate polynomial_candidate(std::size_t n, const std::vector<cplx> &c, std::size_t order)
{
    std::vector<cplx> padded(c);
    padded.resize(order + 1);
    return candidate(n, series(padded, order));
}

TEST(Functionals, PointwiseAgainstDirectEvaluation)
{
    const std::vector<cplx> c{0.0, 1.0, cplx(0.2, -0.1), cplx(0.05, 0.03), -0.01};
    const auto f = polynomial_candidate(1, c, 96);
    const cplx beta(0.4, 0.2), gamma(1.0, -0.5);
    const double alpha = 0.35;
    for (const cplx z : {cplx(0.3, 0.2), cplx(-0.5, 0.1), cplx(0.0, 0.6)}) {
        const auto v = eval_poly(c, z);
        const cplx p = z * v.df / v.f;
        const cplx conv = 1.0 + z * v.d2f / v.df;
        const cplx w = v.f / (z * v.df) - 1.0;
        EXPECT_LT(std::abs(evaluate(starlike_quotient(f), z) - p), 1e-12);
        EXPECT_LT(std::abs(evaluate(convex_quotient(f), z) - conv), 1e-12);
        EXPECT_LT(std::abs(evaluate(w_func(f), z) - w), 1e-12);
        EXPECT_LT(std::abs(evaluate(lhs_a(f, beta, gamma), z) - (beta + (beta - gamma) * (p - 1.0) + gamma * (conv - 1.0))),
                  1e-12);
        EXPECT_LT(std::abs(evaluate(lhs_b(f, beta, gamma), z) - (beta * (p - 1.0) + gamma * (conv - 1.0))), 1e-12);
        EXPECT_LT(std::abs(evaluate(mocanu_functional(f, alpha), z) - ((1 - alpha) * p + alpha * conv)), 1e-12);
        EXPECT_LT(std::abs(evaluate(centered_quotient(f, alpha), z) - (1.0 / p - 1.0 / (2 * alpha))), 1e-12);
    }
}

TEST(Functionals, KoebeClosedForms)
{
    // k(z) = z/(1-z)^2: z k'/k = (1+z)/(1-z) = 1 + 2z + 2z^2 + ...
    const auto p = starlike_quotient(koebe_function(40));
    EXPECT_NEAR(std::abs(p[0] - 1.0), 0.0, 1e-15);
    for (std::size_t k = 1; k < p.order(); ++k) {
        EXPECT_NEAR(std::abs(p[k] - 2.0), 0.0, 1e-12) << "k=" << k;
    }
}

TEST(Functionals, HalfplaneClosedForms)
{
    // h(z) = z/(1-z): z h'/h = 1/(1-z) and 1 + z h''/h' = (1+z)/(1-z).
    const auto f = halfplane_function(40);
    const auto p = starlike_quotient(f);
    const auto c = convex_quotient(f);
    for (std::size_t k = 0; k < c.order(); ++k) {
        EXPECT_NEAR(std::abs(p[k] - 1.0), 0.0, 1e-12);
        EXPECT_NEAR(std::abs(c[k] - (k == 0 ? 1.0 : 2.0)), 0.0, 1e-12);
    }
}

TEST(Functionals, IdentityFunctionIsTrivial)
{
    const auto f = identity_function(16);
    const cplx beta(0.3, 0.1), gamma(1.0, 0.0);
    const auto la = lhs_a(f, beta, gamma);
    EXPECT_EQ(la[0], beta);
    for (std::size_t k = 0; k <= w_func(f).order(); ++k) {
        EXPECT_EQ(w_func(f)[k], cplx(0.0));
        EXPECT_EQ(lhs_b(f, beta, gamma)[k], cplx(0.0));
    }
}

TEST(Functionals, ConstantTermsAndVanishingOrder)
{
    std::mt19937_64 rng(42);
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto f = random_candidate(n, 48, rng);
        const cplx beta = random_complex(rng, 2.0), gamma = random_complex(rng, 2.0);
        EXPECT_LT(std::abs(lhs_a(f, beta, gamma)[0] - beta), 1e-15);
        EXPECT_LT(std::abs(lhs_b(f, beta, gamma)[0]), 1e-15);
        const auto w = w_func(f);
        for (std::size_t k = 0; k < n; ++k) {
            EXPECT_LT(std::abs(w[k]), 1e-15) << "n=" << n << " k=" << k;
        }
        // Leading term: w = -n a_{n+1} z^n + ...
        const auto a = f.series()[n + 1];
        EXPECT_LT(std::abs(w[n] + static_cast<double>(n) * a), 1e-15);
    }
}

TEST(Functionals, MocanuEndpoints)
{
    std::mt19937_64 rng(9);
    const auto f = random_candidate(1, 32, rng);
    EXPECT_LT(max_abs_coeff_diff(mocanu_functional(f, 0.0), starlike_quotient(f)), 1e-15);
    EXPECT_LT(max_abs_coeff_diff(mocanu_functional(f, 1.0), convex_quotient(f)), 1e-15);
}

TEST(Functionals, CenteredNeedsAlphaInOpenUnitInterval)
{
    const auto f = koebe_function(16);
    EXPECT_THROW(centered_quotient(f, 0.0), parameter_error);
    EXPECT_THROW(centered_quotient(f, 1.0), parameter_error);
    EXPECT_NO_THROW(centered_quotient(f, 0.5));
}

TEST(Functionals, LogDerivativeFactored)
{
    // w = z^2 (1 + 0.5 z): z w'/w = 2 + 0.5 z / (1 + 0.5 z).
    const auto w = polynomial({0.0, 0.0, 1.0, 0.5}, 40);
    const auto q = log_derivative_factored(w, 2);
    EXPECT_NEAR(std::abs(q[0] - 2.0), 0.0, 1e-15);
    for (std::size_t k = 1; k <= q.order(); ++k) {
        const double expected = -std::pow(-0.5, static_cast<double>(k));
        EXPECT_NEAR(std::abs(q[k] - expected), 0.0, 1e-15) << "k=" << k;
    }
    EXPECT_THROW(log_derivative_factored(w, 3), series_error);
}

TEST(Functionals, RandomCandidatesStayZeroFree)
{
    // f/z and f' must stay away from zero on the disk for the quotients to exist.
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        const auto f = random_candidate(1 + i % 3, 48, rng);
        const auto fz = f.series().shifted_down(1);
        const auto df = derivative(f.series());
        for (int t = 0; t < 64; ++t) {
            const cplx z = std::polar(1.0, 2 * M_PI * t / 64);
            EXPECT_GT(std::abs(evaluate(fz, z)), 0.1);
            EXPECT_GT(std::abs(evaluate(df, z)), 0.1);
        }
    }
}

TEST(Functionals, KindNames)
{
    EXPECT_EQ(to_string(functional_kind::starlike_q), "STARLIKE_Q");
    EXPECT_EQ(to_string(functional_kind::lhs_b), "LHS_B");
}

} // namespace
