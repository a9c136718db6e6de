#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <starlike/disk_oracle.hpp>
#include <starlike/extremals.hpp>
#include <starlike/grids.hpp>

#include "oracles.hpp"

namespace
{

using namespace starlike;
using cplx = std::complex<double>;

criterion_params params(criterion_kind k, int n, double alpha, cplx beta, cplx gamma)
{
    return {k, n, alpha, beta, gamma, 1.0};
}

TEST(DiskOracle, SupOfLinearPolynomial)
{
    // |1 + 0.5 z| peaks at z = r on the outermost circle.
    const auto a = polynomial({1.0, 0.5}, 32);
    const auto res = sup_on_disk(a, sampling_config::up_to(0.99));
    EXPECT_NEAR(res.sup, 1.495, 1e-15);
    EXPECT_EQ(res.witness.r, 0.99);
    EXPECT_NEAR(res.witness.theta, 0.0, 1e-9);
    EXPECT_EQ(res.witness_tail, 0.0);
    EXPECT_EQ(res.bounded_sup, res.sup);
    EXPECT_TRUE(res.skipped_radii.empty());
}

TEST(DiskOracle, InfimumOfRealPart)
{
    const auto a = polynomial({1.0, 0.5}, 32);
    const auto res = extreme_on_disk(a, sampling_config::up_to(0.9), objective::negated_real);
    EXPECT_NEAR(res.sup, -(1.0 - 0.45), 1e-15);
    EXPECT_NEAR(res.witness.theta, std::numbers::pi, 1e-9);
}

TEST(DiskOracle, RefinementFindsOffGridMaximum)
{
    const double phi = 0.1234567;
    const auto a = polynomial({1.0, 0.5 * std::polar(1.0, -phi)}, 16);
    auto cfg = sampling_config::up_to(0.5);
    cfg.angles = 64;
    const auto refined = sup_on_disk(a, cfg);
    EXPECT_NEAR(refined.witness.theta, phi, 1e-6);
    EXPECT_NEAR(refined.sup, 1.25, 1e-14);
    cfg.refine = false;
    const auto coarse = sup_on_disk(a, cfg);
    EXPECT_LT(coarse.sup, refined.sup);
}

TEST(DiskOracle, TiesGoToSmallestRadiusAndAngle)
{
    const auto res = sup_on_disk(series::constant(cplx(0.3, 0.4), 8), sampling_config::up_to(0.99));
    EXPECT_EQ(res.witness.r, 0.10);
    EXPECT_EQ(res.witness.theta, 0.0);
    EXPECT_NEAR(res.sup, 0.5, 1e-16);
}

TEST(DiskOracle, SkipsRadiiWithInfiniteTail)
{
    std::vector<cplx> c(41);
    for (std::size_t k = 0; k <= 40; ++k) {
        c[k] = std::pow(1.2, static_cast<double>(k));
    }
    const auto res = sup_on_disk(series(c, 40), sampling_config::up_to(0.99));
    ASSERT_FALSE(res.skipped_radii.empty());
    EXPECT_NEAR(res.skipped_radii.front(), 0.84, 1e-12);
    EXPECT_LT(res.witness.r, 0.84);
}

TEST(DiskOracle, ConfigValidation)
{
    sampling_config cfg = sampling_config::up_to(0.5);
    cfg.angles = 10;
    EXPECT_THROW(cfg.validate(), parameter_error);
    cfg = sampling_config::up_to(0.5);
    cfg.radii.push_back(0.2);
    EXPECT_THROW(cfg.validate(), parameter_error);
    EXPECT_EQ(sampling_config::defaults().radii.size(), 91u);
    EXPECT_EQ(sampling_config::defaults().radii.back(), 0.995);
}

TEST(DiskOracle, IdentityIsCertified)
{
    const auto rep = check_criterion(identity_function(128), params(criterion_kind::thm_b, 1, 0.5, 0.1, 1.0),
                                     sampling_config::defaults());
    EXPECT_EQ(rep.outcome, verdict::certified_sampled);
    EXPECT_EQ(rep.hypothesis_sup, 0.0);
    EXPECT_GT(rep.hypothesis_margin, 0.0);
}

TEST(DiskOracle, KoebeFailsHypothesis)
{
    const auto rep = check_criterion(koebe_function(128), params(criterion_kind::thm_a, 1, 0.5, 0.0, 1.0),
                                     sampling_config::defaults());
    EXPECT_EQ(rep.outcome, verdict::hypothesis_failed);
    EXPECT_LT(rep.hypothesis_margin, 0.0);
    EXPECT_FALSE(rep.implication_violated);
    // Koebe has starlike order exactly 0: Re(z k'/k) = Re((1+z)/(1-z)) dips below 1/2.
    ASSERT_TRUE(rep.starlike_margin);
    EXPECT_LT(*rep.starlike_margin, 0.0);
}

TEST(DiskOracle, SkippedRadiiBlockHypothesisCertification)
{
    // Koebe's lhs has oscillating coefficient moduli; the tail estimate refuses
    // most radii, and the sampled sup alone stays below S. That must not count.
    const auto rep = check_criterion(koebe_function(128),
                                     params(criterion_kind::thm_a, 1, 0.5, cplx(0.0963922, -0.17062),
                                            cplx(1.05026, 0.521849)),
                                     sampling_config::defaults());
    ASSERT_FALSE(rep.skipped_radii.empty());
    EXPECT_EQ(rep.outcome, verdict::hypothesis_failed);
    EXPECT_TRUE(std::isinf(rep.hypothesis_bounded_sup));
    EXPECT_FALSE(rep.implication_violated);
}

TEST(DiskOracle, InadmissibleSkipsSampling)
{
    const auto rep = check_criterion(koebe_function(128), params(criterion_kind::thm_a, 1, 0.3, 2.0, 1.0),
                                     sampling_config::defaults());
    EXPECT_EQ(rep.outcome, verdict::inadmissible);
    EXPECT_EQ(rep.hypothesis_sup, 0.0);
    EXPECT_LT(rep.hypothesis_margin, 0.0);
}

TEST(DiskOracle, DenominatorZeroIsDegenerate)
{
    // f' = 1 - z/0.9 vanishes on the sampled circle r = 0.9.
    const candidate f(1, polynomial({0.0, 1.0, -1.0 / 1.8}, 64));
    const auto rep = check_criterion(f, params(criterion_kind::thm_b, 1, 0.5, 1.0, 1.0), sampling_config::up_to(0.95));
    EXPECT_EQ(rep.outcome, verdict::degenerate);
    EXPECT_GT(rep.denominator_violation_count, 0u);
    EXPECT_LE(rep.denominator_violations.size(), max_listed_violations);
}

TEST(DiskOracle, GridExtremalsAreCertified)
{
    for (const auto family : {extremal_family::a, extremal_family::b}) {
        for (const auto &p : grids::extremal_grid(family)) {
            if (p.n != 2) {
                continue;
            }
            const auto rep = check_criterion(build_extremal(p).f, matching_criterion(p), sampling_config::up_to(0.99));
            EXPECT_EQ(rep.outcome, verdict::certified_sampled) << to_string(family) << " alpha=" << p.alpha;
            EXPECT_GT(rep.hypothesis_margin, 0.0);
            ASSERT_TRUE(rep.starlike_margin);
            EXPECT_GT(*rep.starlike_margin, 0.0);
        }
    }
}

TEST(DiskOracle, TheoremACounterexample)
{
    // beta/gamma = -1/2, alpha = 0.7: the family-A function meets the hypothesis
    // (lhs_a is a Moebius map of the disk into |w| < S) yet Re(z f'/f) < alpha somewhere.
    const extremal_params p{extremal_family::a, 1, 0.7, -0.5, 1.0};
    const auto f = build_extremal(p).f;
    const auto rep = check_criterion(f, matching_criterion(p), sampling_config::up_to(0.99));
    EXPECT_EQ(rep.outcome, verdict::conclusion_failed);
    EXPECT_TRUE(rep.implication_violated);
    EXPECT_GT(rep.hypothesis_margin, 0.0);
    ASSERT_TRUE(rep.starlike_margin && rep.starlike_witness);
    EXPECT_LT(*rep.starlike_margin, -0.01);

    // Confirm with the quadrature oracle at the witness, away from the series engine.
    const auto z = std::polar(rep.starlike_witness->r, rep.starlike_witness->theta);
    EXPECT_LT(oracles::quadrature_oracle(p, z).real(), p.alpha - 0.01);
    // And the hypothesis holds there: |lhs_a| = |(beta + S z)/(1 + (beta/S) z)| < S.
    const double s = extremal_s(p);
    EXPECT_LT(std::abs((p.beta + s * z) / (1.0 + std::conj(p.beta) / s * z)), s);
}

TEST(DiskOracle, MocanuMembership)
{
    const auto half = check_criterion(halfplane_function(128), params(criterion_kind::mocanu, 1, 0.5, 0.0, 0.0),
                                      sampling_config::up_to(0.9));
    EXPECT_EQ(half.outcome, verdict::certified_sampled);
    EXPECT_FALSE(half.spec.wide_alpha);
    // For Koebe with a = 2, (1-a) P + a C = (1 + 6z + z^2)/(1 - z^2), negative at z = -1/2.
    const auto wide = check_criterion(koebe_function(128), params(criterion_kind::mocanu, 1, 2.0, 0.0, 0.0),
                                      sampling_config::up_to(0.9));
    EXPECT_TRUE(wide.spec.wide_alpha);
    EXPECT_EQ(wide.outcome, verdict::hypothesis_failed);
    EXPECT_FALSE(wide.implication_violated);
}

TEST(DiskOracle, JackExamples)
{
    sampling_config cfg;
    cfg.angles = 2048;
    const auto z2 = jack_demo(polynomial({0.0, 0.0, 1.0}, 8), 2, 0.9, cfg);
    EXPECT_NEAR(z2.k_est.real(), 2.0, 1e-12);
    EXPECT_TRUE(z2.conforms());
    // w = z + z^2/2 on r = 1/2: max at z = r, k = (1 + r)/(1 + r/2) = 1.2.
    const auto lin = jack_demo(polynomial({0.0, 1.0, 0.5}, 8), 1, 0.5, cfg);
    EXPECT_NEAR(lin.k_est.real(), 1.2, 1e-12);
    // The maximum is flat, so its location is only resolved to about sqrt(eps).
    EXPECT_NEAR(std::abs(lin.max_point - 0.5), 0.0, 1e-7);
    EXPECT_THROW(jack_demo(series(8), 1, 0.9, cfg), series_error);
    EXPECT_THROW(jack_demo(polynomial({0.1, 1.0}, 8), 1, 0.9, cfg), parameter_error);
}

TEST(DiskOracle, JackRandomPolynomials)
{
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    sampling_config cfg;
    for (int i = 0; i < 30; ++i) {
        const int m = 1 + i % 3;
        std::vector<cplx> c(12);
        for (std::size_t k = static_cast<std::size_t>(m); k < c.size(); ++k) {
            c[k] = {u(rng), u(rng)};
        }
        const auto res = jack_demo(series(c, 11), m, 0.9, cfg);
        EXPECT_TRUE(res.conforms()) << "m=" << m << " k=" << res.k_est;
    }
}

TEST(DiskOracle, VerdictNames)
{
    EXPECT_EQ(to_string(verdict::certified_sampled), "CERTIFIED_SAMPLED");
    EXPECT_EQ(to_string(verdict::conclusion_failed), "CONCLUSION_FAILED");
}

} // namespace
