#ifndef STARLIKE_DISK_ORACLE_HPP
#define STARLIKE_DISK_ORACLE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <starlike/candidate.hpp>
#include <starlike/criteria.hpp>
#include <starlike/errors.hpp>
#include <starlike/functionals.hpp>
#include <starlike/series.hpp>

// Sampled certification on the unit disk. Every verdict here is a statement about
// finitely many sample points plus a heuristic tail bound, never a proof over the
// open disk.
namespace starlike
{

struct sampling_config {
    std::vector<double> radii;
    int angles = 2048;
    bool refine = true;
    double denom_floor = 1e-9;
    // Add the tail estimate to the hypothesis sup before comparing with the bound.
    bool add_tail = true;

    // Radii 0.10, 0.11, ..., max_radius (step 0.01), optionally followed by 0.995.
    static sampling_config up_to(double max_radius, bool with_outer = false)
    {
        sampling_config cfg;
        for (int i = 10; i <= 99; ++i) {
            const double r = i / 100.0;
            if (r <= max_radius + 1e-12) {
                cfg.radii.push_back(r);
            }
        }
        if (with_outer) {
            cfg.radii.push_back(0.995);
        }
        return cfg;
    }
    static sampling_config defaults()
    {
        return up_to(0.99, true);
    }

    void validate() const
    {
        if (radii.empty()) {
            throw parameter_error("sampling config needs at least one radius");
        }
        for (std::size_t i = 0; i < radii.size(); ++i) {
            if (!(radii[i] > 0.0 && radii[i] < 1.0)) {
                throw parameter_error("sampling radii must lie in (0, 1)");
            }
            if (i > 0 && !(radii[i] > radii[i - 1])) {
                throw parameter_error("sampling radii must be strictly ascending");
            }
        }
        if (angles < 64) {
            throw parameter_error("at least 64 angles per circle are required");
        }
        if (!(denom_floor >= 0.0)) {
            throw parameter_error("denominator floor must be nonnegative");
        }
    }
};

struct sample_point {
    double r = 0;
    double theta = 0;
    std::complex<double> value{};
};

// What is being maximized over the samples.
enum class objective {
    modulus,      // |a(z)|
    negated_real  // -Re a(z), i.e. the infimum of Re a(z) with flipped sign
};

struct radius_extreme {
    double r = 0;
    double extreme = 0;
    double tail = 0;
    bool skipped = false;
};

struct sup_result {
    // Largest objective value over samples (refined), without tail.
    double sup = -std::numeric_limits<double>::infinity();
    sample_point witness;
    // Tail estimate at the witness radius.
    double witness_tail = 0;
    // max over usable radii of (extreme at r + tail at r).
    double bounded_sup = -std::numeric_limits<double>::infinity();
    std::vector<double> skipped_radii;
    std::vector<radius_extreme> curve;
};

namespace detail
{

inline double objective_value(objective obj, std::complex<double> v) noexcept
{
    return obj == objective::modulus ? std::abs(v) : -v.real();
}

inline std::vector<std::complex<double>> unit_roots(int m)
{
    std::vector<std::complex<double>> out(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double t = 2.0 * std::numbers::pi * j / m;
        out[static_cast<std::size_t>(j)] = {std::cos(t), std::sin(t)};
    }
    return out;
}

// Golden-section search for the maximum of phi on [lo, hi].
template <typename F>
double golden_max(F &&phi, double lo, double hi, double tol)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = phi(x1), f2 = phi(x2);
    while (hi - lo > tol) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = phi(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = phi(x2);
        }
    }
    return 0.5 * (lo + hi);
}

constexpr double refine_tolerance = 1e-10;

} // namespace detail

// Maximizes the objective of a over the sampled circles. Radii where the tail
// estimate is infinite are skipped and listed. Ties go to the smallest radius,
// then the smallest angle.
inline sup_result extreme_on_disk(const series &a, const sampling_config &cfg, objective obj = objective::modulus)
{
    cfg.validate();
    const auto roots = detail::unit_roots(cfg.angles);
    const auto coeffs = a.coeffs();
    sup_result out;
    std::size_t best_j = 0;
    for (const double r : cfg.radii) {
        radius_extreme re{r, -std::numeric_limits<double>::infinity(), 0.0, false};
        re.tail = tail_estimate(a, r);
        if (!std::isfinite(re.tail)) {
            re.skipped = true;
            out.skipped_radii.push_back(r);
            out.curve.push_back(re);
            continue;
        }
        std::size_t arg = 0;
        std::complex<double> arg_value{};
        for (std::size_t j = 0; j < roots.size(); ++j) {
            const auto v = detail::horner(coeffs, r * roots[j]);
            const double o = detail::objective_value(obj, v);
            if (o > re.extreme) {
                re.extreme = o;
                arg = j;
                arg_value = v;
            }
        }
        if (re.extreme > out.sup) {
            out.sup = re.extreme;
            out.witness = {r, 2.0 * std::numbers::pi * static_cast<double>(arg) / cfg.angles, arg_value};
            out.witness_tail = re.tail;
            best_j = out.curve.size();
        }
        out.curve.push_back(re);
    }
    if (out.curve.size() == out.skipped_radii.size()) {
        return out;
    }
    if (cfg.refine) {
        const double r = out.witness.r;
        const double step = 2.0 * std::numbers::pi / cfg.angles;
        const auto phi = [&](double t) {
            return detail::objective_value(obj, detail::horner(coeffs, std::polar(r, t)));
        };
        const double t = detail::golden_max(phi, out.witness.theta - step, out.witness.theta + step,
                                            detail::refine_tolerance);
        const auto v = detail::horner(coeffs, std::polar(r, t));
        const double o = detail::objective_value(obj, v);
        if (o > out.sup) {
            out.sup = o;
            out.witness.theta = t < 0.0 ? t + 2.0 * std::numbers::pi : t;
            out.witness.value = v;
            out.curve[best_j].extreme = o;
        }
    }
    for (const auto &re : out.curve) {
        if (!re.skipped) {
            out.bounded_sup = std::max(out.bounded_sup, re.extreme + (cfg.add_tail ? re.tail : 0.0));
        }
    }
    return out;
}

inline sup_result sup_on_disk(const series &a, const sampling_config &cfg)
{
    return extreme_on_disk(a, cfg, objective::modulus);
}

enum class verdict { certified_sampled, hypothesis_failed, conclusion_failed, inadmissible, degenerate };

constexpr std::string_view to_string(verdict v) noexcept
{
    switch (v) {
        case verdict::certified_sampled:
            return "CERTIFIED_SAMPLED";
        case verdict::hypothesis_failed:
            return "HYPOTHESIS_FAILED";
        case verdict::conclusion_failed:
            return "CONCLUSION_FAILED";
        case verdict::inadmissible:
            return "INADMISSIBLE";
        case verdict::degenerate:
            return "DEGENERATE";
    }
    return "?";
}

inline constexpr std::string_view tail_disclaimer
    = "heuristic tail estimate (non-rigorous): ratio extrapolation over the top quartile of retained coefficients";

inline constexpr std::size_t max_listed_violations = 32;

struct verification_report {
    criterion_params params;
    criterion_spec spec;
    verdict outcome = verdict::degenerate;

    // Hypothesis: sup of |LHS| (or of -Re LHS for MOCANU) against spec.rhs_bound.
    double hypothesis_sup = 0;
    double hypothesis_tail = 0;
    double hypothesis_bounded_sup = 0;
    double hypothesis_margin = 0;
    sample_point worst_witness;

    // Conclusion: sup |f/(z f') - center| against the radius, raw (no tail).
    double conclusion_sup = 0;
    double conclusion_tail = 0;
    double conclusion_margin = 0;
    sample_point conclusion_witness;

    // min Re(z f'/f) - alpha, when the criterion concludes S*(alpha).
    std::optional<double> starlike_margin;
    std::optional<sample_point> starlike_witness;

    std::vector<sample_point> denominator_violations;
    std::size_t denominator_violation_count = 0;
    std::vector<double> skipped_radii;
    std::string tail_flag{tail_disclaimer};
    bool implication_violated = false;
    std::vector<std::string> notes;
};

namespace detail
{

// Scans |f(z)/z| and |f'(z)| over every sample point.
inline void monitor_denominators(const candidate &f, const sampling_config &cfg, verification_report &rep)
{
    const auto f_over_z = f.series().shifted_down(1);
    const auto fp = derivative(f.series());
    const auto roots = unit_roots(cfg.angles);
    for (const double r : cfg.radii) {
        for (std::size_t j = 0; j < roots.size(); ++j) {
            const auto z = r * roots[j];
            const double a = std::abs(horner(f_over_z.coeffs(), z));
            const double b = std::abs(horner(fp.coeffs(), z));
            if (a < cfg.denom_floor || b < cfg.denom_floor) {
                ++rep.denominator_violation_count;
                if (rep.denominator_violations.size() < max_listed_violations) {
                    rep.denominator_violations.push_back(
                        {r, 2.0 * std::numbers::pi * static_cast<double>(j) / cfg.angles, a < b ? a : b});
                }
            }
        }
    }
}

inline void merge_skipped(std::vector<double> &into, const std::vector<double> &from)
{
    for (double r : from) {
        if (std::find(into.begin(), into.end(), r) == into.end()) {
            into.push_back(r);
        }
    }
    std::sort(into.begin(), into.end());
}

} // namespace detail

// Samples the hypothesis functional against the bound and the conclusion of the
// criterion, with denominator monitoring at every sample point.
inline verification_report check_criterion(const candidate &f, const criterion_params &p, const sampling_config &cfg)
{
    cfg.validate();
    verification_report rep;
    rep.params = p;
    rep.spec = build_spec(p);
    if (!rep.spec.admissible) {
        rep.outcome = verdict::inadmissible;
        rep.hypothesis_margin = rep.spec.admissibility_margin;
        rep.notes.push_back("inadmissible: " + rep.spec.constraint + " violated");
        return rep;
    }
    if (f.n() != static_cast<std::size_t>(p.n)) {
        rep.notes.push_back("function class index n=" + std::to_string(f.n()) + " differs from criterion n="
                            + std::to_string(p.n));
    }

    series lhs, conclusion, starlike;
    try {
        switch (rep.spec.lhs) {
            case functional_kind::lhs_a:
                lhs = lhs_a(f, p.beta, p.gamma);
                break;
            case functional_kind::lhs_b:
                lhs = lhs_b(f, p.beta, p.gamma);
                break;
            default:
                lhs = mocanu_functional(f, p.alpha);
                break;
        }
        conclusion = w_func(f) + std::complex<double>(1.0 - rep.spec.conclusion_center);
        starlike = starlike_quotient(f);
    } catch (const series_error &e) {
        rep.outcome = verdict::degenerate;
        rep.notes.push_back(std::string("functional computation failed: ") + e.what());
        return rep;
    }

    detail::monitor_denominators(f, cfg, rep);

    const bool re_shape = rep.spec.shape == hypothesis_shape::real_positive;
    const auto hyp = extreme_on_disk(lhs, cfg, re_shape ? objective::negated_real : objective::modulus);
    detail::merge_skipped(rep.skipped_radii, hyp.skipped_radii);
    if (hyp.curve.size() == hyp.skipped_radii.size()) {
        rep.outcome = verdict::degenerate;
        rep.notes.push_back("tail estimate infinite at every radius");
        return rep;
    }
    rep.hypothesis_sup = hyp.sup;
    rep.hypothesis_tail = hyp.witness_tail;
    rep.hypothesis_bounded_sup = hyp.bounded_sup;
    if (!hyp.skipped_radii.empty()) {
        // An unsampled radius leaves the hypothesis unbounded there.
        rep.hypothesis_bounded_sup = std::numeric_limits<double>::infinity();
        rep.notes.push_back("hypothesis not certified: tail estimate infinite at skipped radii");
    }
    rep.hypothesis_margin = rep.spec.rhs_bound - rep.hypothesis_bounded_sup;
    rep.worst_witness = hyp.witness;

    bool conclusion_ok = true;
    if (re_shape) {
        // Class membership is both the hypothesis shape and the conclusion.
        rep.conclusion_sup = hyp.sup;
        rep.conclusion_tail = hyp.witness_tail;
        rep.conclusion_margin = -hyp.sup;
        rep.conclusion_witness = hyp.witness;
        conclusion_ok = rep.conclusion_margin > 0.0;
    } else {
        const auto con = extreme_on_disk(conclusion, cfg, objective::modulus);
        detail::merge_skipped(rep.skipped_radii, con.skipped_radii);
        rep.conclusion_sup = con.sup;
        rep.conclusion_tail = con.witness_tail;
        rep.conclusion_margin = rep.spec.conclusion_radius - con.sup;
        rep.conclusion_witness = con.witness;
        conclusion_ok = rep.conclusion_margin > 0.0;
        if (rep.spec.starlike_order) {
            const auto st = extreme_on_disk(starlike, cfg, objective::negated_real);
            detail::merge_skipped(rep.skipped_radii, st.skipped_radii);
            rep.starlike_margin = -st.sup - *rep.spec.starlike_order;
            rep.starlike_witness = st.witness;
            conclusion_ok = conclusion_ok && *rep.starlike_margin > 0.0;
        }
    }

    const bool hypothesis_ok = rep.hypothesis_margin > 0.0;
    if (rep.denominator_violation_count > 0) {
        rep.outcome = verdict::degenerate;
        rep.notes.push_back("f(z)/z or f'(z) fell below the denominator floor at "
                            + std::to_string(rep.denominator_violation_count) + " sample point(s)");
    } else if (!hypothesis_ok) {
        rep.outcome = verdict::hypothesis_failed;
    } else if (!conclusion_ok) {
        rep.outcome = verdict::conclusion_failed;
        rep.implication_violated = !re_shape;
        if (rep.implication_violated) {
            rep.notes.push_back("hypothesis holds on all samples but the conclusion fails: sampled counterexample to "
                                "the implication; rule out numerical error before trusting it");
        }
    } else {
        rep.outcome = verdict::certified_sampled;
    }
    return rep;
}

// Result of the Jack's-lemma demonstration on one circle.
struct jack_result {
    std::complex<double> k_est{};
    std::complex<double> max_point{};
    double max_modulus = 0;
    bool imag_ok = false;
    bool real_ok = false;
    [[nodiscard]] bool conforms() const noexcept
    {
        return imag_ok && real_ok;
    }
};

// Locates the maximum of |w| on |z| = r and evaluates z w'(z)/w(z) there. For w
// vanishing to order m at 0 the value should be real and at least m.
inline jack_result jack_demo(const series &w, int m, double r, const sampling_config &cfg)
{
    if (m < 1) {
        throw parameter_error("vanishing order m must be at least 1");
    }
    if (!(r > 0.0 && r < 1.0)) {
        throw parameter_error("radius must lie in (0, 1)");
    }
    if (cfg.angles < 64) {
        throw parameter_error("at least 64 angles per circle are required");
    }
    const auto c = w.coeffs();
    if (static_cast<std::size_t>(m) > w.order()) {
        throw parameter_error("vanishing order exceeds the truncation order");
    }
    const double scale = std::max(1.0, w.max_abs_coeff());
    for (int k = 0; k < m; ++k) {
        if (std::abs(c[static_cast<std::size_t>(k)]) > 1e-14 * scale) {
            throw parameter_error("w does not vanish to order " + std::to_string(m) + " (coefficient of z^"
                                  + std::to_string(k) + " is nonzero)");
        }
    }
    const auto roots = detail::unit_roots(cfg.angles);
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        const double v = std::abs(detail::horner(c, r * roots[j]));
        if (v > best) {
            best = v;
            arg = j;
        }
    }
    if (best < 1e-14) {
        throw series_error("w vanishes on the circle |z| = " + std::to_string(r));
    }
    const double step = 2.0 * std::numbers::pi / cfg.angles;
    double theta = step * static_cast<double>(arg);
    if (cfg.refine) {
        const auto phi = [&](double t) { return std::abs(detail::horner(c, std::polar(r, t))); };
        const double t = detail::golden_max(phi, theta - step, theta + step, detail::refine_tolerance);
        if (phi(t) >= best) {
            theta = t;
        }
    }
    const auto z0 = std::polar(r, theta);
    const auto wp = derivative(w);
    const auto w0 = detail::horner(c, z0);
    jack_result out;
    out.max_point = z0;
    out.max_modulus = std::abs(w0);
    out.k_est = z0 * detail::horner(wp.coeffs(), z0) / w0;
    out.imag_ok = std::abs(out.k_est.imag()) <= 1e-6 * (1.0 + std::abs(out.k_est));
    out.real_ok = out.k_est.real() >= m * (1.0 - 1e-6);
    return out;
}

} // namespace starlike

#endif
