// starlike: sampled verification of sufficient conditions for starlikeness of
// order alpha.
//
// Commands:
//   check       - evaluate one criterion on a function spec file
//   extremal    - build an example family, run its identity check and criterion
//   jack        - locate max |w| on a circle and report z w'/w there
//   identities  - sweep the w-rewrite identities over random functions
//
// Exit codes: 0 certified / passed, 1 failed, 2 inadmissible or degenerate,
// 3 usage or input error.

#include <chrono>
#include <complex>
#include <cstdio>
#include <ctime>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <starlike/starlike.hpp>

namespace
{

enum exit_code : int { ok = 0, failed = 1, inadmissible = 2, usage = 3 };

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::complex<double> parse_complex(const std::string &text, const std::string &flag)
{
    const auto comma = text.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used != text.size()) {
                throw std::invalid_argument(text);
            }
            return {re, 0.0};
        }
        const auto re_s = text.substr(0, comma);
        const auto im_s = text.substr(comma + 1);
        const double re = std::stod(re_s, &used);
        if (used != re_s.size()) {
            throw std::invalid_argument(text);
        }
        const double im = std::stod(im_s, &used);
        if (used != im_s.size()) {
            throw std::invalid_argument(text);
        }
        return {re, im};
    } catch (const std::logic_error &) {
        throw usage_error("flag " + flag + ": expected 're,im' or a real number, got '" + text + "'");
    }
}

std::string utc_timestamp()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw usage_error("cannot read spec file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const nlohmann::json &body, const std::string &out_path)
{
    std::cout << starlike::flatten_text(body);
    if (!out_path.empty()) {
        auto file = body;
        file["timestamp"] = utc_timestamp();
        std::ofstream out(out_path);
        if (!out) {
            throw usage_error("cannot write report file '" + out_path + "'");
        }
        out << file.dump(2) << '\n';
    }
}

int verdict_exit(starlike::verdict v)
{
    switch (v) {
        case starlike::verdict::certified_sampled:
            return ok;
        case starlike::verdict::hypothesis_failed:
        case starlike::verdict::conclusion_failed:
            return failed;
        default:
            return inadmissible;
    }
}

struct sampling_flags {
    double max_radius = 0.99;
    bool outer = true;
    int angles = 2048;
    bool no_refine = false;
    double denom_floor = 1e-9;

    void attach(CLI::App *cmd)
    {
        cmd->add_option("--max-radius", max_radius, "Largest radius of the 0.01-step grid")->capture_default_str();
        cmd->add_flag("!--no-outer", outer, "Omit the outer circle r = 0.995");
        cmd->add_option("--angles", angles, "Sample angles per circle")->capture_default_str();
        cmd->add_flag("--no-refine", no_refine, "Skip golden-section refinement of the argmax");
        cmd->add_option("--denom-floor", denom_floor, "Minimum |f/z| and |f'| before flagging")->capture_default_str();
    }

    [[nodiscard]] starlike::sampling_config config() const
    {
        auto cfg = starlike::sampling_config::up_to(max_radius, outer);
        cfg.angles = angles;
        cfg.refine = !no_refine;
        cfg.denom_floor = denom_floor;
        try {
            cfg.validate();
        } catch (const starlike::parameter_error &e) {
            throw usage_error(e.what());
        }
        return cfg;
    }
};

struct check_flags {
    std::string spec_path;
    std::string kind;
    std::optional<int> n;
    std::optional<double> alpha;
    std::optional<std::string> beta;
    std::optional<std::string> gamma;
    std::optional<double> rho;
    std::string out;
    sampling_flags sampling;
};

int run_check(const check_flags &fl)
{
    using namespace starlike;
    const auto kind = parse_criterion_kind(fl.kind);
    if (!kind) {
        throw usage_error("--kind: unknown criterion '" + fl.kind
                          + "' (expected LEMMA_A, THM_A, COR_A, LEMMA_B, THM_B or MOCANU)");
    }
    const auto spec = parse_function_spec(read_file(fl.spec_path));

    criterion_params p;
    p.kind = *kind;
    p.n = fl.n.value_or(spec.n);
    if (uses_alpha(p.kind)) {
        if (!fl.alpha) {
            throw usage_error("--alpha is required for " + fl.kind);
        }
        p.alpha = *fl.alpha;
    }
    if (uses_rho(p.kind)) {
        if (!fl.rho) {
            throw usage_error("--rho is required for " + fl.kind);
        }
        p.rho = *fl.rho;
    }
    if (p.kind != criterion_kind::mocanu) {
        if (!fl.gamma) {
            throw usage_error("--gamma is required for " + fl.kind);
        }
        p.gamma = parse_complex(*fl.gamma, "--gamma");
        if (p.kind != criterion_kind::cor_a) {
            if (!fl.beta) {
                throw usage_error("--beta is required for " + fl.kind);
            }
            p.beta = parse_complex(*fl.beta, "--beta");
        }
    }
    const auto cfg = fl.sampling.config();

    std::optional<candidate> f;
    try {
        f = candidate_of(spec);
    } catch (const inadmissible_error &e) {
        std::cerr << "spec: " << e.what() << '\n';
        return inadmissible;
    } catch (const parameter_error &e) {
        std::cerr << "spec: " << e.what() << '\n';
        return inadmissible;
    } catch (const series_error &e) {
        throw usage_error(std::string("spec: ") + e.what());
    }

    verification_report rep;
    try {
        rep = check_criterion(*f, p, cfg);
    } catch (const parameter_error &e) {
        throw usage_error(e.what());
    }
    emit(report_body("check", to_json(spec), to_json(cfg), to_json(rep)), fl.out);
    return verdict_exit(rep.outcome);
}

struct extremal_flags {
    std::string family;
    int n = 1;
    double alpha = 0.5;
    std::string beta;
    std::string gamma;
    std::size_t trunc = starlike::default_trunc_order;
    std::size_t emit_coeffs = 12;
    std::string out;
    sampling_flags sampling;
};

int run_extremal(const extremal_flags &fl)
{
    using namespace starlike;
    extremal_params p;
    if (fl.family == "A" || fl.family == "EXTREMAL_A") {
        p.family = extremal_family::a;
    } else if (fl.family == "B" || fl.family == "EXTREMAL_B") {
        p.family = extremal_family::b;
    } else {
        throw usage_error("--family: expected A or B, got '" + fl.family + "'");
    }
    p.n = fl.n;
    p.alpha = fl.alpha;
    p.beta = parse_complex(fl.beta, "--beta");
    p.gamma = parse_complex(fl.gamma, "--gamma");
    const auto cfg = fl.sampling.config();

    function_spec spec;
    spec.kind = p.family == extremal_family::a ? spec_kind::extremal_a : spec_kind::extremal_b;
    spec.n = p.n;
    spec.trunc = fl.trunc;
    spec.alpha = p.alpha;
    spec.beta = p.beta;
    spec.gamma = p.gamma;

    std::optional<extremal_result> built;
    try {
        built = build_extremal(p, fl.trunc);
    } catch (const inadmissible_error &e) {
        std::cerr << e.what() << '\n';
        return inadmissible;
    } catch (const parameter_error &e) {
        std::cerr << "invalid parameters: " << e.what() << '\n';
        return inadmissible;
    } catch (const series_error &e) {
        std::cerr << "construction failed: " << e.what() << '\n';
        return inadmissible;
    }
    const auto &f = built->f;

    nlohmann::json result;
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t k = 1; k <= fl.emit_coeffs && k <= f.order(); ++k) {
        coeffs.push_back(detail::complex_to_json(f.series()[k]));
    }
    result["coefficients_from_a1"] = std::move(coeffs);
    result["S"] = extremal_s(p);
    result["snap_delta"] = built->snap_delta;

    bool identity_ok = true;
    if (p.family == extremal_family::b) {
        const double residual = verify_identity_b(f, p);
        identity_ok = residual < 1e-9;
        result["identity_b"] = {{"residual", residual}, {"tolerance", 1e-9}, {"passed", identity_ok}};
    } else {
        const auto probe = probe_identity_a(f, p, cfg);
        result["identity_a"] = {{"residual_gamma_variant", probe.residuals.gamma_variant},
                                {"residual_beta_variant", probe.residuals.beta_variant},
                                {"gamma_variant_matches", probe.gamma_variant_matches},
                                {"beta_variant_matches", probe.beta_variant_matches},
                                {"base_vanishes_in_disk", probe.residuals.base_vanishes_in_disk},
                                {"sampled_sup", probe.sampled_sup},
                                {"sampled_bounded_sup", probe.sampled_bounded_sup},
                                {"margin_below_S", probe.margin},
                                {"sup_below_S", probe.sup_below_s}};
    }
    const auto rep = check_criterion(f, matching_criterion(p), cfg);
    result["check"] = to_json(rep);
    emit(report_body("extremal", to_json(spec), to_json(cfg), result), fl.out);
    const int code = verdict_exit(rep.outcome);
    return code == ok && !identity_ok ? failed : code;
}

struct jack_flags {
    std::string spec_path;
    int order = 1;
    double radius = 0.9;
    int angles = 2048;
    bool no_refine = false;
    std::string out;
};

int run_jack(const jack_flags &fl)
{
    using namespace starlike;
    const auto spec = parse_function_spec(read_file(fl.spec_path));
    series w;
    try {
        w = series_of(spec);
    } catch (const std::exception &e) {
        throw usage_error(std::string("spec: ") + e.what());
    }
    sampling_config cfg;
    cfg.angles = fl.angles;
    cfg.refine = !fl.no_refine;
    if (!(fl.radius > 0.0 && fl.radius < 1.0) || fl.order < 1 || fl.angles < 64) {
        throw usage_error("need --order >= 1, 0 < --radius < 1 and --angles >= 64");
    }
    jack_result res;
    try {
        res = jack_demo(w, fl.order, fl.radius, cfg);
    } catch (const parameter_error &e) {
        std::cerr << "jack: " << e.what() << '\n';
        return inadmissible;
    } catch (const series_error &e) {
        std::cerr << "jack: degenerate w: " << e.what() << '\n';
        return inadmissible;
    }
    nlohmann::json result{{"order", fl.order},
                          {"radius", fl.radius},
                          {"k_est", detail::complex_to_json(res.k_est)},
                          {"max_point", detail::complex_to_json(res.max_point)},
                          {"max_modulus", res.max_modulus},
                          {"imag_ok", res.imag_ok},
                          {"real_ok", res.real_ok},
                          {"conforms", res.conforms()}};
    nlohmann::json config{{"angles", cfg.angles}, {"refine", cfg.refine}};
    emit(report_body("jack", to_json(spec), config, result), fl.out);
    return res.conforms() ? ok : failed;
}

struct identities_flags {
    std::size_t count = 100;
    std::size_t pairs = 5;
    std::size_t trunc = 48;
    std::uint64_t seed = 20090101;
    std::string out;
};

int run_identities(const identities_flags &fl)
{
    using namespace starlike;
    if (fl.trunc < 6) {
        throw usage_error("--trunc must be at least 6");
    }
    const auto res = identity_sweep({1, 2, 3}, fl.count, fl.pairs, fl.trunc, fl.seed);
    constexpr double tol = 1e-10;
    const bool passed = res.max_residual_a < tol && res.max_residual_b < tol;
    nlohmann::json result{{"functions", res.functions},
                          {"evaluations", res.evaluations},
                          {"max_residual_identity_a", res.max_residual_a},
                          {"max_residual_identity_b", res.max_residual_b},
                          {"tolerance", tol},
                          {"passed", passed}};
    nlohmann::json config{{"count_per_n", fl.count}, {"pairs", fl.pairs}, {"trunc", fl.trunc}, {"seed", fl.seed},
                          {"n", {1, 2, 3}}};
    emit(report_body("identities", nullptr, config, result), fl.out);
    return passed ? ok : failed;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Sampled verification of sufficient conditions for starlikeness of order alpha"};
    app.set_version_flag("--version", std::string(starlike::version));
    app.require_subcommand(1);

    check_flags cf;
    auto *check = app.add_subcommand("check", "Check one criterion on a function spec file");
    check->add_option("spec", cf.spec_path, "Function spec file (JSON)")->required();
    check->add_option("--kind", cf.kind, "LEMMA_A, THM_A, COR_A, LEMMA_B, THM_B or MOCANU")->required();
    check->add_option("--n", cf.n, "Class index n (defaults to the spec file's n)");
    check->add_option("--alpha", cf.alpha, "Order alpha");
    check->add_option("--beta", cf.beta, "beta as re,im");
    check->add_option("--gamma", cf.gamma, "gamma as re,im (real gamma for COR_A)");
    check->add_option("--rho", cf.rho, "rho for LEMMA_A / LEMMA_B");
    check->add_option("--out", cf.out, "Write the JSON report here");
    cf.sampling.attach(check);

    extremal_flags ef;
    auto *extremal = app.add_subcommand("extremal", "Build an example family and certify it");
    extremal->add_option("--family", ef.family, "A or B")->required();
    extremal->add_option("--n", ef.n, "Class index n")->capture_default_str();
    extremal->add_option("--alpha", ef.alpha, "Order alpha")->required();
    extremal->add_option("--beta", ef.beta, "beta as re,im")->required();
    extremal->add_option("--gamma", ef.gamma, "gamma as re,im")->required();
    extremal->add_option("--trunc", ef.trunc, "Truncation order N")->capture_default_str();
    extremal->add_option("--emit-coeffs", ef.emit_coeffs, "Number of coefficients to print")->capture_default_str();
    extremal->add_option("--out", ef.out, "Write the JSON report here");
    ef.sampling.attach(extremal);

    jack_flags jf;
    auto *jack = app.add_subcommand("jack", "Jack's lemma: z w'/w at the maximum of |w| on a circle");
    jack->add_option("spec", jf.spec_path, "Function spec file holding w (JSON)")->required();
    jack->add_option("--order", jf.order, "Vanishing order m of w at 0")->required();
    jack->add_option("--radius", jf.radius, "Circle radius r")->required();
    jack->add_option("--angles", jf.angles, "Sample angles")->capture_default_str();
    jack->add_flag("--no-refine", jf.no_refine, "Skip golden-section refinement");
    jack->add_option("--out", jf.out, "Write the JSON report here");

    identities_flags idf;
    auto *ids = app.add_subcommand("identities", "Sweep the w-rewrite identities over random functions");
    ids->add_option("--count", idf.count, "Random functions per n")->capture_default_str();
    ids->add_option("--pairs", idf.pairs, "Random (beta, gamma) per function")->capture_default_str();
    ids->add_option("--trunc", idf.trunc, "Truncation order")->capture_default_str();
    ids->add_option("--seed", idf.seed, "RNG seed")->capture_default_str();
    ids->add_option("--out", idf.out, "Write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return usage;
    }

    try {
        if (check->parsed()) {
            return run_check(cf);
        }
        if (extremal->parsed()) {
            return run_extremal(ef);
        }
        if (jack->parsed()) {
            return run_jack(jf);
        }
        return run_identities(idf);
    } catch (const usage_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const starlike::spec_error &e) {
        std::cerr << "spec error: " << e.what() << '\n';
        return usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
}
