#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include <starlike/report.hpp>
#include <starlike/spec_file.hpp>

namespace
{

using namespace starlike;
using cplx = std::complex<double>;

std::string message_of(std::string_view text)
{
    try {
        parse_function_spec(text);
    } catch (const spec_error &e) {
        return e.what();
    }
    return {};
}

std::string read_demo(const std::string &name)
{
    std::ifstream in(std::string(STARLIKE_DEMO_DIR) + "/" + name);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

TEST(SpecFile, ParsesEveryKind)
{
    auto s = parse_function_spec(R"({"kind": "COEFFS", "n": 2, "trunc": 8, "coeffs": [[0, 0], [0.5, -0.25]]})");
    EXPECT_EQ(s.kind, spec_kind::coeffs);
    const auto f = candidate_of(s);
    EXPECT_EQ(f.n(), 2u);
    EXPECT_EQ(f.order(), 8u);
    EXPECT_EQ(f.series()[3], cplx(0.5, -0.25));

    s = parse_function_spec(R"({"kind": "EXTREMAL_B", "n": 1, "alpha": 0.5, "beta": [1, 0], "gamma": [1, 0]})");
    EXPECT_EQ(s.trunc, default_trunc_order);
    EXPECT_NEAR(candidate_of(s).series()[2].real(), 0.5, 1e-15);

    s = parse_function_spec(R"({"kind": "BUILTIN", "n": 1, "trunc": 16, "builtin": "koebe"})");
    EXPECT_EQ(candidate_of(s).series()[5], cplx(5.0));
}

TEST(SpecFile, RawSeriesForJack)
{
    const auto s = parse_function_spec(read_demo("jack_z2.json"));
    const auto w = series_of(s);
    EXPECT_EQ(w[1], cplx(0.0));
    EXPECT_EQ(w[2], cplx(1.0));
    EXPECT_THROW(candidate_of(s), series_error);
}

TEST(SpecFile, Diagnostics)
{
    EXPECT_NE(message_of(read_demo("malformed.json")).find("line 3"), std::string::npos);
    EXPECT_NE(message_of(R"({"n": 1})").find("'kind'"), std::string::npos);
    EXPECT_NE(message_of(R"({"kind": "POLY", "n": 1})").find("unknown kind"), std::string::npos);
    EXPECT_NE(message_of(R"({"kind": "COEFFS", "n": 0, "coeffs": []})").find("'n'"), std::string::npos);
    EXPECT_NE(message_of(R"({"kind": "COEFFS", "n": 1, "coeffs": [[1]]})").find("coeffs[0]"), std::string::npos);
    EXPECT_NE(message_of(R"({"kind": "COEFFS", "n": 1, "trunc": 2, "coeffs": [[1, 0], [1, 0]]})").find("exceed"),
              std::string::npos);
    EXPECT_NE(message_of(R"({"kind": "BUILTIN", "n": 1, "builtin": "x"})").find("'builtin'"), std::string::npos);
    EXPECT_NE(message_of(R"({"kind": "BUILTIN", "n": 1, "builtin": "koebe", "alpha": 1})").find("'alpha'"),
              std::string::npos);
    EXPECT_NE(message_of(R"({"kind": "EXTREMAL_A", "n": 1, "alpha": 0.5, "beta": [1, 0]})").find("'gamma'"),
              std::string::npos);
}

TEST(SpecFile, JsonRoundTrip)
{
    for (const char *name : {"identity.json", "koebe.json", "extremal_a.json", "extremal_b.json", "polynomial.json",
                             "jack_z2.json", "jack_zero.json"}) {
        const auto s = parse_function_spec(read_demo(name));
        EXPECT_EQ(function_spec_from_json(to_json(s)), s) << name;
    }
}

TEST(Report, RealsSurviveJson)
{
    EXPECT_EQ(detail::real_to_json(INFINITY), "inf");
    EXPECT_EQ(detail::real_to_json(-INFINITY), "-inf");
    EXPECT_TRUE(std::isnan(detail::real_from_json(detail::real_to_json(NAN))));
    EXPECT_EQ(detail::real_from_json(detail::real_to_json(0.1)), 0.1);
    EXPECT_THROW(detail::real_from_json("huge"), spec_error);
}

TEST(Report, VerificationReportRoundTrip)
{
    const auto f = build_extremal({extremal_family::b, 1, 0.4, 1.0, 1.0}).f;
    const criterion_params p{criterion_kind::thm_b, 1, 0.4, 1.0, 1.0, 1.0};
    auto cfg = sampling_config::up_to(0.5);
    cfg.angles = 256;
    const auto rep = check_criterion(f, p, cfg);
    const auto j = to_json(rep);
    const auto back = verification_report_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(to_json(back), j);
    EXPECT_EQ(back.outcome, rep.outcome);
    EXPECT_EQ(back.hypothesis_margin, rep.hypothesis_margin);
    EXPECT_EQ(sampling_config_from_json(to_json(cfg)).radii, cfg.radii);

    // MOCANU carries an infinite conclusion radius.
    const auto moc = check_criterion(f, {criterion_kind::mocanu, 1, 0.4, 0.0, 0.0, 1.0}, cfg);
    const auto mj = to_json(moc);
    EXPECT_EQ(mj["criterion"]["conclusion_radius"], "inf");
    EXPECT_TRUE(std::isinf(verification_report_from_json(mj).spec.conclusion_radius));
}

TEST(Report, BodyIsDeterministic)
{
    const auto spec = parse_function_spec(read_demo("koebe.json"));
    const auto cfg = sampling_config::up_to(0.3);
    const criterion_params p{criterion_kind::thm_a, 1, 0.5, 0.0, 1.0, 1.0};
    const auto a = report_body("check", to_json(spec), to_json(cfg), to_json(check_criterion(candidate_of(spec), p, cfg)));
    const auto b = report_body("check", to_json(spec), to_json(cfg), to_json(check_criterion(candidate_of(spec), p, cfg)));
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_FALSE(a.contains("timestamp"));
    EXPECT_EQ(a["tool"]["version"], std::string(version));
}

TEST(Report, FlattenText)
{
    const nlohmann::json j{{"a", {{"b", 1}, {"c", "x"}}}, {"z", nlohmann::json::array({1.5, 2.0})},
                           {"pts", nlohmann::json::array({{{"r", 0.5}}})}};
    EXPECT_EQ(flatten_text(j), "a.b: 1\na.c: x\npts[0].r: 0.5\nz: [1.5,2.0]\n");
}

} // namespace
