#ifndef STARLIKE_REPORT_HPP
#define STARLIKE_REPORT_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include <starlike/criteria.hpp>
#include <starlike/disk_oracle.hpp>
#include <starlike/spec_file.hpp>
#include <starlike/version.hpp>

// JSON (de)serialization of verification reports and a flat "key: value" text
// rendering of the same document. Non-finite reals are written as the strings
// "inf", "-inf" and "nan" so that every document is valid JSON.
namespace starlike
{

namespace detail
{

inline nlohmann::json real_to_json(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    return x;
}

inline double real_from_json(const nlohmann::json &j)
{
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "inf") {
            return std::numeric_limits<double>::infinity();
        }
        if (s == "-inf") {
            return -std::numeric_limits<double>::infinity();
        }
        if (s == "nan") {
            return std::numeric_limits<double>::quiet_NaN();
        }
        throw spec_error("expected a real number, got '" + s + "'");
    }
    return j.get<double>();
}

inline nlohmann::json point_to_json(const sample_point &p)
{
    return {{"r", real_to_json(p.r)}, {"theta", real_to_json(p.theta)}, {"value", complex_to_json(p.value)}};
}

inline sample_point point_from_json(const nlohmann::json &j)
{
    return {real_from_json(j.at("r")), real_from_json(j.at("theta")), complex_from_json(j.at("value"), "value")};
}

template <typename Enum, std::size_t N>
Enum enum_from_string(const std::string &s, const Enum (&values)[N], const char *what)
{
    for (const auto v : values) {
        if (to_string(v) == s) {
            return v;
        }
    }
    throw spec_error(std::string("unknown ") + what + " '" + s + "'");
}

} // namespace detail

inline nlohmann::json to_json(const sampling_config &cfg)
{
    nlohmann::json radii = nlohmann::json::array();
    for (double r : cfg.radii) {
        radii.push_back(r);
    }
    return {{"radii", std::move(radii)},
            {"angles", cfg.angles},
            {"refine", cfg.refine},
            {"denom_floor", cfg.denom_floor},
            {"add_tail", cfg.add_tail},
            {"refine_tolerance", detail::refine_tolerance}};
}

inline sampling_config sampling_config_from_json(const nlohmann::json &j)
{
    sampling_config cfg;
    cfg.radii = j.at("radii").get<std::vector<double>>();
    cfg.angles = j.at("angles").get<int>();
    cfg.refine = j.at("refine").get<bool>();
    cfg.denom_floor = j.at("denom_floor").get<double>();
    cfg.add_tail = j.at("add_tail").get<bool>();
    return cfg;
}

inline nlohmann::json to_json(const criterion_params &p)
{
    return {{"kind", std::string(to_string(p.kind))},
            {"n", p.n},
            {"alpha", p.alpha},
            {"beta", detail::complex_to_json(p.beta)},
            {"gamma", detail::complex_to_json(p.gamma)},
            {"rho", p.rho}};
}

inline criterion_params criterion_params_from_json(const nlohmann::json &j)
{
    criterion_params p;
    const auto kind = parse_criterion_kind(j.at("kind").get<std::string>());
    if (!kind) {
        throw spec_error("unknown criterion kind");
    }
    p.kind = *kind;
    p.n = j.at("n").get<int>();
    p.alpha = j.at("alpha").get<double>();
    p.beta = detail::complex_from_json(j.at("beta"), "beta");
    p.gamma = detail::complex_from_json(j.at("gamma"), "gamma");
    p.rho = j.at("rho").get<double>();
    return p;
}

inline nlohmann::json to_json(const criterion_spec &s)
{
    nlohmann::json j{{"kind", std::string(to_string(s.kind))},
                     {"rhs_bound", detail::real_to_json(s.rhs_bound)},
                     {"lhs", std::string(to_string(s.lhs))},
                     {"hypothesis_shape", s.shape == hypothesis_shape::modulus_below ? "SUP_MODULUS_BELOW_BOUND"
                                                                                      : "REAL_PART_POSITIVE"},
                     {"conclusion_center", detail::real_to_json(s.conclusion_center)},
                     {"conclusion_radius", detail::real_to_json(s.conclusion_radius)},
                     {"admissible", s.admissible},
                     {"admissibility_margin", detail::real_to_json(s.admissibility_margin)},
                     {"constraint", s.constraint},
                     {"wide_alpha", s.wide_alpha}};
    j["starlike_order"] = s.starlike_order ? nlohmann::json(*s.starlike_order) : nlohmann::json(nullptr);
    return j;
}

inline criterion_spec criterion_spec_from_json(const nlohmann::json &j)
{
    static constexpr functional_kind kinds[] = {functional_kind::starlike_q, functional_kind::convex_q,
                                                functional_kind::w_func,     functional_kind::centered_q,
                                                functional_kind::lhs_a,      functional_kind::lhs_b,
                                                functional_kind::mocanu_q};
    criterion_spec s;
    const auto kind = parse_criterion_kind(j.at("kind").get<std::string>());
    if (!kind) {
        throw spec_error("unknown criterion kind");
    }
    s.kind = *kind;
    s.rhs_bound = detail::real_from_json(j.at("rhs_bound"));
    s.lhs = detail::enum_from_string(j.at("lhs").get<std::string>(), kinds, "functional kind");
    s.shape = j.at("hypothesis_shape").get<std::string>() == "REAL_PART_POSITIVE" ? hypothesis_shape::real_positive
                                                                                   : hypothesis_shape::modulus_below;
    s.conclusion_center = detail::real_from_json(j.at("conclusion_center"));
    s.conclusion_radius = detail::real_from_json(j.at("conclusion_radius"));
    s.admissible = j.at("admissible").get<bool>();
    s.admissibility_margin = detail::real_from_json(j.at("admissibility_margin"));
    s.constraint = j.at("constraint").get<std::string>();
    s.wide_alpha = j.at("wide_alpha").get<bool>();
    if (!j.at("starlike_order").is_null()) {
        s.starlike_order = j.at("starlike_order").get<double>();
    }
    return s;
}

inline nlohmann::json to_json(const verification_report &r)
{
    using detail::real_to_json;
    nlohmann::json violations = nlohmann::json::array();
    for (const auto &p : r.denominator_violations) {
        violations.push_back(detail::point_to_json(p));
    }
    nlohmann::json notes = nlohmann::json::array();
    for (const auto &n : r.notes) {
        notes.push_back(n);
    }
    nlohmann::json j{{"params", to_json(r.params)},
                     {"criterion", to_json(r.spec)},
                     {"verdict", std::string(to_string(r.outcome))},
                     {"hypothesis_sup", real_to_json(r.hypothesis_sup)},
                     {"hypothesis_tail", real_to_json(r.hypothesis_tail)},
                     {"hypothesis_bounded_sup", real_to_json(r.hypothesis_bounded_sup)},
                     {"hypothesis_margin", real_to_json(r.hypothesis_margin)},
                     {"worst_witness", detail::point_to_json(r.worst_witness)},
                     {"conclusion_sup", real_to_json(r.conclusion_sup)},
                     {"conclusion_tail", real_to_json(r.conclusion_tail)},
                     {"conclusion_margin", real_to_json(r.conclusion_margin)},
                     {"conclusion_witness", detail::point_to_json(r.conclusion_witness)},
                     {"denominator_violations", std::move(violations)},
                     {"denominator_violation_count", r.denominator_violation_count},
                     {"skipped_radii", r.skipped_radii},
                     {"tail_flag", r.tail_flag},
                     {"implication_violated", r.implication_violated},
                     {"notes", std::move(notes)}};
    j["starlike_margin"] = r.starlike_margin ? real_to_json(*r.starlike_margin) : nlohmann::json(nullptr);
    j["starlike_witness"] = r.starlike_witness ? detail::point_to_json(*r.starlike_witness) : nlohmann::json(nullptr);
    return j;
}

inline verification_report verification_report_from_json(const nlohmann::json &j)
{
    using detail::real_from_json;
    static constexpr verdict verdicts[] = {verdict::certified_sampled, verdict::hypothesis_failed,
                                           verdict::conclusion_failed, verdict::inadmissible, verdict::degenerate};
    verification_report r;
    r.params = criterion_params_from_json(j.at("params"));
    r.spec = criterion_spec_from_json(j.at("criterion"));
    r.outcome = detail::enum_from_string(j.at("verdict").get<std::string>(), verdicts, "verdict");
    r.hypothesis_sup = real_from_json(j.at("hypothesis_sup"));
    r.hypothesis_tail = real_from_json(j.at("hypothesis_tail"));
    r.hypothesis_bounded_sup = real_from_json(j.at("hypothesis_bounded_sup"));
    r.hypothesis_margin = real_from_json(j.at("hypothesis_margin"));
    r.worst_witness = detail::point_from_json(j.at("worst_witness"));
    r.conclusion_sup = real_from_json(j.at("conclusion_sup"));
    r.conclusion_tail = real_from_json(j.at("conclusion_tail"));
    r.conclusion_margin = real_from_json(j.at("conclusion_margin"));
    r.conclusion_witness = detail::point_from_json(j.at("conclusion_witness"));
    if (!j.at("starlike_margin").is_null()) {
        r.starlike_margin = real_from_json(j.at("starlike_margin"));
    }
    if (!j.at("starlike_witness").is_null()) {
        r.starlike_witness = detail::point_from_json(j.at("starlike_witness"));
    }
    r.denominator_violations.clear();
    for (const auto &p : j.at("denominator_violations")) {
        r.denominator_violations.push_back(detail::point_from_json(p));
    }
    r.denominator_violation_count = j.at("denominator_violation_count").get<std::size_t>();
    r.skipped_radii = j.at("skipped_radii").get<std::vector<double>>();
    r.tail_flag = j.at("tail_flag").get<std::string>();
    r.implication_violated = j.at("implication_violated").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

// The deterministic part of a report file: everything except the timestamp.
inline nlohmann::json report_body(std::string_view command, const nlohmann::json &function, const nlohmann::json &config,
                                  const nlohmann::json &result)
{
    return {{"tool", {{"name", "starlike"}, {"version", std::string(version)}}},
            {"command", std::string(command)},
            {"function", function},
            {"config", config},
            {"defaults", {{"trunc", default_trunc_order}, {"angles", 2048}, {"radii", "0.10:0.01:0.99,0.995"}}},
            {"result", result}};
}

// Flat "dotted.key: value" lines, one per leaf, in key order.
inline std::string flatten_text(const nlohmann::json &j, const std::string &prefix = {})
{
    std::ostringstream out;
    if (j.is_object()) {
        for (const auto &[key, value] : j.items()) {
            out << flatten_text(value, prefix.empty() ? key : prefix + "." + key);
        }
    } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array()) && !(j.size() == 2 && j[0].is_number())) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            out << flatten_text(j[i], prefix + "[" + std::to_string(i) + "]");
        }
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
    return out.str();
}

} // namespace starlike

#endif
