#ifndef STARLIKE_SPEC_FILE_HPP
#define STARLIKE_SPEC_FILE_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include <starlike/candidate.hpp>
#include <starlike/extremals.hpp>
#include <starlike/series.hpp>

// Function specification files: JSON objects naming a coefficient list, an
// extremal family or a built-in function. Complex scalars are [re, im] pairs.
//
//   {"kind": "COEFFS", "n": 1, "trunc": 16, "coeffs": [[0.5, 0], [0.1, -0.2]]}
//   {"kind": "COEFFS", "n": 2, "trunc": 8, "a1": [0, 0], "coeffs": [[1, 0]]}
//   {"kind": "EXTREMAL_B", "n": 1, "trunc": 128, "alpha": 0.5, "beta": [1, 0], "gamma": [1, 0]}
//   {"kind": "BUILTIN", "n": 1, "trunc": 128, "builtin": "koebe"}
//
// For COEFFS the list starts at a_2; a_1 defaults to 1 and may be overridden with
// "a1" for series that are not class members (the Jack demonstration takes raw w).
namespace starlike
{

struct spec_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class spec_kind { coeffs, extremal_a, extremal_b, builtin };

constexpr std::string_view to_string(spec_kind k) noexcept
{
    switch (k) {
        case spec_kind::coeffs:
            return "COEFFS";
        case spec_kind::extremal_a:
            return "EXTREMAL_A";
        case spec_kind::extremal_b:
            return "EXTREMAL_B";
        case spec_kind::builtin:
            return "BUILTIN";
    }
    return "?";
}

struct function_spec {
    spec_kind kind = spec_kind::builtin;
    int n = 1;
    std::size_t trunc = default_trunc_order;
    std::optional<std::complex<double>> a1;
    std::vector<std::complex<double>> coeffs;
    double alpha = 0.5;
    std::complex<double> beta{};
    std::complex<double> gamma{};
    std::string builtin;

    friend bool operator==(const function_spec &, const function_spec &) = default;
};

namespace detail
{

inline std::complex<double> complex_from_json(const nlohmann::json &j, const std::string &field)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw spec_error("field '" + field + "': expected a [re, im] pair of numbers");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

inline nlohmann::json complex_to_json(std::complex<double> z)
{
    return nlohmann::json::array({z.real(), z.imag()});
}

inline const nlohmann::json &require(const nlohmann::json &j, const std::string &field)
{
    const auto it = j.find(field);
    if (it == j.end()) {
        throw spec_error("missing field '" + field + "'");
    }
    return *it;
}

} // namespace detail

inline function_spec function_spec_from_json(const nlohmann::json &j)
{
    using detail::require;
    if (!j.is_object()) {
        throw spec_error("function spec must be a JSON object");
    }
    function_spec s;
    const auto &kind = require(j, "kind");
    if (!kind.is_string()) {
        throw spec_error("field 'kind': expected a string");
    }
    const auto ks = kind.get<std::string>();
    std::set<std::string> allowed{"kind", "n", "trunc"};
    if (ks == "COEFFS") {
        s.kind = spec_kind::coeffs;
        allowed.insert({"coeffs", "a1"});
    } else if (ks == "EXTREMAL_A" || ks == "EXTREMAL_B") {
        s.kind = ks == "EXTREMAL_A" ? spec_kind::extremal_a : spec_kind::extremal_b;
        allowed.insert({"alpha", "beta", "gamma"});
    } else if (ks == "BUILTIN") {
        s.kind = spec_kind::builtin;
        allowed.insert("builtin");
    } else {
        throw spec_error("field 'kind': unknown kind '" + ks + "' (expected COEFFS, EXTREMAL_A, EXTREMAL_B or BUILTIN)");
    }
    for (const auto &[key, value] : j.items()) {
        if (!allowed.contains(key)) {
            throw spec_error("field '" + key + "' is not allowed for kind " + ks);
        }
    }

    const auto &n = require(j, "n");
    if (!n.is_number_integer() || n.get<long long>() < 1) {
        throw spec_error("field 'n': expected a positive integer");
    }
    s.n = n.get<int>();
    if (const auto it = j.find("trunc"); it != j.end()) {
        if (!it->is_number_integer() || it->get<long long>() < 1) {
            throw spec_error("field 'trunc': expected a positive integer");
        }
        s.trunc = it->get<std::size_t>();
    }

    switch (s.kind) {
        case spec_kind::coeffs: {
            const auto &c = require(j, "coeffs");
            if (!c.is_array()) {
                throw spec_error("field 'coeffs': expected an array of [re, im] pairs");
            }
            if (c.size() + 1 > s.trunc) {
                throw spec_error("field 'coeffs': " + std::to_string(c.size()) + " entries exceed trunc - 1 = "
                                 + std::to_string(s.trunc - 1));
            }
            for (std::size_t i = 0; i < c.size(); ++i) {
                s.coeffs.push_back(detail::complex_from_json(c[i], "coeffs[" + std::to_string(i) + "]"));
            }
            if (const auto it = j.find("a1"); it != j.end()) {
                s.a1 = detail::complex_from_json(*it, "a1");
            }
            break;
        }
        case spec_kind::extremal_a:
        case spec_kind::extremal_b: {
            const auto &alpha = require(j, "alpha");
            if (!alpha.is_number()) {
                throw spec_error("field 'alpha': expected a number");
            }
            s.alpha = alpha.get<double>();
            s.beta = detail::complex_from_json(require(j, "beta"), "beta");
            s.gamma = detail::complex_from_json(require(j, "gamma"), "gamma");
            break;
        }
        case spec_kind::builtin: {
            const auto &b = require(j, "builtin");
            if (!b.is_string()) {
                throw spec_error("field 'builtin': expected a string");
            }
            s.builtin = b.get<std::string>();
            if (s.builtin != "identity" && s.builtin != "koebe" && s.builtin != "halfplane") {
                throw spec_error("field 'builtin': unknown function '" + s.builtin
                                 + "' (expected identity, koebe or halfplane)");
            }
            break;
        }
    }
    return s;
}

// Parses spec text; JSON syntax errors are reported with line and column.
inline function_spec parse_function_spec(std::string_view text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw spec_error("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col));
    }
    return function_spec_from_json(j);
}

inline nlohmann::json to_json(const function_spec &s)
{
    nlohmann::json j;
    j["kind"] = std::string(to_string(s.kind));
    j["n"] = s.n;
    j["trunc"] = s.trunc;
    switch (s.kind) {
        case spec_kind::coeffs: {
            auto arr = nlohmann::json::array();
            for (const auto &c : s.coeffs) {
                arr.push_back(detail::complex_to_json(c));
            }
            j["coeffs"] = std::move(arr);
            if (s.a1) {
                j["a1"] = detail::complex_to_json(*s.a1);
            }
            break;
        }
        case spec_kind::extremal_a:
        case spec_kind::extremal_b:
            j["alpha"] = s.alpha;
            j["beta"] = detail::complex_to_json(s.beta);
            j["gamma"] = detail::complex_to_json(s.gamma);
            break;
        case spec_kind::builtin:
            j["builtin"] = s.builtin;
            break;
    }
    return j;
}

inline extremal_params extremal_params_of(const function_spec &s)
{
    if (s.kind != spec_kind::extremal_a && s.kind != spec_kind::extremal_b) {
        throw spec_error("not an extremal spec");
    }
    return {s.kind == spec_kind::extremal_a ? extremal_family::a : extremal_family::b, s.n, s.alpha, s.beta, s.gamma};
}

// The spec file's raw series, without class-shape validation.
inline series series_of(const function_spec &s)
{
    switch (s.kind) {
        case spec_kind::coeffs: {
            std::vector<std::complex<double>> c(s.trunc + 1);
            c[1] = s.a1.value_or(1.0);
            for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
                c[i + 2] = s.coeffs[i];
            }
            return series(std::move(c), s.trunc);
        }
        case spec_kind::extremal_a:
        case spec_kind::extremal_b:
            return build_extremal(extremal_params_of(s), s.trunc).f.series();
        case spec_kind::builtin:
            if (s.builtin == "identity") {
                return series::monomial(1, s.trunc);
            }
            if (s.builtin == "koebe") {
                return koebe_function(s.trunc).series();
            }
            return halfplane_function(s.trunc).series();
    }
    throw spec_error("unreachable spec kind");
}

// The spec file's function as a class member of A_n; throws on class-shape violations.
inline candidate candidate_of(const function_spec &s)
{
    return candidate(static_cast<std::size_t>(s.n), series_of(s));
}

} // namespace starlike

#endif
