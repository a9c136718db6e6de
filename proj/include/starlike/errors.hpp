#ifndef STARLIKE_ERRORS_HPP
#define STARLIKE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace starlike
{

// Base for failures of the series engine.
struct series_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct non_finite_coefficient : series_error {
    explicit non_finite_coefficient(std::size_t idx)
        : series_error("non-finite coefficient at index " + std::to_string(idx)), index(idx)
    {
    }
    std::size_t index;
};

struct non_unit_divisor : series_error {
    explicit non_unit_divisor(double b0)
        : series_error("non-unit divisor: constant term modulus " + std::to_string(b0)), modulus(b0)
    {
    }
    double modulus;
};

struct resonant_exponent : series_error {
    resonant_exponent(std::size_t k, double dist)
        : series_error("resonant exponent at k=" + std::to_string(k) + " (|c+k| = " + std::to_string(dist) + ")"),
          index(k)
    {
    }
    std::size_t index;
};

struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Invalid scalar parameters (gamma = 0, alpha out of range, ...).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A parameter set violating a strict admissibility constraint.
struct inadmissible_error : parameter_error {
    inadmissible_error(const std::string &constraint, double margin_)
        : parameter_error("inadmissible parameters: " + constraint + " violated (margin " + std::to_string(margin_)
                          + ")"),
          margin(margin_)
    {
    }
    double margin;
};

} // namespace starlike

#endif
