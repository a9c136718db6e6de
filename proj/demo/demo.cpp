// Library walkthrough: build a series, evaluate functionals, certify an
// extremal function and watch the Koebe function fail the same test.

#include <iostream>

#include <starlike/starlike.hpp>

int main()
{
    using namespace starlike;
    std::cout.precision(12);

    // f(z) = z + 0.5 z^2 + 0.1 z^3 in A_1, truncated at order 32.
    const candidate f(1, make_series({{0, 0}, {1, 0}, {0.5, 0}, {0.1, 0}}).truncated(32));
    const auto p = starlike_quotient(f);
    std::cout << "z f'/f at z = 0.5: " << evaluate(p, std::complex<double>(0.5)) << '\n';

    const extremal_params ex{extremal_family::b, 1, 0.5, 1.0, 1.0};
    const auto built = build_extremal(ex);
    std::cout << "extremal B coefficients:";
    for (std::size_t k = 1; k <= 4; ++k) {
        std::cout << ' ' << built.f.series()[k].real();
    }
    std::cout << "\nidentity residual: " << verify_identity_b(built.f, ex) << '\n';

    const auto cfg = sampling_config::up_to(0.99);
    const auto rep = check_criterion(built.f, matching_criterion(ex), cfg);
    std::cout << "THM_B on the extremal: " << to_string(rep.outcome) << " (margin " << rep.hypothesis_margin << ")\n";

    const auto koebe = check_criterion(koebe_function(128), matching_criterion(ex), cfg);
    std::cout << "THM_B on Koebe: " << to_string(koebe.outcome) << '\n';
}
