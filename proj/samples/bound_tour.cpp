// Walks through the library: builds an extremal function, reads off its
// coefficients, evaluates a few functionals and checks one sharp constant.

#include <iostream>

#include <coeffsharp.hpp>

int main()
{
    using namespace coeffsharp;

    const auto f1 = extremal_function(1, 6);
    std::cout << "f1      = " << to_string(f1) << "\n";

    const CaratheodoryPoint pt{0.0, {1.0, 0.0}, {0.0, 0.0}};
    const auto c = coeffs_from_point(pt);
    std::cout << "gamma2  = " << std::abs(evaluate_functional(FunctionalId::gamma2, c)) << " at tau = (0, 1, 0)\n";
    std::cout << "H21     = " << hankel_log_tau(pt).real() << "\n";

    SearchConfig coarse;
    coarse.grid_tau1 = 21;
    coarse.grid_r = 6;
    coarse.grid_theta = 24;
    const auto rep = verify(TheoremId::Gamma2, coarse);
    std::cout << "Gamma2  : bound " << rep.theoretical_bound.expr << ", search max " << rep.empirical_extremum
              << (rep.passed ? " (pass)\n" : " (fail)\n");
    return rep.passed ? 0 : 1;
}
