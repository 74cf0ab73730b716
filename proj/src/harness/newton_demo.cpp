#include <iomanip>
#include <ostream>

#include "swarmkit/aco.hpp"
#include "swarmkit/benchmarks.hpp"
#include "swarmkit/classical.hpp"
#include "swarmkit/harness.hpp"

namespace swarmkit::harness {

void newton_demo(std::ostream& out) {
    using classical::newton_root;
    const auto p = [](double x) { return x * x + 9.0 * x - 10.0; };
    const auto dp = [](double x) { return 2.0 * x + 9.0; };
    constexpr double tol = 1e-9;

    out << "Newton root finding on p(x) = x^2 + 9x - 10 (roots 1 and -10), tol " << tol << "\n";
    out << std::left << std::setw(10) << "x0" << std::setw(22) << "status" << std::setw(12)
        << "iterations" << std::setw(26) << "final x"
        << "|p(x)|\n";
    for (const double x0 : {10.0, 100.0, -5.0, -4.5}) {
        const auto r = newton_root(p, dp, x0, tol, 100);
        out << std::left << std::setw(10) << x0 << std::setw(22) << classical::to_string(r.status)
            << std::setw(12) << r.iterations << std::setw(26) << std::setprecision(17) << r.value
            << std::setprecision(3) << r.residual << std::setprecision(6) << "\n";
    }
}

void list_registry(std::ostream& out) {
    out << "algorithms:\n"
           "  pso      particle swarm (n, alpha, beta, inertia)\n"
           "  abc      artificial bee colony (n, limit)\n"
           "  bat      bat algorithm (n, f_min, f_max, alpha_loud, gamma_rate, A0, r0,\n"
           "           ba_sign_convention)\n"
           "  firefly  firefly algorithm (n, beta0, gamma, alpha0, delta)\n"
           "  cuckoo   cuckoo search (n, pa, alpha_step, lambda, alpha_local)\n"
           "  aco      ant colony on TSP files (n_ants, alpha, beta, rho, Q, tau0, tau_min,\n"
           "           iterations)\n";
    out << "benchmarks:\n";
    for (const auto& name : benchmarks::names()) {
        const auto p = benchmarks::lookup(name, 2);
        out << "  " << std::left << std::setw(11) << name << "[" << p.space.lower()[0] << ", "
            << p.space.upper()[0] << "]^D\n";
    }
}

}  // namespace swarmkit::harness
