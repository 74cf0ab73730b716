#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "swarmkit/core.hpp"

namespace swarmkit::benchmarks {

/// Standard test functions (all minimized, all with analytic gradients):
///
///   name        box                    minimum
///   sphere      [-5.12, 5.12]^D        0 at the origin
///   rastrigin   [-5.12, 5.12]^D        0 at the origin
///   rosenbrock  [-5, 10]^D, D >= 2     0 at (1, ..., 1)
///   ackley      [-32.768, 32.768]^D    0 at the origin
///   two_mode    [-5, 5]^D              0 at (-2.5, ...) and (2.5, ...)
std::vector<std::string> names();

/// Registry lookup. Throws ConfigError listing the available names on a miss.
Problem lookup(std::string_view name, std::size_t dimension);

/// f(x) = min(|x - c1|^2, |x - c2|^2). Both centers must lie in `space` and differ.
Problem two_mode(Vector c1, Vector c2, SearchSpace space);

double sphere(std::span<const double> x);
double rastrigin(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double ackley(std::span<const double> x);

Vector sphere_gradient(std::span<const double> x);
Vector rastrigin_gradient(std::span<const double> x);
Vector rosenbrock_gradient(std::span<const double> x);
Vector ackley_gradient(std::span<const double> x);

Eigen::MatrixXd sphere_hessian(std::span<const double> x);
Eigen::MatrixXd rosenbrock_hessian(std::span<const double> x);

}  // namespace swarmkit::benchmarks
